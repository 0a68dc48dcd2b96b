"""Graphs as symmetric 0/1 integer matrices, plus the two composite constructions."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidParams, OverlappingEdges, SizeMismatch


@dataclass(frozen=True, eq=False)
class Graph:
    """A simple undirected graph on vertices 0..n-1.

    Immutable after construction; `adj` is a symmetric integer 0/1 matrix
    with zero diagonal.
    """

    adj: np.ndarray
    name: str = ""
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        a = np.asarray(self.adj)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise InvalidParams("adjacency matrix must be square")
        if not np.issubdtype(a.dtype, np.integer):
            a = a.astype(np.int64)
        if not np.array_equal(a, a.T):
            raise InvalidParams("adjacency matrix must be symmetric")
        if np.any(np.diag(a) != 0):
            raise InvalidParams("adjacency matrix must have zero diagonal")
        if not np.isin(a, (0, 1)).all():
            raise InvalidParams("adjacency entries must be 0 or 1")
        if self.labels is not None and len(self.labels) != a.shape[0]:
            raise InvalidParams("labels length must match vertex count")
        a = a.copy()
        a.setflags(write=False)
        object.__setattr__(self, "adj", a)

    @property
    def n(self) -> int:
        return self.adj.shape[0]

    @property
    def degrees(self) -> np.ndarray:
        return self.adj.sum(axis=1)

    def __str__(self) -> str:
        return self.name or f"graph on {self.n} vertices"


@dataclass(frozen=True)
class PairState:
    """The state e_a - e_b for distinct vertices a, b."""

    a: int
    b: int

    def __post_init__(self):
        if self.a == self.b:
            raise InvalidParams("pair state needs two distinct vertices")
        if self.a < 0 or self.b < 0:
            raise InvalidParams("vertex indices must be nonnegative")

    @property
    def kind(self) -> str:
        return "pair"

    def vector(self, n: int) -> np.ndarray:
        if self.a >= n or self.b >= n:
            raise InvalidParams(f"pair {self.a}-{self.b} out of range for n={n}")
        v = np.zeros(n, dtype=np.int64)
        v[self.a], v[self.b] = 1, -1
        return v

    def same_pair(self, other: "PairState") -> bool:
        return {self.a, self.b} == {other.a, other.b}

    def __str__(self) -> str:
        return f"e{self.a}-e{self.b}"


@dataclass(frozen=True)
class VertexState:
    """The standard basis state e_u."""

    u: int

    def __post_init__(self):
        if self.u < 0:
            raise InvalidParams("vertex index must be nonnegative")

    @property
    def kind(self) -> str:
        return "vertex"

    def vector(self, n: int) -> np.ndarray:
        if self.u >= n:
            raise InvalidParams(f"vertex {self.u} out of range for n={n}")
        v = np.zeros(n, dtype=np.int64)
        v[self.u] = 1
        return v

    def __str__(self) -> str:
        return f"e{self.u}"


State = PairState | VertexState


def path(n: int) -> Graph:
    if n < 1:
        raise InvalidParams("path needs n >= 1")
    a = np.zeros((n, n), dtype=np.int64)
    idx = np.arange(n - 1)
    a[idx, idx + 1] = 1
    a[idx + 1, idx] = 1
    return Graph(a, name=f"P {n}")


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidParams("cycle needs n >= 3")
    a = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        a[i, (i + 1) % n] = 1
        a[(i + 1) % n, i] = 1
    return Graph(a, name=f"C {n}")


def complete(n: int) -> Graph:
    if n < 1:
        raise InvalidParams("complete graph needs n >= 1")
    a = np.ones((n, n), dtype=np.int64) - np.eye(n, dtype=np.int64)
    return Graph(a, name=f"K {n}")


def circulant(n: int, connections: set[int] | list[int]) -> Graph:
    """Circulant graph: u ~ v iff (u - v) mod n lies in the connection set.

    The set must be symmetric modulo n (s in S implies n - s in S) and must
    not contain 0.
    """
    if n < 1:
        raise InvalidParams("circulant needs n >= 1")
    conn = {c % n for c in connections}
    if 0 in conn:
        raise InvalidParams("connection set must not contain 0 mod n")
    if any((n - c) % n not in conn for c in conn):
        raise InvalidParams("connection set must be symmetric modulo n")
    a = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for c in conn:
            a[i, (i + c) % n] = 1
    return Graph(a, name=f"circ {n}: {','.join(str(c) for c in sorted(conn))}")


def from_edge_list(n: int, edges: list[tuple[int, int]]) -> Graph:
    if n < 1:
        raise InvalidParams("edge-list graph needs n >= 1")
    a = np.zeros((n, n), dtype=np.int64)
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidParams(f"edge {u}-{v} out of range for n={n}")
        if u == v:
            raise InvalidParams(f"loop {u}-{v} not allowed")
        a[u, v] = 1
        a[v, u] = 1
    return Graph(a, name=f"edges {n}")


def empty(n: int) -> Graph:
    return from_edge_list(n, [])


_FAMILIES = {
    "path": lambda p: path(p["n"]),
    "cycle": lambda p: cycle(p["n"]),
    "complete": lambda p: complete(p["n"]),
    "circulant": lambda p: circulant(p["n"], p["connections"]),
    "edge_list": lambda p: from_edge_list(p["n"], p["edges"]),
}


def build_named(family: str, params: dict) -> Graph:
    """Build one of the standard families from a parameter dict."""
    try:
        builder = _FAMILIES[family]
    except KeyError:
        raise InvalidParams(f"unknown family {family!r}; know {sorted(_FAMILIES)}")
    return builder(params)


def adjacency(g: Graph) -> np.ndarray:
    return g.adj.copy()


def laplacian(g: Graph) -> np.ndarray:
    """Degree matrix minus adjacency; integer, symmetric, zero row sums."""
    return np.diag(g.degrees) - g.adj


def regularity(g: Graph) -> int | None:
    """Common degree r if the graph is regular, else None."""
    deg = g.degrees
    if g.n == 0:
        return None
    r = int(deg[0])
    return r if bool(np.all(deg == r)) else None


def product_index(u: int, v: int, m: int) -> int:
    """Vertex (u, v) of a product graph in u-major order."""
    return u * m + v


def tensor_product(g: Graph, h: Graph) -> Graph:
    """Graph on pairs (u, v), adjacency the Kronecker product, u-major order."""
    a = np.kron(g.adj, h.adj)
    labels = tuple(f"({u},{v})" for u in range(g.n) for v in range(h.n))
    return Graph(a, name=f"tensor({g.name or g.n},{h.name or h.n})", labels=labels)


def double_cover(g: Graph, h: Graph, allow_overlap: bool = False) -> Graph:
    """Two copies of the vertex set; within-copy edges from g, cross-copy from h.

    The adjacency is the block matrix [[A_g, A_h], [A_h, A_g]], always a
    0/1 matrix. When g and h share an edge the construction double-covers a
    base multigraph; strict mode rejects that unless allow_overlap is set.
    """
    if g.n != h.n:
        raise SizeMismatch(f"double cover needs equal vertex counts, got {g.n} and {h.n}")
    if not allow_overlap and np.any((g.adj == 1) & (h.adj == 1)):
        raise OverlappingEdges(
            "factors share an edge, so the covered base graph has a multi-edge; "
            "opt in with allow_overlap=True (CLI: --allow-multiedge-collapse)"
        )
    n = g.n
    a = np.block([[g.adj, h.adj], [h.adj, g.adj]])
    labels = tuple(f"({i},{u})" for i in (0, 1) for u in range(n))
    return Graph(a, name=f"cover({g.name or g.n},{h.name or h.n})", labels=labels)
