"""Text formats used by the command line: graph descriptions and exact times.

Graph grammar, one graph per string:

    K n                      complete graph
    P n                      path
    C n                      cycle
    circ n: s1,s2,...        circulant with a symmetric connection set
    edges n: u-v,u-v,...     explicit edge list (empty list = empty graph)
    tensor(<g>,<g>)          tensor product of two graphs
    cover(<g>,<g>)           double cover of two graphs

Exact times are rational multiples of pi written like `pi`, `2pi`, `1/2pi`,
`pi/2`, or `3pi/4`.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError
from .exactnum import ExactTime
from .graphs import Graph, PairState, VertexState, circulant, complete, cycle, double_cover, from_edge_list, path, tensor_product


class _Cursor:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def eof(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)

    def peek_word(self) -> str:
        self.skip_ws()
        m = re.match(r"[A-Za-z]+", self.text[self.pos :])
        return m.group(0) if m else ""

    def take_word(self) -> str:
        w = self.peek_word()
        self.pos += len(w)
        return w

    def take_int(self) -> int:
        self.skip_ws()
        m = re.match(r"-?\d+", self.text[self.pos :])
        if not m:
            raise ParseError("expected an integer", self.pos)
        self.pos += len(m.group(0))
        return int(m.group(0))

    def expect(self, ch: str):
        self.skip_ws()
        if self.pos >= len(self.text) or self.text[self.pos] != ch:
            raise ParseError(f"expected {ch!r}", self.pos)
        self.pos += 1

    def try_take(self, ch: str) -> bool:
        self.skip_ws()
        if self.pos < len(self.text) and self.text[self.pos] == ch:
            self.pos += 1
            return True
        return False


def _parse_graph(cur: _Cursor, allow_overlap: bool) -> Graph:
    word = cur.peek_word()
    if not word:
        raise ParseError("expected a graph expression", cur.pos)
    lw = word.lower()
    if lw in ("tensor", "cover"):
        cur.take_word()
        cur.expect("(")
        g1 = _parse_graph(cur, allow_overlap)
        cur.expect(",")
        g2 = _parse_graph(cur, allow_overlap)
        cur.expect(")")
        if lw == "tensor":
            return tensor_product(g1, g2)
        return double_cover(g1, g2, allow_overlap=allow_overlap)
    if lw in ("k", "p", "c"):
        cur.take_word()
        n = cur.take_int()
        return {"k": complete, "p": path, "c": cycle}[lw](n)
    if lw == "circ":
        cur.take_word()
        n = cur.take_int()
        cur.expect(":")
        conns = [cur.take_int()]
        while cur.try_take(","):
            conns.append(cur.take_int())
        return circulant(n, conns)
    if lw == "edges":
        cur.take_word()
        n = cur.take_int()
        cur.expect(":")
        edges = []
        # a comma may separate edges or, inside a product, the next argument;
        # only consume it when an edge u-v actually follows
        while True:
            cur.skip_ws()
            save = cur.pos
            if edges and not cur.try_take(","):
                break
            cur.skip_ws()
            if not re.match(r"\d+\s*-\s*\d+", cur.text[cur.pos :]):
                cur.pos = save
                break
            u = cur.take_int()
            cur.expect("-")
            v = cur.take_int()
            edges.append((u, v))
        return from_edge_list(n, edges)
    raise ParseError(f"unknown graph family {word!r}", cur.pos)


def parse_graph(text: str, allow_overlap: bool = False) -> Graph:
    cur = _Cursor(text)
    g = _parse_graph(cur, allow_overlap)
    if not cur.eof():
        raise ParseError("trailing input after graph expression", cur.pos)
    return g


_TIME_RE = re.compile(
    r"^\s*(?P<num>\d+(?:\s*/\s*\d+)?)?\s*\*?\s*pi\s*(?:/\s*(?P<den>\d+))?\s*$",
    re.IGNORECASE,
)


def parse_exact_time(token: str) -> ExactTime:
    """Parse `pi`, `2pi`, `1/2pi`, `pi/2`, `3pi/4`, or `0`."""
    if token.strip() == "0":
        return ExactTime(Fraction(0))
    m = _TIME_RE.match(token)
    if not m:
        raise ParseError(
            f"cannot parse time {token!r}; use forms like pi, 1/2pi, 3pi/4, or 0"
        )
    q = Fraction(m.group("num").replace(" ", "")) if m.group("num") else Fraction(1)
    if m.group("den"):
        q /= int(m.group("den"))
    return ExactTime(q)


def parse_sweep_time(token: str) -> float:
    """Exact tokens when possible, plain decimals otherwise (sweeps only)."""
    try:
        return parse_exact_time(token).value
    except ParseError:
        try:
            return float(token)
        except ValueError:
            raise ParseError(f"cannot parse time {token!r} as exact token or decimal")


def parse_pair(token: str) -> PairState:
    m = re.match(r"^\s*(\d+)\s*-\s*(\d+)\s*$", token)
    if not m:
        raise ParseError(f"cannot parse pair {token!r}; use the form a-b")
    return PairState(int(m.group(1)), int(m.group(2)))


def parse_state(token: str) -> PairState | VertexState:
    if "-" in token:
        return parse_pair(token)
    m = re.match(r"^\s*(\d+)\s*$", token)
    if not m:
        raise ParseError(f"cannot parse state {token!r}; use a vertex u or a pair a-b")
    return VertexState(int(m.group(1)))
