"""Exact spectral decomposition of symmetric integer matrices.

The characteristic polynomial is computed with exact big-integer arithmetic
(Faddeev-LeVerrier). Its distinct irreducible factors over Z give the
eigenvalues: linear factors yield integers, quadratic factors yield
conjugate pairs (a +- k*sqrt(delta))/2. Eigenprojectors come from Lagrange
interpolation grouped by irreducible factor,

    F_lambda = [prod_{other factors} f(M)] * (M - conj(lambda) I) / c,

which keeps every projector inside the single field Q(sqrt(delta)) of its
own eigenvalue, with exact rational components. Spectra containing an
irreducible factor of degree >= 3 fall back to a grouped float
eigendecomposition.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np
import sympy

from .errors import NumericFailure
from .exactnum import QF, ExactScalar, squarefree_kernel
from .graphs import Graph, adjacency, laplacian
from .tolerances import DEFAULT, Tolerances

EXACT = "exact"
FLOAT = "float"


def _check_symmetric_int(m: np.ndarray) -> np.ndarray:
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("matrix must be square")
    if not np.issubdtype(m.dtype, np.integer):
        if np.any(m != np.round(m)):
            raise ValueError("matrix must have integer entries")
        m = m.astype(np.int64)
    if not np.array_equal(m, m.T):
        raise ValueError("matrix must be symmetric")
    return m


def char_poly(m: np.ndarray) -> list[int]:
    """Monic characteristic polynomial, coefficients descending by degree."""
    m = _check_symmetric_int(m)
    n = m.shape[0]
    if n == 0:
        return [1]
    a = m.astype(object)
    ak = a.copy()
    coeffs = [1]
    for k in range(1, n + 1):
        tr = sum(ak[i, i] for i in range(n))
        q, r = divmod(-tr, k)
        assert r == 0, "Faddeev-LeVerrier trace not divisible; non-integer input?"
        coeffs.append(q)
        if k < n:
            b = ak.copy()
            idx = np.diag_indices(n)
            b[idx] = b[idx] + q
            ak = a.dot(b)
    return coeffs


def _distinct_irreducible_factors(coeffs: list[int]) -> list[tuple[int, ...]]:
    """Distinct monic irreducible factors over Z, multiplicities dropped.

    For a symmetric (hence diagonalizable) matrix the product of these is
    the minimal polynomial.
    """
    x = sympy.Symbol("x")
    poly = sympy.Poly(coeffs, x, domain=sympy.ZZ)
    _, factors = poly.factor_list()
    out = []
    for f, _mult in factors:
        fc = tuple(int(c) for c in f.all_coeffs())
        assert fc[0] == 1, "characteristic polynomial factor must be monic"
        out.append(fc)
    return out


def _poly_at_matrix(coeffs: tuple[int, ...], m_obj: np.ndarray) -> np.ndarray:
    """Evaluate a monic integer polynomial at an integer matrix (Horner)."""
    n = m_obj.shape[0]
    r = np.zeros((n, n), dtype=object)
    idx = np.diag_indices(n)
    r[idx] = coeffs[0]
    for c in coeffs[1:]:
        r = r.dot(m_obj)
        r[idx] = r[idx] + c
    return r


def _poly_at_qf(coeffs: tuple[int, ...], lam: QF) -> QF:
    r = QF.of(coeffs[0], lam.d)
    for c in coeffs[1:]:
        r = r * lam + c
    return r


@dataclass(frozen=True)
class ExactMatrix:
    """Matrix X + Y*sqrt(delta) with Fraction components; Y = 0 when delta = 1."""

    x: np.ndarray
    y: np.ndarray
    delta: int

    @property
    def n(self) -> int:
        return self.x.shape[0]

    def to_float(self) -> np.ndarray:
        xf = self.x.astype(np.float64)
        if self.delta == 1:
            return xf
        return xf + self.y.astype(np.float64) * np.sqrt(self.delta)

    def apply(self, vec: np.ndarray) -> "ExactVector":
        v = np.asarray(vec, dtype=object)
        return ExactVector(self.x.dot(v), self.y.dot(v), self.delta)

    def scale(self, s: QF) -> "ExactMatrix":
        if s.y != 0 and s.d != self.delta:
            raise ValueError("mixed quadratic fields")
        return ExactMatrix(
            self.x * s.x + self.y * (s.y * self.delta),
            self.x * s.y + self.y * s.x,
            self.delta,
        )

    def conj(self) -> "ExactMatrix":
        return ExactMatrix(self.x, -self.y, self.delta)

    def matmul(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.delta != other.delta and not other.is_rational and not self.is_rational:
            raise ValueError("mixed quadratic fields; use cross_product_components")
        d = self.delta if not self.is_rational else other.delta
        return ExactMatrix(
            self.x.dot(other.x) + self.y.dot(other.y) * d,
            self.x.dot(other.y) + self.y.dot(other.x),
            d,
        )

    @property
    def is_rational(self) -> bool:
        return self.delta == 1 or not np.any(self.y)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if not np.array_equal(self.x, other.x):
            return False
        sy, oy = bool(np.any(self.y)), bool(np.any(other.y))
        if not sy and not oy:
            return True
        return self.delta == other.delta and np.array_equal(self.y, other.y)


@dataclass(frozen=True, eq=False)
class ExactVector:
    """Vector X + Y*sqrt(delta) with Fraction/int components."""

    x: np.ndarray
    y: np.ndarray
    delta: int

    @property
    def is_zero(self) -> bool:
        return not np.any(self.x) and not np.any(self.y)

    def __neg__(self) -> "ExactVector":
        return ExactVector(-self.x, -self.y, self.delta)

    def equals(self, other: "ExactVector") -> bool:
        if not np.array_equal(self.x, other.x):
            return False
        if not np.any(self.y) and not np.any(other.y):
            return True
        return self.delta == other.delta and np.array_equal(self.y, other.y)

    def to_float(self) -> np.ndarray:
        xf = self.x.astype(np.float64)
        if self.delta == 1 or not np.any(self.y):
            return xf
        return xf + self.y.astype(np.float64) * np.sqrt(self.delta)


def _fraction_matrix(num: np.ndarray, den: int) -> np.ndarray:
    f = np.frompyfunc(lambda v: Fraction(int(v), den), 1, 1)
    return f(num)


@dataclass(frozen=True, eq=False)
class SpectralDecomposition:
    """Eigenvalues with their eigenprojectors for one symmetric matrix.

    `eigenpairs` is ordered by decreasing eigenvalue. Projectors are
    ExactMatrix on the exact path and float ndarrays on the float path.
    """

    source: str
    matrix: np.ndarray
    eigenpairs: tuple
    exactness: str

    @property
    def n(self) -> int:
        return self.matrix.shape[0]

    @property
    def is_exact(self) -> bool:
        return self.exactness == EXACT

    @property
    def eigenvalues(self) -> tuple[ExactScalar, ...]:
        return tuple(ev for ev, _ in self.eigenpairs)

    def projector(self, ev: ExactScalar):
        for e, f in self.eigenpairs:
            if e == ev:
                return f
        raise KeyError(f"{ev} is not an eigenvalue of {self.source}")

    def float_pairs(self) -> list[tuple[float, np.ndarray]]:
        out = []
        for ev, f in self.eigenpairs:
            out.append((ev.value, f.to_float() if isinstance(f, ExactMatrix) else f))
        return out

    def multiplicities(self) -> dict[ExactScalar, int]:
        out = {}
        for ev, f in self.eigenpairs:
            if isinstance(f, ExactMatrix):
                tr = sum(f.x[i, i] for i in range(self.n))
                out[ev] = int(tr)
            else:
                out[ev] = int(round(np.trace(f).real))
        return out


def _exact_eigenpairs(m: np.ndarray, factors: list[tuple[int, ...]]):
    n = m.shape[0]
    m_obj = m.astype(object)
    f_mats = [_poly_at_matrix(f, m_obj) for f in factors]
    ident = np.eye(n, dtype=object)

    pairs = []
    for j, f in enumerate(factors):
        others = [k for k in range(len(factors)) if k != j]
        num = ident
        for k in others:
            num = num.dot(f_mats[k])
        if len(f) == 2:  # linear: root z = -c
            z = -f[1]
            den = 1
            for k in others:
                den *= _poly_int_eval(factors[k], z)
            assert den != 0
            proj = ExactMatrix(_fraction_matrix(num, den), np.zeros((n, n), dtype=object), 1)
            pairs.append((ExactScalar.integer(z), proj))
        else:  # irreducible quadratic x^2 + p x + q
            _, p, q = f
            disc = p * p - 4 * q
            delta, k2 = squarefree_kernel(disc)
            assert delta > 1, "irreducible quadratic cannot have a square discriminant"
            lam = ExactScalar.quadratic(-p, k2, delta)
            lam_qf = QF.from_scalar(lam, delta)
            # numerator: num * (M - conj(lam) I), components over Q(sqrt(delta))
            conj_r, conj_s = Fraction(-p, 2), Fraction(-k2, 2)
            xpart = num.dot(m_obj) - num * conj_r
            ypart = num * (-conj_s)
            den = QF.of(1, delta)
            for k in others:
                den = den * _poly_at_qf(factors[k], lam_qf)
            den = den * QF(Fraction(0), Fraction(k2), delta)  # lam - conj(lam)
            inv = den.inverse()
            proj = ExactMatrix(
                xpart.astype(object), ypart.astype(object), delta
            ).scale(inv)
            pairs.append((lam, proj))
            pairs.append((ExactScalar.quadratic(-p, -k2, delta), proj.conj()))
    pairs.sort(key=lambda t: t[0], reverse=True)
    return pairs


def _poly_int_eval(coeffs: tuple[int, ...], z: int) -> int:
    r = coeffs[0]
    for c in coeffs[1:]:
        r = r * z + c
    return r


def _float_eigenpairs(m: np.ndarray, tol: Tolerances):
    vals, vecs = np.linalg.eigh(m.astype(np.float64))
    groups: list[list[int]] = [[0]]
    for i in range(1, len(vals)):
        if vals[i] - vals[groups[-1][-1]] <= tol.eig_group:
            groups[-1].append(i)
        else:
            groups.append([i])
    pairs = []
    recon = np.zeros_like(m, dtype=np.float64)
    scale0 = max(1.0, float(np.abs(vals).max()))
    for idx in groups:
        v = vecs[:, idx]
        proj = v @ v.T
        lam = float(np.mean(vals[idx]))
        recon += lam * proj
        spread = float(vals[idx[-1]] - vals[idx[0]])
        pairs.append((ExactScalar.from_float(lam, err=spread + 1e-15 * scale0), proj))
    scale = max(1.0, float(np.abs(m).max()))
    if np.abs(recon - m).max() > 100 * tol.validate * scale:
        raise NumericFailure(
            f"grouped float decomposition does not reconstruct the matrix "
            f"(error {np.abs(recon - m).max():.3e})"
        )
    pairs.sort(key=lambda t: t[0].value, reverse=True)
    return pairs


def eigen_decompose(
    m: np.ndarray, source: str = "", tol: Tolerances = DEFAULT
) -> SpectralDecomposition:
    """Spectral decomposition: exact when every irreducible factor has degree <= 2."""
    m = _check_symmetric_int(m)
    coeffs = char_poly(m)
    factors = _distinct_irreducible_factors(coeffs)
    if all(len(f) <= 3 for f in factors):
        pairs = _exact_eigenpairs(m, factors)
        return SpectralDecomposition(source, m, tuple(pairs), EXACT)
    pairs = _float_eigenpairs(m, tol)
    return SpectralDecomposition(source, m, tuple(pairs), FLOAT)


def float_decompose(
    m: np.ndarray, source: str = "", tol: Tolerances = DEFAULT
) -> SpectralDecomposition:
    """Grouped float eigendecomposition, for numerical work on large matrices."""
    m = _check_symmetric_int(m)
    return SpectralDecomposition(source, m, tuple(_float_eigenpairs(m, tol)), FLOAT)


_DECOMP_CACHE: dict[tuple, SpectralDecomposition] = {}


def graph_decomposition(g: Graph, which: str = "laplacian") -> SpectralDecomposition:
    """Cached decomposition of a graph's Laplacian or adjacency matrix."""
    if which == "laplacian":
        m = laplacian(g)
    elif which == "adjacency":
        m = adjacency(g)
    else:
        raise ValueError(f"unknown matrix kind {which!r}")
    key = (which, m.shape[0], m.tobytes())
    hit = _DECOMP_CACHE.get(key)
    if hit is None:
        hit = eigen_decompose(m, source=f"{which}({g.name or g.n})")
        if len(_DECOMP_CACHE) > 512:
            _DECOMP_CACHE.clear()
        _DECOMP_CACHE[key] = hit
    return hit


def cross_product_is_zero(f1: ExactMatrix, f2: ExactMatrix) -> bool:
    """Exact check that f1 @ f2 = 0, valid across different quadratic fields.

    Writes the product over the basis {1, sqrt(d1), sqrt(d2), sqrt(d1*d2)};
    for distinct square-free d1, d2 the four components must vanish
    separately.
    """
    if f1.delta == f2.delta or f1.is_rational or f2.is_rational:
        prod = f1.matmul(f2)
        return not np.any(prod.x) and not np.any(prod.y)
    return (
        not np.any(f1.x.dot(f2.x))
        and not np.any(f1.x.dot(f2.y))
        and not np.any(f1.y.dot(f2.x))
        and not np.any(f1.y.dot(f2.y))
    )
