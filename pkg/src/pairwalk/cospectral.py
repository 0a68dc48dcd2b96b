"""Eigenvalue supports and strong cospectrality for pair and vertex states."""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np

from .errors import KindMismatch
from .exactnum import ExactScalar
from .graphs import State
from .spectral import ExactMatrix, SpectralDecomposition
from .tolerances import DEFAULT, Tolerances


class AmbiguousProjectionWarning(UserWarning):
    """A float-path projection norm fell between the clear-zero and clear-nonzero bands."""


def _project(dec: SpectralDecomposition, proj, vec: np.ndarray):
    if isinstance(proj, ExactMatrix):
        return proj.apply(vec)
    return proj @ vec.astype(np.float64)


def _is_zero(projected, tol: Tolerances) -> bool:
    if isinstance(projected, np.ndarray):
        norm = float(np.linalg.norm(projected))
        if tol.ambiguous_low <= norm <= tol.ambiguous_high:
            warnings.warn(
                f"projection norm {norm:.3e} falls in the ambiguous zone "
                f"[{tol.ambiguous_low:.0e}, {tol.ambiguous_high:.0e}]",
                AmbiguousProjectionWarning,
                stacklevel=3,
            )
        return norm < tol.support_zero
    return projected.is_zero


def support(
    dec: SpectralDecomposition, state: State, tol: Tolerances = DEFAULT
) -> tuple[ExactScalar, ...]:
    """Eigenvalues whose projectors do not annihilate the state, decreasing."""
    vec = state.vector(dec.n)
    out = []
    for ev, proj in dec.eigenpairs:
        if not _is_zero(_project(dec, proj, vec), tol):
            out.append(ev)
    return tuple(out)


@dataclass(frozen=True)
class CospectralReport:
    """Supports of two states with their sign partition.

    `plus` and `minus` collect the support eigenvalues where the projections
    of the two states agree and agree up to sign flip; strong cospectrality
    holds exactly when the two sets cover the whole support. `witness` maps
    each eigenvalue outside the partition to the float renderings of the two
    projections demonstrating the failure.
    """

    support1: tuple[ExactScalar, ...]
    support2: tuple[ExactScalar, ...]
    plus: tuple[ExactScalar, ...]
    minus: tuple[ExactScalar, ...]
    strongly_cospectral: bool
    witness: dict = field(default_factory=dict)


def strong_cospectral(
    dec: SpectralDecomposition,
    s1: State,
    s2: State,
    tol: Tolerances = DEFAULT,
) -> CospectralReport:
    """Classify every support eigenvalue into plus, minus, or neither."""
    if s1.kind != s2.kind:
        raise KindMismatch(f"cannot compare a {s1.kind} state with a {s2.kind} state")
    v1, v2 = s1.vector(dec.n), s2.vector(dec.n)
    sup1, sup2, plus, minus = [], [], [], []
    witness = {}
    for ev, proj in dec.eigenpairs:
        p1 = _project(dec, proj, v1)
        p2 = _project(dec, proj, v2)
        z1, z2 = _is_zero(p1, tol), _is_zero(p2, tol)
        if not z1:
            sup1.append(ev)
        if not z2:
            sup2.append(ev)
        if z1 and z2:
            continue
        if isinstance(p1, np.ndarray):
            if np.linalg.norm(p1 - p2) < tol.support_zero:
                plus.append(ev)
            elif np.linalg.norm(p1 + p2) < tol.support_zero:
                minus.append(ev)
            else:
                witness[ev] = (p1.copy(), p2.copy())
        else:
            if p1.equals(p2):
                plus.append(ev)
            elif p1.equals(-p2):
                minus.append(ev)
            else:
                witness[ev] = (p1.to_float(), p2.to_float())
    sc = not witness and tuple(sup1) == tuple(sup2)
    return CospectralReport(
        support1=tuple(sup1),
        support2=tuple(sup2),
        plus=tuple(plus),
        minus=tuple(minus),
        strongly_cospectral=sc,
        witness=witness,
    )
