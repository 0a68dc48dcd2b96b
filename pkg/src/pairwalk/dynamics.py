"""Numerical evolution: transition matrices, fidelities, sweeps, and an
independent matrix-exponential oracle.

Two deliberately independent routes compute U(t) = exp(-i*t*M): the spectral
route sums exp(-i*t*lambda) * F over the decomposition, while the series
oracle runs scaling-and-squaring on the Taylor series without ever touching
an eigendecomposition. Their agreement is the package's cross-check for
every exact claim.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphs import State
from .spectral import SpectralDecomposition
from .tolerances import DEFAULT, Tolerances


def transition_matrix(dec: SpectralDecomposition, t: float) -> np.ndarray:
    """U(t) from the spectral decomposition; unitary up to float error."""
    n = dec.n
    u = np.zeros((n, n), dtype=np.complex128)
    for lam, proj in dec.float_pairs():
        u += np.exp(-1j * t * lam) * proj
    return u


@dataclass(frozen=True)
class EvolutionPlan:
    """One evolution request, dispatched to either route.

    Both methods produce the same unitary within 1e-10; running a plan twice
    with different methods is the built-in cross-check.
    """

    dec: SpectralDecomposition
    t: float
    method: str = "spectral"  # "spectral" | "series_oracle"

    def matrix(self) -> np.ndarray:
        if self.method == "spectral":
            return transition_matrix(self.dec, self.t)
        if self.method == "series_oracle":
            return expm_oracle(self.dec.matrix, self.t)
        raise ValueError(f"unknown evolution method {self.method!r}")


def expm_oracle(m: np.ndarray, t: float) -> np.ndarray:
    """exp(-i*t*M) by scaling-and-squaring on the Taylor series.

    Independent of any eigendecomposition on purpose. Truncation is
    degree-adaptive: terms are added until they stop changing the partial
    sum at double precision.
    """
    m = np.asarray(m, dtype=np.float64)
    n = m.shape[0]
    b = -1j * t * m
    norm = float(np.linalg.norm(b, 1))
    s = max(0, int(np.ceil(np.log2(norm / 0.5)))) if norm > 0.5 else 0
    b /= 2.0**s
    u = np.eye(n, dtype=np.complex128)
    term = np.eye(n, dtype=np.complex128)
    for k in range(1, 64):
        term = term @ b / k
        u += term
        if np.abs(term).max() < 1e-18 * max(1.0, np.abs(u).max()):
            break
    for _ in range(s):
        u = u @ u
    return u


def state_vectors(dec: SpectralDecomposition, s1: State, s2: State):
    v1 = s1.vector(dec.n).astype(np.float64)
    v2 = s2.vector(dec.n).astype(np.float64)
    return v1, v2


def fidelity(dec: SpectralDecomposition, s1: State, s2: State, t: float) -> float:
    """Squared overlap |<s2|U(t)|s1>|^2, normalized by the state norms.

    For pair states both norms are sqrt(2), which reproduces the 1/2
    prefactor convention; vertex states are already unit.
    """
    v1, v2 = state_vectors(dec, s1, s2)
    u = transition_matrix(dec, t)
    amp = v2 @ u @ v1
    return float(abs(amp) ** 2 / ((v1 @ v1) * (v2 @ v2)))


def fidelity_curve(
    dec: SpectralDecomposition, s1: State, s2: State, times: np.ndarray
) -> np.ndarray:
    """Vectorized fidelities over a time grid via per-eigenvalue overlaps."""
    v1, v2 = state_vectors(dec, s1, s2)
    pairs = dec.float_pairs()
    lams = np.array([lam for lam, _ in pairs])
    coes = np.array([v2 @ proj @ v1 for _, proj in pairs], dtype=np.complex128)
    amps = np.exp(-1j * np.outer(np.asarray(times, dtype=np.float64), lams)) @ coes
    return np.abs(amps) ** 2 / ((v1 @ v1) * (v2 @ v2))


@dataclass(frozen=True, eq=False)
class SweepResult:
    times: np.ndarray
    fidelities: np.ndarray
    peaks: tuple[int, ...]  # grid indices of local maxima above the threshold

    def to_csv(self) -> str:
        lines = ["t,fidelity"]
        for t, f in zip(self.times, self.fidelities):
            lines.append(f"{t:.17g},{f:.17g}")
        return "\n".join(lines) + "\n"


def sweep(
    dec: SpectralDecomposition,
    s1: State,
    s2: State,
    t_min: float,
    t_max: float,
    steps: int,
    peak_threshold: float | None = None,
    tol: Tolerances = DEFAULT,
) -> SweepResult:
    """Fidelity on a uniform grid with annotated peaks; deterministic."""
    if t_min == t_max:
        times = np.array([t_min], dtype=np.float64)
    else:
        if steps < 2:
            raise ValueError("sweep needs steps >= 2")
        times = np.linspace(t_min, t_max, steps)
    fids = fidelity_curve(dec, s1, s2, times)
    thresh = peak_threshold if peak_threshold is not None else 1 - tol.minimality
    peaks = []
    for i, f in enumerate(fids):
        if f < thresh:
            continue
        left = fids[i - 1] if i > 0 else -np.inf
        right = fids[i + 1] if i + 1 < len(fids) else -np.inf
        if f >= left and f >= right:
            peaks.append(i)
    return SweepResult(times=times, fidelities=fids, peaks=tuple(peaks))


def bounded_overlap_check(
    m: np.ndarray, s1: State, s2: State, t_samples, tol: Tolerances = DEFAULT
) -> bool:
    """Check |(e_a-e_b)^T U(t) (e_c-e_d)| <= 2 (with slack) at every sample.

    The bound is Cauchy-Schwarz for pair states under any Hermitian
    generator, so a failure indicates numerical trouble, not physics.
    """
    m = np.asarray(m, dtype=np.float64)
    n = m.shape[0]
    vals, vecs = np.linalg.eigh(m)
    v1 = s1.vector(n).astype(np.float64) @ vecs
    v2 = s2.vector(n).astype(np.float64) @ vecs
    for t in np.asarray(t_samples, dtype=np.float64):
        amp = (v2 * np.exp(-1j * t * vals)) @ v1
        if abs(amp) > 2 + tol.fidelity:
            return False
    return True
