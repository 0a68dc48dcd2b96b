"""Numerical tolerances, overridable through the PAIRWALK_TOL env var."""

from __future__ import annotations

import os
from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Tolerances:
    """Tolerance knobs for the float paths.

    The 1e-9 family (eig_group, fidelity, oracle) is what PAIRWALK_TOL
    overrides; the tighter validation thresholds stay put unless changed
    explicitly.
    """

    support_zero: float = 1e-10   # float-path zero test for projected states
    ambiguous_low: float = 1e-12  # warn when a projection norm falls in
    ambiguous_high: float = 1e-8  # [ambiguous_low, ambiguous_high]
    validate: float = 1e-10       # projector / unitarity validation
    eig_group: float = 1e-9       # float eigenvalue clustering
    fidelity: float = 1e-9        # |fidelity - 1| acceptance for transfers
    oracle: float = 1e-9          # spectral vs series-oracle agreement
    minimality: float = 1e-6      # fidelity slack below 1 before tau0

    @classmethod
    def from_env(cls) -> "Tolerances":
        raw = os.environ.get("PAIRWALK_TOL")
        base = cls()
        if not raw:
            return base
        try:
            v = float(raw)
        except ValueError:
            raise ValueError(f"PAIRWALK_TOL must be a float, got {raw!r}")
        if v <= 0:
            raise ValueError("PAIRWALK_TOL must be positive")
        return replace(base, eig_group=v, fidelity=v, oracle=v)


DEFAULT = Tolerances.from_env()
