"""Exception types shared across the package."""


class PairwalkError(Exception):
    """Base class for all package-specific errors."""


class InvalidParams(PairwalkError, ValueError):
    """Graph construction parameters are out of range or inconsistent."""


class SizeMismatch(PairwalkError, ValueError):
    """Two graphs that must share a vertex set have different sizes."""


class OverlappingEdges(PairwalkError, ValueError):
    """Strict double-cover construction found an edge present in both factors."""


class KindMismatch(PairwalkError, TypeError):
    """Two states of different kinds (pair vs vertex) were compared."""


class NotExact(PairwalkError):
    """An exact-only operation received a float-fallback decomposition."""


class NumericFailure(PairwalkError, RuntimeError):
    """The float eigendecomposition could not resolve eigenvalue clusters."""


class NotRegular(PairwalkError, ValueError):
    """A composite-transfer check requires regular factor graphs."""


class HypothesisFailed(PairwalkError):
    """The factor graph lacks the certified transfer a composite check assumes."""


class NonCommuting(PairwalkError, ValueError):
    """The commuting-factors double-cover check got non-commuting adjacencies."""


class NonPositiveDiscriminant(PairwalkError, ValueError):
    """A discriminant that must be positive (real spectrum) was not.

    Reaching this from a symmetric integer matrix signals an internal bug.
    """


class ParseError(PairwalkError, ValueError):
    """Graph DSL or time token could not be parsed."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class InternalInconsistency(PairwalkError, RuntimeError):
    """Exact certificate and numerical evidence disagree. The canary."""
