"""Exact certificates for perfect state transfer, pair transfer, and periodicity.

Certification runs on exact spectral decompositions only. The arithmetic
conditions are: strong cospectrality of the two states, all support
eigenvalues in a single quadratic field with pairwise differences integer
multiples of sqrt(delta), and the sign partition matching the parity of the
scaled differences. A positive certificate carries the minimum time
pi/(g*sqrt(delta)) and the exact phase factor.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cospectral import CospectralReport, strong_cospectral, support
from .errors import InvalidParams, NotExact
from .exactnum import ExactScalar, ExactTime, PhaseFactor, gcd_many
from .graphs import PairState, State, VertexState
from .spectral import SpectralDecomposition
from .tolerances import DEFAULT, Tolerances

NOT_STRONGLY_COSPECTRAL = "NotStronglyCospectral"
MIXED_FIELDS = "MixedFields"
RATIO_CONDITION = "RatioCondition"
PARITY_CONDITION = "ParityCondition"
EMPTY_LAMBDA_PLUS = "EmptyLambdaPlus"


@dataclass(frozen=True)
class FailureReason:
    kind: str
    eigenvalue: ExactScalar | None = None
    detail: str = ""

    def __str__(self) -> str:
        s = self.kind
        if self.eigenvalue is not None:
            s += f"({self.eigenvalue})"
        if self.detail:
            s += f": {self.detail}"
        return s


@dataclass(frozen=True)
class TransferCertificate:
    """Existence verdict for perfect transfer between two states."""

    exists: bool
    source: str
    kind: str                      # "pair" or "vertex"
    s1: State | None = None
    s2: State | None = None
    delta: int | None = None
    g: int | None = None
    tau0: ExactTime | None = None
    theta0: ExactScalar | None = None
    phase: PhaseFactor | None = None
    failure: FailureReason | None = None
    cospectral: CospectralReport | None = None
    sign_flipped: bool = False
    warnings: tuple[str, ...] = ()


@dataclass(frozen=True)
class PeriodicityCertificate:
    """Periodicity verdict for one state.

    A singleton support means the state is an eigenvector, periodic at every
    time; `minimal_period` is then None and `always` is True.
    """

    periodic: bool
    source: str
    state: State | None = None
    always: bool = False
    minimal_period: ExactTime | None = None
    delta: int | None = None
    g: int | None = None
    theta0: ExactScalar | None = None
    support: tuple[ExactScalar, ...] = ()
    diffs: tuple[int, ...] = ()    # (theta0 - theta_r)/sqrt(delta), support order
    failure: FailureReason | None = None
    warnings: tuple[str, ...] = ()

    def phase_at(self, t: ExactTime) -> PhaseFactor | None:
        """Common phase exp(-i*t*theta) if the state is periodic at t."""
        if not self.periodic:
            return None
        if self.always:
            return PhaseFactor.from_theta_time(self.theta0, t)
        for d in self.diffs:
            x = _scaled_exponent(t, d, self.delta)
            if x is None or x % 2 != 0:
                return None
        return PhaseFactor.from_theta_time(self.theta0, t)


def _scaled_exponent(t: ExactTime, d: int, delta: int) -> Fraction | None:
    """t*(d*sqrt(delta))/pi as a rational, or None when irrational."""
    if d == 0:
        return Fraction(0)
    if t.delta != delta:
        return None
    return t.q * d


def _normalize_field(supp: tuple[ExactScalar, ...]):
    """Common square-free delta and scaled differences to the top eigenvalue.

    Returns (delta, diffs) where diffs[i] = (supp[0] - supp[i])/sqrt(delta),
    or a FailureReason when the support spans several quadratic fields or a
    difference is not an integer multiple of sqrt(delta).
    """
    deltas = {ev.delta for ev in supp if ev.b != 0}
    if len(deltas) > 1:
        return None, FailureReason(
            MIXED_FIELDS, detail=f"support spans Q(sqrt(d)) for d in {sorted(deltas)}"
        )
    if not deltas:
        top = supp[0].as_int
        return (1, tuple(top - ev.as_int for ev in supp)), None
    delta = deltas.pop()
    a0, b0 = None, None
    pairs = []
    for ev in supp:
        a, b = (ev.a, ev.b) if ev.b != 0 else (2 * ev.as_int, 0)
        pairs.append((ev, a, b))
    a0, b0 = pairs[0][1], pairs[0][2]
    diffs = []
    for ev, a, b in pairs:
        if a != a0 or (b0 - b) % 2 != 0:
            return None, FailureReason(
                RATIO_CONDITION,
                eigenvalue=ev,
                detail=f"difference to {supp[0]} is not an integer multiple of sqrt({delta})",
            )
        diffs.append((b0 - b) // 2)
    return (delta, tuple(diffs)), None


def _zero_warning(supp, delta) -> tuple[str, ...]:
    if delta > 1 and any(ev.is_exact and ev.value == 0 for ev in supp):
        return (
            "support contains the zero eigenvalue alongside quadratic ones; "
            "the quadratic-integer form was applied to all of them",
        )
    return ()


def _require_exact(dec: SpectralDecomposition):
    if not dec.is_exact:
        raise NotExact(
            f"certification needs an exact decomposition; {dec.source or 'matrix'} "
            "fell back to floats (use the dynamics module for numerical evidence)"
        )


def _distinct(s1: State, s2: State):
    if isinstance(s1, PairState) and isinstance(s2, PairState) and s1.same_pair(s2):
        raise InvalidParams(f"states {s1} and {s2} involve the same vertex pair")
    if isinstance(s1, VertexState) and isinstance(s2, VertexState) and s1.u == s2.u:
        raise InvalidParams("transfer needs two distinct vertices")


def _certify_transfer(
    dec: SpectralDecomposition, s1: State, s2: State, tol: Tolerances
) -> TransferCertificate:
    _require_exact(dec)
    _distinct(s1, s2)
    kind = s1.kind
    rep = strong_cospectral(dec, s1, s2, tol)
    base = dict(source=dec.source, kind=kind, s1=s1, s2=s2, cospectral=rep)
    if not rep.strongly_cospectral:
        return TransferCertificate(
            exists=False,
            failure=FailureReason(
                NOT_STRONGLY_COSPECTRAL,
                detail=f"{len(rep.witness)} support eigenvalue(s) fail the sign condition"
                if rep.witness
                else "supports differ",
            ),
            **base,
        )
    plus, minus, flipped = rep.plus, rep.minus, False
    if not plus:
        if not minus:
            return TransferCertificate(
                exists=False,
                failure=FailureReason(EMPTY_LAMBDA_PLUS, detail="empty support"),
                **base,
            )
        plus, minus, flipped = minus, plus, True
    supp = rep.support1
    norm, fail = _normalize_field(supp)
    if fail is not None:
        return TransferCertificate(exists=False, failure=fail, **base)
    delta, diffs_top = norm
    # re-fit differences to theta0, the largest eigenvalue in the plus class
    theta0 = plus[0]
    i0 = supp.index(theta0)
    diffs = {ev: diffs_top[i] - diffs_top[i0] for i, ev in enumerate(supp)}
    g = gcd_many(diffs.values())
    assert g > 0, "distinct strongly cospectral states cannot have singleton support"
    plus_set, minus_set = set(plus), set(minus)
    for ev in supp:
        even = (diffs[ev] // g) % 2 == 0
        if (ev in plus_set) != even:
            want = "even" if ev in plus_set else "odd"
            return TransferCertificate(
                exists=False,
                failure=FailureReason(
                    PARITY_CONDITION,
                    eigenvalue=ev,
                    detail=f"(theta0-theta)/(g*sqrt(delta)) = {diffs[ev] // g} must be {want}",
                ),
                **base,
            )
    tau0 = ExactTime(Fraction(1, g), delta)
    return TransferCertificate(
        exists=True,
        delta=delta,
        g=g,
        tau0=tau0,
        theta0=theta0,
        phase=PhaseFactor.from_theta_time(theta0, tau0, negate=flipped),
        sign_flipped=flipped,
        warnings=_zero_warning(supp, delta),
        **base,
    )


def certify_pair_transfer(
    dec: SpectralDecomposition,
    s1: PairState,
    s2: PairState,
    tol: Tolerances = DEFAULT,
) -> TransferCertificate:
    """Perfect pair state transfer certificate for any symmetric integer matrix."""
    return _certify_transfer(dec, s1, s2, tol)


def certify_pst(
    dec: SpectralDecomposition,
    u: VertexState,
    v: VertexState,
    tol: Tolerances = DEFAULT,
) -> TransferCertificate:
    """Perfect state transfer certificate between two vertices (adjacency walk)."""
    return _certify_transfer(dec, u, v, tol)


def certify_periodic(
    dec: SpectralDecomposition, s: State, tol: Tolerances = DEFAULT
) -> PeriodicityCertificate:
    """Periodicity certificate; minimal period 2*pi/(g*sqrt(delta)) when not constant."""
    _require_exact(dec)
    supp = support(dec, s, tol)
    assert supp, "a nonzero state always has a nonempty support"
    base = dict(source=dec.source, state=s, support=supp)
    if len(supp) == 1:
        return PeriodicityCertificate(
            periodic=True,
            always=True,
            theta0=supp[0],
            delta=supp[0].delta if supp[0].b != 0 else 1,
            **base,
        )
    norm, fail = _normalize_field(supp)
    if fail is not None:
        return PeriodicityCertificate(periodic=False, failure=fail, **base)
    delta, diffs = norm
    g = gcd_many(diffs)
    return PeriodicityCertificate(
        periodic=True,
        minimal_period=ExactTime(Fraction(2, g), delta),
        delta=delta,
        g=g,
        theta0=supp[0],
        diffs=diffs,
        warnings=_zero_warning(supp, delta),
        **base,
    )


def phase_at(
    dec: SpectralDecomposition, s: State, t: ExactTime, tol: Tolerances = DEFAULT
) -> PhaseFactor | None:
    """Common phase of a periodic return at time t, or None if not periodic there."""
    cert = certify_periodic(dec, s, tol)
    return cert.phase_at(t)


def pair_transfer_at(
    dec: SpectralDecomposition,
    s1: State,
    s2: State,
    t: ExactTime,
    tol: Tolerances = DEFAULT,
) -> tuple[PhaseFactor | None, str]:
    """Exact check that U(t) maps s1 onto a phase times s2; returns (phase, detail).

    Unlike the certificates this decides transfer at one given time, which
    need not be the minimum time.
    """
    _require_exact(dec)
    rep = strong_cospectral(dec, s1, s2, tol)
    if not rep.strongly_cospectral:
        return None, "states are not strongly cospectral"
    plus, minus, flipped = rep.plus, rep.minus, False
    if not plus:
        plus, minus, flipped = minus, plus, True
    supp = rep.support1
    norm, fail = _normalize_field(supp)
    if fail is not None:
        return None, str(fail)
    delta, diffs_top = norm
    theta0 = plus[0]
    i0 = supp.index(theta0)
    plus_set = set(plus)
    for i, ev in enumerate(supp):
        d = diffs_top[i] - diffs_top[i0]
        x = _scaled_exponent(t, d, delta)
        if x is None:
            return None, f"t*({theta0}-({ev}))/pi is irrational"
        want_even = ev in plus_set
        if x.denominator != 1 or (x % 2 == 0) != want_even:
            cls = "plus" if want_even else "minus"
            return (
                None,
                f"phase alignment fails at {ev} ({cls} class, t*diff/pi = {x})",
            )
    return PhaseFactor.from_theta_time(theta0, t, negate=flipped), "ok"
