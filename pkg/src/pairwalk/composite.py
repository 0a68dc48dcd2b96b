"""Decision procedures for pair transfer in tensor products and double covers.

Three tensor-product routes assert Laplacian pair transfer in G x H from a
certified transfer in the factor H:

  - "tensor-pst":      H has vertex PST; the product pair rides a Laplacian
                       strongly cospectral pair of G.
  - "tensor-pairpst":  H has pair transfer under its adjacency walk; the
                       product pair rides an adjacency strongly cospectral
                       vertex pair of G.
  - "tensor-swap":     H maps one vertex onto another with a root-of-unity
                       phase; the asserted pair mixes the two coordinates.
                       Sufficient conditions only.

The double-cover routes reduce transfer in the cover to periodicity or
transfer under A_G + A_H and A_G - A_H with matching or opposite phases,
plus a sufficient commuting-factors shortcut with phase +-i.

All times are exact rationals q times the certified base time tau; each
condition is an arithmetic statement about q (odd-integrality of the
multipliers d_r * q and congruences modulo the order p of the phase).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .certify import certify_pair_transfer, certify_periodic, certify_pst, pair_transfer_at, phase_at
from .cospectral import strong_cospectral, support
from .errors import HypothesisFailed, InvalidParams, NonCommuting, NotExact, NotRegular, SizeMismatch
from .exactnum import ExactScalar, ExactTime, PhaseFactor
from .graphs import Graph, PairState, VertexState, product_index, regularity
from .spectral import SpectralDecomposition, graph_decomposition
from .tolerances import DEFAULT, Tolerances

HOLDS = "holds"
DOES_NOT_HOLD = "does-not-hold"
UNKNOWN = "unknown"
REFUTED = "refuted-numerically"


@dataclass(frozen=True)
class ConditionResult:
    cid: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class CompositeVerdict:
    construction: str
    holds: bool
    outcome: str
    sufficient_only: bool
    tau: ExactTime | None = None         # certified base time of the factor
    t: ExactTime | None = None           # absolute time checked or solved
    q: Fraction | None = None            # t / tau
    p: int | None = None                 # order of the factor phase
    per_condition: tuple[ConditionResult, ...] = ()
    source_state: PairState | None = None
    target_state: PairState | None = None
    phase: PhaseFactor | None = None     # predicted transfer phase, when exact
    phase_approx: complex | None = None
    notes: tuple[str, ...] = ()

    @property
    def failed_conditions(self) -> tuple[ConditionResult, ...]:
        return tuple(c for c in self.per_condition if not c.passed)


@dataclass
class _TensorInstance:
    """Everything needed to evaluate the arithmetic conditions at a given q."""

    construction: str
    sufficient_only: bool
    d: list[int]                      # integer multipliers, or placeholder
    irrational: ExactScalar | None    # an eigenvalue making d_r irrational
    classes: list[bool] | None        # plus-class flags, None for pairwise mode
    i0: int                           # index of the reference eigenvalue
    need_even_p: bool
    tau: ExactTime
    lam: PhaseFactor
    p: int | None
    r1: int
    r2: int
    k0_sign: int                      # k0 = k0_sign * d[i0] * q
    extra_negate: bool                # swap route flips the overall phase
    src: PairState
    dst: PairState
    pre: list[ConditionResult]
    notes: list[str] = field(default_factory=list)


def _odd_multiple_condition(inst: _TensorInstance, q: Fraction) -> ConditionResult:
    cid = f"{inst.construction}(a)"
    if inst.irrational is not None:
        return ConditionResult(
            cid, False, f"multiplier for eigenvalue {inst.irrational} is irrational"
        )
    if q is None:
        return ConditionResult(cid, False, "t is not a rational multiple of tau")
    for d in inst.d:
        k = d * q
        if k.denominator != 1 or k.numerator % 2 == 0:
            return ConditionResult(
                cid, False, f"multiplier {d} gives {k} at q={q}; need an odd integer"
            )
    return ConditionResult(cid, True, f"multipliers {inst.d} all give odd integers at q={q}")


def _congruence_conditions(inst: _TensorInstance, q: Fraction) -> list[ConditionResult]:
    name = inst.construction
    out = []
    if inst.p is None:
        out.append(
            ConditionResult(
                f"{name}(b:root-of-unity)", False, "factor phase is not a root of unity"
            )
        )
        return out
    p = inst.p
    out.append(
        ConditionResult(f"{name}(b:root-of-unity)", True, f"factor phase has order p={p}")
    )
    if inst.need_even_p:
        ok = p % 2 == 0
        out.append(
            ConditionResult(
                f"{name}(b:even-order)",
                ok,
                f"p={p} is even; phase^(p/2) = -1" if ok else f"p={p} is odd",
            )
        )
        if not ok:
            return out
    if q is None or inst.irrational is not None:
        out.append(ConditionResult(f"{name}(b:congruence)", False, "not evaluable"))
        return out
    if inst.classes is None:
        for i, d in enumerate(inst.d):
            c = (d - inst.d[0]) * q
            if c.denominator != 1 or c.numerator % p != 0:
                out.append(
                    ConditionResult(
                        f"{name}(b:congruence)",
                        False,
                        f"scaled difference {c} of multipliers {inst.d[0]},{d} is not 0 mod {p}",
                    )
                )
                return out
        out.append(
            ConditionResult(
                f"{name}(b:congruence)", True, f"all multiplier differences are 0 mod {p}"
            )
        )
        return out
    d0 = inst.d[inst.i0]
    for i, d in enumerate(inst.d):
        c = (d0 - d) * q
        want = 0 if inst.classes[i] else p // 2
        tag = "i" if inst.classes[i] else "ii"
        if c.denominator != 1 or c.numerator % p != want:
            out.append(
                ConditionResult(
                    f"{name}(b)({tag})",
                    False,
                    f"scaled difference {c} to the reference eigenvalue is "
                    f"{c % p if c.denominator == 1 else c} mod {p}, need {want}",
                )
            )
            return out
    out.append(
        ConditionResult(
            f"{name}(b)(i/ii)",
            True,
            f"plus class differences are 0 and minus class differences are {p // 2} mod {p}",
        )
    )
    return out


def _predict_phase(inst: _TensorInstance, q: Fraction, t: ExactTime):
    """chi = (-1)^swap * exp(-i*r1*r2*t) * lambda^k0, exact when rational."""
    k0 = int(inst.k0_sign * inst.d[inst.i0] * q)
    try:
        ph = PhaseFactor.from_theta_time(ExactScalar.integer(inst.r1 * inst.r2), t)
        chi = ph * (inst.lam**k0)
        if inst.extra_negate:
            chi = chi * PhaseFactor.from_exponent(Fraction(1))
        return chi, None
    except ValueError:
        approx = (
            (-1 if inst.extra_negate else 1)
            * np.exp(-1j * inst.r1 * inst.r2 * t.value)
            * inst.lam.complex_value**k0
        )
        return None, complex(approx)


def _verdict_at(inst: _TensorInstance, t: ExactTime, tol: Tolerances) -> CompositeVerdict:
    if t.q <= 0:
        raise InvalidParams("composite checks need a positive time t")
    q = t.ratio(inst.tau)
    conditions = list(inst.pre)
    conditions.append(_odd_multiple_condition(inst, q))
    conditions.extend(_congruence_conditions(inst, q))
    holds = all(c.passed for c in conditions)
    phase = approx = None
    if holds:
        phase, approx = _predict_phase(inst, q, t)
    return CompositeVerdict(
        construction=inst.construction,
        holds=holds,
        outcome=HOLDS if holds else (UNKNOWN if inst.sufficient_only else DOES_NOT_HOLD),
        sufficient_only=inst.sufficient_only,
        tau=inst.tau,
        t=t,
        q=q,
        p=inst.p,
        per_condition=tuple(conditions),
        source_state=inst.src,
        target_state=inst.dst,
        phase=phase,
        phase_approx=approx,
        notes=tuple(inst.notes),
    )


def _failed_pre_verdict(
    construction: str, sufficient_only: bool, pre: list[ConditionResult], notes=()
) -> CompositeVerdict:
    return CompositeVerdict(
        construction=construction,
        holds=False,
        outcome=UNKNOWN,
        sufficient_only=sufficient_only,
        per_condition=tuple(pre),
        notes=tuple(notes),
    )


def _require_exact_dec(dec: SpectralDecomposition):
    if not dec.is_exact:
        raise NotExact(
            f"composite checks need exact factor spectra; {dec.source} is float-only"
        )


def _regular_pair(g: Graph, h: Graph) -> tuple[int, int]:
    r1, r2 = regularity(g), regularity(h)
    if r1 is None or r2 is None:
        raise NotRegular("both factors must be regular graphs")
    return r1, r2


def _int_supports(values) -> tuple[list[int], ExactScalar | None]:
    out = []
    for ev in values:
        if not ev.is_integer:
            return [], ev
        out.append(ev.as_int)
    return out, None


# ---------------------------------------------------------------------------
# tensor-product routes


def _setup_tensor_pst(
    g: Graph, h: Graph, pair1: PairState, pair2: PairState, pst_pair: tuple[int, int], tol
) -> _TensorInstance | CompositeVerdict:
    name = "tensor-pst"
    r1, r2 = _regular_pair(g, h)
    dec_l = graph_decomposition(g, "laplacian")
    _require_exact_dec(dec_l)
    w, z = pst_pair
    cert = certify_pst(
        graph_decomposition(h, "adjacency"), VertexState(w), VertexState(z), tol
    )
    if not cert.exists:
        raise HypothesisFailed(
            f"H has no vertex PST between {w} and {z}: {cert.failure}"
        )
    pre = [
        ConditionResult(f"{name}(pre:regular)", True, f"r1={r1}, r2={r2}"),
        ConditionResult(
            f"{name}(pre:h-pst)", True, f"tau={cert.tau0}, phase={cert.phase}"
        ),
    ]
    m = h.n
    src = PairState(product_index(pair1.a, w, m), product_index(pair1.b, w, m))
    dst = PairState(product_index(pair2.a, z, m), product_index(pair2.b, z, m))
    self_pair = pair1.same_pair(pair2)
    if self_pair:
        supp = support(dec_l, pair1, tol)
        classes, i0 = None, 0
        pre.append(
            ConditionResult(f"{name}(pre:strong-cospectral)", True, "single pair state")
        )
    else:
        rep = strong_cospectral(dec_l, pair1, pair2, tol)
        pre.append(
            ConditionResult(
                f"{name}(pre:strong-cospectral)",
                rep.strongly_cospectral,
                "Laplacian strongly cospectral"
                if rep.strongly_cospectral
                else "pair states are not Laplacian strongly cospectral in G",
            )
        )
        if not rep.strongly_cospectral:
            return _failed_pre_verdict(name, False, pre)
        supp = rep.support1
        classes = [ev in set(rep.plus) for ev in supp]
        i0 = supp.index(rep.plus[0])
    ints, irr = _int_supports(supp)
    d = [zi - r1 for zi in ints] if irr is None else []
    return _TensorInstance(
        construction=name,
        sufficient_only=False,
        d=d,
        irrational=irr,
        classes=classes,
        i0=i0,
        need_even_p=not self_pair,
        tau=cert.tau0,
        lam=cert.phase,
        p=cert.phase.order(),
        r1=r1,
        r2=r2,
        k0_sign=1,
        extra_negate=False,
        src=src,
        dst=dst,
        pre=pre,
    )


def _setup_tensor_pairpst(
    g: Graph, h: Graph, w: int, z: int, pair1: PairState, pair2: PairState, tol
) -> _TensorInstance | CompositeVerdict:
    name = "tensor-pairpst"
    r1, r2 = _regular_pair(g, h)
    dec_a = graph_decomposition(g, "adjacency")
    _require_exact_dec(dec_a)
    cert = certify_pair_transfer(graph_decomposition(h, "adjacency"), pair1, pair2, tol)
    if not cert.exists:
        raise HypothesisFailed(
            f"H has no adjacency pair transfer {pair1} -> {pair2}: {cert.failure}"
        )
    pre = [
        ConditionResult(f"{name}(pre:regular)", True, f"r1={r1}, r2={r2}"),
        ConditionResult(
            f"{name}(pre:h-pair-transfer)", True, f"tau={cert.tau0}, phase={cert.phase}"
        ),
    ]
    m = h.n
    src = PairState(product_index(w, pair1.a, m), product_index(w, pair1.b, m))
    dst = PairState(product_index(z, pair2.a, m), product_index(z, pair2.b, m))
    if w == z:
        supp = support(dec_a, VertexState(w), tol)
        classes, i0 = None, 0
        pre.append(
            ConditionResult(f"{name}(pre:strong-cospectral)", True, "single vertex")
        )
    else:
        rep = strong_cospectral(dec_a, VertexState(w), VertexState(z), tol)
        pre.append(
            ConditionResult(
                f"{name}(pre:strong-cospectral)",
                rep.strongly_cospectral,
                "adjacency strongly cospectral"
                if rep.strongly_cospectral
                else f"vertices {w}, {z} are not adjacency strongly cospectral in G",
            )
        )
        if not rep.strongly_cospectral:
            return _failed_pre_verdict(name, False, pre)
        supp = rep.support1
        classes = [ev in set(rep.plus) for ev in supp]
        i0 = supp.index(rep.plus[0])
    d, irr = _int_supports(supp)
    return _TensorInstance(
        construction=name,
        sufficient_only=False,
        d=d,
        irrational=irr,
        classes=classes,
        i0=i0,
        need_even_p=w != z,
        tau=cert.tau0,
        lam=cert.phase,
        p=cert.phase.order(),
        r1=r1,
        r2=r2,
        k0_sign=-1,
        extra_negate=False,
        src=src,
        dst=dst,
        pre=pre,
    )


def _setup_tensor_swap(
    g: Graph, h: Graph, a: int, b: int, w: int, z: int, tol
) -> _TensorInstance | CompositeVerdict:
    name = "tensor-swap"
    r1, r2 = _regular_pair(g, h)
    dec_a = graph_decomposition(g, "adjacency")
    _require_exact_dec(dec_a)
    dec_h = graph_decomposition(h, "adjacency")
    if w != z:
        cert = certify_pst(dec_h, VertexState(w), VertexState(z), tol)
        if not cert.exists:
            raise HypothesisFailed(
                f"H has no vertex PST between {w} and {z}: {cert.failure}"
            )
        tau, lam = cert.tau0, cert.phase
        hyp_detail = f"PST with tau={tau}, phase={lam}"
    else:
        pcert = certify_periodic(dec_h, VertexState(w), tol)
        if not pcert.periodic:
            raise HypothesisFailed(f"vertex {w} of H is not periodic: {pcert.failure}")
        if pcert.always:
            raise HypothesisFailed(
                f"vertex {w} of H is an eigenvector state; it has no minimum period"
            )
        tau = pcert.minimal_period
        lam = pcert.phase_at(tau)
        hyp_detail = f"periodic with minimum period {tau}, phase {lam}"
    pre = [
        ConditionResult(f"{name}(pre:regular)", True, f"r1={r1}, r2={r2}"),
        ConditionResult(f"{name}(pre:h-hypothesis)", True, hyp_detail),
    ]
    sup_a = support(dec_a, VertexState(a), tol)
    sup_b = support(dec_a, VertexState(b), tol)
    supp = tuple(sorted(set(sup_a) | set(sup_b), reverse=True))
    d, irr = _int_supports(supp)
    m = h.n
    src = PairState(product_index(a, w, m), product_index(b, z, m))
    dst = PairState(product_index(b, w, m), product_index(a, z, m))
    return _TensorInstance(
        construction=name,
        sufficient_only=True,
        d=d,
        irrational=irr,
        classes=None,
        i0=0,
        need_even_p=False,
        tau=tau,
        lam=lam,
        p=lam.order(),
        r1=r1,
        r2=r2,
        k0_sign=-1,
        extra_negate=True,
        src=src,
        dst=dst,
        pre=pre,
        notes=[
            "the asserted target swaps the first coordinate only: "
            "e_(b,w)-e_(a,z), which is not the negated source e_(b,z)-e_(a,w)"
        ],
    )


def check_tensor_with_pst(
    g: Graph,
    h: Graph,
    pair1: PairState,
    pair2: PairState,
    pst_pair: tuple[int, int],
    t: ExactTime,
    tol: Tolerances = DEFAULT,
) -> CompositeVerdict:
    """Pair transfer in G x H at time t, riding a vertex PST of H."""
    inst = _setup_tensor_pst(g, h, pair1, pair2, pst_pair, tol)
    if isinstance(inst, CompositeVerdict):
        return inst
    return _verdict_at(inst, t, tol)


def check_tensor_with_pairpst(
    g: Graph,
    h: Graph,
    w: int,
    z: int,
    pair1: PairState,
    pair2: PairState,
    t: ExactTime,
    tol: Tolerances = DEFAULT,
) -> CompositeVerdict:
    """Pair transfer in G x H at time t, riding an adjacency pair transfer of H."""
    inst = _setup_tensor_pairpst(g, h, w, z, pair1, pair2, tol)
    if isinstance(inst, CompositeVerdict):
        return inst
    return _verdict_at(inst, t, tol)


def check_tensor_swap(
    g: Graph,
    h: Graph,
    a: int,
    b: int,
    w: int,
    z: int,
    t: ExactTime,
    tol: Tolerances = DEFAULT,
) -> CompositeVerdict:
    """Sufficient check for transfer between coordinate-mixing product pairs."""
    inst = _setup_tensor_swap(g, h, a, b, w, z, tol)
    if isinstance(inst, CompositeVerdict):
        return inst
    return _verdict_at(inst, t, tol)


@dataclass(frozen=True)
class TensorProblem:
    """One tensor-theorem instance for the time solver."""

    kind: str  # "pst" | "pairpst" | "swap"
    g: Graph
    h: Graph
    pair1: PairState | None = None
    pair2: PairState | None = None
    pst_pair: tuple[int, int] | None = None
    w: int | None = None
    z: int | None = None
    a: int | None = None
    b: int | None = None


def _setup_problem(prob: TensorProblem, tol):
    if prob.kind == "pst":
        return _setup_tensor_pst(prob.g, prob.h, prob.pair1, prob.pair2, prob.pst_pair, tol)
    if prob.kind == "pairpst":
        return _setup_tensor_pairpst(prob.g, prob.h, prob.w, prob.z, prob.pair1, prob.pair2, tol)
    if prob.kind == "swap":
        return _setup_tensor_swap(prob.g, prob.h, prob.a, prob.b, prob.w, prob.z, tol)
    raise InvalidParams(f"unknown tensor problem kind {prob.kind!r}")


def _odd_divisors(n: int):
    n = abs(n)
    while n % 2 == 0:
        n //= 2
    divs = [d for d in range(1, n + 1) if n % d == 0]
    return divs


def solve_tensor_time(
    prob: TensorProblem, tol: Tolerances = DEFAULT
) -> tuple[ExactTime | None, CompositeVerdict]:
    """Smallest positive t = q*tau satisfying the conditions, if any exists.

    The search is finite and complete: condition (a) forces every d_r * q to
    be an odd integer, so all d_r share one 2-adic valuation nu and
    q = c/(u*2^nu) with u an odd divisor of gcd(d_r/2^nu) and c odd, coprime
    to u; the congruences only depend on c modulo 2p, so scanning c over one
    period per u decides existence.
    """
    inst = _setup_problem(prob, tol)
    if isinstance(inst, CompositeVerdict):
        return None, inst

    def nonexistence(reason: str) -> CompositeVerdict:
        return CompositeVerdict(
            construction=inst.construction,
            holds=False,
            outcome=UNKNOWN if inst.sufficient_only else DOES_NOT_HOLD,
            sufficient_only=inst.sufficient_only,
            tau=inst.tau,
            p=inst.p,
            per_condition=tuple(inst.pre),
            source_state=inst.src,
            target_state=inst.dst,
            notes=tuple(inst.notes) + (f"no valid time exists: {reason}",),
        )

    if inst.irrational is not None:
        return None, nonexistence(
            f"multiplier for eigenvalue {inst.irrational} is irrational"
        )
    if any(d == 0 for d in inst.d):
        return None, nonexistence("a zero multiplier can never give an odd multiple")
    if inst.p is None:
        return None, nonexistence("the factor phase is not a root of unity")
    vals = {(abs(d) & -abs(d)).bit_length() - 1 for d in inst.d}
    if len(vals) > 1:
        return None, nonexistence(
            f"multipliers {inst.d} have mixed 2-adic valuations {sorted(vals)}"
        )
    nu = vals.pop()
    reduced = [d >> nu for d in inst.d]
    g0 = 0
    for r in reduced:
        g0 = math.gcd(g0, abs(r))
    best_q = None
    for u in _odd_divisors(g0):
        for c in range(1, 2 * inst.p * u + 1, 2):
            if math.gcd(c, u) != 1:
                continue
            q = Fraction(c, u * (1 << nu))
            if best_q is not None and q >= best_q:
                continue
            conds = _congruence_conditions(inst, q)
            odd = _odd_multiple_condition(inst, q)
            if odd.passed and all(cc.passed for cc in conds):
                best_q = q
    if best_q is None:
        return None, nonexistence(
            f"no residue class modulo 2p={2 * inst.p} satisfies the congruences"
        )
    t = ExactTime(inst.tau.q * best_q, inst.tau.delta)
    return t, _verdict_at(inst, t, tol)


# ---------------------------------------------------------------------------
# double-cover routes


def _cover_states(n: int, side1: int, pair1: PairState, side2: int, pair2: PairState):
    src = PairState(side1 * n + pair1.a, side1 * n + pair1.b)
    dst = PairState(side2 * n + pair2.a, side2 * n + pair2.b)
    return src, dst


def _sum_diff_decompositions(g: Graph, h: Graph):
    if g.n != h.n:
        raise SizeMismatch(
            f"double cover needs equal vertex counts, got {g.n} and {h.n}"
        )
    m_plus = g.adj + h.adj
    m_minus = g.adj - h.adj
    from .spectral import eigen_decompose

    dec_p = eigen_decompose(m_plus, source="A_G+A_H")
    dec_m = eigen_decompose(m_minus, source="A_G-A_H")
    _require_exact_dec(dec_p)
    _require_exact_dec(dec_m)
    return dec_p, dec_m


def check_double_cover(
    g: Graph,
    h: Graph,
    mode: str,
    pair1: PairState,
    tau: ExactTime,
    pair2: PairState | None = None,
    side: int = 0,
    tol: Tolerances = DEFAULT,
) -> CompositeVerdict:
    """Pair transfer in the double cover of G and H at time tau.

    mode "a": one pair, transfer across the two copies; needs the pair
    periodic under A_G+A_H and A_G-A_H with opposite phases.
    mode "b": two pairs on copy `side`; needs pair transfer under both
    matrices with equal phases (the conditions do not depend on the copy).
    mode "c": pair1 on copy 0 to pair2 on copy 1; transfer under both
    matrices with opposite phases.
    """
    name = "double-cover"
    if tau.q <= 0:
        raise InvalidParams("composite checks need a positive time")
    r1, r2 = _regular_pair(g, h)
    dec_p, dec_m = _sum_diff_decompositions(g, h)
    n = g.n
    conditions: list[ConditionResult] = [
        ConditionResult(f"{name}(pre:regular)", True, f"r1={r1}, r2={r2}")
    ]
    notes: list[str] = []
    if mode == "a":
        pair2 = pair1
        ph_p = phase_at(dec_p, pair1, tau, tol)
        ph_m = phase_at(dec_m, pair1, tau, tol)
        conditions.append(
            ConditionResult(
                f"{name}(a:periodic-plus)",
                ph_p is not None,
                f"phase {ph_p}" if ph_p else f"{pair1} is not periodic under A_G+A_H at {tau}",
            )
        )
        conditions.append(
            ConditionResult(
                f"{name}(a:periodic-minus)",
                ph_m is not None,
                f"phase {ph_m}" if ph_m else f"{pair1} is not periodic under A_G-A_H at {tau}",
            )
        )
        src, dst = _cover_states(n, 0, pair1, 1, pair1)
    elif mode in ("b", "c"):
        if pair2 is None:
            raise InvalidParams(f"mode {mode!r} needs a second pair of vertices")
        ph_p, det_p = pair_transfer_at(dec_p, pair1, pair2, tau, tol)
        ph_m, det_m = pair_transfer_at(dec_m, pair1, pair2, tau, tol)
        conditions.append(
            ConditionResult(
                f"{name}({mode}:transfer-plus)",
                ph_p is not None,
                f"phase {ph_p}" if ph_p else f"under A_G+A_H: {det_p}",
            )
        )
        conditions.append(
            ConditionResult(
                f"{name}({mode}:transfer-minus)",
                ph_m is not None,
                f"phase {ph_m}" if ph_m else f"under A_G-A_H: {det_m}",
            )
        )
        if mode == "b":
            if side not in (0, 1):
                raise InvalidParams("side must be 0 or 1")
            src, dst = _cover_states(n, side, pair1, side, pair2)
            notes.append(
                "the same conditions govern both copies; transfer holds on "
                "copy 0 and copy 1 simultaneously"
            )
        else:
            src, dst = _cover_states(n, 0, pair1, 1, pair2)
    else:
        raise InvalidParams(f"unknown double-cover mode {mode!r}")

    phase = approx = None
    if ph_p is not None and ph_m is not None:
        rel = ph_p.ratio_exponent(ph_m)
        want = Fraction(0) if mode == "b" else Fraction(1)
        label = "equal-phase" if mode == "b" else "opposite-phase"
        ok = rel is not None and rel == want
        conditions.append(
            ConditionResult(
                f"{name}({mode}:{label})",
                ok,
                f"phase ratio exponent {rel} (need {want})",
            )
        )
        if ok:
            # realized cover phase: exp(-i*tau*(r1+r2)) / phase_plus
            try:
                phase = PhaseFactor.from_theta_time(
                    ExactScalar.integer(r1 + r2), tau
                ) * ph_p.inverse()
            except ValueError:
                approx = complex(
                    np.exp(-1j * (r1 + r2) * tau.value) / ph_p.complex_value
                )
    holds = all(c.passed for c in conditions)
    return CompositeVerdict(
        construction=name,
        holds=holds,
        outcome=HOLDS if holds else DOES_NOT_HOLD,
        sufficient_only=False,
        tau=tau,
        t=tau,
        q=Fraction(1),
        per_condition=tuple(conditions),
        source_state=src,
        target_state=dst,
        phase=phase,
        phase_approx=approx,
        notes=tuple(notes),
    )


def check_cor_double_cover(
    g: Graph,
    h: Graph,
    pair: PairState,
    tau: ExactTime,
    tol: Tolerances = DEFAULT,
) -> CompositeVerdict:
    """Sufficient commuting-factors route: the pair periodic under A_G at tau
    (any phase) and under A_H at tau with phase +-i gives transfer across the
    cover copies at tau."""
    name = "double-cover-commuting"
    if tau.q <= 0:
        raise InvalidParams("composite checks need a positive time")
    if g.n != h.n:
        raise SizeMismatch(f"double cover needs equal vertex counts, got {g.n} and {h.n}")
    r1, r2 = _regular_pair(g, h)
    if not np.array_equal(g.adj @ h.adj, h.adj @ g.adj):
        raise NonCommuting("the factor adjacency matrices do not commute")
    dec_g = graph_decomposition(g, "adjacency")
    dec_h = graph_decomposition(h, "adjacency")
    _require_exact_dec(dec_g)
    _require_exact_dec(dec_h)
    ph_g = phase_at(dec_g, pair, tau, tol)
    ph_h = phase_at(dec_h, pair, tau, tol)
    conditions = [
        ConditionResult(f"{name}(pre:regular)", True, f"r1={r1}, r2={r2}"),
        ConditionResult(f"{name}(pre:commuting)", True, "A_G A_H = A_H A_G"),
        ConditionResult(
            f"{name}(periodic-g)",
            ph_g is not None,
            f"phase {ph_g}" if ph_g else f"{pair} is not periodic under A_G at {tau}",
        ),
    ]
    imag_ok = False
    if ph_h is None:
        conditions.append(
            ConditionResult(
                f"{name}(periodic-h-imaginary)",
                False,
                f"{pair} is not periodic under A_H at {tau}",
            )
        )
    else:
        x = ph_h.exponent
        imag_ok = x in (Fraction(1, 2), Fraction(3, 2))
        conditions.append(
            ConditionResult(
                f"{name}(periodic-h-imaginary)",
                imag_ok,
                f"phase {ph_h}" + ("" if imag_ok else " is not +-i"),
            )
        )
    holds = all(c.passed for c in conditions)
    phase = approx = None
    if holds:
        try:
            phase = (
                PhaseFactor.from_theta_time(ExactScalar.integer(r1 + r2), tau)
                * ph_g.inverse()
                * ph_h.inverse()
            )
        except ValueError:
            approx = complex(
                np.exp(-1j * (r1 + r2) * tau.value)
                / (ph_g.complex_value * ph_h.complex_value)
            )
    n = g.n
    src, dst = _cover_states(n, 0, pair, 1, pair)
    return CompositeVerdict(
        construction=name,
        holds=holds,
        outcome=HOLDS if holds else UNKNOWN,
        sufficient_only=True,
        tau=tau,
        t=tau,
        q=Fraction(1),
        per_condition=tuple(conditions),
        source_state=src,
        target_state=dst,
        phase=phase,
        phase_approx=approx,
    )
