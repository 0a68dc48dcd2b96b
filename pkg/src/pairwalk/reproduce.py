"""Reproduction suite for the four worked composite-transfer families.

Each family pairs an exact composite verdict with an independent numerical
fidelity measurement on the assembled product or cover graph:

  1. complete x path2:        pair transfer rides the 2-vertex path PST
  2. complete(2n) x cycle4:   pair transfer rides the 4-cycle pair transfer
  3. complete(4n) x path2:    the coordinate-swapping sufficient route
  4. complete |x complete:    the commuting double-cover route

A deliberate negative control (wrong_time=True) replaces the certified time
with pi/3; every family must then report failure, which guards the harness
against vacuous passes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import graphs
from .composite import TensorProblem, check_cor_double_cover, check_tensor_with_pairpst, check_tensor_swap, solve_tensor_time
from .certify import certify_pair_transfer
from .dynamics import fidelity
from .exactnum import ExactTime
from .graphs import PairState, double_cover, laplacian, tensor_product
from .spectral import float_decompose, graph_decomposition
from .tolerances import DEFAULT, Tolerances

HALF_PI = ExactTime(Fraction(1, 2))
THIRD_PI = ExactTime(Fraction(1, 3))

DEFAULT_SIZES = {
    "complete x path2": [3, 4, 5, 6, 7, 8],
    "complete(2n) x cycle4": [1, 2, 3, 4],
    "complete(4n) x path2 swap": [1, 2, 3],
    "complete |x complete": [2, 3, 4, 5, 6],
}


@dataclass
class ExampleResult:
    family: str
    n: int
    expected_t: str
    holds: bool
    fidelity: float
    ok: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return (
            f"[{status}] {self.family} (n={self.n}): t={self.expected_t}, "
            f"holds={self.holds}, fidelity={self.fidelity:.12f}"
            + (f" ({self.detail})" if self.detail else "")
        )


def _product_fidelity(g, h, src, dst, t_value, tol):
    prod = tensor_product(g, h)
    dec = float_decompose(laplacian(prod), source=f"laplacian({prod.name})", tol=tol)
    return fidelity(dec, src, dst, t_value)


def _family_tensor_pst(n: int, wrong_time: bool, tol: Tolerances) -> ExampleResult:
    g, h = graphs.complete(n), graphs.path(2)
    t, verdict = solve_tensor_time(
        TensorProblem("pst", g, h, pair1=PairState(0, 1), pair2=PairState(0, 1), pst_pair=(1, 0)),
        tol,
    )
    t_used = THIRD_PI if wrong_time else t
    holds = verdict.holds and t == HALF_PI
    fid = 0.0
    detail = ""
    if t_used is not None:
        fid = _product_fidelity(g, h, verdict.source_state, verdict.target_state, t_used.value, tol)
    if wrong_time:
        detail = "negative control at pi/3"
    ok = holds and abs(fid - 1) <= tol.fidelity
    return ExampleResult("complete x path2", n, str(t_used), holds, fid, ok, detail)


def _family_tensor_pairpst(n: int, wrong_time: bool, tol: Tolerances) -> ExampleResult:
    g, h = graphs.complete(2 * n), graphs.cycle(4)
    t = THIRD_PI if wrong_time else HALF_PI
    verdict = check_tensor_with_pairpst(g, h, 0, 0, PairState(0, 1), PairState(2, 3), t, tol)
    base = certify_pair_transfer(
        graph_decomposition(h, "laplacian"), PairState(0, 1), PairState(2, 3), tol
    )
    base_ok = (
        base.exists
        and base.tau0 == HALF_PI
        and base.phase is not None
        and base.phase.exact_str() == "1"
    )
    fid = _product_fidelity(g, h, verdict.source_state, verdict.target_state, t.value, tol)
    ok = verdict.holds and base_ok and abs(fid - 1) <= tol.fidelity
    detail = f"cycle4 pair certificate: tau0={base.tau0}, phase={base.phase}"
    return ExampleResult("complete(2n) x cycle4", n, str(t), verdict.holds and base_ok, fid, ok, detail)


def _family_tensor_swap(n: int, wrong_time: bool, tol: Tolerances) -> ExampleResult:
    g, h = graphs.complete(4 * n), graphs.path(2)
    t = THIRD_PI if wrong_time else HALF_PI
    verdict = check_tensor_swap(g, h, 0, 1, 0, 1, t, tol)
    fid = _product_fidelity(g, h, verdict.source_state, verdict.target_state, t.value, tol)
    # the negated source is NOT the target; its fidelity stays at 0
    anti = _product_fidelity(
        g, h, verdict.source_state,
        PairState(verdict.source_state.b, verdict.source_state.a), t.value, tol,
    )
    ok = verdict.holds and verdict.p == 4 and abs(fid - 1) <= tol.fidelity and anti <= tol.minimality
    detail = (
        f"p={verdict.p}; target {verdict.target_state} reaches fidelity {fid:.9f}, "
        f"the negated source only {anti:.3e}"
    )
    return ExampleResult("complete(4n) x path2 swap", n, str(t), verdict.holds, fid, ok, detail)


def _family_double_cover(n: int, wrong_time: bool, tol: Tolerances) -> ExampleResult:
    g = graphs.complete(n)
    t = THIRD_PI if wrong_time else HALF_PI
    verdict = check_cor_double_cover(g, g, PairState(0, 1), t, tol)
    cov = double_cover(g, g, allow_overlap=True)
    dec = float_decompose(laplacian(cov), source=f"laplacian({cov.name})", tol=tol)
    fid = fidelity(dec, verdict.source_state, verdict.target_state, t.value)
    ok = verdict.holds and abs(fid - 1) <= tol.fidelity
    return ExampleResult("complete |x complete", n, str(t), verdict.holds, fid, ok)


_RUNNERS = {
    "complete x path2": _family_tensor_pst,
    "complete(2n) x cycle4": _family_tensor_pairpst,
    "complete(4n) x path2 swap": _family_tensor_swap,
    "complete |x complete": _family_double_cover,
}


def run_paper_examples(
    sizes: dict[str, list[int]] | list[int] | None = None,
    wrong_time: bool = False,
    tol: Tolerances = DEFAULT,
) -> list[ExampleResult]:
    """Run the four families; a list of sizes applies to every family."""
    plan = dict(DEFAULT_SIZES)
    if isinstance(sizes, list):
        plan = {k: list(sizes) for k in plan}
    elif isinstance(sizes, dict):
        plan.update(sizes)
    results = []
    for family, ns in plan.items():
        runner = _RUNNERS[family]
        for n in ns:
            results.append(runner(n, wrong_time, tol))
    return results
