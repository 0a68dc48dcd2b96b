"""Command line front end.

Exit codes: 0 = success / the checked property holds; 1 = the property does
not hold (a valid mathematical answer); 2 = usage or parse error; 3 =
internal inconsistency between exact certificates and numerical evidence
(the canary that should never trip).
"""

from __future__ import annotations

import argparse
import sys
import warnings

from .certify import certify_pair_transfer, certify_periodic, certify_pst
from .composite import (
    REFUTED,
    CompositeVerdict,
    TensorProblem,
    check_cor_double_cover,
    check_double_cover,
    check_tensor_swap,
    check_tensor_with_pairpst,
    check_tensor_with_pst,
    solve_tensor_time,
)
from .dsl import parse_exact_time, parse_graph, parse_pair, parse_state, parse_sweep_time
from .dynamics import fidelity, sweep
from .errors import (
    HypothesisFailed,
    InternalInconsistency,
    InvalidParams,
    KindMismatch,
    NonCommuting,
    NotExact,
    NotRegular,
    OverlappingEdges,
    ParseError,
    SizeMismatch,
)
from .graphs import VertexState, double_cover, laplacian, tensor_product
from .reports import (
    Report,
    Stopwatch,
    certificate_payload,
    periodicity_payload,
    sweep_payload,
    spectrum_payload,
    verdict_payload,
)
from .reproduce import run_paper_examples
from .spectral import float_decompose, graph_decomposition
from .tolerances import DEFAULT


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="pairwalk",
        description="Certify perfect (pair) state transfer and periodicity in "
        "quantum walks on graphs, exactly, with numerical cross-checks.",
    )
    sub = p.add_subparsers(dest="cmd", required=True)

    def add_json(sp):
        sp.add_argument("--json", action="store_true", help="emit a JSON report")
        sp.add_argument(
            "--allow-multiedge-collapse",
            action="store_true",
            help="let cover(...) expressions accept factors that share edges",
        )

    sp = sub.add_parser("spectrum", help="exact eigenvalues with multiplicities")
    sp.add_argument("graph")
    mx = sp.add_mutually_exclusive_group()
    mx.add_argument("--laplacian", action="store_true", default=True)
    mx.add_argument("--adjacency", action="store_true")
    add_json(sp)

    sp = sub.add_parser("certify", help="exact transfer / periodicity certificates")
    sp.add_argument("graph")
    sp.add_argument("kind", choices=["pst", "pair-lpst", "periodic"])
    sp.add_argument("states", nargs="+", help="pst: U V; pair-lpst: A-B C-D; periodic: A-B or U")
    mx = sp.add_mutually_exclusive_group()
    mx.add_argument("--laplacian", action="store_true")
    mx.add_argument("--adjacency", action="store_true")
    add_json(sp)

    sp = sub.add_parser("tensor", help="tensor-product transfer theorems")
    kind = sp.add_mutually_exclusive_group(required=True)
    kind.add_argument("--pst", action="store_true", help="H carries a vertex PST")
    kind.add_argument("--pairpst", action="store_true", help="H carries an adjacency pair transfer")
    kind.add_argument("--swap", action="store_true", help="coordinate-swapping sufficient route")
    sp.add_argument("g")
    sp.add_argument("h")
    sp.add_argument("--pairs", nargs=2, metavar=("A-B", "C-D"), help="pair states (pst: in G; pairpst: in H)")
    sp.add_argument("--pst-pair", nargs=2, type=int, metavar=("W", "Z"), help="PST vertices of H (--pst)")
    sp.add_argument("--vertex", type=int, help="vertex w of G (--pairpst)")
    sp.add_argument("--vertex-to", type=int, help="vertex z of G, defaults to w (--pairpst)")
    sp.add_argument("--pair", metavar="A-B", help="vertex pair of G (--swap)")
    sp.add_argument("--h-vertices", nargs=2, type=int, metavar=("W", "Z"), help="vertices of H (--swap)")
    when = sp.add_mutually_exclusive_group(required=True)
    when.add_argument("--at", metavar="TIME", help="check at this exact time, e.g. 1/2pi")
    when.add_argument("--solve", action="store_true", help="solve for the smallest valid time")
    sp.add_argument("--verify", action="store_true", help="cross-check with a numerical fidelity")
    add_json(sp)

    sp = sub.add_parser("cover", help="double-cover transfer theorems")
    sp.add_argument("g")
    sp.add_argument("h")
    sp.add_argument("--mode", choices=["a", "b", "c", "cor"], required=True)
    sp.add_argument("--pair", metavar="A-B", required=True)
    sp.add_argument("--pair2", metavar="C-D")
    sp.add_argument("--side", type=int, choices=[0, 1], default=0)
    sp.add_argument("--at", metavar="TIME", required=True)
    sp.add_argument("--verify", action="store_true")
    add_json(sp)

    sp = sub.add_parser("sweep", help="fidelity over a time grid")
    sp.add_argument("graph")
    mx = sp.add_mutually_exclusive_group()
    mx.add_argument("--laplacian", action="store_true", default=True)
    mx.add_argument("--adjacency", action="store_true")
    src = sp.add_mutually_exclusive_group(required=True)
    src.add_argument("--pair", metavar="A-B")
    src.add_argument("--vertex", type=int, metavar="U")
    sp.add_argument("--pair2", metavar="C-D")
    sp.add_argument("--vertex-to", type=int, metavar="V")
    sp.add_argument("--range", nargs=2, required=True, metavar=("T0", "T1"))
    sp.add_argument("--steps", type=int, default=721)
    sp.add_argument("--csv", metavar="PATH")
    add_json(sp)

    sp = sub.add_parser("paper-examples", help="reproduce the worked example families")
    sp.add_argument("--sizes", help="comma-separated sizes for every family; empty = no-op")
    sp.add_argument("--self-test", action="store_true",
                    help="negative control: inject a wrong time and expect failures")
    add_json(sp)
    return p


def _emit(report: Report, as_json: bool, lines: list[str]) -> None:
    if as_json:
        print(report.to_json())
    else:
        for line in lines:
            print(line)


def _cmd_spectrum(args) -> int:
    with Stopwatch() as sw:
        g = parse_graph(args.graph, allow_overlap=args.allow_multiedge_collapse)
        kind = "adjacency" if args.adjacency else "laplacian"
        dec = graph_decomposition(g, kind)
        mult = dec.multiplicities()
        payload = spectrum_payload(dec.source, dec.eigenvalues, mult, dec.exactness)
    report = Report(
        "spectrum", {"graph": args.graph, "matrix": kind}, payload, [], sw.elapsed
    )
    lines = [f"{dec.source}: {dec.exactness} spectrum"]
    lines += [f"  {ev}  (multiplicity {mult[ev]}, approx {ev.value:.12g})" for ev in dec.eigenvalues]
    _emit(report, args.json, lines)
    return 0


def _cmd_certify(args) -> int:
    with Stopwatch() as sw, warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        g = parse_graph(args.graph, allow_overlap=args.allow_multiedge_collapse)
        default = "adjacency" if args.kind == "pst" else "laplacian"
        kind = "adjacency" if args.adjacency else ("laplacian" if args.laplacian else default)
        dec = graph_decomposition(g, kind)
        if args.kind == "pst":
            if len(args.states) != 2:
                raise ParseError("pst needs two vertices, e.g. `certify \"P 2\" pst 0 1`")
            cert = certify_pst(dec, VertexState(int(args.states[0])), VertexState(int(args.states[1])))
            payload = certificate_payload(cert)
            ok = cert.exists
            head = f"PST {args.states[0]} <-> {args.states[1]} on {dec.source}"
        elif args.kind == "pair-lpst":
            if len(args.states) != 2:
                raise ParseError("pair-lpst needs two pairs, e.g. 0-1 2-3")
            cert = certify_pair_transfer(dec, parse_pair(args.states[0]), parse_pair(args.states[1]))
            payload = certificate_payload(cert)
            ok = cert.exists
            head = f"pair transfer {args.states[0]} <-> {args.states[1]} on {dec.source}"
        else:
            if len(args.states) != 1:
                raise ParseError("periodic needs one state: a pair A-B or a vertex U")
            cert = certify_periodic(dec, parse_state(args.states[0]))
            payload = periodicity_payload(cert)
            ok = cert.periodic
            head = f"periodicity of {args.states[0]} on {dec.source}"
    warns = [str(w.message) for w in caught] + [w for w in getattr(cert, "warnings", ())]
    report = Report(
        "certify",
        {"graph": args.graph, "kind": args.kind, "states": args.states, "matrix": kind},
        payload,
        warns,
        sw.elapsed,
    )
    lines = [head]
    if payload["kind"] == "certificate":
        if ok:
            lines.append(
                f"  exists: tau0 = {payload['tau0']}, phase = {payload['phase']['exact']}"
                f", delta = {payload['delta']}, g = {payload['g']}, theta0 = {payload['theta0']}"
            )
        else:
            lines.append(f"  does not exist: {payload['failure']}")
    else:
        if ok:
            lines.append(f"  periodic, minimal period = {payload['minimal_period']}")
        else:
            lines.append(f"  not periodic: {payload['failure']}")
    lines += [f"  warning: {w}" for w in warns]
    _emit(report, args.json, lines)
    return 0 if ok else 1


def _measure_composite_fidelity(kind: str, g, h, verdict: CompositeVerdict) -> float | None:
    if verdict.t is None or verdict.source_state is None:
        return None
    if kind == "tensor":
        prod = tensor_product(g, h)
    else:
        prod = double_cover(g, h, allow_overlap=True)
    dec = float_decompose(laplacian(prod), source=f"laplacian({prod.name})")
    return fidelity(dec, verdict.source_state, verdict.target_state, verdict.t.value)


def _finish_composite(args, cmd: str, inputs: dict, kind: str, g, h, verdict, sw) -> int:
    fid = None
    outcome = verdict.outcome
    warns: list[str] = []
    if args.verify:
        fid = _measure_composite_fidelity(kind, g, h, verdict)
        if fid is not None:
            if verdict.holds and abs(fid - 1) > DEFAULT.fidelity:
                raise InternalInconsistency(
                    f"exact verdict holds but measured fidelity is {fid!r}"
                )
            if not verdict.holds and not verdict.sufficient_only and fid >= 1 - DEFAULT.fidelity:
                raise InternalInconsistency(
                    f"exact verdict says does-not-hold but measured fidelity is {fid!r}"
                )
            if not verdict.holds and verdict.sufficient_only and fid < 1 - DEFAULT.minimality:
                outcome = REFUTED
    payload = verdict_payload(verdict, fid)
    payload["outcome"] = outcome
    report = Report(cmd, inputs, payload, warns, sw.elapsed)
    lines = [f"{verdict.construction}: {outcome}" + (f" at t = {verdict.t}" if verdict.t else "")]
    for c in verdict.per_condition:
        mark = "+" if c.passed else "-"
        lines.append(f"  [{mark}] {c.cid}: {c.detail}")
    if verdict.phase is not None:
        lines.append(f"  transfer {verdict.source_state} -> {verdict.target_state}, phase {verdict.phase}")
    if fid is not None:
        lines.append(f"  measured fidelity: {fid:.12f}")
    for note in verdict.notes:
        lines.append(f"  note: {note}")
    _emit(report, args.json, lines)
    return 0 if verdict.holds else 1


def _cmd_tensor(args) -> int:
    with Stopwatch() as sw:
        g = parse_graph(args.g, allow_overlap=args.allow_multiedge_collapse)
        h = parse_graph(args.h, allow_overlap=args.allow_multiedge_collapse)
        if args.pst:
            if not args.pairs or not args.pst_pair:
                raise ParseError("--pst needs --pairs A-B C-D and --pst-pair W Z")
            prob = TensorProblem(
                "pst", g, h,
                pair1=parse_pair(args.pairs[0]), pair2=parse_pair(args.pairs[1]),
                pst_pair=tuple(args.pst_pair),
            )
        elif args.pairpst:
            if not args.pairs or args.vertex is None:
                raise ParseError("--pairpst needs --pairs A-B C-D (in H) and --vertex W")
            prob = TensorProblem(
                "pairpst", g, h,
                pair1=parse_pair(args.pairs[0]), pair2=parse_pair(args.pairs[1]),
                w=args.vertex, z=args.vertex_to if args.vertex_to is not None else args.vertex,
            )
        else:
            if not args.pair or not args.h_vertices:
                raise ParseError("--swap needs --pair A-B (in G) and --h-vertices W Z")
            ab = parse_pair(args.pair)
            prob = TensorProblem(
                "swap", g, h, a=ab.a, b=ab.b, w=args.h_vertices[0], z=args.h_vertices[1]
            )
        if args.solve:
            t, verdict = solve_tensor_time(prob)
        else:
            t = parse_exact_time(args.at)
            if prob.kind == "pst":
                verdict = check_tensor_with_pst(g, h, prob.pair1, prob.pair2, prob.pst_pair, t)
            elif prob.kind == "pairpst":
                verdict = check_tensor_with_pairpst(g, h, prob.w, prob.z, prob.pair1, prob.pair2, t)
            else:
                verdict = check_tensor_swap(g, h, prob.a, prob.b, prob.w, prob.z, t)
    inputs = {"g": args.g, "h": args.h, "kind": prob.kind,
              "at": args.at, "solve": args.solve, "verify": args.verify}
    return _finish_composite(args, "tensor", inputs, "tensor", g, h, verdict, sw)


def _cmd_cover(args) -> int:
    with Stopwatch() as sw:
        g = parse_graph(args.g, allow_overlap=args.allow_multiedge_collapse)
        h = parse_graph(args.h, allow_overlap=args.allow_multiedge_collapse)
        tau = parse_exact_time(args.at)
        pair1 = parse_pair(args.pair)
        if args.mode == "cor":
            verdict = check_cor_double_cover(g, h, pair1, tau)
        else:
            pair2 = parse_pair(args.pair2) if args.pair2 else None
            verdict = check_double_cover(
                g, h, args.mode, pair1, tau, pair2=pair2, side=args.side
            )
    inputs = {"g": args.g, "h": args.h, "mode": args.mode, "pair": args.pair,
              "pair2": args.pair2, "side": args.side, "at": args.at, "verify": args.verify}
    return _finish_composite(args, "cover", inputs, "cover", g, h, verdict, sw)


def _cmd_sweep(args) -> int:
    with Stopwatch() as sw:
        g = parse_graph(args.graph, allow_overlap=args.allow_multiedge_collapse)
        kind = "adjacency" if args.adjacency else "laplacian"
        from .graphs import adjacency as adj_of

        m = adj_of(g) if kind == "adjacency" else laplacian(g)
        dec = float_decompose(m, source=f"{kind}({g.name})")
        if args.pair:
            s1 = parse_pair(args.pair)
        else:
            s1 = VertexState(args.vertex)
        if args.pair2:
            s2 = parse_pair(args.pair2)
        elif args.vertex_to is not None:
            s2 = VertexState(args.vertex_to)
        else:
            s2 = s1
        t0 = parse_sweep_time(args.range[0])
        t1 = parse_sweep_time(args.range[1])
        if args.steps < 2 and t0 != t1:
            raise ParseError("sweep needs --steps >= 2")
        res = sweep(dec, s1, s2, t0, t1, max(args.steps, 2) if t0 != t1 else args.steps)
        csv_path = None
        if args.csv:
            with open(args.csv, "w") as fh:
                fh.write(res.to_csv())
            csv_path = args.csv
        payload = sweep_payload(res, csv_path)
    report = Report(
        "sweep",
        {"graph": args.graph, "matrix": kind, "s1": str(s1), "s2": str(s2),
         "range": args.range, "steps": args.steps},
        payload,
        [],
        sw.elapsed,
    )
    lines = [
        f"sweep {s1} -> {s2} on {dec.source}: {payload['points']} points in "
        f"[{payload['t_min']:.6g}, {payload['t_max']:.6g}]",
        f"  max fidelity {payload['max_fidelity']:.12f} at t = {payload['argmax_t']:.12g}",
    ]
    if csv_path:
        lines.append(f"  csv written to {csv_path}")
    _emit(report, args.json, lines)
    return 0


def _cmd_paper_examples(args) -> int:
    with Stopwatch() as sw:
        sizes = None
        if args.sizes is not None:
            sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
        results = run_paper_examples(sizes=sizes, wrong_time=args.self_test)
        all_ok = all(r.ok for r in results)
    payload = {
        "kind": "examples",
        "self_test": args.self_test,
        "total": len(results),
        "passed": sum(r.ok for r in results),
        "results": [
            {"family": r.family, "n": r.n, "t": r.expected_t, "holds": r.holds,
             "fidelity": r.fidelity, "ok": r.ok, "detail": r.detail}
            for r in results
        ],
    }
    report = Report(
        "paper-examples", {"sizes": args.sizes, "self_test": args.self_test},
        payload, [], sw.elapsed,
    )
    lines = [r.line() for r in results]
    if args.self_test:
        detected = results and not any(r.ok for r in results)
        if results and not detected:
            raise InternalInconsistency(
                "negative control: an injected wrong time was not detected"
            )
        lines.append("self-test ok: the injected wrong time was detected by every family"
                      if results else "no sizes requested; nothing to do")
        _emit(report, args.json, lines)
        return 0
    lines.append(
        f"{payload['passed']}/{payload['total']} example reproductions passed"
        if results else "no sizes requested; nothing to do"
    )
    _emit(report, args.json, lines)
    return 0 if all_ok else 1


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else 2
    try:
        if args.cmd == "spectrum":
            return _cmd_spectrum(args)
        if args.cmd == "certify":
            return _cmd_certify(args)
        if args.cmd == "tensor":
            return _cmd_tensor(args)
        if args.cmd == "cover":
            return _cmd_cover(args)
        if args.cmd == "sweep":
            return _cmd_sweep(args)
        if args.cmd == "paper-examples":
            return _cmd_paper_examples(args)
        parser.error(f"unknown command {args.cmd}")
    except InternalInconsistency as e:
        print(f"INTERNAL INCONSISTENCY: {e}", file=sys.stderr)
        return 3
    except HypothesisFailed as e:
        print(f"hypothesis not satisfied: {e}", file=sys.stderr)
        return 1
    except (
        ParseError,
        InvalidParams,
        SizeMismatch,
        OverlappingEdges,
        NotRegular,
        NonCommuting,
        NotExact,
        KindMismatch,
        ValueError,
    ) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
