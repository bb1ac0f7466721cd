"""Command-line entry point: ``collatz-lab <command> [options]``.

Exit status is 0 on success, 1 when a check finds a violation or a cycle
candidate, and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Any, Sequence

from . import __version__
from .arith import default_precision, format_decimal
from .chains import ChainFormula, ChainSpec, chain_oracle, chain_root_corrected, chain_root_paper, spec_from_oracle
from .core import DEFAULT_MAX_STEPS, iterate, root, trajectory
from .cycles import (
    BVerdict,
    Figure,
    GapReport,
    GapVerdict,
    ScanConfig,
    TCycleBlock,
    even_start_solve,
    figure_data,
    general_cycle_solve,
    scan_case1,
    scan_case2,
    scan_case3,
    t_cycle_endpoints,
    table1,
)
from .report_io import CycleScan, Kind, ReportDocument, encode_value, make_document, to_csv, to_json
from .roots import classify, decompose, predict, predicted_monotonicity, check_monotonicity
from .verify import ALL_THEOREMS, DEFAULT_CHAIN_K, verify

EXIT_OK, EXIT_FOUND, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _int_list(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if not values:
        raise argparse.ArgumentTypeError("empty list")
    return values


def _range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        if not sep:
            raise ValueError
        a, b = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}") from None
    if a < 1 or b < a:
        raise argparse.ArgumentTypeError(f"empty or non-positive range {text!r}")
    return a, b


def _block(text: str) -> TCycleBlock:
    try:
        n, j, xs = text.split(":")
        return TCycleBlock(int(n), int(j), _int_list(xs))
    except (ValueError, argparse.ArgumentTypeError):
        raise argparse.ArgumentTypeError(f"expected n:j:x1,x2,..., got {text!r}") from None


def _odd(text: str) -> int:
    value = int(text)
    if value < 1 or value % 2 == 0:
        raise argparse.ArgumentTypeError(f"expected a positive odd integer, got {text}")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "csv", "json"), default="text")
    common.add_argument("--precision-bits", type=_positive, default=None,
                        help="certified precision (default 128, or $COLLATZ_LAB_PRECISION_BITS)")
    common.add_argument("--paper-formula", action="store_true",
                        help="use the printed k-step chain formula instead of the corrected one")
    common.add_argument("--jobs", type=_positive, default=1, help="worker processes for scans")

    parser = argparse.ArgumentParser(prog="collatz-lab", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("traj", parents=[common], help="reduced trajectory of an odd number")
    p.add_argument("m", type=_odd)
    p.add_argument("--max-steps", type=int, default=DEFAULT_MAX_STEPS)

    p = sub.add_parser("classify", parents=[common], help="root factorisation and iteration type")
    p.add_argument("m", type=_odd, nargs="+")

    p = sub.add_parser("predict", parents=[common], help="advance by shortcut rules and compare with iteration")
    p.add_argument("m", type=_odd)
    p.add_argument("--steps", type=int, required=True)

    p = sub.add_parser("verify", parents=[common], help="oracle-equivalence suites")
    p.add_argument("--range", type=_range, default=(3, 99999), dest="span", metavar="A..B")
    p.add_argument("--theorems", type=_int_list, default=ALL_THEOREMS)
    p.add_argument("--random", type=int, default=0, help="extra random 64-bit odd inputs")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--k", type=int, default=DEFAULT_CHAIN_K, help="chain length checked (0 disables)")

    p = sub.add_parser("chain", parents=[common], help="k-step even chain: closed forms vs iteration")
    p.add_argument("m", type=_odd, nargs="?")
    p.add_argument("--k", type=_positive, default=2)
    p.add_argument("--j", type=_positive)
    p.add_argument("--a", type=_positive)
    p.add_argument("--xs", type=_int_list)

    p = sub.add_parser("cycles", help="cycle feasibility scans and solvers")
    fam = p.add_subparsers(dest="family", required=True)
    for name in ("case1", "case2", "case3"):
        q = fam.add_parser(name, parents=[common])
        q.add_argument("--n-max", type=_positive, default=None)
        if name == "case3":
            q.add_argument("--x-max", type=_positive, default=25)
            q.add_argument("--y-max", type=_positive, default=60)
    q = fam.add_parser("general", parents=[common])
    q.add_argument("--n", type=_positive, required=True)
    q.add_argument("--j", type=_positive, required=True)
    q.add_argument("--xs", type=_int_list, required=True)
    q = fam.add_parser("tcycle", parents=[common])
    q.add_argument("--block", type=_block, action="append", required=True,
                   help="n:j:x1,x2,... for one odd/even block; repeat per block")
    q.add_argument("--n1", type=_int_list, default=None, help="replace the first block's n by each of these")
    q = fam.add_parser("evenstart", parents=[common])
    q.add_argument("--j", type=_int_list, required=True)
    q.add_argument("--n", type=_positive, required=True)
    q.add_argument("--xs", type=_int_list, required=True)

    p = sub.add_parser("table1", parents=[common], help="reproduce the first-case limit-point table")
    p = sub.add_parser("figures", parents=[common], help="alpha_min / epsilon series")
    p.add_argument("--which", choices=("fig2", "fig3"), default="fig2")
    p.add_argument("--n-max", type=_positive, default=30)
    return parser


def _formula(args: argparse.Namespace) -> ChainFormula:
    return ChainFormula.PAPER if args.paper_formula else ChainFormula.CORRECTED


def _render(doc: ReportDocument, fmt: str, text: str) -> str:
    if fmt == "json":
        return to_json(doc)
    if fmt == "csv":
        return to_csv(doc)
    return text


def _plain(fmt: str, header: list[str], rows: list[list[Any]], text: str, obj: Any) -> str:
    """Output for commands that have no document kind."""
    if fmt == "json":
        return json.dumps(encode_value(obj), indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows([[str(c) for c in r] for r in rows])
        return buf.getvalue()
    return text


def _gap_text(reports: Sequence[GapReport]) -> str:
    lines = []
    for r in reports:
        label = f"n={r.n}" if r.x is None else f"n={r.n} x={r.x}"
        evals = ", ".join(
            f"{e.candidate}: {e.b if e.b is not None else '-'} ({e.verdict.value})" for e in r.evaluations
        )
        lines.append(
            f"case{r.case} {label} gap=({r.lower.to_decimal(4)}, {r.upper.to_decimal(4)}) "
            f"candidates=[{evals}] {r.verdict.value}"
        )
    counts = {v: sum(r.verdict is v for r in reports) for v in GapVerdict}
    lines.append("summary: " + " ".join(f"{v.value}={c}" for v, c in counts.items()))
    return "\n".join(lines) + "\n"


def cmd_traj(args: argparse.Namespace) -> tuple[str, int]:
    t = trajectory(args.m, args.max_steps)
    text = (
        f"start {t.start}\nlength {t.length}\npeak {t.peak}\nreached_one {str(t.reached_one).lower()}\n"
        f"values {' '.join(map(str, t.values()))}\n"
    )
    return _render(make_document(Kind.TRAJECTORY, t, m=args.m, max_steps=args.max_steps), args.format, text), EXIT_OK


def cmd_classify(args: argparse.Namespace) -> tuple[str, int]:
    rows, objs, lines = [], [], []
    for m in args.m:
        d = decompose(root(m))
        kind = classify(m).value
        mono = check_monotonicity(m)
        rows.append([m, d.root, d.parity.value, d.y, d.u, d.b, kind, mono.value])
        objs.append({"m": m, "decomposition": d, "type": classify(m), "step": mono})
        lines.append(f"{m}: root {d.root} ({d.parity.value}, y={d.y}, u={d.u}, b={d.b}) {kind}, step {mono.value}")
    bad = any(check_monotonicity(m) is not predicted_monotonicity(m) for m in args.m)
    out = _plain(args.format, ["m", "root", "parity", "y", "u", "b", "type", "step"], rows, "\n".join(lines) + "\n", objs)
    return out, EXIT_FOUND if bad else EXIT_OK


def cmd_predict(args: argparse.Namespace) -> tuple[str, int]:
    p = predict(args.m, args.steps)
    oracle = iterate(args.m, args.steps)
    agree = oracle == p.value
    text = (
        f"{p.value} (root {p.root}) after {p.steps} steps from {p.start}\n"
        f"moves {' '.join(p.moves) or '-'}\noracle {oracle} {'agrees' if agree else 'DISAGREES'}\n"
    )
    out = _plain(
        args.format, ["m", "steps", "value", "root", "oracle", "agree"],
        [[p.start, p.steps, p.value, p.root, oracle, str(agree).lower()]], text,
        {"prediction": p, "oracle": oracle, "agree": agree},
    )
    return out, EXIT_OK if agree else EXIT_FOUND


def cmd_verify(args: argparse.Namespace) -> tuple[str, int]:
    lo, hi = args.span
    run = verify(lo, hi, args.theorems, args.random, args.seed, args.k)
    lines = [f"range {lo}..{hi} theorems {','.join(map(str, run.theorems))}"]
    for c in run.checks:
        status = "ok" if c.violations == 0 else f"FAIL first={c.first_violation}"
        lines.append(f"{c.name}: checked {c.checked} violations {c.violations} {status}")
    for d in run.divergences:
        lines.append(
            f"printed k-step form j={d.j} a={d.a} xs={','.join(map(str, d.xs))}: "
            f"printed {d.paper}, corrected {d.corrected}, iteration {d.oracle}"
        )
    doc = make_document(Kind.VERIFY_RUN, run, range=f"{lo}..{hi}", seed=args.seed)
    return _render(doc, args.format, "\n".join(lines) + "\n"), EXIT_OK if run.ok else EXIT_FOUND


def cmd_chain(args: argparse.Namespace) -> tuple[str, int]:
    if args.m is not None:
        if args.j or args.a or args.xs:
            raise UsageError("give either m or --j/--a/--xs")
        spec = spec_from_oracle(args.m, args.k)
    else:
        if not (args.j and args.a and args.xs):
            raise UsageError("--j, --a and --xs are required without m")
        if args.a % 2 == 0:
            raise UsageError("--a must be odd")
        spec = ChainSpec(args.j, args.a, args.xs)
    oracle_roots, oracle_xs = chain_oracle(spec.m, spec.k)
    rows, lines = [], [f"m {spec.m} root 2^{spec.j}*{spec.a} xs {','.join(map(str, spec.xs))}"]
    mismatch = False
    for k in range(1, spec.k + 1):
        sub = ChainSpec(spec.j, spec.a, spec.xs[:k])
        corr, paper = chain_root_corrected(sub), chain_root_paper(sub)
        consistent = oracle_xs[:k] == spec.xs[:k]
        oracle = oracle_roots[k - 1] if consistent else None
        mismatch |= consistent and corr != oracle
        rows.append([k, corr, paper, "" if oracle is None else oracle])
        lines.append(f"k={k} corrected {corr} printed {paper} iteration {'-' if oracle is None else oracle}")
    out = _plain(args.format, ["k", "corrected", "printed", "iteration"], rows, "\n".join(lines) + "\n",
                 {"spec": spec, "rows": [dict(zip(("k", "corrected", "printed", "iteration"), r)) for r in rows]})
    return out, EXIT_FOUND if mismatch else EXIT_OK


def _scan_config(args: argparse.Namespace, default_n: int) -> ScanConfig:
    n = args.n_max or default_n
    return ScanConfig(
        n_max=n, case3_n_max=n, x_max=getattr(args, "x_max", 25), y_max=getattr(args, "y_max", 60),
        jobs=args.jobs, precision_bits=args.precision_bits,
    )


def cmd_cycles(args: argparse.Namespace) -> tuple[str, int]:
    fam = args.family
    formula = _formula(args)
    params: dict[str, object] = {"family": fam, "formula": formula.value}
    if fam in ("case1", "case2", "case3"):
        cfg = _scan_config(args, 100 if fam == "case3" else 1000)
        reports = {"case1": scan_case1, "case2": scan_case2, "case3": scan_case3}[fam](cfg)
        scan = CycleScan(fam, reports=tuple(reports))
        text = _gap_text(reports)
        found = any(r.verdict is GapVerdict.CANDIDATE_FOUND for r in reports)
        params.update(n_max=cfg.n_max)
        if fam == "case3":
            params.update(x_max=cfg.x_max, y_max=cfg.y_max)
    elif fam == "general":
        s = general_cycle_solve(args.n, args.j, args.xs, formula)
        scan = CycleScan(fam, solutions=(s,))
        text = f"b = {s.value} ({format_decimal(s.value, 6)}) {s.verdict.value} realizable={str(s.realizable).lower()}\n"
        found = s.verdict is BVerdict.VALID
    elif fam == "tcycle":
        blocks = list(args.block)
        n1s = args.n1 or (blocks[0].n,)
        eps = tuple(
            t_cycle_endpoints([TCycleBlock(n1, blocks[0].j, blocks[0].xs)] + blocks[1:], formula, args.precision_bits)
            for n1 in n1s
        )
        scan = CycleScan(fam, endpoints=eps)
        text = "".join(
            f"n1={n1} 2^E={2**e.exponent} lower={format_decimal(e.lower, 6)} upper={format_decimal(e.upper, 6)} "
            f"ratio={format_decimal(e.gap_ratio, 8)} a1={e.solution.value} {e.solution.verdict.value}\n"
            for n1, e in zip(n1s, eps)
        )
        found = any(e.solution.verdict is BVerdict.VALID for e in eps)
    else:
        res = tuple(even_start_solve(j, args.n, args.xs, formula) for j in args.j)
        scan = CycleScan(fam, even_starts=res)
        text = "".join(
            f"j={j} a = {r.a} {r.verdict.value} X=2^{r.exponent} lower={format_decimal(r.lower, 6)} "
            f"upper={format_decimal(r.upper, 6)} ratio={format_decimal(r.gap_ratio, 8)}\n"
            for j, r in zip(args.j, res)
        )
        found = any(r.verdict is BVerdict.VALID for r in res)
    params["precision_bits"] = args.precision_bits or default_precision()
    doc = make_document(Kind.CYCLE_SCAN, scan, **params)
    return _render(doc, args.format, text), EXIT_FOUND if found else EXIT_OK


def cmd_table1(args: argparse.Namespace) -> tuple[str, int]:
    reports = table1(args.precision_bits)
    doc = make_document(Kind.TABLE1, tuple(reports), precision_bits=args.precision_bits or default_precision())
    found = any(r.verdict is GapVerdict.CANDIDATE_FOUND for r in reports)
    return _render(doc, args.format, to_csv(doc)), EXIT_FOUND if found else EXIT_OK


def cmd_figures(args: argparse.Namespace) -> tuple[str, int]:
    series = figure_data(Figure(args.which), args.n_max, args.precision_bits)
    lines = [
        f"n={r.n} alpha_min={r.alpha_min.to_decimal(6)} epsilon={r.epsilon.to_decimal(6)} "
        f"epsilon {r.ordering.value} alpha_min{'' if r.claim_holds else '  CLAIM FAILS'}"
        for r in series.rows
    ]
    doc = make_document(Kind.FIGURE_DATA, series, which=args.which, n_max=args.n_max,
                        precision_bits=args.precision_bits or default_precision())
    return _render(doc, args.format, "\n".join(lines) + "\n"), EXIT_FOUND if series.failures else EXIT_OK


COMMANDS = {
    "traj": cmd_traj,
    "classify": cmd_classify,
    "predict": cmd_predict,
    "verify": cmd_verify,
    "chain": cmd_chain,
    "cycles": cmd_cycles,
    "table1": cmd_table1,
    "figures": cmd_figures,
}


def run(argv: Sequence[str] | None = None, stdout: Any = None) -> int:
    parser = build_parser()
    stdout = stdout or sys.stdout
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        out, code = COMMANDS[args.command](args)
    except (UsageError, ValueError) as exc:
        print(f"collatz-lab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    stdout.write(out)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
