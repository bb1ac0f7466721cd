"""Acceptance criteria, each checked at its stated tolerance.

Every test records a PASS/FAIL line that is printed in the terminal summary.
"""

import subprocess
import sys
import time
from fractions import Fraction

from collatz_lab.arith import Ordering
from collatz_lab.chains import ChainSpec, chain_oracle, chain_root_corrected, chain_root_paper
from collatz_lab.cli import run
from collatz_lab.core import iterate, reduced_step, root, trajectory
from collatz_lab.cycles import (
    Figure,
    GapVerdict,
    ScanConfig,
    TCycleBlock,
    case1_scan,
    figure_data,
    scan_case1,
    scan_case2,
    scan_case3,
    t_cycle_endpoints,
    table1,
)
from collatz_lab.report_io import CycleScan, Kind, from_json, make_document, to_csv, to_json
from collatz_lab.roots import Parity, RootDecomposition, decompose, odd_jump
from collatz_lab.verify import verify


def timed(fn, repeat=1):
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return out, best


def test_criterion_01_trajectory_27(acceptance):
    t, dt = timed(lambda: trajectory(27), repeat=5)
    ok = t.length == 41 and t.peak == 3077 and t.reached_one and dt < 0.010
    assert acceptance(1, "trajectory of 27", ok, f"length {t.length}, peak {t.peak}, {dt * 1e3:.3f} ms")


def test_criterion_02_prediction_31(acceptance):
    d = decompose(root(31))
    a, steps = odd_jump(d)
    m, roots = 31, []
    for _ in range(4):
        m, _x = reduced_step(m)
        roots.append(root(m))
    ok = (
        d == RootDecomposition(Parity.ODD, 4, 0, 1)
        and (a, steps) == (80, 4)
        and m == iterate(31, 4) == 161
        and roots[-1] == 80
        and all(r % 2 for r in roots[:-1])
    )
    assert acceptance(2, "odd jump from 31", ok, f"root 15 = 2^4*1-1, even root {a} after {steps} steps, value {m}")


TABLE1_PRINTED = {
    # n: (lower, upper, difference, difference tolerance)
    1: (Fraction("2.82"), Fraction("4.82"), Fraction(2), Fraction(5, 1000)),
    2: (Fraction("5.64"), Fraction("6.83"), Fraction("1.19"), Fraction(5, 1000)),
    3: (Fraction("8.46"), Fraction("9.12"), Fraction("0.67"), Fraction(5, 1000)),
    6: (Fraction("16.91"), Fraction("17.01"), Fraction("0.09995"), Fraction(5, 100000)),
}


def test_criterion_03_table1(acceptance):
    reports, dt = timed(lambda: table1())
    rows = {r.n: r for r in reports}
    tol = Fraction(5, 1000)
    problems = []
    for n, (lo, hi, diff, dtol) in TABLE1_PRINTED.items():
        r = rows[n]
        for name, got, want, t in (("lower", r.lower, lo, tol), ("upper", r.upper, hi, tol), ("difference", r.difference, diff, dtol)):
            if abs(got.midpoint - want) > t:
                problems.append(f"n={n} {name} {got.to_decimal(4)} vs printed {float(want)}")
    cands = sorted({c for n in TABLE1_PRINTED for c in rows[n].candidates})
    if cands != [4, 6, 9, 17]:
        problems.append(f"candidates {cands} vs printed [4, 6, 9, 17]")
    bs = {e.b for n in (1, 2) for e in rows[n].evaluations if e.b is not None}
    if not {Fraction(7, 5), Fraction(37, 13)} <= bs:
        problems.append(f"b values {sorted(bs)}")
    if not (rows[4].verdict is rows[5].verdict is GapVerdict.NO_CANDIDATE):
        problems.append("n=4/5 not NoCandidate")
    if dt >= 1.0:
        problems.append(f"runtime {dt:.2f}s")
    ok = not problems
    assert acceptance(3, "Table 1 reproduction", ok, "; ".join(problems) or f"{dt * 1e3:.0f} ms")


def test_criterion_04_theorems_1_2(acceptance):
    run_, dt = timed(lambda: verify(3, 10**6 - 1, theorems=(1, 2), chain_k=0))
    checked = sum(c.checked for c in run_.checks)
    violations = sum(c.violations for c in run_.checks)
    ok = violations == 0 and checked == (10**6 - 2) // 2 and dt < 30
    assert acceptance(4, "theorems 1-2 for odd m < 10^6", ok, f"{checked} checked, {violations} violations, {dt:.1f}s")


def test_criterion_05_shortcut_oracle(acceptance):
    run_, dt = timed(lambda: verify(3, 10**5 - 1, theorems=(3, 4, 5, 6), random_samples=10**4, seed=2024))
    names = {c.name for c in run_.checks}
    needed = {f"theorem-{t}{s}" for t in (3, 4, 5, 6) for s in ("", "-random64")}
    needed |= {"chain-corrected", "chain-corrected-random64"}
    violations = sum(c.violations for c in run_.checks)
    ok = run_.ok and needed <= names and all(c.checked > 0 for c in run_.checks)
    detail = f"{sum(c.checked for c in run_.checks)} checks, {violations} mismatches, {dt:.1f}s"
    assert acceptance(5, "shortcut/oracle equivalence", ok, detail)


def test_criterion_06_divergence_ledger(acceptance, capsys):
    spec = ChainSpec(4, 1, (2, 2))
    oracle = chain_oracle(spec.m, 2)[0][-1]
    small = verify(3, 20001, theorems=(), chain_k=1)
    k1 = next(c for c in small.checks if c.name == "chain-paper-k1")
    code = run(["verify", "--range", "3..99", "--theorems", "1", "--k", "2"])
    out = capsys.readouterr().out
    ok = (
        chain_root_paper(spec) == 18
        and oracle == 9 == chain_root_corrected(spec)
        and k1.checked > 0 and k1.violations == 0
        and code == 0
        and "printed 18, corrected 9, iteration 9" in out
    )
    assert acceptance(6, "printed k-step divergence", ok, f"printed 18 vs iteration {oracle}; k=1 agreement on {k1.checked} chains")


def test_criterion_07_gap_ordering(acceptance):
    (f2, f3), dt = timed(lambda: (figure_data(Figure.FIG2, 1000), figure_data(Figure.FIG3, 1000)))
    undecided = sum(r.ordering is Ordering.UNDECIDED for r in f2.rows + f3.rows)
    early = all(r.ordering is Ordering.GREATER for r in f2.rows[:6])
    late = all(r.ordering is Ordering.LESS for r in f2.rows[6:])
    fig3 = all(r.ordering is Ordering.LESS for r in f3.rows)
    ok = early and late and fig3 and undecided == 0 and dt < 60
    assert acceptance(7, "certified gap ordering n <= 1000", ok, f"{undecided} undecided, {dt:.1f}s")


def _verdicts(cfg):
    return [[r.verdict for r in fn(cfg)] for fn in (scan_case1, scan_case2, scan_case3)]


def test_criterion_08_cycle_scans(acceptance):
    base = ScanConfig(n_max=1000, case3_n_max=100, x_max=25, y_max=60)
    ref, dt = timed(lambda: _verdicts(base))
    allowed = {GapVerdict.NO_CANDIDATE, GapVerdict.ALL_REJECTED}
    flat = [v for fam in ref for v in fam]
    truncated = sum(r.truncated for r in scan_case3(base))
    variants = [
        ScanConfig(1000, 100, 25, 60, jobs=2),
        ScanConfig(1000, 100, 25, 60, precision_bits=256),
    ]
    same = all(_verdicts(cfg) == ref for cfg in variants)
    ok = set(flat) <= allowed and same and truncated == 0 and dt < 300
    detail = f"{len(flat)} gaps, {sum(v is GapVerdict.ALL_REJECTED for v in flat)} all-rejected, {dt:.1f}s"
    assert acceptance(8, "cycle scans find no valid parameter", ok, detail)


def test_criterion_09_tcycle_convergence(acceptance):
    ratios = [
        t_cycle_endpoints([TCycleBlock(n1, 1, (2, 3)), TCycleBlock(2, 2, (2, 2))]).gap_ratio for n1 in (5, 10, 20)
    ]
    ok = ratios[0] > ratios[1] > ratios[2]
    assert acceptance(9, "t-cycle gap ratio decreases", ok, ", ".join(f"{float(r):.8f}" for r in ratios))


def _docs():
    return [
        make_document(Kind.TRAJECTORY, trajectory(27)),
        make_document(Kind.TABLE1, tuple(table1())),
        make_document(Kind.FIGURE_DATA, figure_data(Figure.FIG2, 50)),
        make_document(Kind.CYCLE_SCAN, CycleScan("case1", reports=tuple(scan_case1(ScanConfig(n_max=50))))),
        make_document(Kind.VERIFY_RUN, verify(3, 2001, random_samples=10)),
    ]


def test_criterion_10_serialization(acceptance):
    first, second = _docs(), _docs()
    round_trip = all(from_json(to_json(d)) == d for d in first)
    stable = all(to_csv(a) == to_csv(b) for a, b in zip(first, second))
    # and across processes
    cmd = [sys.executable, "-m", "collatz_lab", "table1"]
    outs = {subprocess.run(cmd, capture_output=True, text=True, check=True).stdout for _ in range(2)}
    ok = round_trip and stable and len(outs) == 1
    assert acceptance(10, "JSON round-trip and stable CSV", ok, f"{len(first)} kinds")
