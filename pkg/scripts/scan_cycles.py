"""Desk-scale cycle scans for all three cases, plus a t-cycle convergence check.

    python3 scripts/scan_cycles.py --jobs 4
"""

import argparse
import time
from collections import Counter

from collatz_lab.cycles import ScanConfig, TCycleBlock, scan_case1, scan_case2, scan_case3, t_cycle_endpoints


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-max", type=int, default=1000)
    ap.add_argument("--case3-n-max", type=int, default=100)
    ap.add_argument("--x-max", type=int, default=25)
    ap.add_argument("--y-max", type=int, default=60)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--precision-bits", type=int, default=None)
    args = ap.parse_args()

    cfg = ScanConfig(args.n_max, args.case3_n_max, args.x_max, args.y_max, args.jobs, args.precision_bits)
    for name, fn in (("case1", scan_case1), ("case2", scan_case2), ("case3", scan_case3)):
        t0 = time.perf_counter()
        reports = fn(cfg)
        counts = Counter(r.verdict.value for r in reports)
        truncated = sum(r.truncated for r in reports)
        print(f"{name}: {len(reports)} gaps {dict(sorted(counts.items()))} truncated={truncated} "
              f"{time.perf_counter() - t0:.2f}s")
        for r in reports:
            if r.verdict.value != "no-candidate":
                where = f"n={r.n}" + ("" if r.x is None else f" x={r.x}")
                print(f"  {where}: " + ", ".join(f"{e.candidate}->{e.verdict.value}" for e in r.evaluations))

    print("t-cycle, blocks (n1, 1, (2,3)) and (2, 2, (2,2)):")
    for n1 in (5, 10, 20, 40):
        e = t_cycle_endpoints([TCycleBlock(n1, 1, (2, 3)), TCycleBlock(2, 2, (2, 2))])
        print(f"  n1={n1:<3} gap ratio {float(e.gap_ratio):.10f}  a1={e.solution.value} ({e.solution.verdict.value})")


if __name__ == "__main__":
    main()
