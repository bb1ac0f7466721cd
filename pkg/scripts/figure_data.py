"""Alpha_min / Epsilon series for both cases, with certified orderings.

    python3 scripts/figure_data.py --n-max 1000 --outdir out/
"""

import argparse
import os
import time

from collatz_lab.cycles import Figure, figure_data
from collatz_lab.report_io import Kind, make_document, to_csv


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-max", type=int, default=1000)
    ap.add_argument("--precision-bits", type=int, default=None)
    ap.add_argument("--outdir", default=None)
    args = ap.parse_args()

    for which in Figure:
        t0 = time.perf_counter()
        series = figure_data(which, args.n_max, args.precision_bits)
        dt = time.perf_counter() - t0
        undecided = sum(r.ordering.value == "undecided" for r in series.rows)
        print(f"{which.value}: n <= {args.n_max}, {len(series.failures)} claim failures, "
              f"{undecided} undecided, {dt:.2f}s")
        for r in series.failures[:10]:
            print(f"  n={r.n} alpha_min={r.alpha_min.to_decimal(8)} epsilon={r.epsilon.to_decimal(8)}")
        if args.outdir:
            os.makedirs(args.outdir, exist_ok=True)
            doc = make_document(Kind.FIGURE_DATA, series, which=which.value, n_max=args.n_max)
            with open(os.path.join(args.outdir, f"{which.value}.csv"), "w", encoding="utf-8") as fh:
                fh.write(to_csv(doc))


if __name__ == "__main__":
    main()
