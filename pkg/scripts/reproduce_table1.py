"""Reproduce the first-case limit-point table and compare with the printed numbers.

    python3 scripts/reproduce_table1.py [--precision-bits N] [--out table1.csv]
"""

import argparse
from fractions import Fraction

from collatz_lab.cycles import table1
from collatz_lab.report_io import Kind, make_document, to_csv

# (lower, upper, difference) as printed, rounded to two places (n = 6 difference to five)
PUBLISHED = {
    1: ("2.82", "4.82", "2"),
    2: ("5.64", "6.83", "1.19"),
    3: ("8.46", "9.12", "0.67"),
    6: ("16.91", "17.01", "0.09995"),
}
TOL = Fraction(5, 1000)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--precision-bits", type=int, default=None)
    ap.add_argument("--out", default=None, help="also write the CSV here")
    args = ap.parse_args()

    reports = table1(args.precision_bits)
    doc = make_document(Kind.TABLE1, tuple(reports), precision_bits=args.precision_bits or "default")
    text = to_csv(doc)
    print(text, end="")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)

    print("\ncomparison with the printed table (tolerance 0.005):")
    for r in reports:
        if r.n not in PUBLISHED:
            continue
        for name, got, want in zip(("lower", "upper", "difference"), (r.lower, r.upper, r.difference), PUBLISHED[r.n]):
            err = abs(got.midpoint - Fraction(want))
            flag = "ok" if err <= TOL else "MISMATCH"
            print(f"  n={r.n} {name:<10} printed {want:<8} certified {got.to_decimal(5)}  |diff| {float(err):.5f} {flag}")
        print(f"  n={r.n} candidates {list(r.candidates)} verdict {r.verdict.value}")


if __name__ == "__main__":
    main()
