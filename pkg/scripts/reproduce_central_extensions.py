"""Print dim H^2 for the catalog families and compare with the declared values."""
import argparse
import time

from liecentral.catalog import by_family
from liecentral.cohomology import second_cohomology

DEFAULT_CASES = [
    ("abelian", 1), ("abelian", 2), ("abelian", 3), ("abelian", 4), ("abelian", 5),
    ("heisenberg", 1), ("heisenberg", 2),
    ("sp", 1), ("sp", 2),
    ("lorentz", 2), ("lorentz", 3),
    ("il", 1), ("il", 2), ("il", 3),
    ("isp", 1), ("isp", 2), ("isp", 3),
    ("hsp", 1), ("hsp", 2),
]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--family", help="restrict to one family")
    ap.add_argument("--n", type=int, help="restrict to one size")
    args = ap.parse_args()
    cases = [(f, n) for f, n in DEFAULT_CASES
             if (args.family is None or f == args.family) and (args.n is None or n == args.n)]
    if not cases and args.family:
        cases = [(args.family, args.n or 1)]
    print(f"{'algebra':<14}{'dim':>5}{'Z2':>6}{'B2':>6}{'H2':>5}{'declared':>10}{'secs':>8}")
    mismatches = 0
    for family, n in cases:
        entry = by_family(family, n)
        t0 = time.perf_counter()
        res = second_cohomology(entry.algebra)
        secs = time.perf_counter() - t0
        declared = entry.declared.dim_h2
        flag = "" if declared == res.dim_h2 else "  MISMATCH"
        mismatches += bool(flag)
        print(f"{entry.algebra.name:<14}{entry.algebra.dim:>5}{res.dim_cocycles:>6}{res.dim_coboundaries:>6}"
              f"{res.dim_h2:>5}{declared:>10}{secs:>8.3f}{flag}")
    raise SystemExit(1 if mismatches else 0)


if __name__ == "__main__":
    main()
