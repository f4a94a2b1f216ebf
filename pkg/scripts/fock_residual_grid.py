"""Tabulate truncated Fock-space residuals over a grid of cutoffs and margins.

Shows how the commutation defects are confined to the top occupation levels:
the residual collapses to rounding error once the margin reaches the degree.
"""
import argparse

from liecentral.fock import FockConfig, build_w, build_z, heisenberg_check, parse_lambda, ww_check, wz_check


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--modes", type=int, default=1)
    ap.add_argument("--levels", type=int, nargs="+", default=[6, 10, 14])
    ap.add_argument("--lambda", dest="lam", default="1")
    ap.add_argument("--max-margin", type=int, default=5)
    args = ap.parse_args()
    lam = parse_lambda(args.lam)
    print(f"modes={args.modes} lambda={lam:g}")
    print(f"{'N':>4}{'margin':>8}{'heisenberg':>14}{'[W,Z]':>14}{'[W,W]':>14}")
    for N in args.levels:
        c = FockConfig(args.modes, N, lam)
        z = build_z(c)
        w = build_w(c, z)
        for m in range(0, min(args.max_margin, N - 1) + 1):
            h = heisenberg_check(c, m, z)["residual"]
            a = wz_check(c, m, z, w)["residual"]
            b = ww_check(c, m, z, w)["residual"]
            print(f"{N:>4}{m:>8}{h:>14.3e}{a:>14.3e}{b:>14.3e}")


if __name__ == "__main__":
    main()
