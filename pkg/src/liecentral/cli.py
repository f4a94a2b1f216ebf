"""Command line: ``liecentral {check,h2,extend,catalog,oracle,fock}``.

Exit codes: 0 success, 1 mathematical failure (Jacobi violation, residual
over tolerance, declared value mismatch), 2 input error. Reports go to
stdout as JSON; diagnostics go to stderr.
"""
from __future__ import annotations

import argparse
import json
import sys
import warnings
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Sequence, Tuple

from . import catalog, dsl, fock, report
from .algebra import LieAlgebra, jacobi_residual
from .cohomology import TwoCochain, central_extension, is_central, second_cohomology
from .report import EXIT_FAILURE, EXIT_INPUT, EXIT_OK
from .weyl import derive_sp_constants, verify_wz_law, verify_ww_law


class InputError(Exception):
    pass


def _add_source(p: argparse.ArgumentParser):
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", metavar="FILE", help=".lie or .json algebra document")
    src.add_argument("--catalog", metavar="FAMILY", help="catalog family (e.g. isp, hsp, abelian)")
    p.add_argument("--n", type=int, default=1, help="family parameter (symplectic families build 2n)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="liecentral", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="verify the Jacobi identity")
    _add_source(p)

    p = sub.add_parser("h2", help="second cohomology with representatives")
    _add_source(p)

    p = sub.add_parser("extend", help="central extension by H^2 representatives or given cochains")
    _add_source(p)
    p.add_argument("--cochains", default="full-h2",
                   help="'full-h2' or a JSON file with a list of cochains [[x, y, 'p/q'], ...]")
    p.add_argument("--name", help="name of the extended algebra")
    p.add_argument("--json", action="store_true", help="emit the JSON report instead of the .lie document")

    p = sub.add_parser("catalog", help="describe or emit a catalog algebra")
    p.add_argument("family")
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--emit", nargs="?", const="lie", choices=["lie", "json"],
                   help="print the algebra document instead of the report")

    p = sub.add_parser("oracle", help="derive sp(2n) constants from the Weyl algebra")
    p.add_argument("--n", type=int, default=1)

    p = sub.add_parser("fock", help="truncated Fock-space residual checks")
    p.add_argument("--modes", type=int, default=1)
    p.add_argument("--levels", type=int, default=10)
    p.add_argument("--lambda", dest="lam", default="1", help="Schur scalar, e.g. 2 or 1/3")
    p.add_argument("--checks", default="heisenberg,wz,ww,rescale")
    p.add_argument("--margin-override", default=None,
                   help="an integer for every check, or name=int pairs, e.g. ww=5,wz=4")
    return parser


def _load_source(args) -> Tuple[LieAlgebra, catalog.CatalogEntry | None]:
    if args.input:
        try:
            text = Path(args.input).read_text(encoding="utf-8")
        except OSError as exc:
            raise InputError(f"cannot read {args.input}: {exc.strerror}") from None
        try:
            return dsl.load_algebra_text(text).to_algebra(), None
        except ValueError as exc:
            raise InputError(f"{args.input}: {exc}") from None
    try:
        entry = catalog.by_family(args.catalog, args.n)
    except (KeyError, ValueError) as exc:
        raise InputError(str(exc).strip("'\"")) from None
    return entry.algebra, entry


def _load_cochains(L: LieAlgebra, path: str) -> List[TwoCochain]:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
        out = []
        for entries in data:
            values: Dict[Tuple[int, int], Fraction] = {}
            for x, y, v in entries:
                key = (L.index(x), L.index(y))
                values[key] = values.get(key, 0) + Fraction(str(v))
            out.append(TwoCochain.from_pairs(L.dim, values))
        return out
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except (ValueError, KeyError, TypeError, ZeroDivisionError) as exc:
        raise InputError(f"{path}: malformed cochain file ({exc})") from None


def _stderr_failures(L, failures):
    for item in report.failing_triples(L, failures):
        print(f"jacobi fails on {tuple(item['triple'])}: residual {item['residual']}", file=sys.stderr)


def _cmd_check(args):
    L, _ = _load_source(args)
    failures = jacobi_residual(L)
    _stderr_failures(L, failures)
    results = {"algebra": L.name, "dim": L.dim, "jacobi_ok": not failures,
               "failing_triples": report.failing_triples(L, failures)}
    return dsl.print_algebra(L), results, EXIT_FAILURE if failures else EXIT_OK, None


def _cmd_h2(args):
    L, entry = _load_source(args)
    failures = jacobi_residual(L)
    results = {"algebra": L.name, "dim": L.dim, "jacobi_ok": not failures}
    if failures:
        _stderr_failures(L, failures)
        results["failing_triples"] = report.failing_triples(L, failures)
        return dsl.print_algebra(L), results, EXIT_FAILURE, None
    res = second_cohomology(L)
    results.update(report.cohomology_results(L, res))
    code = EXIT_OK
    if entry is not None:
        results["declared"] = entry.declared.as_dict()
        results["declared_matches"] = entry.declared.dim_h2 == res.dim_h2
        if not results["declared_matches"]:
            print(f"declared dim H^2 {entry.declared.dim_h2} != computed {res.dim_h2}", file=sys.stderr)
            code = EXIT_FAILURE
    return dsl.print_algebra(L), results, code, None


def _cmd_extend(args):
    L, _ = _load_source(args)
    if args.cochains == "full-h2":
        base_failures = jacobi_residual(L)
        if base_failures:
            _stderr_failures(L, base_failures)
            results = {"algebra": L.name, "dim": L.dim, "jacobi_ok": False,
                       "failing_triples": report.failing_triples(L, base_failures)}
            return dsl.print_algebra(L), results, EXIT_FAILURE, None
        cochains = list(second_cohomology(L).representatives)
    else:
        cochains = _load_cochains(L, args.cochains)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        ext = central_extension(L, cochains, name=args.name)
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    E = ext.extended
    central_ok = all(is_central(E, E.basis_element(i)) for i in ext.central_indices)
    _stderr_failures(E, ext.failures)
    document = dsl.print_algebra(E)
    results = {
        "algebra": E.name,
        "dim": E.dim,
        "jacobi_ok": ext.ok,
        "failing_triples": report.failing_triples(E, ext.failures),
        "cochains": [report.cochain_entries(L, w) for w in cochains],
        "central": list(E.basis[L.dim:]),
        "central_ok": central_ok,
        "extension": document,
    }
    code = EXIT_OK if ext.ok and central_ok else EXIT_FAILURE
    return dsl.print_algebra(L), results, code, None if args.json else document


def _cmd_catalog(args):
    try:
        entry = catalog.by_family(args.family, args.n)
    except (KeyError, ValueError) as exc:
        raise InputError(str(exc).strip("'\"")) from None
    L = entry.algebra
    if args.emit == "lie":
        return dsl.print_algebra(L), {}, EXIT_OK, dsl.print_algebra(L)
    if args.emit == "json":
        return dsl.print_algebra(L), {}, EXIT_OK, json.dumps(dsl.to_json_obj(L), indent=2, sort_keys=True) + "\n"
    failures = jacobi_residual(L)
    res = second_cohomology(L) if not failures else None
    results = {
        "algebra": L.name,
        "dim": L.dim,
        "jacobi_ok": not failures,
        "declared": entry.declared.as_dict(),
    }
    if res is not None:
        results.update(report.cohomology_results(L, res))
        results["declared_matches"] = res.dim_h2 == entry.declared.dim_h2
    ok = not failures and results.get("declared_matches", False)
    return dsl.print_algebra(L), results, EXIT_OK if ok else EXIT_FAILURE, None


def _cmd_oracle(args):
    if args.n < 1:
        raise InputError("--n must be >= 1")
    entry = catalog.sp(2 * args.n)
    L = entry.algebra
    pairs, brackets = derive_sp_constants(args.n)
    wz_bad = verify_wz_law(args.n)
    ww_bad = verify_ww_law(args.n)
    jac = jacobi_residual(L)
    constants = [
        [L.basis[i], L.basis[j], [[L.basis[k], str(v)] for k, v in sorted(vec.items())]]
        for (i, j), vec in sorted(brackets.items())
    ]
    verdict = not wz_bad and not ww_bad and not jac
    results = {
        "algebra": L.name,
        "dim": L.dim,
        "jacobi_ok": not jac,
        "oracle": {
            "n": args.n,
            "generator": "W_ab = (Z_a Z_b + Z_b Z_a)/2",
            "constants": constants,
            "wz_law_failures": [[L.basis[pairs.index(p)], f"Z{k + 1}"] for p, k, _ in wz_bad],
            "ww_law_failures": [[L.basis[pairs.index(p)], L.basis[pairs.index(q)]] for p, q in ww_bad],
            "verdict": verdict,
        },
    }
    return f"oracle n={args.n}", results, EXIT_OK if verdict else EXIT_FAILURE, None


def _parse_margins(text: str | None, checks: Sequence[str]) -> Dict[str, int]:
    if not text:
        return {}
    try:
        if "=" not in text:
            return {c: int(text) for c in checks}
        out = {}
        for item in text.split(","):
            k, v = item.split("=")
            out[k.strip()] = int(v)
        return out
    except ValueError:
        raise InputError(f"bad --margin-override {text!r}") from None


def _cmd_fock(args):
    checks = [c.strip() for c in args.checks.split(",") if c.strip()]
    try:
        lam = fock.parse_lambda(args.lam)
        config = fock.FockConfig(args.modes, args.levels, lam)
        margins = _parse_margins(args.margin_override, checks)
        results_grid = fock.run_checks(config, checks, margins)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(str(exc)) from None
    ok = all(v["ok"] for v in results_grid.values())
    payload = {
        "config": {"modes": config.modes, "levels": config.levels, "lambda": config.lam,
                   "matrix_dim": config.dim, "qp_swapped": config.swapped},
        "checks": results_grid,
        "ok": ok,
    }
    if config.swapped:
        payload["note"] = "lambda < 0 realized by swapping Q and P (zeta -> -zeta)"
    fingerprint_text = json.dumps({"config": payload["config"], "checks": checks, "margins": margins}, sort_keys=True)
    return fingerprint_text, {"fock": payload}, EXIT_OK if ok else EXIT_FAILURE, None


COMMANDS = {
    "check": _cmd_check,
    "h2": _cmd_h2,
    "extend": _cmd_extend,
    "catalog": _cmd_catalog,
    "oracle": _cmd_oracle,
    "fock": _cmd_fock,
}


def run(argv: Sequence[str] | None = None, stdout=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    out = stdout or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        input_text, results, code, document = COMMANDS[args.command](args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        rep = report.make_report(args.command, argv, "", {}, EXIT_INPUT)
        out.write(report.dumps(rep) + "\n")
        return EXIT_INPUT
    if document is not None:
        out.write(document)
    else:
        out.write(report.dumps(report.make_report(args.command, argv, input_text, results, code)) + "\n")
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
