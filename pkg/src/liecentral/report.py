"""Machine-readable reports emitted by the command line."""
from __future__ import annotations

import hashlib
import json
from importlib import resources
from typing import Any, Dict, List, Mapping, Sequence

from . import __version__
from .algebra import LieAlgebra
from .cohomology import CohomologyResult, TwoCochain

EXIT_OK, EXIT_FAILURE, EXIT_INPUT = 0, 1, 2
STATUS = {EXIT_OK: "ok", EXIT_FAILURE: "failure", EXIT_INPUT: "input_error"}


def fingerprint(text: str) -> str:
    return "sha256:" + hashlib.sha256(text.encode("utf-8")).hexdigest()


def cochain_entries(L: LieAlgebra, w: TwoCochain) -> List[List[str]]:
    """Sparse ``[[x, y, "p/q"], ...]`` listing, scaled so the first entry is 1."""
    w = w.normalized()
    return [[L.basis[a], L.basis[b], str(v)] for (a, b), v in sorted(w.pairs().items())]


def failing_triples(L: LieAlgebra, failures) -> List[Dict[str, Any]]:
    out = []
    for (a, b, c), res in failures:
        out.append({
            "triple": [L.basis[a], L.basis[b], L.basis[c]],
            "residual": {L.basis[k]: str(v) for k, v in sorted(res.sparse().items())},
        })
    return out


def cohomology_results(L: LieAlgebra, res: CohomologyResult) -> Dict[str, Any]:
    return {
        "dim_cocycles": res.dim_cocycles,
        "dim_coboundaries": res.dim_coboundaries,
        "dim_h2": res.dim_h2,
        "representatives": [cochain_entries(L, w) for w in res.representatives],
    }


def make_report(command: str, argv: Sequence[str], input_text: str, results: Mapping[str, Any],
                exit_code: int) -> Dict[str, Any]:
    return {
        "command": command,
        "argv": list(argv),
        "input_fingerprint": fingerprint(input_text),
        "results": dict(results),
        "version": __version__,
        "status": STATUS[exit_code],
        "exit_code": exit_code,
    }


def dumps(report: Mapping[str, Any]) -> str:
    return json.dumps(report, indent=2, sort_keys=True, allow_nan=False)


def schema() -> Dict[str, Any]:
    return json.loads(resources.files("liecentral").joinpath("report.schema.json").read_text("utf-8"))
