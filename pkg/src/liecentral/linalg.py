"""Exact rational linear algebra: reduced row echelon form, rank, nullspace.

Matrices are lists of rows. The dense entry points (`rref`, `nullspace_basis`,
`inverse`) convert to sparse rows internally; the cohomology code calls the
sparse variants directly because its constraint systems are mostly zeros.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple

SparseRow = Dict[int, Fraction]


def _to_sparse(row: Iterable) -> SparseRow:
    return {j: Fraction(v) for j, v in enumerate(row) if v != 0}


def _reduce_against(row: SparseRow, pivots: Dict[int, SparseRow]) -> SparseRow:
    # Eliminate leading entries until the row leads with a fresh column.
    row = dict(row)
    while row:
        lead = min(row)
        prow = pivots.get(lead)
        if prow is None:
            return row
        factor = row[lead]
        for j, v in prow.items():
            nv = row.get(j, 0) - factor * v
            if nv:
                row[j] = nv
            else:
                row.pop(j, None)
    return row


def sparse_rref(rows: Iterable[SparseRow]) -> List[Tuple[int, SparseRow]]:
    """Reduced row echelon form of sparse rows.

    Returns ``[(pivot_column, row), ...]`` sorted by pivot column, each row
    normalized to a leading 1 with zeros in every other pivot column. The
    RREF of a matrix is unique, so the result does not depend on row order.
    """
    pivots: Dict[int, SparseRow] = {}
    for row in rows:
        r = _reduce_against(row, pivots)
        if not r:
            continue
        lead = min(r)
        inv = 1 / r[lead]
        pivots[lead] = {j: v * inv for j, v in r.items()}
    # back substitution, rightmost pivot first
    cols = sorted(pivots)
    for c in reversed(cols):
        prow = pivots[c]
        for other in cols:
            if other >= c:
                break
            orow = pivots[other]
            factor = orow.get(c)
            if not factor:
                continue
            for j, v in prow.items():
                nv = orow.get(j, 0) - factor * v
                if nv:
                    orow[j] = nv
                else:
                    orow.pop(j, None)
    return [(c, pivots[c]) for c in cols]


def sparse_nullspace(rows: Iterable[SparseRow], ncols: int) -> List[SparseRow]:
    """Kernel basis, one vector per free column in increasing order."""
    reduced = sparse_rref(rows)
    pivot_cols = {c for c, _ in reduced}
    basis = []
    for free in range(ncols):
        if free in pivot_cols:
            continue
        vec = {free: Fraction(1)}
        for c, row in reduced:
            v = row.get(free)
            if v:
                vec[c] = -v
        basis.append(vec)
    return basis


def _densify(row: SparseRow, ncols: int) -> List[Fraction]:
    out = [Fraction(0)] * ncols
    for j, v in row.items():
        out[j] = v
    return out


def _ncols(M: Sequence[Sequence]) -> int:
    return len(M[0]) if M else 0


def rref(M: Sequence[Sequence]) -> Tuple[List[List[Fraction]], int, List[int]]:
    """Return ``(reduced, rank, pivot_columns)``.

    ``reduced`` has the same shape as ``M``; zero rows sit at the bottom.
    """
    ncols = _ncols(M)
    reduced = sparse_rref(_to_sparse(r) for r in M)
    out = [_densify(row, ncols) for _, row in reduced]
    out += [[Fraction(0)] * ncols for _ in range(len(M) - len(reduced))]
    return out, len(reduced), [c for c, _ in reduced]


def rank(M: Sequence[Sequence]) -> int:
    return len(sparse_rref(_to_sparse(r) for r in M))


def nullspace_basis(M: Sequence[Sequence], ncols: int | None = None) -> List[List[Fraction]]:
    """Exact kernel basis of ``M``; ``ncols`` is needed only when ``M`` has no rows."""
    if ncols is None:
        ncols = _ncols(M)
    return [_densify(v, ncols) for v in sparse_nullspace((_to_sparse(r) for r in M), ncols)]


def transpose(M: Sequence[Sequence]) -> List[List]:
    return [list(col) for col in zip(*M)]


def inverse(M: Sequence[Sequence]) -> List[List[Fraction]]:
    n = len(M)
    if any(len(r) != n for r in M):
        raise ValueError("inverse needs a square matrix")
    aug = []
    for i, r in enumerate(M):
        row = _to_sparse(r)
        row[n + i] = Fraction(1)
        aug.append(row)
    reduced = sparse_rref(aug)
    if len(reduced) < n or any(c != i for i, (c, _) in enumerate(reduced[:n])):
        raise ValueError("matrix is singular")
    return [[row.get(n + j, Fraction(0)) for j in range(n)] for _, row in reduced]


def matmul(A: Sequence[Sequence], B: Sequence[Sequence]) -> List[List[Fraction]]:
    Bt = transpose(B)
    return [[sum((Fraction(a) * b for a, b in zip(r, c)), Fraction(0)) for c in Bt] for r in A]
