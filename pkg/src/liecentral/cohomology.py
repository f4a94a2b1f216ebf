"""Second cohomology H^2(g, R) with trivial coefficients and central extensions.

A 2-cochain is stored densely over ordered pairs (a, b), a < b, in
lexicographic order. The cocycle condition used throughout is

    w([x, y], z) + w([y, z], x) + w([z, x], y) = 0,

which is exactly the Jacobi identity of the extended bracket restricted to
the new central direction. Coboundaries are the cochains w_f(x, y) = f([x, y]).
"""
from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Mapping, Sequence, Tuple

from . import linalg
from .algebra import (
    AlgebraElement,
    LieAlgebra,
    as_rational,
    bracket,
    jacobi_residual,
    require_jacobi,
)


@lru_cache(maxsize=None)
def pair_list(d: int) -> Tuple[Tuple[int, int], ...]:
    return tuple(itertools.combinations(range(d), 2))


@lru_cache(maxsize=None)
def _pair_index(d: int) -> Dict[Tuple[int, int], int]:
    return {p: i for i, p in enumerate(pair_list(d))}


@dataclass(frozen=True)
class TwoCochain:
    algebra_dim: int
    entries: Tuple[Fraction, ...]

    def __post_init__(self):
        entries = tuple(as_rational(v) for v in self.entries)
        d = self.algebra_dim
        if len(entries) != d * (d - 1) // 2:
            raise ValueError(f"a 2-cochain on a dim-{d} algebra has {d * (d - 1) // 2} entries, got {len(entries)}")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_pairs(cls, d: int, values: Mapping[Tuple[int, int], object]) -> "TwoCochain":
        idx = _pair_index(d)
        entries = [Fraction(0)] * (d * (d - 1) // 2)
        for (a, b), v in values.items():
            q = as_rational(v)
            if a == b:
                if q:
                    raise ValueError("w(X, X) must vanish")
                continue
            if a > b:
                a, b, q = b, a, -q
            entries[idx[(a, b)]] += q
        return cls(d, tuple(entries))

    @classmethod
    def from_sparse(cls, d: int, vec: Mapping[int, Fraction]) -> "TwoCochain":
        entries = [Fraction(0)] * (d * (d - 1) // 2)
        for i, v in vec.items():
            entries[i] = v
        return cls(d, tuple(entries))

    def value(self, a: int, b: int) -> Fraction:
        if a == b:
            return Fraction(0)
        if a < b:
            return self.entries[_pair_index(self.algebra_dim)[(a, b)]]
        return -self.entries[_pair_index(self.algebra_dim)[(b, a)]]

    def sparse(self) -> Dict[int, Fraction]:
        return {i: v for i, v in enumerate(self.entries) if v}

    def pairs(self) -> Dict[Tuple[int, int], Fraction]:
        plist = pair_list(self.algebra_dim)
        return {plist[i]: v for i, v in self.sparse().items()}

    def normalized(self) -> "TwoCochain":
        """Scale so that the first nonzero entry is 1."""
        for v in self.entries:
            if v:
                return TwoCochain(self.algebra_dim, tuple(e / v for e in self.entries))
        return self

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __add__(self, other: "TwoCochain") -> "TwoCochain":
        if other.algebra_dim != self.algebra_dim:
            raise ValueError("cochains on different algebras")
        return TwoCochain(self.algebra_dim, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __mul__(self, s) -> "TwoCochain":
        s = as_rational(s)
        return TwoCochain(self.algebra_dim, tuple(s * e for e in self.entries))

    __rmul__ = __mul__


def _cocycle_rows(L: LieAlgebra) -> List[Dict[int, Fraction]]:
    # One row per triple a<b<c, in triple order.
    d = L.dim
    idx = _pair_index(d)
    rows = []
    for a, b, c in itertools.combinations(range(d), 3):
        row: Dict[int, Fraction] = {}
        for (p, q), r in (((a, b), c), ((b, c), a), ((c, a), b)):
            for e, v in L.basis_bracket(p, q).items():
                if e == r:
                    continue
                key, sign = (idx[(e, r)], 1) if e < r else (idx[(r, e)], -1)
                row[key] = row.get(key, 0) + sign * v
        row = {k: v for k, v in row.items() if v}
        if row:
            rows.append(row)
    return rows


def coboundary_of(L: LieAlgebra, f: Sequence) -> TwoCochain:
    """The coboundary w_f(X_a, X_b) = f([X_a, X_b]) of a linear functional ``f``."""
    if len(f) != L.dim:
        raise ValueError(f"functional has {len(f)} entries, algebra has dim {L.dim}")
    f = [as_rational(v) for v in f]
    entries = []
    for a, b in pair_list(L.dim):
        entries.append(sum((f[c] * v for c, v in L.basis_bracket(a, b).items()), Fraction(0)))
    return TwoCochain(L.dim, tuple(entries))


def is_cocycle(L: LieAlgebra, w: TwoCochain) -> bool:
    sw = w.sparse()
    return all(sum(sw.get(k, 0) * v for k, v in row.items()) == 0 for row in _cocycle_rows(L))


def failing_cocycle_triples(L: LieAlgebra, w: TwoCochain) -> List[Tuple[int, int, int]]:
    failures = []
    for a, b, c in itertools.combinations(range(L.dim), 3):
        total = Fraction(0)
        for (p, q), r in (((a, b), c), ((b, c), a), ((c, a), b)):
            for e, v in L.basis_bracket(p, q).items():
                total += v * w.value(e, r)
        if total:
            failures.append((a, b, c))
    return failures


def _coboundary_rows(L: LieAlgebra) -> List[Tuple[int, Dict[int, Fraction]]]:
    # Row c is the coboundary of the dual basis functional X_c^*.
    d = L.dim
    rows: List[Dict[int, Fraction]] = [dict() for _ in range(d)]
    for i, (a, b) in enumerate(pair_list(d)):
        for c, v in L.basis_bracket(a, b).items():
            rows[c][i] = v
    return linalg.sparse_rref(rows)


def cocycle_space(L: LieAlgebra) -> List[TwoCochain]:
    """Basis of Z^2(L); raises JacobiError if L is not a Lie algebra."""
    require_jacobi(L)
    d = L.dim
    npairs = d * (d - 1) // 2
    return [TwoCochain.from_sparse(d, v) for v in linalg.sparse_nullspace(_cocycle_rows(L), npairs)]


def coboundary_space(L: LieAlgebra) -> List[TwoCochain]:
    """Basis of B^2(L) in reduced row echelon form."""
    return [TwoCochain.from_sparse(L.dim, row) for _, row in _coboundary_rows(L)]


@dataclass(frozen=True)
class CohomologyResult:
    dim_cocycles: int
    dim_coboundaries: int
    dim_h2: int
    cocycle_basis: Tuple[TwoCochain, ...]
    coboundary_basis: Tuple[TwoCochain, ...]
    representatives: Tuple[TwoCochain, ...]


def _reduce_mod(vec: Dict[int, Fraction], reduced: Sequence[Tuple[int, Dict[int, Fraction]]]) -> Dict[int, Fraction]:
    vec = dict(vec)
    for c, row in reduced:
        f = vec.get(c)
        if not f:
            continue
        for j, v in row.items():
            nv = vec.get(j, 0) - f * v
            if nv:
                vec[j] = nv
            else:
                vec.pop(j, None)
    return vec


def second_cohomology(L: LieAlgebra) -> CohomologyResult:
    """Z^2, B^2 and a canonical basis of representatives for H^2.

    Representatives come from pivot completion of the B^2 basis by Z^2
    basis vectors, each reduced to its normal form modulo B^2 (zero in every
    B^2 pivot column), then put in reduced echelon form. The result is unique
    for a given basis order and every representative leads with a 1.
    """
    z2 = cocycle_space(L)
    b2rows = _coboundary_rows(L)
    b2 = [TwoCochain.from_sparse(L.dim, row) for _, row in b2rows]

    kept = []
    span = list(b2rows)
    for w in z2:
        r = _reduce_mod(w.sparse(), span)
        if not r:
            continue
        kept.append(_reduce_mod(w.sparse(), b2rows))
        span = linalg.sparse_rref([row for _, row in span] + [r])
    reps = [TwoCochain.from_sparse(L.dim, row) for _, row in linalg.sparse_rref(kept)]

    dim_h2 = len(z2) - len(b2)
    if dim_h2 != len(reps) or dim_h2 < 0:
        raise AssertionError(f"H^2 bookkeeping broken: {len(z2)} - {len(b2)} != {len(reps)}")
    return CohomologyResult(len(z2), len(b2), dim_h2, tuple(z2), tuple(b2), tuple(reps))


def independent_mod_coboundaries(L: LieAlgebra, cochains: Sequence[TwoCochain]) -> bool:
    b2rows = _coboundary_rows(L)
    base = len(b2rows)
    full = linalg.sparse_rref([row for _, row in b2rows] + [w.sparse() for w in cochains])
    return len(full) == base + len(cochains)


@dataclass(frozen=True)
class CentralExtension:
    base: LieAlgebra
    cochains: Tuple[TwoCochain, ...]
    extended: LieAlgebra
    failures: Tuple = field(default=())

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def central_indices(self) -> range:
        return range(self.base.dim, self.extended.dim)


def _fresh_names(existing: Sequence[str], m: int) -> List[str]:
    taken = set(existing)
    names = []
    for k in range(1, m + 1):
        name = f"I{k}"
        while name in taken:
            name += "_"
        taken.add(name)
        names.append(name)
    return names


def central_extension(L: LieAlgebra, cochains: Sequence[TwoCochain], name: str | None = None) -> CentralExtension:
    """Adjoin one central generator per cochain.

    Non-cocycle input still produces the extended table; ``failures`` then
    lists the Jacobi triples that break, so the defect can be inspected.
    """
    cochains = tuple(cochains)
    for w in cochains:
        if w.algebra_dim != L.dim:
            raise ValueError(f"cochain for dim {w.algebra_dim} given to {L.name} (dim {L.dim})")
    if not cochains:
        return CentralExtension(L, (), L, ())
    if not independent_mod_coboundaries(L, cochains):
        warnings.warn(
            f"cochains are dependent modulo coboundaries; the extension of {L.name} is not maximal/nontrivial",
            stacklevel=2,
        )
    d, m = L.dim, len(cochains)
    table = {pair: dict(vec) for pair, vec in L.brackets.items()}
    for alpha, w in enumerate(cochains):
        for pair, v in w.pairs().items():
            table.setdefault(pair, {})[d + alpha] = v
    basis = L.basis + tuple(_fresh_names(L.basis, m))
    meta = {"extension_of": L.name, "central": list(basis[d:])}
    ext = LieAlgebra(name or f"{L.name}_ext", basis, table, meta)
    return CentralExtension(L, cochains, ext, tuple(jacobi_residual(ext)))


def is_central(L: LieAlgebra, x: AlgebraElement) -> bool:
    return all(bracket(L, x, L.basis_element(b)).is_zero() for b in range(L.dim))


def translation_matrix(dim: int, functionals: Sequence[Sequence]) -> List[List[Fraction]]:
    """Basis change ``X_a -> X_a + sum_alpha f_alpha(X_a) I_alpha`` on an extension.

    ``dim`` is the base dimension; one functional per central generator.
    """
    m = len(functionals)
    T = [[Fraction(int(i == j)) for j in range(dim + m)] for i in range(dim + m)]
    for alpha, f in enumerate(functionals):
        for a in range(dim):
            T[a][dim + alpha] = as_rational(f[a])
    return T
