"""Finite-dimensional Lie algebras over Q given by structure constants."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Mapping, Sequence, Tuple

from . import linalg

Brackets = Dict[Tuple[int, int], Dict[int, Fraction]]


class JacobiError(ValueError):
    """Raised when an operation needs a Lie algebra but Jacobi fails."""

    def __init__(self, name: str, failures):
        self.failures = failures
        triples = ", ".join(str(t) for t, _ in failures[:5])
        more = "" if len(failures) <= 5 else f" (+{len(failures) - 5} more)"
        super().__init__(f"{name}: Jacobi identity fails on triples {triples}{more}")


def as_rational(x) -> Fraction:
    if isinstance(x, float):
        raise TypeError("floats are not accepted as exact coefficients")
    return Fraction(x)


def format_rational(q: Fraction) -> str:
    return str(q)


def _clean(vec: Mapping[int, Any]) -> Dict[int, Fraction]:
    out = {}
    for k, v in vec.items():
        q = as_rational(v)
        if q:
            out[int(k)] = q
    return out


@dataclass(frozen=True)
class AlgebraElement:
    coeffs: Tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(as_rational(c) for c in self.coeffs))

    @property
    def dim(self) -> int:
        return len(self.coeffs)

    def _check(self, other: "AlgebraElement"):
        if other.dim != self.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __add__(self, other):
        self._check(other)
        return AlgebraElement(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._check(other)
        return AlgebraElement(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return AlgebraElement(tuple(-a for a in self.coeffs))

    def __mul__(self, scalar):
        s = as_rational(scalar)
        return AlgebraElement(tuple(s * a for a in self.coeffs))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def sparse(self) -> Dict[int, Fraction]:
        return {i: c for i, c in enumerate(self.coeffs) if c}


@dataclass(frozen=True, eq=False)
class LieAlgebra:
    """Structure constants ``[X_a, X_b] = sum_c brackets[(a, b)][c] X_c`` for a < b.

    Reversed pairs are derived by antisymmetry and never stored. Construction
    checks only the structure (indices, ordering); Jacobi is checked with
    :func:`jacobi_residual`.
    """

    name: str
    basis: Tuple[str, ...]
    brackets: Brackets = field(default_factory=dict)
    metadata: Mapping[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        basis = tuple(self.basis)
        if not basis:
            raise ValueError("a Lie algebra needs a nonempty basis")
        if len(set(basis)) != len(basis):
            raise ValueError(f"duplicate basis names in {basis}")
        d = len(basis)
        table: Brackets = {}
        for (a, b), vec in self.brackets.items():
            if not (0 <= a < d and 0 <= b < d):
                raise ValueError(f"bracket pair {(a, b)} out of range for dim {d}")
            if a == b:
                if _clean(vec):
                    raise ValueError(f"[X_{a}, X_{a}] must vanish")
                continue
            vec = _clean(vec)
            if any(not 0 <= c < d for c in vec):
                raise ValueError(f"bracket ({a}, {b}) refers to an index >= {d}")
            if a > b:
                a, b = b, a
                vec = {c: -v for c, v in vec.items()}
            if (a, b) in table:
                raise ValueError(f"pair {(a, b)} given twice")
            if vec:
                table[(a, b)] = vec
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "brackets", table)
        object.__setattr__(self, "metadata", dict(self.metadata))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def index(self, name: str) -> int:
        try:
            return self.basis.index(name)
        except ValueError:
            raise KeyError(f"{name!r} is not a basis element of {self.name}") from None

    def basis_bracket(self, a: int, b: int) -> Dict[int, Fraction]:
        if a == b:
            return {}
        if a < b:
            return self.brackets.get((a, b), {})
        return {c: -v for c, v in self.brackets.get((b, a), {}).items()}

    def element(self, coeffs: Mapping[str, Any] | Sequence | None = None, **named) -> AlgebraElement:
        """Build an element from a dense sequence or from basis names.

        >>> L.element(E=1, F=1)         # doctest: +SKIP
        """
        vec = [Fraction(0)] * self.dim
        if coeffs is not None and not isinstance(coeffs, Mapping):
            if len(coeffs) != self.dim:
                raise ValueError(f"expected {self.dim} coefficients, got {len(coeffs)}")
            return AlgebraElement(tuple(coeffs))
        for k, v in {**(coeffs or {}), **named}.items():
            vec[self.index(k)] += as_rational(v)
        return AlgebraElement(tuple(vec))

    def basis_element(self, a: int) -> AlgebraElement:
        vec = [Fraction(0)] * self.dim
        vec[a] = Fraction(1)
        return AlgebraElement(tuple(vec))

    def same_table(self, other: "LieAlgebra") -> bool:
        """Equality of structure constants, ignoring names and metadata."""
        return self.dim == other.dim and self.brackets == other.brackets

    def renamed(self, name: str | None = None, basis: Sequence[str] | None = None,
                metadata: Mapping[str, Any] | None = None) -> "LieAlgebra":
        return LieAlgebra(
            name or self.name,
            tuple(basis) if basis is not None else self.basis,
            self.brackets,
            self.metadata if metadata is None else metadata,
        )

    def __repr__(self):
        return f"LieAlgebra({self.name!r}, dim={self.dim}, nonzero_brackets={len(self.brackets)})"


def bracket(L: LieAlgebra, x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    if x.dim != L.dim or y.dim != L.dim:
        raise ValueError(f"elements of dim {x.dim}, {y.dim} do not belong to {L.name} (dim {L.dim})")
    out = [Fraction(0)] * L.dim
    xs, ys = x.sparse(), y.sparse()
    for a, xa in xs.items():
        for b, yb in ys.items():
            if a == b:
                continue
            for c, v in L.basis_bracket(a, b).items():
                out[c] += xa * yb * v
    return AlgebraElement(tuple(out))


def _bracket_sparse(L: LieAlgebra, vec: Mapping[int, Fraction], b: int) -> Dict[int, Fraction]:
    out: Dict[int, Fraction] = {}
    for a, xa in vec.items():
        for c, v in L.basis_bracket(a, b).items():
            out[c] = out.get(c, 0) + xa * v
    return {c: v for c, v in out.items() if v}


def jacobi_residual(L: LieAlgebra) -> List[Tuple[Tuple[int, int, int], AlgebraElement]]:
    """Triples a<b<c whose cyclic sum [[Xa,Xb],Xc] + [[Xb,Xc],Xa] + [[Xc,Xa],Xb] is nonzero."""
    failures = []
    for a, b, c in itertools.combinations(range(L.dim), 3):
        total: Dict[int, Fraction] = {}
        for (p, q), r in (((a, b), c), ((b, c), a), ((c, a), b)):
            for k, v in _bracket_sparse(L, L.basis_bracket(p, q), r).items():
                total[k] = total.get(k, 0) + v
        if any(total.values()):
            vec = [Fraction(0)] * L.dim
            for k, v in total.items():
                vec[k] = v
            failures.append(((a, b, c), AlgebraElement(tuple(vec))))
    return failures


def is_lie_algebra(L: LieAlgebra) -> bool:
    return not jacobi_residual(L)


def require_jacobi(L: LieAlgebra) -> None:
    failures = jacobi_residual(L)
    if failures:
        raise JacobiError(L.name, failures)


def change_basis(L: LieAlgebra, T: Sequence[Sequence], name: str | None = None,
                 basis: Sequence[str] | None = None) -> LieAlgebra:
    """Rewrite ``L`` in the basis ``Y_i = sum_j T[i][j] X_j``; ``T`` must be invertible."""
    d = L.dim
    T = [[as_rational(v) for v in row] for row in T]
    if len(T) != d or any(len(r) != d for r in T):
        raise ValueError(f"basis change must be {d}x{d}")
    Tinv = linalg.inverse(T)
    rows = [{j: v for j, v in enumerate(r) if v} for r in T]
    table: Brackets = {}
    for i, j in itertools.combinations(range(d), 2):
        old: Dict[int, Fraction] = {}
        for a, ta in rows[i].items():
            for b, tb in rows[j].items():
                for c, v in L.basis_bracket(a, b).items():
                    old[c] = old.get(c, 0) + ta * tb * v
        new: Dict[int, Fraction] = {}
        for c, v in old.items():
            if not v:
                continue
            for k in range(d):
                w = Tinv[c][k]
                if w:
                    new[k] = new.get(k, 0) + v * w
        new = {k: v for k, v in new.items() if v}
        if new:
            table[(i, j)] = new
    return LieAlgebra(name or f"{L.name}'", tuple(basis) if basis else L.basis, table, L.metadata)


def adjoint_matrix(L: LieAlgebra, a: int) -> List[List[Fraction]]:
    """Matrix of ad(X_a); column b holds the coordinates of [X_a, X_b]."""
    M = [[Fraction(0)] * L.dim for _ in range(L.dim)]
    for b in range(L.dim):
        for c, v in L.basis_bracket(a, b).items():
            M[c][b] = v
    return M


def killing_form(L: LieAlgebra) -> List[List[Fraction]]:
    ads = [adjoint_matrix(L, a) for a in range(L.dim)]
    def trace_prod(A, B):
        return sum((A[i][k] * B[k][i] for i in range(L.dim) for k in range(L.dim)), Fraction(0))

    return [[trace_prod(A, B) for B in ads] for A in ads]


def from_named(name: str, basis: Sequence[str], table: Mapping[Tuple[str, str], Mapping[str, Any]],
               metadata: Mapping[str, Any] | None = None) -> LieAlgebra:
    """Convenience constructor from name-keyed brackets."""
    idx = {n: i for i, n in enumerate(basis)}
    brackets = {}
    for (x, y), vec in table.items():
        brackets[(idx[x], idx[y])] = {idx[k]: v for k, v in vec.items()}
    return LieAlgebra(name, tuple(basis), brackets, metadata or {})
