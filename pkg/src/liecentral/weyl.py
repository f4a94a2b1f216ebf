"""Exact Weyl algebra over heisenberg(n): polynomials in Z_1..Z_2n and a formal central I.

The defining relation is Z_a Z_b - Z_b Z_a = zeta[a][b] I with the block
symplectic form zeta = [[0, 1_n], [-1_n, 0]]. Polynomials are kept in normal
order (ascending generator index), I commuting with everything.

Generator indices are 0-based in code; names are 1-based (``Z1``).
"""
from __future__ import annotations

import itertools
import random
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

DEFAULT_MAX_DEGREE = 8

# (exponents of Z_1..Z_2n, power of I)
WeylMonomial = Tuple[Tuple[int, ...], int]


def zeta(n: int, a: int, b: int) -> int:
    if b == a + n and a < n:
        return 1
    if a == b + n and b < n:
        return -1
    return 0


def zeta_matrix(n: int) -> List[List[int]]:
    return [[zeta(n, a, b) for b in range(2 * n)] for a in range(2 * n)]


class DegreeError(ValueError):
    pass


class WeylPolynomial:
    """Normal-ordered element of the Weyl algebra with exact coefficients."""

    __slots__ = ("n", "terms", "max_degree")

    def __init__(self, n: int, terms: Mapping[WeylMonomial, object] | None = None,
                 max_degree: int = DEFAULT_MAX_DEGREE):
        self.n = n
        self.max_degree = max_degree
        clean: Dict[WeylMonomial, Fraction] = {}
        for (exps, ip), c in (terms or {}).items():
            if len(exps) != 2 * n:
                raise ValueError(f"monomial {exps} has wrong length for n={n}")
            q = Fraction(c)
            if q:
                key = (tuple(exps), ip)
                clean[key] = clean.get(key, 0) + q
        self.terms = {k: v for k, v in clean.items() if v}
        if self.degree() > max_degree:
            raise DegreeError(f"degree {self.degree()} exceeds cap {max_degree}")

    @classmethod
    def generator(cls, n: int, a: int, **kw) -> "WeylPolynomial":
        exps = [0] * (2 * n)
        exps[a] = 1
        return cls(n, {(tuple(exps), 0): 1}, **kw)

    @classmethod
    def central(cls, n: int, **kw) -> "WeylPolynomial":
        return cls(n, {((0,) * (2 * n), 1): 1}, **kw)

    @classmethod
    def scalar(cls, n: int, c, **kw) -> "WeylPolynomial":
        return cls(n, {((0,) * (2 * n), 0): c}, **kw)

    def degree(self) -> int:
        """Total Z-degree (I does not count)."""
        return max((sum(e) for e, _ in self.terms), default=0)

    def is_zero(self) -> bool:
        return not self.terms

    def _like(self, terms) -> "WeylPolynomial":
        return WeylPolynomial(self.n, terms, self.max_degree)

    def _check(self, other: "WeylPolynomial"):
        if other.n != self.n:
            raise ValueError(f"mixing Weyl algebras n={self.n} and n={other.n}")

    def __add__(self, other):
        if not isinstance(other, WeylPolynomial):
            other = WeylPolynomial.scalar(self.n, other)
        self._check(other)
        terms = dict(self.terms)
        for k, v in other.terms.items():
            terms[k] = terms.get(k, 0) + v
        return self._like(terms)

    __radd__ = __add__

    def __neg__(self):
        return self._like({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, WeylPolynomial):
            q = Fraction(other)
            return self._like({k: q * v for k, v in self.terms.items()})
        self._check(other)
        if self.degree() + other.degree() > min(self.max_degree, other.max_degree):
            raise DegreeError(
                f"product degree {self.degree() + other.degree()} exceeds cap {min(self.max_degree, other.max_degree)}"
            )
        out: Dict[WeylMonomial, Fraction] = {}
        for (e1, i1), c1 in self.terms.items():
            for (e2, i2), c2 in other.terms.items():
                word = _word(e1) + _word(e2)
                for (exps, ip), c in _normal_order_cached(self.n, word).items():
                    key = (exps, ip + i1 + i2)
                    out[key] = out.get(key, 0) + c * c1 * c2
        return self._like(out)

    def __rmul__(self, other):
        return self * other

    def __eq__(self, other):
        if isinstance(other, WeylPolynomial):
            return self.n == other.n and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def divide_central(self) -> "WeylPolynomial":
        """Divide by I; every term must carry at least one power of I."""
        if any(ip == 0 for _, ip in self.terms):
            raise ValueError(f"{self} is not divisible by I")
        return self._like({(e, ip - 1): v for (e, ip), v in self.terms.items()})

    def coefficient(self, exps: Sequence[int], i_power: int = 0) -> Fraction:
        return self.terms.get((tuple(exps), i_power), Fraction(0))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (exps, ip), c in sorted(self.terms.items(), key=lambda kv: (-sum(kv[0][0]), kv[0])):
            factors = []
            if ip:
                factors.append("I" if ip == 1 else f"I^{ip}")
            for a, k in enumerate(exps):
                if k:
                    factors.append(f"Z{a + 1}" if k == 1 else f"Z{a + 1}^{k}")
            mono = "*".join(factors)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def _word(exps: Sequence[int]) -> Tuple[int, ...]:
    return tuple(itertools.chain.from_iterable([a] * k for a, k in enumerate(exps)))


def _exps(n: int, word: Iterable[int]) -> Tuple[int, ...]:
    e = [0] * (2 * n)
    for a in word:
        e[a] += 1
    return tuple(e)


def _normal_order_word(n: int, word: Tuple[int, ...], choose, recurse=None) -> Dict[WeylMonomial, Fraction]:
    # Swap one adjacent descent Z_b Z_a (b > a) -> Z_a Z_b + zeta(b, a) I, recursively.
    if recurse is None:
        def recurse(w):
            return _normal_order_word(n, w, choose)
    descents = [i for i in range(len(word) - 1) if word[i] > word[i + 1]]
    if not descents:
        return {(_exps(n, word), 0): Fraction(1)}
    i = choose(descents)
    b, a = word[i], word[i + 1]
    out = dict(recurse(word[:i] + (a, b) + word[i + 2:]))
    z = zeta(n, b, a)
    if z:
        for (exps, ip), c in recurse(word[:i] + word[i + 2:]).items():
            key = (exps, ip + 1)
            out[key] = out.get(key, 0) + z * c
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def _normal_order_cached(n: int, word: Tuple[int, ...]) -> Dict[WeylMonomial, Fraction]:
    return _normal_order_word(n, word, lambda ds: ds[0], lambda w: _normal_order_cached(n, w))


def normal_order(n: int, word: Sequence[int], rng: random.Random | None = None,
                 max_degree: int = DEFAULT_MAX_DEGREE) -> WeylPolynomial:
    """Normal-order the product ``Z_word[0] Z_word[1] ...``.

    With ``rng`` the descent swapped at each step is chosen at random; the
    result must not depend on it.
    """
    word = tuple(word)
    if any(not 0 <= a < 2 * n for a in word):
        raise ValueError(f"generator index out of range for n={n}")
    if len(word) > max_degree:
        raise DegreeError(f"word of length {len(word)} exceeds cap {max_degree}")
    if rng is None:
        terms = _normal_order_cached(n, word)
    else:
        terms = _normal_order_word(n, word, rng.choice)
    return WeylPolynomial(n, terms, max_degree)


def weyl_commutator(p: WeylPolynomial, q: WeylPolynomial) -> WeylPolynomial:
    return p * q - q * p


def z_generators(n: int) -> List[WeylPolynomial]:
    return [WeylPolynomial.generator(n, a) for a in range(2 * n)]


def w_generator(n: int, a: int, b: int) -> WeylPolynomial:
    """Symmetrized quadratic ``(Z_a Z_b + Z_b Z_a) / 2``."""
    Z = z_generators(n)
    return (Z[a] * Z[b] + Z[b] * Z[a]) * Fraction(1, 2)


def w_generator_contracted(n: int, a: int, b: int) -> WeylPolynomial:
    """The zeta-contracted quadratic ``zeta_ac Z_c Z_b + zeta_bc Z_c Z_a``.

    Kept for comparison only: these elements are linearly dependent modulo I
    (for n = 1, W_11 + W_22 = -2I) and do not satisfy the [W, Z] law.
    """
    Z = z_generators(n)
    out = WeylPolynomial(n)
    for c in range(2 * n):
        out = out + Z[c] * Z[b] * zeta(n, a, c) + Z[c] * Z[a] * zeta(n, b, c)
    return out


def w_index_pairs(n: int) -> List[Tuple[int, int]]:
    return [(a, b) for a in range(2 * n) for b in range(a, 2 * n)]


def wz_expected(n: int, a: int, b: int, k: int) -> Dict[int, int]:
    """Coefficients of ``[W_ab, Z_k] / I = zeta_ak Z_b + zeta_bk Z_a``."""
    out: Dict[int, int] = {}
    for src, tgt in ((a, b), (b, a)):
        z = zeta(n, src, k)
        if z:
            out[tgt] = out.get(tgt, 0) + z
    return {c: v for c, v in out.items() if v}


def ww_expected(n: int, p: Tuple[int, int], q: Tuple[int, int]) -> Dict[Tuple[int, int], int]:
    """Four-term law ``zeta_ak W_be + zeta_ae W_bk + zeta_bk W_ae + zeta_be W_ak`` keyed by sorted W index."""
    a, b = p
    k, e = q
    out: Dict[Tuple[int, int], int] = {}
    for (x, y), (u, v) in (((a, k), (b, e)), ((a, e), (b, k)), ((b, k), (a, e)), ((b, e), (a, k))):
        z = zeta(n, x, y)
        if z:
            key = (min(u, v), max(u, v))
            out[key] = out.get(key, 0) + z
    return {key: v for key, v in out.items() if v}


class OracleError(AssertionError):
    pass


def _as_linear(poly: WeylPolynomial, basis: Sequence[WeylPolynomial], leads: Sequence[WeylMonomial]) -> Dict[int, Fraction]:
    # Each basis element has leading monomial ``leads[i]`` with coefficient 1 and
    # no other basis element contains it.
    coeffs = {}
    rest = poly
    for i, (b, lead) in enumerate(zip(basis, leads)):
        c = poly.terms.get(lead, Fraction(0))
        if c:
            coeffs[i] = c
            rest = rest - b * c
    if not rest.is_zero():
        raise OracleError(f"{poly} is not a linear combination of the basis (remainder {rest})")
    return coeffs


@lru_cache(maxsize=None)
def derive_sp_constants(n: int) -> Tuple[Tuple[Tuple[int, int], ...], Dict[Tuple[int, int], Dict[int, Fraction]]]:
    """Structure constants of sp(2n) read off the quadratic realization.

    Returns ``(w_pairs, brackets)`` where ``w_pairs[i] = (a, b)`` labels
    W_ab (a <= b) and ``brackets[(i, j)]`` (i < j) maps W indices to the
    coefficients of ``[W_i, W_j] / I``.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    pairs = w_index_pairs(n)
    W = [w_generator(n, a, b) for a, b in pairs]
    leads = [(_exps(n, (a, b)), 0) for a, b in pairs]
    brackets: Dict[Tuple[int, int], Dict[int, Fraction]] = {}
    for i, j in itertools.combinations(range(len(W)), 2):
        comm = weyl_commutator(W[i], W[j])
        try:
            reduced = comm.divide_central()
        except ValueError as exc:
            raise OracleError(f"[W{pairs[i]}, W{pairs[j]}] = {comm} has a term without I") from exc
        coeffs = _as_linear(reduced, W, leads)
        if coeffs:
            brackets[(i, j)] = coeffs
    return tuple(pairs), brackets


def verify_wz_law(n: int) -> List[Tuple[Tuple[int, int], int, WeylPolynomial]]:
    """Index combinations where ``[W_ab, Z_k] != I (zeta_ak Z_b + zeta_bk Z_a)``."""
    Z = z_generators(n)
    Ic = WeylPolynomial.central(n)
    bad = []
    for a, b in w_index_pairs(n):
        W = w_generator(n, a, b)
        for k in range(2 * n):
            expected = WeylPolynomial(n)
            for c, v in wz_expected(n, a, b, k).items():
                expected = expected + Ic * Z[c] * v
            got = weyl_commutator(W, Z[k])
            if got != expected:
                bad.append(((a, b), k, got - expected))
    return bad


def verify_ww_law(n: int) -> List[Tuple[Tuple[int, int], Tuple[int, int]]]:
    """Pairs of W generators whose derived bracket differs from the four-term law."""
    pairs, brackets = derive_sp_constants(n)
    index = {p: i for i, p in enumerate(pairs)}
    bad = []
    for i, j in itertools.combinations(range(len(pairs)), 2):
        expected = {index[k]: Fraction(v) for k, v in ww_expected(n, pairs[i], pairs[j]).items()}
        if brackets.get((i, j), {}) != expected:
            bad.append((pairs[i], pairs[j]))
    return bad
