"""Constructors for the algebra families: abelian, heisenberg, sp, lorentz, their
inhomogeneous versions, and hsp = sp(2n) semidirect heisenberg(n).

Each constructor returns a :class:`CatalogEntry` carrying declared metadata:
semisimplicity, the expected dim H^2 and the fundamental group of the
connected group, each with a short citation string. pi_1 values are recorded,
never computed.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Any, Callable, Dict, Tuple

from .algebra import Brackets, LieAlgebra
from .weyl import derive_sp_constants, wz_expected

DECLARED = "declared"
ENGINE = "derived: value computed by second_cohomology and frozen"


@dataclass(frozen=True)
class Declared:
    semisimple: bool
    dim_h2: int
    dim_h2_source: str
    pi1: str
    pi1_source: str
    notes: str = ""

    def as_dict(self) -> Dict[str, Any]:
        return {
            "semisimple": self.semisimple,
            "dim_h2": self.dim_h2,
            "dim_h2_source": self.dim_h2_source,
            "pi1": self.pi1,
            "pi1_source": self.pi1_source,
            **({"notes": self.notes} if self.notes else {}),
        }


@dataclass(frozen=True)
class CatalogEntry:
    family: str
    params: Tuple[int, ...]
    algebra: LieAlgebra
    declared: Declared

    def __repr__(self):
        return f"CatalogEntry({self.family}{self.params}, dim={self.algebra.dim})"


def _entry(family, params, name, basis, brackets, declared) -> CatalogEntry:
    L = LieAlgebra(name, tuple(basis), brackets, {"family": family, "params": list(params), **declared.as_dict()})
    return CatalogEntry(family, tuple(params), L, declared)


def _positive(n: int, what: str):
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"{what} must be a positive integer, got {n!r}")


def _half(two_n: int, family: str) -> int:
    if not isinstance(two_n, int) or two_n < 2 or two_n % 2:
        raise ValueError(f"{family} needs an even dimension >= 2, got {two_n!r}")
    return two_n // 2


def abelian(n: int) -> CatalogEntry:
    _positive(n, "abelian dimension")
    declared = Declared(False, n * (n - 1) // 2, f"{DECLARED}: H^2(A(n)) = A(n(n-1)/2)", "e", f"{DECLARED}: pi_1(A(n)) = e")
    return _entry("abelian", (n,), f"a{n}", [f"A{i}" for i in range(1, n + 1)], {}, declared)


def _heisenberg_brackets(n: int, offset: int) -> Brackets:
    # Z_a at offset + a, I right after the Z block
    central = offset + 2 * n
    return {(offset + a, offset + a + n): {central: 1} for a in range(n)}


def heisenberg(n: int) -> CatalogEntry:
    _positive(n, "heisenberg n")
    h2 = 2 if n == 1 else comb(2 * n, 2) - 1
    declared = Declared(False, h2, ENGINE, "e", "heisenberg group is simply connected")
    basis = [f"Z{a}" for a in range(1, 2 * n + 1)] + ["I"]
    return _entry("heisenberg", (n,), f"h{n}", basis, _heisenberg_brackets(n, 0), declared)


def _w_name(a: int, b: int) -> str:
    return f"W{a + 1}_{b + 1}"


def _sp_part(n: int) -> Tuple[list, Brackets]:
    pairs, brackets = derive_sp_constants(n)
    return [_w_name(a, b) for a, b in pairs], {k: dict(v) for k, v in brackets.items()}


def sp(two_n: int) -> CatalogEntry:
    """sp(2n) over the basis W_ab (a <= b), constants from the Weyl-algebra oracle."""
    n = _half(two_n, "sp")
    basis, brackets = _sp_part(n)
    declared = Declared(True, 0, f"{DECLARED}: Whitehead's lemma", "Z", f"{DECLARED}: pi_1(Sp(2n)) = Z")
    return _entry("sp", (two_n,), f"sp{two_n}", basis, brackets, declared)


def _translation_action(n: int, offset: int) -> Brackets:
    # [W_ab, Z_k] = zeta_ak Z_b + zeta_bk Z_a
    pairs, _ = derive_sp_constants(n)
    out: Brackets = {}
    for i, (a, b) in enumerate(pairs):
        for k in range(2 * n):
            vec = {offset + c: Fraction(v) for c, v in wz_expected(n, a, b, k).items()}
            if vec:
                out[(i, offset + k)] = vec
    return out


def inhomogeneous_symplectic(two_n: int) -> CatalogEntry:
    n = _half(two_n, "inhomogeneous_symplectic")
    wbasis, brackets = _sp_part(n)
    offset = len(wbasis)
    brackets.update(_translation_action(n, offset))
    basis = wbasis + [f"Z{a}" for a in range(1, 2 * n + 1)]
    declared = Declared(False, 1, f"{DECLARED}: H^2(ISp(2n)) = A(1)", "Z", f"{DECLARED}: pi_1(ISp(2n)) = Z")
    return _entry("inhomogeneous_symplectic", (two_n,), f"isp{two_n}", basis, brackets, declared)


def hsp(two_n: int) -> CatalogEntry:
    """sp(2n) acting on heisenberg(n): isp brackets plus [Z_a, Z_b] = zeta_ab I."""
    n = _half(two_n, "hsp")
    wbasis, brackets = _sp_part(n)
    offset = len(wbasis)
    brackets.update(_translation_action(n, offset))
    brackets.update(_heisenberg_brackets(n, offset))
    basis = wbasis + [f"Z{a}" for a in range(1, 2 * n + 1)] + ["I"]
    declared = Declared(False, 0, ENGINE, "Z", "pi_1 factor Z comes from Sp(2n)")
    return _entry("hsp", (two_n,), f"hsp{two_n}", basis, brackets, declared)


def _eta(mu: int, nu: int) -> int:
    if mu != nu:
        return 0
    return 1 if mu == 0 else -1


def _lorentz_part(n: int) -> Tuple[list, Brackets, Dict[Tuple[int, int], int]]:
    pairs = list(itertools.combinations(range(n + 1), 2))
    index = {p: i for i, p in enumerate(pairs)}

    def m(mu, nu):
        # M_{mu nu} as (index, sign); M_{mu mu} = 0
        if mu == nu:
            return None
        return (index[(mu, nu)], 1) if mu < nu else (index[(nu, mu)], -1)

    brackets: Brackets = {}
    for i, j in itertools.combinations(range(len(pairs)), 2):
        (mu, nu), (rho, sig) = pairs[i], pairs[j]
        vec: Dict[int, int] = {}
        for coef, (x, y) in (
            (_eta(nu, rho), (mu, sig)),
            (-_eta(mu, rho), (nu, sig)),
            (-_eta(nu, sig), (mu, rho)),
            (_eta(mu, sig), (nu, rho)),
        ):
            t = m(x, y)
            if coef and t:
                vec[t[0]] = vec.get(t[0], 0) + coef * t[1]
        vec = {k: v for k, v in vec.items() if v}
        if vec:
            brackets[(i, j)] = vec
    names = [f"M{mu}{nu}" if n < 10 else f"M{mu}_{nu}" for mu, nu in pairs]
    return names, brackets, index


def _lorentz_pi1(n: int) -> str:
    return {1: "e", 2: "Z"}.get(n, "Z2")


def lorentz(one: int, n: int) -> CatalogEntry:
    """so(1, n) with metric diag(1, -1, ..., -1)."""
    if one != 1:
        raise ValueError("only signature (1, n) is supported")
    _positive(n, "lorentz n")
    names, brackets, _ = _lorentz_part(n)
    declared = Declared(
        n >= 2, 0, f"{DECLARED}: Whitehead's lemma" if n >= 2 else "so(1,1) is one-dimensional",
        _lorentz_pi1(n), f"{DECLARED}: pi_1(L(1,n)) = Z2 (n >= 3); Z for n = 2, e for n = 1",
    )
    return _entry("lorentz", (1, n), f"so1_{n}", names, brackets, declared)


def inhomogeneous_lorentz(one: int, n: int) -> CatalogEntry:
    if one != 1:
        raise ValueError("only signature (1, n) is supported")
    _positive(n, "inhomogeneous_lorentz n")
    names, brackets, index = _lorentz_part(n)
    offset = len(names)
    # [M_{mu nu}, P_rho] = eta_{nu rho} P_mu - eta_{mu rho} P_nu
    for (mu, nu), i in index.items():
        for rho in range(n + 1):
            vec = {}
            if _eta(nu, rho):
                vec[offset + mu] = _eta(nu, rho)
            if _eta(mu, rho):
                vec[offset + nu] = vec.get(offset + nu, 0) - _eta(mu, rho)
            if vec:
                brackets[(i, offset + rho)] = vec
    basis = names + [f"P{mu}" for mu in range(n + 1)]
    if n >= 2:
        declared = Declared(False, 0, f"{DECLARED}: H^2(IL(1,n)) = e", _lorentz_pi1(n),
                            f"{DECLARED}: pi_1(IL(1,n)) = Z2 (n >= 3)")
    else:
        declared = Declared(False, 1, ENGINE, "e", "SO+(1,1) is contractible",
                            notes="the trivial-H^2 statement does not extend to n = 1")
    return _entry("inhomogeneous_lorentz", (1, n), f"iso1_{n}", basis, brackets, declared)


FAMILIES: Dict[str, Callable[..., CatalogEntry]] = {
    "abelian": abelian,
    "heisenberg": heisenberg,
    "sp": sp,
    "lorentz": lorentz,
    "inhomogeneous_lorentz": inhomogeneous_lorentz,
    "inhomogeneous_symplectic": inhomogeneous_symplectic,
    "hsp": hsp,
}

ALIASES = {
    "a": "abelian",
    "h": "heisenberg",
    "heis": "heisenberg",
    "so": "lorentz",
    "il": "inhomogeneous_lorentz",
    "poincare": "inhomogeneous_lorentz",
    "isp": "inhomogeneous_symplectic",
}


def by_family(family: str, n: int) -> CatalogEntry:
    """Uniform lookup where ``n`` is the family's rank parameter.

    Symplectic families take n and build the 2n-dimensional version; Lorentz
    families build signature (1, n).
    """
    family = ALIASES.get(family, family)
    if family not in FAMILIES:
        raise KeyError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}")
    if family in ("sp", "inhomogeneous_symplectic", "hsp"):
        _positive(n, f"{family} n")
        return FAMILIES[family](2 * n)
    if family in ("lorentz", "inhomogeneous_lorentz"):
        return FAMILIES[family](1, n)
    return FAMILIES[family](n)
