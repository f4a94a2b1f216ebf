"""Acceptance criteria, one test per criterion.

Each test prints a single ``[PASS]``/``[FAIL]`` line (visible with ``-s``
or in the captured output) and then asserts the same condition, including the
wall-clock bound.
"""
import json
import random
import time
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from liecentral.algebra import change_basis, jacobi_residual, LieAlgebra
from liecentral.catalog import (
    abelian,
    by_family,
    hsp,
    inhomogeneous_lorentz,
    inhomogeneous_symplectic,
    lorentz,
    sp,
)
from liecentral.cohomology import (
    central_extension,
    coboundary_of,
    is_central,
    second_cohomology,
    translation_matrix,
)
from liecentral.dsl import AlgebraDocument, load_algebra_text, parse_algebra, print_algebra, to_json_obj
from liecentral.fock import FockConfig, build_w, build_z, heisenberg_check, ww_check, wz_check
from liecentral.linalg import matmul
from liecentral.weyl import derive_sp_constants, normal_order, verify_wz_law, zeta


def verdict(capsys, number, ok, detail, elapsed, bound):
    ok = bool(ok) and elapsed < bound
    with capsys.disabled():
        print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail} ({elapsed:.2f}s < {bound}s)")
    assert ok, detail


def test_criterion_1_abelian(capsys):
    t0 = time.perf_counter()
    dims = {n: second_cohomology(abelian(n).algebra).dim_h2 for n in range(1, 6)}
    ok = all(d == n * (n - 1) // 2 for n, d in dims.items())
    verdict(capsys, 1, ok, f"abelian dim H2 {dims}", time.perf_counter() - t0, 1)


def test_criterion_2_inhomogeneous_lorentz(capsys):
    t0 = time.perf_counter()
    dims = {n: second_cohomology(inhomogeneous_lorentz(1, n).algebra).dim_h2 for n in (2, 3)}
    verdict(capsys, 2, dims == {2: 0, 3: 0}, f"il(1,n) dim H2 {dims}", time.perf_counter() - t0, 5)


def _rep_is_zeta_on_translations(L: LieAlgebra, rep, n: int) -> bool:
    offset = L.dim - 2 * n
    scale = rep.value(offset, offset + n)
    if scale == 0:
        return False
    for (a, b), v in rep.pairs().items():
        if a < offset or b < offset:
            return False
    return all(rep.value(offset + a, offset + b) == scale * zeta(n, a, b)
               for a in range(2 * n) for b in range(2 * n))


def test_criterion_3_inhomogeneous_symplectic(capsys):
    t0 = time.perf_counter()
    found = {}
    for two_n in (2, 4, 6):
        L = inhomogeneous_symplectic(two_n).algebra
        res = second_cohomology(L)
        found[two_n] = (res.dim_h2, res.dim_h2 == 1 and _rep_is_zeta_on_translations(L, res.representatives[0], two_n // 2))
    ok = all(d == 1 and shape for d, shape in found.values())
    verdict(capsys, 3, ok, f"isp dim H2 and zeta-shaped representative {found}", time.perf_counter() - t0, 30)


def test_criterion_4_whitehead(capsys):
    t0 = time.perf_counter()
    dims = {
        "sp(2)": second_cohomology(sp(2).algebra).dim_h2,
        "sp(4)": second_cohomology(sp(4).algebra).dim_h2,
        "lorentz(1,3)": second_cohomology(lorentz(1, 3).algebra).dim_h2,
    }
    verdict(capsys, 4, set(dims.values()) == {0}, f"semisimple dim H2 {dims}", time.perf_counter() - t0, 10)


def test_criterion_5_extension_is_hsp(capsys):
    t0 = time.perf_counter()
    status = {}
    for two_n in (2, 4):
        n = two_n // 2
        L = inhomogeneous_symplectic(two_n).algebra
        (rep,) = second_cohomology(L).representatives
        # normalize so that the cochain is exactly zeta on the Z block
        rep = rep * (1 / rep.value(L.dim - 2 * n, L.dim - n))
        ext = central_extension(L, [rep])
        E = ext.extended
        status[two_n] = (
            ext.ok and jacobi_residual(E) == []
            and all(is_central(E, E.basis_element(i)) for i in ext.central_indices)
            and E.same_table(hsp(two_n).algebra)
        )
    verdict(capsys, 5, all(status.values()), f"extension jacobi, centrality, hsp table {status}",
            time.perf_counter() - t0, 60)


def test_criterion_6_quadratic_realization(capsys):
    t0 = time.perf_counter()
    law = {n: verify_wz_law(n) == [] for n in (1, 2, 3)}
    closes = {}
    for n in (1, 2, 3):
        pairs, brackets = derive_sp_constants(n)
        L = LieAlgebra(f"sp{2 * n}", tuple(f"W{a}_{b}" for a, b in pairs), brackets)
        closes[n] = jacobi_residual(L) == []
    ok = all(law.values()) and all(closes.values())
    verdict(capsys, 6, ok, f"[W,Z] law {law}, derived constants close {closes}", time.perf_counter() - t0, 10)


def test_criterion_7_numeric_heisenberg(capsys):
    t0 = time.perf_counter()
    worst_interior = worst_corner = 0.0
    all_ok = True
    for N in (6, 10, 14):
        for lam in (1.0, 2.0, 1 / 3):
            rep = heisenberg_check(FockConfig(1, N, lam))
            worst_interior = max(worst_interior, rep["residual"])
            worst_corner = max(worst_corner, rep["corner_error"])
            all_ok &= rep["residual"] <= 1e-12 and rep["corner_error"] <= 1e-10
    verdict(capsys, 7, all_ok, f"interior {worst_interior:.1e} <= 1e-12, corner {worst_corner:.1e} <= 1e-10",
            time.perf_counter() - t0, 1)


def test_criterion_8_numeric_sp(capsys):
    t0 = time.perf_counter()
    out = {}
    for modes, N in ((1, 12), (2, 8)):
        c = FockConfig(modes, N, 1.0)
        z = build_z(c)
        w = build_w(c, z)
        out[(modes, N)] = (wz_check(c, 3, z, w)["residual"], ww_check(c, 4, z, w)["residual"])
    ok = all(a <= 1e-10 and b <= 1e-9 for a, b in out.values())
    detail = ", ".join(f"n={m} N={N}: wz {a:.1e} ww {b:.1e}" for (m, N), (a, b) in out.items())
    verdict(capsys, 8, ok, detail, time.perf_counter() - t0, 30)


SMALL = [("heisenberg", 1), ("sp", 1), ("isp", 1), ("hsp", 1), ("abelian", 4), ("lorentz", 2), ("il", 2)]


def _random_invertible(rng: random.Random, d: int):
    def q():
        return Fraction(rng.randint(-3, 3), rng.randint(1, 3))
    lower = [[Fraction(int(i == j)) if j >= i else q() for j in range(d)] for i in range(d)]
    upper = [[(q() or Fraction(1)) if j == i else (q() if j > i else Fraction(0)) for j in range(d)] for i in range(d)]
    return matmul(lower, upper)


def _basis_change_suite(rng):
    for k in range(20):
        family, n = SMALL[k % len(SMALL)]
        L = by_family(family, n).algebra
        if second_cohomology(change_basis(L, _random_invertible(rng, L.dim))).dim_h2 != second_cohomology(L).dim_h2:
            return False
    return True


def _coboundary_shift_suite(rng):
    for family, n in [("heisenberg", 1), ("isp", 1), ("il", 1), ("abelian", 3)] * 3:
        L = by_family(family, n).algebra
        reps = second_cohomology(L).representatives
        fs = [[Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(L.dim)] for _ in reps]
        E0 = central_extension(L, reps).extended
        E1 = central_extension(L, [w + coboundary_of(L, f) for w, f in zip(reps, fs)]).extended
        if not change_basis(E1, translation_matrix(L.dim, fs)).same_table(E0):
            return False
    return True


def _confluence_suite(rng):
    for _ in range(200):
        n = rng.choice((1, 2))
        word = [rng.randrange(2 * n) for _ in range(rng.randint(0, 6))]
        if normal_order(n, word, rng=random.Random(rng.random())) != normal_order(n, word):
            return False
    return True


names = st.lists(st.from_regex(r"[A-Z][a-z0-9]{0,3}", fullmatch=True), min_size=1, max_size=5, unique=True)
rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@st.composite
def documents(draw):
    basis = draw(names)
    brackets = {}
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            vec = {nm: draw(rationals) for nm in draw(st.lists(st.sampled_from(basis), unique=True, max_size=3))}
            vec = {nm: vec[nm] for nm in basis if vec.get(nm)}
            if vec:
                brackets[(basis[i], basis[j])] = vec
    return AlgebraDocument("doc", tuple(basis), brackets)


def _parser_suite():
    failures = []

    @settings(max_examples=100, derandomize=True, database=None)
    @given(documents())
    def roundtrip(doc):
        text = print_algebra(doc)
        if parse_algebra(text) != doc or load_algebra_text(json.dumps(to_json_obj(doc))) != doc:
            failures.append(text)

    roundtrip()
    for family, n in SMALL:
        L = by_family(family, n).algebra
        if not parse_algebra(print_algebra(L)).to_algebra().same_table(L):
            failures.append(L.name)
    return not failures


def test_criterion_9_property_suites(capsys):
    t0 = time.perf_counter()
    rng = random.Random(20260101)
    suites = {
        "basis-change": _basis_change_suite(rng),
        "coboundary-shift": _coboundary_shift_suite(rng),
        "confluence": _confluence_suite(rng),
        "parser-roundtrip": _parser_suite(),
    }
    verdict(capsys, 9, all(suites.values()), f"property suites {suites}", time.perf_counter() - t0, 60)
