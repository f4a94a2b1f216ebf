import pytest

from liecentral.catalog import (
    abelian,
    by_family,
    heisenberg,
    hsp,
    inhomogeneous_lorentz,
    inhomogeneous_symplectic,
    lorentz,
    sp,
)
from liecentral.cohomology import second_cohomology
from liecentral.weyl import zeta


@pytest.mark.parametrize("n,h2", [(1, 0), (3, 3), (4, 6)])
def test_abelian_declared(n, h2):
    e = abelian(n)
    assert e.algebra.dim == n and e.declared.dim_h2 == h2


def test_heisenberg_shapes():
    h1 = heisenberg(1).algebra
    assert h1.brackets == {(0, 1): {2: 1}}
    h2 = heisenberg(2).algebra
    assert h2.dim == 5
    assert h2.basis_bracket(0, 2) == {4: 1} and h2.basis_bracket(1, 3) == {4: 1}
    assert h2.basis_bracket(0, 1) == {}
    assert heisenberg(4).algebra.dim == 9


@pytest.mark.parametrize("two_n,dim", [(2, 3), (4, 10), (6, 21)])
def test_sp_dims(two_n, dim):
    assert sp(two_n).algebra.dim == dim
    assert sp(two_n).declared.semisimple


def test_dims_of_inhomogeneous_families():
    assert lorentz(1, 3).algebra.dim == 6
    assert inhomogeneous_lorentz(1, 3).algebra.dim == 10
    assert inhomogeneous_symplectic(2).algebra.dim == 5
    assert hsp(2).algebra.dim == 6


def test_declared_metadata():
    assert inhomogeneous_lorentz(1, 3).declared.pi1 == "Z2"
    assert inhomogeneous_lorentz(1, 3).declared.dim_h2 == 0
    assert inhomogeneous_symplectic(2).declared.pi1 == "Z"
    assert inhomogeneous_symplectic(2).declared.dim_h2 == 1


@pytest.mark.parametrize("bad", [
    lambda: abelian(0), lambda: heisenberg(0), lambda: sp(3), lambda: inhomogeneous_symplectic(5),
    lambda: hsp(1), lambda: lorentz(1, 0), lambda: lorentz(2, 3),
])
def test_bad_parameters(bad):
    with pytest.raises(ValueError):
        bad()


GOLDENS = (
    [("abelian", n, n * (n - 1) // 2) for n in range(1, 6)]
    + [("heisenberg", 1, 2), ("sp", 1, 0), ("sp", 2, 0), ("lorentz", 3, 0),
       ("il", 2, 0), ("il", 3, 0), ("isp", 1, 1), ("isp", 2, 1), ("isp", 3, 1), ("hsp", 1, 0)]
)


@pytest.mark.parametrize("family,n,h2", GOLDENS)
def test_goldens(family, n, h2):
    e = by_family(family, n)
    assert second_cohomology(e.algebra).dim_h2 == h2 == e.declared.dim_h2


@pytest.mark.parametrize("family,n", [("heisenberg", 2), ("heisenberg", 3), ("il", 1), ("hsp", 2), ("lorentz", 1)])
def test_declared_matches_engine_elsewhere(family, n):
    e = by_family(family, n)
    assert second_cohomology(e.algebra).dim_h2 == e.declared.dim_h2


@pytest.mark.parametrize("n", [1, 2, 3])
def test_isp_representative_is_symplectic_form(n):
    L = inhomogeneous_symplectic(2 * n).algebra
    (rep,) = second_cohomology(L).representatives
    nw = n * (2 * n + 1)
    for (a, b), v in rep.pairs().items():
        assert a >= nw and b >= nw, "support must be on the translation block"
    for a in range(2 * n):
        for b in range(2 * n):
            assert rep.value(nw + a, nw + b) == zeta(n, a, b)


def test_by_family_aliases():
    assert by_family("isp", 2).algebra.name == "isp4"
    with pytest.raises(KeyError):
        by_family("e8", 1)
