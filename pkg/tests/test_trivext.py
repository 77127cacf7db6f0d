import numpy as np
import pytest

from algcoh import fixtures
from algcoh.algebra import AlgebraError, dual_numbers, enumerate_idempotents, validate_algebra
from algcoh.bimodule import regular_bimodule, zero_bimodule
from algcoh.field import Field
from algcoh.trivext import (
    center_trivext,
    find_algebra_triangular_representation,
    find_triangular_representation,
    find_type_star_idempotent,
    is_type_star,
    trivext,
)

from oracles import Alg, Mod, center_count, log_p

F2, F3 = Field(2), Field(3)


def test_dual_numbers_from_field():
    ext = fixtures.build("dual_numbers", 2)
    assert np.array_equal(ext.total.mul, dual_numbers(F2).mul)
    assert ext.total.unit.tolist() == [1, 0]


@pytest.mark.parametrize("p", [2, 3, 5])
def test_tri_view_matches_triangular_builder(p):
    F = Field(p)
    view = fixtures.build("tri_fff", F).total  # basis (a, b, m)
    tri = fixtures.tri_fff_algebra(F)  # basis (a, m, b)
    perm = [0, 2, 1]
    assert np.array_equal(view.mul, tri.mul[np.ix_(perm, perm, perm)])
    assert np.array_equal(view.unit, tri.unit[perm])


@pytest.mark.parametrize("name", fixtures.names())
@pytest.mark.parametrize("p", [2, 3])
def test_product_rule_and_square_zero(name, p):
    ext = fixtures.build(name, p)
    A, M, T, F = ext.base, ext.module, ext.total, ext.field
    oa, om = Alg(A), Mod(M)
    assert validate_algebra(T).ok
    assert T.dim == A.dim + M.dim
    assert T.unit.tolist() == list(A.unit) + [0] * M.dim
    rng = np.random.default_rng(p)
    for _ in range(10):
        a, b = (rng.integers(0, p, A.dim).tolist() for _ in range(2))
        m, n = (rng.integers(0, p, M.dim).tolist() for _ in range(2))
        got = T.product(a + m, b + n)
        ab = oa.mul(a, b)
        an_mb = [(x + y) % p for x, y in zip(om.lact(a, n), om.ract(m, b))]
        assert [int(x) for x in got] == ab + an_mb
    for i in range(A.dim, T.dim):
        for j in range(A.dim, T.dim):
            assert not T.mul[i, j].any()
    # pi_A is an algebra homomorphism on basis products
    for i in range(T.dim):
        for j in range(T.dim):
            lhs = ext.pi_a(T.mul[i, j])
            rhs = A.product(ext.pi_a(T.basis(i).coords), ext.pi_a(T.basis(j).coords))
            assert np.array_equal(lhs, rhs)


@pytest.mark.parametrize("name", fixtures.names())
@pytest.mark.parametrize("p", [2, 3, None])
def test_center_formula(name, p):
    ext = fixtures.build(name, p if p else "Q")
    cc = center_trivext(ext)
    assert cc.agree and cc.product_decomposition
    if p and p ** ext.total.dim <= 4096:
        assert cc.direct.dim == log_p(center_count(Alg(ext.total)), p)


def test_center_examples():
    cc = center_trivext(fixtures.build("dualnum_self", 3))
    assert cc.direct.dim == 4
    assert center_trivext(fixtures.build("tri_fff", 2)).direct.dim == 1


def test_triangular_examples():
    res = find_triangular_representation(fixtures.build("tri_fff", 2))
    assert res.status == "found" and res.idempotent.coords.tolist() == [1, 0]
    assert res.blocks["fTe"] == 0
    assert find_triangular_representation(fixtures.build("example_SN", 2)).status == "none"
    assert find_triangular_representation(fixtures.build("dualnum_self", 2)).status == "none"


def test_triangular_undecided_when_capped():
    res = find_triangular_representation(fixtures.build("m2_self", 3), cap=10)
    assert res.status == "undecided"
    res = find_triangular_representation(fixtures.build("tri_fff", "Q"))
    assert res.status == "undecided"
    cands = list(fixtures.small_candidates(fixtures.build("tri_fff", "Q").base))
    res = find_triangular_representation(fixtures.build("tri_fff", "Q"), candidates=cands)
    assert res.status == "found"


@pytest.mark.parametrize("name", fixtures.names())
def test_extension_representation_descends_to_base(name):
    ext = fixtures.build(name, 2)
    if find_triangular_representation(ext).status == "found":
        assert find_algebra_triangular_representation(ext.base).status == "found"


def test_type_star_examples():
    sn = fixtures.build("example_SN", 2)
    rep = is_type_star(sn, sn.base.basis(2))
    assert rep.holds and rep.equivalences_agree
    tri = fixtures.build("tri_fff", 2)
    assert is_type_star(tri, [1, 0]).holds
    pr = fixtures.build("prod_regular", 2)
    rep = is_type_star(pr, [1, 0])
    assert not rep.holds and not rep.emf_is_m
    with pytest.raises(AlgebraError):
        is_type_star(tri, [1, 1])


@pytest.mark.parametrize("name", fixtures.names())
@pytest.mark.parametrize("p", [2, 3])
def test_type_star_equivalences(name, p):
    ext = fixtures.build(name, p)
    for e in enumerate_idempotents(ext.base):
        if not e.is_trivial:
            assert is_type_star(ext, e).equivalences_agree


@pytest.mark.parametrize("name", fixtures.names(fixtures.TYPE_STAR))
def test_type_star_family_members(name):
    assert find_type_star_idempotent(fixtures.build(name, 3)) is not None


def test_zero_module_extension_is_base():
    A = fixtures.tri_fff_algebra(F3)
    ext = trivext(A, zero_bimodule(A))
    assert np.array_equal(ext.total.mul, A.mul)
    ext2 = trivext(A, regular_bimodule(A))
    assert ext2.total.dim == 6
