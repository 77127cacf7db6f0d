import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from algcoh import fixtures
from algcoh.algebra import (
    Algebra,
    AlgebraError,
    EnumerationTooLarge,
    build_standard,
    center,
    commutator,
    direct_product,
    dual_numbers,
    enumerate_idempotents,
    ground_field,
    matrix_algebra,
    validate_algebra,
)
from algcoh.field import Field

from oracles import Alg, center_count, idempotents, log_p

F2, F3 = Field(2), Field(3)


def tri(field):
    return fixtures.tri_fff_algebra(field)


def test_dual_numbers_validate():
    assert validate_algebra(dual_numbers(F2)).ok


def test_wrong_unit_reports_witness():
    d = dual_numbers(F2)
    bad = Algebra(F2, d.mul, [0, 1], validate=False)
    rep = validate_algebra(bad)
    assert not rep.ok and "(0, 1)·e0 ≠ e0" in rep.message


def test_nonassociative_table_reports_triple():
    mul = F2.zeros((3, 3, 3))
    for i in range(3):
        mul[0, i, i] = mul[i, 0, i] = 1
    mul[1, 1] = [0, 0, 1]
    mul[1, 2] = [0, 1, 0]  # e1 (e1 e1) = e1 e2 = e1 while (e1 e1) e1 = e2 e1 = 0
    rep = validate_algebra(Algebra(F2, mul, [1, 0, 0], validate=False))
    assert not rep.ok and rep.witness == (1, 1, 1)


def test_constructor_validates():
    mul = F2.zeros((1, 1, 1))
    with pytest.raises(AlgebraError):
        Algebra(F2, mul, [1])


def test_commutator_examples():
    T = tri(F2)
    e11, e12 = T.basis(0), T.basis(1)
    assert commutator(e11, e12) == e12
    a = T.element([1, 1, 0])
    assert commutator(a, a).is_zero
    assert T.one * a == a


def test_center_examples():
    assert center(dual_numbers(F3)).dim == 2
    assert center(tri(F2)).dim == 1
    assert center(matrix_algebra(F2, 2)).dim == 1
    assert center(tri(F3)).dim == 1


@pytest.mark.parametrize("name", list(fixtures.builtin_algebras(2)))
@pytest.mark.parametrize("p", [2, 3])
def test_center_and_idempotents_match_brute_force(name, p):
    alg = fixtures.builtin_algebras(p)[name]
    oracle = Alg(alg)
    assert center(alg).dim == log_p(center_count(oracle), p)
    found = [tuple(int(x) for x in e.coords) for e in enumerate_idempotents(alg)]
    assert found == [tuple(v) for v in idempotents(oracle)]


def test_idempotent_examples():
    assert [e.coords.tolist() for e in enumerate_idempotents(dual_numbers(F2))] == [[0, 0], [1, 0]]
    k = ground_field(F2)
    assert len(enumerate_idempotents(direct_product(k, k))) == 4
    ids = enumerate_idempotents(tri(F2))
    assert len(ids) == 6
    coords = {tuple(int(x) for x in e.coords) for e in ids}
    assert coords == {(0, 0, 0), (1, 0, 1), (1, 0, 0), (1, 1, 0), (0, 0, 1), (0, 1, 1)}


def test_idempotent_cap_and_rationals():
    with pytest.raises(EnumerationTooLarge):
        enumerate_idempotents(matrix_algebra(F3, 2), cap=80)
    Q = Field(None)
    with pytest.raises(AlgebraError, match="candidate"):
        enumerate_idempotents(dual_numbers(Q))
    m2 = matrix_algebra(Q, 2)
    got = enumerate_idempotents(m2, candidates=[[1, 0, 0, 0], [1, 1, 0, 0], [1, 1, 1, 1]])
    assert [e.coords.tolist() for e in got] == [[1, 0, 0, 0], [1, 1, 0, 0]]


def test_build_standard():
    m2 = build_standard("matrix_algebra", F2, 2)
    assert m2.dim == 4 and m2.unit.tolist() == [1, 0, 0, 1] and validate_algebra(m2).ok
    k = ground_field(F2)
    prod = build_standard("direct_product", F2, k, k)
    assert prod.dim == 2 and prod.product([1, 1], [0, 1]).tolist() == [0, 1]
    t = tri(F3)
    assert t.dim == 3 and center(t).dim == 1
    with pytest.raises(AlgebraError):
        build_standard("octonions", F2)


@pytest.mark.parametrize("name", fixtures.names())
def test_center_is_subalgebra(name):
    alg = fixtures.build(name, 3).total
    Z = alg.center
    assert Z.contains(alg.unit)
    for u in Z.basis:
        for v in Z.basis:
            assert Z.contains(alg.product(u, v))


@given(st.sampled_from(list(fixtures.builtin_algebras(2))), st.sampled_from(list(fixtures.builtin_algebras(2))))
@settings(max_examples=20, deadline=None)
def test_direct_product_center_dims(a, b):
    A, B = fixtures.builtin_algebras(3)[a], fixtures.builtin_algebras(3)[b]
    assert center(direct_product(A, B)).dim == center(A).dim + center(B).dim


def test_element_arithmetic():
    T = tri(F3)
    x, y = T.element([1, 2, 0]), T.element([0, 1, 2])
    assert (x + y) - y == x
    assert (-x) + x == T.zero
    assert (x * y).coords.tolist() == T.product([1, 2, 0], [0, 1, 2]).tolist()
    assert np.array_equal((2 * x).coords, F3.reduce(np.array([2, 4, 0])))
