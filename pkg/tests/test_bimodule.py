import numpy as np
import pytest

from algcoh import derivations as dv
from algcoh import fixtures
from algcoh.algebra import AlgebraError, ValidationError, dual_numbers, matrix_algebra
from algcoh.bimodule import (
    Bimodule,
    annihilators,
    dual_bimodule,
    example_s_n,
    lift_to_trivext,
    regular_bimodule,
    symmetric_center_action,
    validate_bimodule,
)
from algcoh.field import Field
from algcoh.trivext import trivext

F2, F3 = Field(2), Field(3)


def test_regular_and_example_validate():
    for alg in fixtures.builtin_algebras(3).values():
        assert validate_bimodule(regular_bimodule(alg)).ok
    s, n = example_s_n(F2)
    assert validate_bimodule(n).ok


def test_perturbed_action_fails_with_witness():
    s, n = example_s_n(F2)
    left = n.left.copy()
    left[1] = [[1]]  # E12 acting as identity breaks E12 E12 = 0
    rep = validate_bimodule(Bimodule(s, left, n.right, validate=False))
    assert not rep.ok and rep.message
    with pytest.raises(ValidationError):
        Bimodule(s, left, n.right)


def test_annihilator_examples():
    m2 = matrix_algebra(F2, 2)
    ann = annihilators(regular_bimodule(m2))
    assert ann.left.dim == ann.right.dim == ann.both.dim == 0
    s, n = example_s_n(F2)
    ann = annihilators(n)
    assert ann.both.dim == 1 and ann.both.basis.tolist() == [[0, 1, 0]]
    tri = fixtures.build("tri_fff", 2)
    assert annihilators(tri.module).both.dim == 0


@pytest.mark.parametrize("name", fixtures.names())
def test_annihilators_are_ideals(name):
    ext = fixtures.build(name, 3)
    A, M = ext.base, ext.module
    ann = annihilators(M)
    for space in (ann.left, ann.right, ann.both):
        for x in space.basis:
            for i in range(A.dim):
                assert space.contains(A.product(A.basis(i).coords, x))
                assert space.contains(A.product(x, A.basis(i).coords))


def test_symmetric_center_action():
    assert symmetric_center_action(regular_bimodule(dual_numbers(F3)))
    for name in ("tri_zero", "m2_self", "trunc3_dual"):
        assert symmetric_center_action(dual_bimodule(fixtures.build(name, 2).base))
    # computed, not presumed: central elements of S are scalars here
    s, n = example_s_n(F2)
    assert symmetric_center_action(n) is True


def test_dual_bimodule():
    t = fixtures.tri_fff_algebra(F2)
    d = dual_bimodule(t)
    assert d.dim == t.dim and validate_bimodule(d).ok
    assert dv.bimodule_end_space(t, d).dim == 1


def test_dual_action_formula():
    """(a f b)(x) = f(b x a) checked on all basis functionals."""
    A = matrix_algebra(F3, 2)
    D = dual_bimodule(A)
    n = A.dim
    for i in range(n):
        for j in range(n):
            for k in range(n):
                f = np.zeros(n, dtype=np.int64)
                f[k] = 1
                afb = D.act_right(D.act_left(A.basis(i).coords, f), A.basis(j).coords)
                for x in range(n):
                    bxa = A.product(A.product(A.basis(j).coords, A.basis(x).coords), A.basis(i).coords)
                    assert afb[x] % 3 == int(np.dot(f, bxa.astype(np.int64))) % 3


def test_lift_to_trivext():
    A = fixtures.tri_fff_algebra(F3)
    reg = regular_bimodule(A)
    ext = trivext(A, reg)
    lifted = lift_to_trivext(reg, ext)
    assert lifted.dim == reg.dim and validate_bimodule(lifted).ok
    assert np.array_equal(lifted.left[: A.dim], reg.left)
    assert np.array_equal(lifted.right[: A.dim], reg.right)
    s, n = example_s_n(F2)
    sn = trivext(s, n)
    ln = lift_to_trivext(n, sn)
    both = annihilators(ln).both
    for k in range(s.dim, sn.total.dim):
        e = sn.total.basis(k).coords
        assert both.contains(e)
    with pytest.raises(AlgebraError):
        lift_to_trivext(n, ext)


def test_unit_acts_identically():
    for name in fixtures.names():
        M = fixtures.build(name, 2).module
        one = M.algebra.unit
        eye = np.eye(M.dim, dtype=np.int64)
        assert np.array_equal(M.left_op(one).astype(np.int64), eye)
        assert np.array_equal(M.right_op(one).astype(np.int64), eye)
