import numpy as np
import pytest

from algcoh import cohomology as ch
from algcoh import derivations as dv
from algcoh import fixtures
from algcoh.trivext import find_triangular_representation, is_type_star

from oracles import Alg, derivation_count, inner_maps, log_p, regular

ALL = fixtures.names()
FIELDS = [2, 3, "Q"]


@pytest.fixture(scope="module")
def spaces():
    cache = {}

    def get(name, field):
        key = (name, field)
        if key not in cache:
            cache[key] = ch.ExtensionSpaces(fixtures.build(name, field))
        return cache[key]

    return get


@pytest.mark.parametrize("name", ["dual_numbers", "tri_fff", "tri_zero"])
@pytest.mark.parametrize("p", [2, 3])
def test_total_h1_matches_enumeration(name, p):
    ext = fixtures.build(name, p)
    T = Alg(ext.total)
    rep = ch.full_report(ext)
    der = log_p(derivation_count(T, regular(T)), p)
    inn = log_p(len(inner_maps(T, regular(T))), p)
    assert rep.dims["Der(A⋉M)"] == der
    assert rep.dims["H¹(A⋉M)"] == der - inn


@pytest.mark.parametrize("name", ALL)
@pytest.mark.parametrize("field", FIELDS)
def test_decomposition_identities(spaces, name, field):
    rep = ch.full_report(spaces(name, field).ext, spaces(name, field))
    assert rep.ok, rep.verdicts


@pytest.mark.parametrize("name", ALL)
@pytest.mark.parametrize("field", FIELDS)
def test_exact_sequence(spaces, name, field):
    sp = spaces(name, field)
    seq = ch.exact_sequence_check(sp.ext, sp)
    assert seq.ok, seq
    assert seq.dim_image_phi == sp.end.dim - sp.innbi.dim


@pytest.mark.parametrize("name", ALL)
@pytest.mark.parametrize("field", FIELDS)
def test_all_inner_criterion(spaces, name, field):
    assert ch.all_inner_report(spaces(name, field).ext, spaces(name, field)).consistent


@pytest.mark.parametrize("name", ALL)
@pytest.mark.parametrize("field", [2, 3])
def test_restricted_variant(spaces, name, field):
    sp = spaces(name, field)
    rep = ch.h1_restricted_variant_check(sp.ext, sp)
    assert rep.ok
    assert rep.hypothesis_met == (sp.annihilator_meet.dim == 0)
    if rep.hypothesis_met:
        assert rep.h1_a_small == sp.end.dim - sp.innbi.dim


def test_worked_dimensions():
    rep = ch.full_report(fixtures.build("dual_numbers", 2))
    assert rep.dims["H¹(A⋉M)"] == 2
    assert (rep.dims["H¹(A,M)"], rep.dims["h¹"], rep.dims["E(M)"]) == (0, 1, 1)
    rep = ch.full_report(fixtures.build("dual_numbers", 3))
    assert rep.dims["H¹(A⋉M)"] == 1 and rep.dims["E(M)"] == 0
    for p in (2, 3, 5):
        assert ch.full_report(fixtures.build("tri_fff", p)).dims["H¹(A⋉M)"] == 0


@pytest.mark.parametrize("field", [2, 3, "Q"])
def test_counterexample_battery(field):
    rep = ch.full_report(fixtures.build("example_SN", field))
    d = rep.dims
    assert d["H¹(A)"] == 0 and d["E(M)"] == 0 and d["H¹(A,M)"] == 0
    assert d["h¹_A(M)"] == 0 and d["h¹"] == 1 and d["l.Ann∩r.Ann"] == 1


def test_triangularizing_c_on_corner_fixtures():
    for name in ("tri_fff", "tri_ff2f"):
        for p in (2, 3, 5):
            ext = fixtures.build(name, p)
            res = ch.find_triangularizing_c(ext)
            assert res.hypothesis_met and res.found
            assert res.idempotent_ok and res.representation_ok
            e = ext.base.element(res.idempotent)
            assert is_type_star(ext, e).holds


def test_triangularizing_c_without_hypothesis():
    ext = fixtures.build("example_SN", 2)
    res = ch.find_triangularizing_c(ext)
    assert not res.hypothesis_met
    assert not res.representation_ok
    assert find_triangular_representation(ext).status == "none"


def test_triangularizing_c_absent():
    res = ch.find_triangularizing_c(fixtures.build("m2_self", 2))
    assert not res.found and "inconsistent" in res.message


@pytest.mark.parametrize("name", ALL)
@pytest.mark.parametrize("p", [2, 3])
def test_c_solution_implies_representation(name, p):
    ext = fixtures.build(name, p)
    res = ch.find_triangularizing_c(ext)
    if res.hypothesis_met and res.found:
        assert res.representation_ok
        assert find_triangular_representation(ext).found


def test_central_multiplier():
    rep = ch.lemma_central_multiplier_check(fixtures.build("tri_fff", 3))
    assert rep.applicable and rep.ok and rep.c is not None
    M = fixtures.build("tri_fff", 3).module
    F = M.field
    assert np.array_equal(dv.module_commutator(M, rep.c), F.eye(M.dim))
    skipped = ch.lemma_central_multiplier_check(fixtures.build("m2_self", 2))
    assert not skipped.applicable and skipped.ok


@pytest.mark.parametrize("name", ALL)
@pytest.mark.parametrize("p", [2, 3])
def test_central_multiplier_registry(name, p):
    assert ch.lemma_central_multiplier_check(fixtures.build(name, p)).ok


def test_inner_converse_scan():
    for name, excess in (("example_SN", 1), ("iterated_SN", 2)):
        out = ch.inner_converse_scan(fixtures.build(name, 3))
        assert out["excess"] == excess
        assert not out["annihilators_trivial"] and not out["contradiction"]
        ext = fixtures.build(name, 3)
        D = out["example"]
        assert dv.derivation_space(ext.total).contains(D)
        assert not dv.inner_derivation_space(ext.total).contains(D)


@pytest.mark.parametrize("name", ALL)
def test_no_converse_contradiction(name):
    assert not ch.inner_converse_scan(fixtures.build(name, 2))["contradiction"]


@pytest.mark.parametrize("name", ALL)
def test_question_scan(name):
    out = ch.triangularization_question_scan(fixtures.build(name, 2))
    assert out["triangular"] in ("found", "none")
    assert not out["finding"]


def test_regular_extension_of_matrix_algebra():
    ext = fixtures.build("m2_self", 2)
    sp = ch.ExtensionSpaces(ext)
    assert sp.e.dim == 1 and sp.innder_a.dim == sp.der_a.dim
    assert ch.full_report(ext, sp).dims["H¹(A⋉M)"] == 2
