from fractions import Fraction
from pathlib import Path

import numpy as np
import pytest

from algcoh import fixtures, io
from algcoh.algebra import validate_algebra
from algcoh.field import Field

PRES = Path(__file__).resolve().parent.parent / "presentations"

DUAL = """field: 2
name: D
dim: 2
unit: 1 0
mul 0 0: 1 0
mul 0 1: 0 1
mul 1 0: 0 1
mul 1 1: 0 0
"""


@pytest.mark.parametrize("name", fixtures.names())
@pytest.mark.parametrize("field", [2, 3, "Q"])
def test_algebra_round_trip(name, field):
    ext = fixtures.build(name, field)
    for alg in (ext.base, ext.total):
        text = io.format_algebra(alg)
        back = io.parse_algebra(text)
        assert back == alg
        assert io.format_algebra(back) == text


@pytest.mark.parametrize("name", fixtures.names())
@pytest.mark.parametrize("field", [2, 3, "Q"])
def test_bimodule_round_trip(name, field):
    ext = fixtures.build(name, field)
    A, M = ext.base, ext.module
    text = io.format_bimodule(M)
    back = io.parse_bimodule(text, {A.name: A})
    assert np.array_equal(back.left, M.left) and np.array_equal(back.right, M.right)
    assert io.format_bimodule(back) == text


def test_extension_header_is_comment():
    ext = fixtures.build("example_SN", 2)
    text = io.format_extension(ext)
    assert text.startswith("# trivial extension")
    assert io.parse_algebra(text) == ext.total


def test_shipped_presentations_parse():
    paths = sorted(PRES.glob("*.txt"))
    kinds = {p: io.detect_kind(p.read_text()) for p in paths}
    algebras = {}
    for path in (p for p in paths if kinds[p] == "algebra"):
        alg = io.parse_presentation(path)
        assert validate_algebra(alg).ok
        algebras[alg.name] = alg
    assert {"D", "S"} <= set(algebras)
    for path in (p for p in paths if kinds[p] == "bimodule"):
        assert io.parse_presentation(path, algebras).dim == 1


def test_rational_scalars():
    text = DUAL.replace("field: 2", "field: Q").replace("mul 1 1: 0 0", "mul 1 1: 1/2 0")
    alg = io.parse_algebra(text)
    assert alg.mul[1, 1, 0] == Fraction(1, 2)
    assert io.parse_algebra(io.format_algebra(alg)) == alg


def test_field_override():
    alg = io.parse_algebra(DUAL, field=Field(3))
    assert alg.field == Field(3)


def err(text, **kw):
    with pytest.raises(io.ParseError) as info:
        io.parse_algebra(text, source="t.txt", **kw)
    return str(info.value)


def test_unknown_key():
    msg = err(DUAL + "color: red\n")
    assert "unknown key 'color'" in msg and msg.startswith("t.txt:9:")


def test_duplicate_entry():
    msg = err(DUAL + "mul 0 0: 1 0\n")
    assert "duplicate mul entry (0,0) (first on line 5)" in msg


def test_missing_entry():
    msg = err(DUAL.replace("mul 1 1: 0 0\n", ""))
    assert "missing mul entry `mul 1 1:`" in msg


def test_missing_unit():
    assert "missing unit line" in err(DUAL.replace("unit: 1 0\n", ""))


def test_scalar_count():
    msg = err(DUAL.replace("mul 0 1: 0 1", "mul 0 1: 0 1 1"))
    assert "mul 0 1 has 3 scalars, expected 2" in msg


def test_bad_field():
    assert "4 is not prime" in err(DUAL.replace("field: 2", "field: 4"))
    assert "unknown field kind" in err(DUAL.replace("field: 2", "field: R"))


def test_header_order():
    assert "expected `name:` before `dim:`" in err(DUAL.replace("name: D\ndim: 2", "dim: 2\nname: D"))


def test_bad_scalar_and_lowest_terms():
    assert err(DUAL.replace("mul 1 1: 0 0", "mul 1 1: x 0"))
    q = DUAL.replace("field: 2", "field: Q")
    assert "not in lowest terms" in err(q.replace("mul 1 1: 0 0", "mul 1 1: 2/4 0"))


def test_bimodule_errors():
    algs = {"D": io.parse_algebra(DUAL)}
    good = io.format_bimodule(fixtures.build("dualnum_self", 2).module).replace("algebra: A", "algebra: D")
    good = good.replace(good.splitlines()[2], "algebra: D")
    io.parse_bimodule(good, algs)
    with pytest.raises(io.ParseError, match="is not loaded"):
        io.parse_bimodule(good, {})
    lines = good.splitlines()
    truncated = "\n".join(lines[:-1]) + "\n"
    with pytest.raises(io.ParseError, match="block ends after|missing"):
        io.parse_bimodule(truncated, algs)
    with pytest.raises(io.ParseError, match="differs from algebra field"):
        io.parse_bimodule(good.replace("field: 2", "field: 3"), algs)


def test_invalid_algebra_parses_but_fails_validation():
    alg = io.parse_algebra(DUAL.replace("mul 0 1: 0 1", "mul 0 1: 1 1"))
    rep = validate_algebra(alg)
    assert not rep.ok and "fails" in rep.message
