import subprocess
import sys
from pathlib import Path

import pytest

from algcoh import cli, fixtures
from algcoh.fixtures import Fixture

PRES = Path(__file__).resolve().parent.parent / "presentations"


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_fixture_example_sn(capsys):
    code, out, _ = run(capsys, "fixture", "example_SN", "--field", "2")
    assert code == 0
    for needle in ("h¹ = 1", "H¹(S,N) = 0", "E(N) = 0", "triangular representation: none", "result: ok"):
        assert needle in out


@pytest.mark.parametrize("name", fixtures.names())
@pytest.mark.parametrize("field", ["2", "3", "Q"])
def test_every_fixture_reports_ok(capsys, name, field):
    code, out, _ = run(capsys, "fixture", name, "--field", field)
    assert code == 0 and out.rstrip().endswith("result: ok")


def test_machine_format(capsys):
    code, out, _ = run(capsys, "fixture", "example_SN", "--format", "machine")
    assert code == 0
    keys = dict(line.split(": ", 1) for line in out.splitlines() if ": " in line)
    assert keys["h¹"] == "1"
    assert any(k.startswith("verdict.") for k in keys)
    assert all(v in ("pass", "fail") for k, v in keys.items() if k.startswith("verdict."))


def test_cohomology_of_dual_numbers(capsys):
    code, out, _ = run(capsys, "cohomology", str(PRES / "dual_numbers_f2.txt"))
    assert code == 0
    # regular bimodule, so this is the dualnum_self extension
    assert "H¹(D⋉D) = 8" in out
    assert "H¹(D,D) = 2" in out and "h¹ = 4" in out and "E(D) = 2" in out


def test_cohomology_with_bimodule(capsys):
    code, out, _ = run(capsys, "cohomology", str(PRES / "n_over_s_f2.txt"), str(PRES / "s_f2.txt"))
    assert code == 0 and "h¹ = 1" in out


def test_other_subcommands(capsys):
    s, n = str(PRES / "s_f2.txt"), str(PRES / "n_over_s_f2.txt")
    assert run(capsys, "validate", s, n)[0] == 0
    assert run(capsys, "center", s, n)[0] == 0
    assert run(capsys, "derivations", s, n)[0] == 0
    code, out, _ = run(capsys, "triangular", s, n)
    assert code == 0 and "triangular representation: none" in out
    code, out, _ = run(capsys, "list-fixtures")
    assert code == 0 and len(out.splitlines()) == len(fixtures.REGISTRY)


def test_check_paper_deterministic(capsys):
    code, first, _ = run(capsys, "check-paper")
    assert code == 0 and first.rstrip().endswith("golden assertions passed")
    assert "FAIL" not in first
    _, second, _ = run(capsys, "check-paper")
    assert first.encode() == second.encode()


def test_check_paper_detects_corrupted_fixture(capsys, monkeypatch):
    good = fixtures.REGISTRY["example_SN"]
    bad = Fixture("example_SN", good.description, good.families,
                  lambda field: fixtures.build("tri_fff", field))
    monkeypatch.setitem(fixtures.REGISTRY, "example_SN", bad)
    code, out, _ = run(capsys, "check-paper")
    assert code == 1
    assert "FAIL example_SN[F2]: h¹(S⋉N) ≥ 1" in out


def test_invalid_input_exit_codes(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("field: 4\nname: X\ndim: 1\nunit: 1\nmul 0 0: 1\n")
    code, _, err = run(capsys, "validate", str(bad))
    assert code == 2 and "4 is not prime" in err
    code, _, err = run(capsys, "validate", str(tmp_path / "missing.txt"))
    assert code == 2 and "no such file" in err
    assert run(capsys, "fixture", "no_such_fixture")[0] == 2
    assert run(capsys, "fixture", "example_SN", "--field", "6")[0] == 2
    assert run(capsys, "bogus")[0] == 2


def test_invalid_algebra_exit_codes(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    text = (PRES / "dual_numbers_f2.txt").read_text().replace("mul 0 1: 0 1", "mul 0 1: 1 1")
    bad.write_text(text)
    code, out, _ = run(capsys, "validate", str(bad))
    assert code == 1 and "invalid algebra" in out
    assert run(capsys, "cohomology", str(bad))[0] == 2


def test_export_round_trip(capsys, tmp_path):
    out = tmp_path / "sn.txt"
    assert run(capsys, "export", "example_SN", "--out", str(out))[0] == 0
    code, text, _ = run(capsys, "validate", str(out))
    assert code == 0 and "dim 4" in text
    assert run(capsys, "export", str(PRES / "s_f2.txt"), str(PRES / "n_over_s_f2.txt"))[0] == 0


def test_field_override(capsys):
    code, out, _ = run(capsys, "cohomology", str(PRES / "dual_numbers_f2.txt"), "--field", "3")
    assert code == 0 and "H¹(D⋉D) = 4" in out


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "algcoh.cli", "list-fixtures"], capture_output=True, text=True)
    assert res.returncode == 0 and "example_SN" in res.stdout
