from algcoh.golden import golden_checks, run_golden


def test_all_golden_checks_pass():
    results = run_golden()
    assert len(results) == len(golden_checks())
    failed = [r.line() for r in results if not r.passed]
    assert not failed, failed


def test_golden_lines_are_formatted():
    for r in run_golden():
        assert r.line().startswith("PASS " + r.name)


def test_golden_exceptions_become_failures(monkeypatch):
    from algcoh import golden

    def boom():
        raise RuntimeError("kaput")

    monkeypatch.setattr(golden, "golden_checks", lambda: [golden.GoldenCheck("broken", boom)])
    (res,) = golden.run_golden()
    assert not res.passed and "kaput" in res.line()
