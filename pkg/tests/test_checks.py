from regulargraph import checks, spectra
from regulargraph.spectra import GraphParams

TOTAL = "last-minimum identity f_n(lam) = f_n(lambda_{n,n+2})"


def test_quick_suite_passes():
    results = checks.run_checks(quick=True)
    failed = [(r.name, r.detail) for r in results if not r.passed]
    assert not failed
    assert len(results) == len(checks.check_names())


def test_full_suite_passes():
    assert all(r.passed for r in checks.run_checks(quick=False))


def test_grids():
    full, quick = checks.lambda_grid(False), checks.lambda_grid(True)
    assert len(full) == 30 * 51
    assert len(full) >= 9 * len(quick)
    assert all(isinstance(p, GraphParams) for p in quick)
    ws = checks.w_grid(3)
    assert ws[0] == 3 and abs(ws[-1] - 300) < 1e-9


def test_perturbed_last_minimum_is_caught(monkeypatch):
    original = spectra.last_minimum
    monkeypatch.setattr(spectra, "last_minimum", lambda p: original(p) * (1 + 1e-6))
    results = {r.name: r for r in checks.run_checks(quick=True)}
    assert not results[TOTAL].passed


def test_exceptions_become_failures(monkeypatch):
    def boom(p):
        raise RuntimeError("boom")

    monkeypatch.setattr(spectra, "last_minimum", boom)
    results = {r.name: r for r in checks.run_checks(quick=True)}
    assert not results[TOTAL].passed
    assert "boom" in results[TOTAL].detail
