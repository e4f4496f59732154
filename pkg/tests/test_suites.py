import pytest

from sympclif.suites import SUITES, failures, run_suite, to_json_lines


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("nope")


def test_symmetry_suite_deterministic(monkeypatch):
    a = to_json_lines(run_suite("symmetry"))
    monkeypatch.setenv("SYMPCLIF_THREADS", "3")
    b = to_json_lines(run_suite("symmetry"))
    assert a == b


def test_statuses_are_known():
    for r in run_suite("symmetry") + run_suite("commutators", {"n": [1]}):
        assert r.status in ("pass", "fail", "discrepancy", "re-derived")
    assert set(SUITES) == {"commutators", "bases", "pairing", "spectral", "symmetry"}


def test_failure_detection():
    from sympclif.suites import CheckResult

    assert failures([CheckResult("s", "c", "a", "fail")])
    assert not failures([CheckResult("s", "c", "a", "discrepancy")])
