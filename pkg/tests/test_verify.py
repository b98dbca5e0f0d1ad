import json

import pytest

from dyckstat.verify import Check, Report, verify_suite


def test_sequences_suite():
    r = verify_suite("sequences", 9)
    assert r.passed and len(r.checks) == 3


def test_tables_suite_small():
    r = verify_suite("tables", 4)
    assert r.passed  # the misprinted cell sits in row 5


def test_tables_suite_flags_misprint():
    r = verify_suite("tables", 5)
    assert [c.name for c in r.failures] == ["table 3.3 n=5 k=0"]
    assert "792" in r.failures[0].detail


def test_bijections_suite():
    r = verify_suite("bijections", 3)
    assert r.passed, r.failures[:3]
    names = " ".join(c.name for c in r.checks)
    for key in ("pyramid_lift j=1", "pyramid_lift j=2", "phi ", "phi_prime", "theta", "rho", "eta", "valley_shift"):
        assert key in names


def test_series_suite():
    assert verify_suite("series", 20).passed


def test_all_suite_serialises():
    r = verify_suite("all", 2)
    d = json.loads(json.dumps(r.to_dict()))
    assert list(d)[:5] == ["suite", "max_n", "passed", "total", "failed"]
    assert d["total"] == len(r.checks)
    assert set(d["checks"][0]) == {"name", "passed", "detail", "counterexample"}


def test_bad_suite():
    with pytest.raises(ValueError):
        verify_suite("nope", 3)
    with pytest.raises(ValueError):
        verify_suite("tables", -1)


def test_report_passed():
    r = Report("x", 0, [Check("a", True), Check("b", False, "boom", "ud")])
    assert not r.passed and [c.name for c in r.failures] == ["b"]
