import pytest

from conftest import diamond
from scottdcpo import harness
from scottdcpo.errors import UnknownSuite
from scottdcpo.harness import (
    SUITES,
    VerificationReport,
    check_fact2,
    check_hypotheses,
    check_kappa,
    check_quasicontinuity,
    check_reconstruction,
    check_restriction,
    check_sobriety,
    check_top_extension,
    verify,
    verify_sobriety_suite,
)
from scottdcpo.poset import antichain, chain


def test_uniqueness_n4():
    r = verify("uniqueness", 4)
    assert r.passed and r.failures == []
    assert r.details["posets_at_n"] == 16 and r.details["pairs_at_n"] == 136
    # every poset with at most 4 elements: 1 + 2 + 5 + 16
    assert r.checked == 24 and r.details["pairs"] == 24 * 25 // 2


@pytest.mark.parametrize("suite", [s for s in SUITES if s != "uniqueness"])
def test_every_suite_passes_n4(suite):
    r = verify(suite, 4)
    assert r.status == "pass" and r.failures == [] and r.checked == 24


def test_kappa_n5():
    r = verify("kappa", 5)
    assert r.passed and r.checked == 87


def test_sobriety_suite_sizes():
    assert verify_sobriety_suite(1).passed
    r = verify_sobriety_suite(4)
    assert r.passed and r.checked == 24


def test_check_functions_on_examples():
    for P in (chain(3), antichain(3), diamond()):
        assert check_reconstruction(P) == []
        assert check_kappa(P) == []
        assert check_fact2(P) == []
        assert check_quasicontinuity(P) == []
        assert check_restriction(P) == []
        assert check_top_extension(P) == []
        assert check_sobriety(P) == []
        assert check_hypotheses(P) == []


def test_unknown_suite():
    with pytest.raises(UnknownSuite):
        verify("nonsense", 3)


def test_size_limit_is_explicit():
    r = verify("kappa", 6)
    assert r.status == "size_limit" and not r.passed
    r = verify("kappa", 8, allow_large=True)
    assert r.status == "size_limit"


def test_all_returns_list():
    reports = verify("all", 3)
    assert [r.suite for r in reports] == list(SUITES)
    assert all(r.passed for r in reports)


def test_jobs_do_not_change_reports():
    a = verify("top-extension", 4, jobs=1).to_dict(timing=False)
    b = verify("top-extension", 4, jobs=2).to_dict(timing=False)
    assert a == b
    a = verify("uniqueness", 4, jobs=1).to_dict(timing=False)
    b = verify("uniqueness", 4, jobs=2).to_dict(timing=False)
    assert a == b


def test_failures_are_reported(monkeypatch):
    monkeypatch.setitem(harness.CHECKS, "kappa", lambda P: ["planted"] if P.n == 2 else [])
    r = verify("kappa", 3)
    assert r.status == "fail" and [f for _, f in r.failures] == ["planted", "planted"]
    assert r.failures == sorted(r.failures)


def test_report_dict_order():
    d = VerificationReport("kappa", 3).to_dict()
    assert list(d) == ["suite", "n", "checked", "failures", "elapsed_ms", "status", "details"]
    assert "elapsed_ms" not in VerificationReport("kappa", 3).to_dict(timing=False)
