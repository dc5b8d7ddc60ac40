import pytest

from sobrify.errors import UnknownSuite
from sobrify.generated import Window, h_le
from sobrify.report import CONCLUSION, build_report
from sobrify.suites import h_order_certificate, run_suite

SMALL = Window(2, 2, 2)


@pytest.mark.parametrize("suite", ["h-order", "s-order", "tree", "symbolic", "sobrification"])
def test_window_suites_pass(suite):
    report = run_suite(suite, SMALL)
    assert report.passed, report.to_text()


def test_finite_core_small_sample():
    report = run_suite("finite-core", seed=7, posets=30, pairs=20)
    assert report.passed, report.to_text()
    assert any("isomorphic" in c.name for cert in report.certificates for c in cert.checks)


def test_report_text_records_window_and_seed():
    text = run_suite("tree", SMALL, seed=5).to_text()
    assert "window: 2,2,2" in text and "seed: 5" in text
    assert text.rstrip().endswith("status: PASS")


def test_unknown_suite():
    with pytest.raises(UnknownSuite):
        run_suite("nope")


def test_broken_order_is_caught():
    def broken(a, b):
        return h_le(a, b) or (a.s == b.s == () and a.m < b.m)

    cert = h_order_certificate(SMALL, broken)
    assert not cert.passed
    assert all(c.detail for c in cert.failures())


def test_report_small_window():
    text, ok = build_report(SMALL)
    assert ok
    assert text.rstrip().endswith(CONCLUSION)
    assert "window: 2,2,2" in text


def test_report_aborts_on_broken_order():
    def broken(a, b):
        return h_le(a, b) or (len(a.s) == 1 and b.s == ())

    text, ok = build_report(SMALL, le=broken)
    assert not ok
    assert "report aborted: failing check" in text
    assert CONCLUSION not in text


@pytest.mark.parametrize("suite", ["h-order", "s-order", "tree", "symbolic"])
def test_suites_with_zero_entries(suite):
    report = run_suite(suite, Window(2, 3, 2, min_entry=0))
    assert report.passed, report.to_text()
