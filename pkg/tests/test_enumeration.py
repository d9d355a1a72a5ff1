import pytest

from sethom.catalog import build, theorem_list
from sethom.enumeration import (CapExceeded, brute_force_counts, burnside_class_count,
                                classify_cross_check, enumerate_all)
from sethom.iso import canonical_code, unpack_code


@pytest.fixture(scope="module")
def upto5():
    return enumerate_all(5)


def test_tiny_counts(upto5):
    assert len(upto5[1]) == 1
    assert len(upto5[2]) == 3  # unrelated, arc, edge


def test_counts_match_labelled_oracle(upto5):
    brute = brute_force_counts(4)
    assert {n: len(upto5[n]) for n in range(1, 5)} == brute


def test_counts_match_burnside(upto5):
    for n in range(1, 6):
        assert len(upto5[n]) == burnside_class_count(n)


def test_codes_are_canonical_and_sorted(upto5):
    for n, codes in upto5.items():
        assert codes == sorted(codes)
        for code in codes[:: max(1, len(codes) // 50)]:
            d = unpack_code(code)
            assert d.n == n and canonical_code(d) == code


def test_small_levels_are_prefixes(upto5):
    assert enumerate_all(3) == {n: upto5[n] for n in (1, 2, 3)}
    assert enumerate_all(0) == {}


def test_progress_callback():
    seen = []
    enumerate_all(3, progress=lambda n, i, total: seen.append((n, i, total)))
    assert seen[-1] == (3, 3, 3)


def test_cap():
    with pytest.raises(CapExceeded):
        enumerate_all(7)
    with pytest.raises(CapExceeded):
        brute_force_counts(5)


def test_cross_check_5(upto5):
    report = classify_cross_check(5, upto5)
    assert report.ok, report.lines()
    labels = {code: label for _, code, label in report.survivors}
    for text in ["C(5)", "D(5)", "D(3)", "K(5)", "Kbar(5)"]:
        assert canonical_code(build(text)) in labels
    assert len(report.survivors) == len(theorem_list(5))
    assert report.as_dict()["ok"] is True


def test_survivors_closed_under_complements(upto5):
    report = classify_cross_check(5, upto5)
    assert report.closure_failures == []


@pytest.mark.slow
def test_cross_check_6():
    report = classify_cross_check(6)
    assert report.counts[6] == burnside_class_count(6)
    assert report.ok, report.lines()
