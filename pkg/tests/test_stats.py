from collections import Counter

import pytest
from hypothesis import given, strategies as st

from dyckstat.errors import DyckError
from dyckstat.paths import DYCK, enumerate_words, partial, reverse
from dyckstat.stats import (
    MarkedPath,
    Statistic,
    SymmetryClass,
    count_stat,
    mark_at,
    marked_family,
    marked_set,
    scan_peaks,
    scan_valleys,
)

PEAK, VALLEY = Statistic.PEAK, Statistic.VALLEY
SYM, LEFT, RIGHT = SymmetryClass.SYMMETRIC, SymmetryClass.LEFT, SymmetryClass.RIGHT


def histogram(records):
    return Counter((r.cls, r.weight) for r in records)


def test_figure1_peaks(figure1):
    assert len(figure1) == 26
    assert histogram(scan_peaks(figure1)) == Counter(
        {(SYM, 1): 3, (SYM, 2): 1, (LEFT, 1): 2, (RIGHT, 1): 1, (RIGHT, 2): 1}
    )


def test_figure1_valleys(figure1):
    assert histogram(scan_valleys(figure1)) == Counter(
        {(SYM, 1): 2, (SYM, 2): 1, (LEFT, 1): 1, (RIGHT, 1): 3}
    )


def test_figure1_count_stat(figure1):
    assert count_stat(figure1, PEAK, SYM, 2) == 1
    assert count_stat(figure1, VALLEY, SYM, 2) == 1
    assert count_stat(figure1, PEAK, (LEFT, RIGHT)) == 4


def test_single_records():
    (r,) = scan_peaks("ud")
    assert (r.ups, r.downs, r.weight, r.cls, r.level) == (1, 1, 1, SYM, 1)
    (r,) = scan_peaks("uuud")
    assert (r.ups, r.downs, r.weight, r.cls) == (3, 1, 1, LEFT)
    assert scan_valleys("uudd") == []
    assert [(v.downs, v.ups, v.cls) for v in scan_valleys("ududud")] == [(1, 1, SYM)] * 2
    assert count_stat("", PEAK) == 0
    assert count_stat("uuuddd", PEAK, SYM, 3) == 1


def test_partial_and_free_paths():
    # a trailing u-run is not a mountain
    assert [(p.ups, p.downs) for p in scan_peaks("uduu")] == [(1, 1)]
    # a leading d-run in a free path starts a valley
    (v,) = scan_valleys("dduu")
    assert (v.start, v.downs, v.ups, v.level) == (0, 2, 2, -2)


def test_marked_set_examples():
    assert sum(1 for _ in marked_set(DYCK, 8, PEAK, SYM, 1)) == 15
    assert sum(1 for _ in marked_set(DYCK, 8, PEAK, LEFT, 1)) == 5
    assert sum(1 for _ in marked_set(DYCK, 8, VALLEY, SYM, 1)) == 10


def test_marked_families_match_table_2_2():
    row5 = [168, 49, 15, 5, 2, 1]
    assert [sum(1 for _ in marked_family("S", 5, k)) for k in range(6)] == row5


def test_marked_path_index_checked():
    with pytest.raises(DyckError):
        MarkedPath("uudd", PEAK, 1)
    m = mark_at("uduudd", PEAK, 4)
    assert m.index == 1 and m.record.weight == 2
    with pytest.raises(DyckError):
        mark_at("uduudd", PEAK, 3)


@pytest.mark.parametrize("length", range(2, 17, 2))
def test_valleys_are_peaks_minus_one(length):
    for w in enumerate_words(DYCK, length):
        assert len(scan_valleys(w)) == len(scan_peaks(w)) - 1


def _swap(h):
    return Counter({((RIGHT if c is LEFT else LEFT if c is RIGHT else c), w): v for (c, w), v in h.items()})


@given(st.text(alphabet="ud", max_size=16))
def test_reverse_swaps_left_and_right(w):
    r = reverse(w).steps
    assert histogram(scan_peaks(r)) == _swap(histogram(scan_peaks(w)))
    assert histogram(scan_valleys(r)) == _swap(histogram(scan_valleys(w)))


@given(st.text(alphabet="ud", max_size=30))
def test_record_totals_match_factor_counts(w):
    ud = sum(1 for i in range(len(w) - 1) if w[i:i + 2] == "ud")
    du = sum(1 for i in range(len(w) - 1) if w[i:i + 2] == "du")
    assert count_stat(w, PEAK) == ud
    assert count_stat(w, VALLEY) == du


@given(st.text(alphabet="ud", max_size=30))
def test_weight_is_min_of_runs(w):
    for r in scan_peaks(w):
        assert w[r.start:r.start + r.ups] == "u" * r.ups
        assert w[r.apex:r.apex + r.downs] == "d" * r.downs
        assert r.weight == min(r.ups, r.downs)
        assert r.cls is SymmetryClass.of(r.ups, r.downs)
        assert r.level == r.ups + sum(1 if c == "u" else -1 for c in w[:r.start])


@pytest.mark.parametrize("n", range(1, 9))
def test_left_and_right_totals_agree(n):
    left = right = 0
    for w in enumerate_words(DYCK, 2 * n):
        left += count_stat(w, PEAK, LEFT)
        right += count_stat(w, PEAK, RIGHT)
    assert left == right


def test_marked_sets_on_partial_paths():
    # D_{2,1} = {uud, udu}
    assert [str(m) for m in marked_family("SP", 2, 0, 1)] == ["udu[peak 0]"]
    assert [str(m) for m in marked_family("LP", 2, 0, 1)] == ["uud[peak 0]"]
    assert sum(1 for _ in marked_set(partial(1), 3, PEAK)) == 2
