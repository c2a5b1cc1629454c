from itertools import product

import pytest
from hypothesis import given, strategies as st

from chungfeller import stats
from chungfeller.paths import PathError, build_path, conjugate, dyck_steps, motzkin_steps
from chungfeller.stats import Selector

S = dyck_steps()
WORD = "UDUDDDUDUUDUUUDUD"


def sel(name):
    return Selector.parse(name)


def test_selector_parse_round_trip():
    for name in ("peak", "up-start", "down-or-flat-start", "up-start-mod:2:0", "circular-peak"):
        assert str(Selector.parse(name)) == name
    with pytest.raises(ValueError):
        Selector.parse("summit")
    with pytest.raises(ValueError):
        Selector.parse("up-start-mod:2:5")


def test_sample_word_peaks():
    # the word has six UD occurrences
    p = build_path(S, WORD)
    peaks = stats.select_vertices(p, sel("peak"))
    assert peaks == [1, 3, 7, 10, 14, 16]
    w = p.word
    assert all(w[i - 1] == "U" and w[i] == "D" for i in peaks)


def test_up_start_of_single_peak():
    assert stats.select_vertices(build_path(S, "UD"), sel("up-start")) == [0]


def test_circular_peak_adds_initial_vertex():
    p = build_path(S, "DUUDDU")
    peaks = stats.select_vertices(p, sel("peak"))
    assert stats.select_vertices(p, sel("circular-peak")) == [0] + peaks


def test_flat_selector_needs_flat_steps():
    with pytest.raises(PathError):
        stats.select_vertices(build_path(S, "UD"), sel("flat-start"))
    assert stats.select_vertices(build_path(motzkin_steps(), "UFD"), sel("flat-start")) == [1]


def test_mod_selector_not_cyclic():
    with pytest.raises(PathError):
        stats.select_vertices(build_path(S, "UD"), sel("up-start-mod:2:0"), cyclic=True)


@pytest.mark.parametrize("word,name,expected", [
    ("UDU", "up-start", 2),
    ("DUU", "up-start", 2),
])
def test_count_on_or_below_examples(word, name, expected):
    assert stats.count_on_or_below(build_path(S, word), sel(name)) == expected


def test_positive_prime_has_no_peaks_on_axis():
    assert stats.count_on_or_below(build_path(S, "UUDUDD"), sel("peak")) == 0


@pytest.mark.parametrize("word,name,expected", [("DUU", "down-start", 1), ("UD", "up-start", 1)])
def test_count_on_or_above_examples(word, name, expected):
    assert stats.count_on_or_above(build_path(S, word), sel(name)) == expected


@pytest.mark.parametrize("word,expected", [("UDUDDUUUDD", 3), ("UUUU", 0), ("DDDD", 1)])
def test_descending_runs(word, expected):
    assert stats.descending_runs(build_path(S, word)) == expected


def test_leftmost_highest():
    assert stats.leftmost_highest_index(build_path(S, "UUD")) == 2
    assert stats.leftmost_highest_index(build_path(S, "DUU")) == 3
    assert stats.leftmost_highest_index(build_path(motzkin_steps(), "FFF")) == 0


@pytest.mark.parametrize("word,expected", [("UUD", 3), ("UDU", 2), ("DUU", 1)])
def test_positive_vertex_count(word, expected):
    assert stats.positive_vertex_count(build_path(S, word)) == expected


def test_stat_report_fields():
    rep = stats.stat_report(build_path(S, "DUU"), sel("up-start"))
    assert list(rep.selected_indices) == [1, 2]
    assert (rep.on_or_below, rep.on_or_above) == (2, 1)


@given(st.text("UD", min_size=1, max_size=10))
def test_below_and_above_cover_selection(w):
    p = build_path(S, w)
    for name in ("up-start", "down-start", "peak", "valley"):
        s = sel(name)
        n_sel = len(stats.select_vertices(p, s))
        on_axis = sum(1 for i in stats.select_vertices(p, s) if p.heights[i] == 0)
        assert stats.count_on_or_below(p, s) + stats.count_on_or_above(p, s) == n_sel + on_axis


@given(st.text("UD", min_size=1, max_size=10))
def test_descending_runs_oracle(w):
    runs = sum(1 for i, c in enumerate(w) if c == "D" and (i == 0 or w[i - 1] != "D"))
    assert stats.descending_runs(build_path(S, w)) == runs


@pytest.mark.parametrize("name", ["circular-peak", "peak", "valley", "double-rise",
                                  "double-fall", "up-start", "down-start"])
def test_cyclic_selection_commutes_with_rotation(name):
    s = sel(name)
    for m in range(1, 9):
        for t in product("UD", repeat=m):
            p = build_path(S, "".join(t))
            base = set(stats.select_vertices(p, s, cyclic=True))
            for j in range(m):
                shifted = {(i - j) % m for i in base}
                assert set(stats.select_vertices(conjugate(p, j), s, cyclic=True)) == shifted


def test_pattern_count_matches_substrings():
    p = build_path(S, WORD)
    assert stats.pattern_count(p, "peak") == WORD.count("UD")
