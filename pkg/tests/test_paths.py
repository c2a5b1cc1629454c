from itertools import product

import pytest
from hypothesis import given, strategies as st

from chungfeller.paths import (Path, PathError, Step, StepSet, build_path, conjugate, conjugates,
                               dyck_steps, factor_primes, motzkin_steps, reflect, star_steps)

S = dyck_steps()


def words(alphabet="UD", max_len=8):
    return st.text(alphabet=alphabet, min_size=0, max_size=max_len)


def test_two_step_path_vertices():
    assert build_path(S, "UD").vertices == ((0, 0), (1, 1), (2, 0))


def test_long_word_endpoint():
    p = build_path(S, "UDUDDDUDUUDUUUDUD")
    assert p.step_count == 17
    assert p.vertices[-1] == (17, 1)


def test_unknown_label_reports_position():
    with pytest.raises(PathError, match="position 2"):
        build_path(S, "UX")


def test_step_kinds_and_vertical_steps_rejected():
    assert Step(1, 1).kind == "up" and Step(1, -2).kind == "down" and Step(2, 0).kind == "flat"
    with pytest.raises(PathError):
        Step(0, 1)


def test_step_set_validation():
    with pytest.raises(PathError):
        StepSet((Step(1, 1), Step(1, -1)), ("U", "U"))
    with pytest.raises(PathError):
        S.index("F")


def test_flat_steps_advance_x():
    p = build_path(motzkin_steps(1, 2), "UFD")
    assert p.length == 4 and p.positions == (0, 1, 3)


@pytest.mark.parametrize("i,expected", [(0, "UUD"), (1, "UDU"), (2, "DUU"), (3, "UUD")])
def test_conjugate_examples(i, expected):
    assert conjugate(build_path(S, "UUD"), i).word == expected


def test_conjugate_out_of_range():
    with pytest.raises(PathError):
        conjugate(build_path(S, "UUD"), 4)


@given(words(), st.integers(0, 20), st.integers(0, 20))
def test_conjugation_composes(w, i, j):
    p = build_path(S, w)
    m = len(w)
    if m == 0:
        return
    i, j = i % m, j % m
    assert conjugate(conjugate(p, i), j).word == conjugate(p, (i + j) % m).word
    assert conjugate(p, i).end_height == p.end_height


def test_reflect_examples():
    q = reflect(build_path(S, "UD"))
    assert q.word == "DU"
    r2 = build_path(dyck_steps(2), "DUU")
    image = reflect(r2)
    assert image.heights == (0, 2, 1, 0)
    assert sorted(s.dy for s in image.step_set.steps) == [-1, 2]


@given(words("UD"))
def test_reflect_involution(w):
    p = build_path(S, w)
    assert reflect(reflect(p)).word == w
    assert reflect(p).heights == tuple(-h for h in p.heights)


def test_reflect_sends_negative_endpoint_to_star_family():
    p = build_path(dyck_steps(2), "UD")
    assert p.end_height == -1
    q = reflect(p, star_steps(2))
    assert q.word == "DU"
    assert q.end_height == 1
    assert q.step_set == star_steps(2)


def test_prime_factorisation_example():
    parts = factor_primes(build_path(S, "UDDU"))
    assert [(f.kind, f.sub_path.word) for f in parts] == [("positive", "UD"), ("negative", "DU")]


def test_prime_factorisation_requires_axis_endpoint():
    with pytest.raises(PathError):
        factor_primes(build_path(S, "UUD"))


def test_mixed_prime_for_deep_down_steps():
    p = build_path(dyck_steps(2), "UDUUUD")
    assert p.heights == (0, 1, -1, 0, 1, 2, 0)
    assert [f.kind for f in factor_primes(p)] == ["mixed", "positive"]


def test_axis_flat_is_its_own_factor():
    parts = factor_primes(build_path(motzkin_steps(), "FUDF"))
    assert [f.kind for f in parts] == ["flat", "positive", "flat"]


@pytest.mark.parametrize("n", range(0, 5))
def test_factorisation_concatenates_back(n):
    for w in ("".join(t) for t in product("UD", repeat=2 * n)):
        if w.count("U") != n:
            continue
        p = build_path(S, w)
        parts = factor_primes(p)
        assert "".join(f.sub_path.word for f in parts) == w
        for f in parts:
            h = f.sub_path.heights
            assert h[-1] == 0 and all(x != 0 for x in h[1:-1])


def test_conjugates_lists_each_rotation():
    assert [c.word for c in conjugates(build_path(S, "UUD"))] == ["UUD", "UDU", "DUU"]


def test_path_addition():
    p = build_path(S, "UD") + build_path(S, "DU")
    assert isinstance(p, Path) and p.word == "UDDU"
