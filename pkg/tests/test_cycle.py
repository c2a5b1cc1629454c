from collections import Counter

import pytest
from hypothesis import given, strategies as st

from chungfeller import closed_forms as cf
from chungfeller.cycle import (nonpositive_prefix_count, rotate, scaled_partial_sums,
                               special_vertex_orbit, unique_conjugate_with,
                               verify_equidistribution)
from chungfeller.enumeration import FamilySpec, enumerate_family
from chungfeller.paths import PathError, build_path, dyck_steps
from chungfeller.stats import Selector, select_vertices


def sum_one_sequences():
    dyck = st.integers(0, 4).flatmap(lambda k: st.permutations([1] * (k + 1) + [-1] * k))
    deep = st.integers(0, 2).flatmap(lambda j: st.permutations([1] * (2 * j + 1) + [-2] * j))
    flat = st.tuples(st.integers(0, 3), st.integers(0, 3)).filter(lambda t: 2 * t[0] + 1 + t[1] <= 8) \
        .flatmap(lambda t: st.permutations([1] * (t[0] + 1) + [-1] * t[0] + [0] * t[1]))
    return st.one_of(dyck, deep, flat)


def test_scaled_partial_sums_examples():
    assert scaled_partial_sums((1, 1, -1)) == [0, 2, 4]
    assert scaled_partial_sums((-1, 1, 1)) == [0, -4, -2]
    with pytest.raises(ValueError):
        scaled_partial_sums((1, -1))


@pytest.mark.parametrize("a,expected", [((1, 1, -1), 1), ((1, -1, 1), 2), ((-1, 1, 1), 3)])
def test_nonpositive_prefix_count(a, expected):
    assert nonpositive_prefix_count(a) == expected


@pytest.mark.parametrize("k,expected", [(1, 0), (2, 1), (3, 2)])
def test_unique_conjugate_examples(k, expected):
    assert unique_conjugate_with((1, 1, -1), k) == expected


@given(sum_one_sequences())
def test_scaled_sums_distinct(a):
    s = scaled_partial_sums(a)
    assert len(set(s)) == len(s)


@given(sum_one_sequences())
def test_unique_conjugate_matches_brute_force(a):
    n = len(a)
    by_count = {}
    for i in range(n):
        by_count.setdefault(nonpositive_prefix_count(rotate(a, i)), []).append(i)
    # every count 1..n is realised by exactly one rotation
    assert sorted(by_count) == list(range(1, n + 1))
    assert all(len(v) == 1 for v in by_count.values())
    for k in range(1, n + 1):
        assert unique_conjugate_with(a, k) == by_count[k][0]
    assert sorted(unique_conjugate_with(a, k) for k in range(1, n + 1)) == list(range(n))


def test_orbit_examples():
    S = dyck_steps()
    assert special_vertex_orbit(build_path(S, "UUD"), Selector("up-start")) == [(0, 1), (1, 2)]
    xs = [x for _, x in special_vertex_orbit(build_path(S, "UUD"), Selector("all-starts"))]
    assert sorted(xs) == [1, 2, 3]


def test_orbit_requires_height_one():
    with pytest.raises(PathError, match="block"):
        special_vertex_orbit(build_path(dyck_steps(), "UD"), Selector("up-start"))


@pytest.mark.parametrize("r,n", [(1, 3), (1, 4), (2, 2), (2, 3), (3, 2)])
def test_orbit_x_values_are_one_to_k(r, n):
    names = ["up-start", "down-start", "all-starts", "peak", "valley",
             "double-rise", "double-fall", "circular-peak"]
    for p in enumerate_family(FamilySpec.p(n, r, 1)):
        for name in names:
            s = Selector(name)
            k = len(select_vertices(p, s, cyclic=True))
            xs = sorted(x for _, x in special_vertex_orbit(p, s))
            assert xs == list(range(1, k + 1))


def test_small_ballot_distribution():
    v = verify_equidistribution(FamilySpec.p(2, 1, 1, "first=U"), Selector("up-start"))
    assert v.table.counts == {1: 2, 2: 2, 3: 2}
    assert v.uniform and v.common_count == cf.catalan(2)


@pytest.mark.parametrize("n", range(1, 7))
def test_classic_up_steps_below_axis(n):
    v = verify_equidistribution(FamilySpec.p(n, 1, 0), Selector("up-start"), "below",
                                domain=range(0, n + 1))
    assert v.uniform and v.common_count == cf.catalan(n)


@pytest.mark.parametrize("n", range(1, 6))
def test_descending_runs_refinement(n):
    for k in range(1, n + 1):
        v = verify_equidistribution(FamilySpec.p(n, 1, 0, f"descending-runs={k}"),
                                    Selector("up-start"), "below", domain=range(0, n + 1))
        assert v.uniform and v.common_count == cf.narayana(n, k)


def test_verdict_json_is_canonical():
    import json
    v = verify_equidistribution(FamilySpec.p(2, 1, 1), Selector("all-starts"))
    text = v.to_json()
    assert json.dumps(json.loads(text), sort_keys=True) == text
    assert Counter(type(x) for x in json.loads(text)["counts"].values()) == Counter({str: 5})
