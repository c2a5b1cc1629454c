from itertools import product

import pytest
from hypothesis import given, strategies as st

from chungfeller import bijections as bij
from chungfeller import closed_forms as cf
from chungfeller.bijections import BijectionError, ColoredStep
from chungfeller.enumeration import FamilySpec, enumerate_family
from chungfeller.paths import build_path, dyck_steps


def schroder(word):
    return build_path(bij.schroder_steps(), word)


def test_flatten_examples():
    assert bij.schroder_flatten(schroder("UD")).word == "F"
    assert bij.schroder_flatten(schroder("UUDDUD")).word == "UDFUD"


def test_elevate_example():
    assert bij.schroder_elevate(schroder("F")).word == "UD"


def test_domain_errors():
    with pytest.raises(BijectionError):
        bij.schroder_flatten(schroder("F"))
    with pytest.raises(BijectionError):
        bij.schroder_elevate(schroder("UD"))
    with pytest.raises(BijectionError):
        bij.schroder_flatten(schroder("DU"))


@pytest.mark.parametrize("n", range(1, 7))
def test_schroder_maps_are_inverse_bijections(n):
    without = [p.word for p in bij.schroder_paths(n, False)]
    with_flat = [p.word for p in bij.schroder_paths(n, True)]
    assert len(without) == len(with_flat) == cf.small_schroder(n)
    assert len(without) + len(with_flat) == cf.schroder(n)
    images = [bij.schroder_flatten(schroder(w)).word for w in without]
    assert sorted(images) == sorted(with_flat)
    assert all(bij.schroder_elevate(schroder(bij.schroder_flatten(schroder(w)).word)).word == w
               for w in without)


@pytest.mark.parametrize("n", range(1, 8))
def test_motzkin_class_maps(n):
    flat = list(bij.motzkin_class(n, "leading-flat"))
    du = list(bij.motzkin_class(n, "leading-du"))
    assert len(flat) == cf.riordan(n + 1) and len(du) == cf.riordan(n)
    assert len(flat) + len(du) == cf.motzkin(n)
    for case, members, target in (("leading-flat", flat, n + 1), ("leading-du", du, n)):
        images = [bij.motzkin_class_maps(q, case) for q in members]
        assert len({p.word for p in images}) == len(members)
        assert all(len(p.word) == target for p in images)
        assert all(bij.motzkin_class_inverse(p, case).word == q.word for p, q in zip(images, members))


def test_motzkin_class_rejects_outsiders():
    with pytest.raises(BijectionError):
        bij.motzkin_class_maps(build_path(bij.motzkin_unit_steps(), "UDD"), "leading-flat")
    with pytest.raises(BijectionError):
        list(bij.motzkin_class(2, "other"))


def test_pair_examples():
    S = dyck_steps()
    assert bij.pair_to_two_colored(build_path(S, "UDDU")) == [ColoredStep("flat", bij.DASHED),
                                                            ColoredStep("flat", bij.SOLID)]
    assert bij.pair_to_two_colored(build_path(S, "UUDD")) == [ColoredStep("up"), ColoredStep("down")]
    with pytest.raises(BijectionError):
        bij.pair_to_two_colored(build_path(S, "UDU"))


@pytest.mark.parametrize("n", range(1, 6))
def test_pairing_round_trips_and_halves_height(n):
    seen = set()
    for p in enumerate_family(FamilySpec.p(n - 1, 1, 2)):
        colored = bij.pair_to_two_colored(p)
        assert bij.colored_height(colored) == 1
        assert bij.two_colored_to_pair(colored).word == p.word
        seen.add(tuple(colored))
    assert len(seen) == cf.binom(2 * n, n - 1)


@given(st.lists(st.sampled_from([ColoredStep("up"), ColoredStep("down"),
                                 ColoredStep("flat", 0), ColoredStep("flat", 1)]), max_size=8))
def test_colored_words_round_trip(steps):
    assert bij.pair_to_two_colored(bij.two_colored_to_pair(steps)) == steps


def test_colored_step_validation():
    with pytest.raises(ValueError):
        ColoredStep("up", 1)
    assert "".join(map(str, [ColoredStep("up"), ColoredStep("flat", 1), ColoredStep("flat")])) == "UHS"


def test_block_group():
    S = dyck_steps()
    assert bij.block_group(build_path(S, "UDDU"), 2) == [0, 0]
    assert bij.block_group(build_path(S, "UUDD"), 2) == [1, -1]
    with pytest.raises(BijectionError):
        bij.block_group(build_path(S, "UUD"), 2)
    with pytest.raises(BijectionError):
        bij.block_group(build_path(S, "UUUD"), 3)


def test_block_group_of_deep_paths():
    S = dyck_steps(2)
    for w in ("".join(t) for t in product("UD", repeat=6)):
        p = build_path(S, w)
        try:
            blocks = bij.block_group(p, 3)
        except BijectionError:
            continue
        assert 3 * sum(blocks) == p.end_height
