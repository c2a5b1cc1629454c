"""Constructive maps between path classes.

* Schroeder paths with and without a flat step on the axis
  (``schroder_flatten`` / ``schroder_elevate``).
* Height-1 Motzkin-type paths with a single down-or-flat step on or below
  the axis, sent to Riordan paths (``motzkin_class_maps``).
* Pairs of unit steps as 2-colored free Motzkin steps
  (``pair_to_two_colored``).
* Grouping steps into fixed-size blocks (``block_group``).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from . import stats
from .enumeration import FamilySpec, enumerate_family
from .paths import Path, StepSet, build_path, dyck_steps, motzkin_steps


class BijectionError(ValueError):
    """Input lies outside the declared domain of a map."""


@dataclass(frozen=True)
class ColoredStep:
    kind: str  # up | down | flat
    color: int = 0

    def __post_init__(self):
        if self.kind not in ("up", "down", "flat"):
            raise ValueError(f"unknown step kind {self.kind!r}")
        if self.color < 0 or (self.kind != "flat" and self.color):
            raise ValueError("only flat steps carry a nonzero color")

    def __str__(self) -> str:
        if self.kind == "flat":
            return "S" if self.color == 0 else "H"
        return "U" if self.kind == "up" else "D"


SOLID, DASHED = 0, 1


def _axis_flats(p: Path) -> list[int]:
    h = p.heights
    return [i for i, st in enumerate(p.steps) if st.kind == "flat" and h[i] == 0 and h[i + 1] == 0]


def _require_nonnegative(p: Path) -> None:
    if min(p.heights) < 0 or p.end_height != 0:
        raise BijectionError(f"{p.word} is not a nonnegative path returning to the axis")


def schroder_flatten(p: Path) -> Path:
    """``U w D rest`` (first return) becomes ``w F rest``."""
    _require_nonnegative(p)
    if not p.seq:
        raise BijectionError("the empty path has no first return")
    if _axis_flats(p):
        raise BijectionError(f"{p.word} already has a flat step on the axis")
    h = p.heights
    ret = next(i for i in range(1, len(h)) if h[i] == 0)
    word = p.word
    return build_path(p.step_set, word[1:ret - 1] + "F" + word[ret:])


def schroder_elevate(p: Path) -> Path:
    """``A F B`` with ``F`` the last flat on the axis becomes ``U A D B``."""
    _require_nonnegative(p)
    flats = _axis_flats(p)
    if not flats:
        raise BijectionError(f"{p.word} has no flat step on the axis")
    i = flats[-1]
    word = p.word
    return build_path(p.step_set, "U" + word[:i] + "D" + word[i + 1:])


def _is_riordan(p: Path) -> bool:
    return min(p.heights) >= 0 and p.end_height == 0 and not _axis_flats(p)


def motzkin_class_maps(q: Path, case: str) -> Path:
    """Send a height-1 path with one down-or-flat step on or below the axis
    to a Riordan path (Motzkin, no flat on the axis).

    ``leading-flat``: drop the initial ``F`` and append ``D`` (same length).
    ``leading-du``: drop the initial ``DU`` and append ``D`` (one step shorter).
    """
    word = q.word
    if case == "leading-flat":
        if not word.startswith("F"):
            raise BijectionError(f"{word} does not start with a flat step")
        out = build_path(q.step_set, word[1:] + "D")
    elif case == "leading-du":
        if not word.startswith("DU"):
            raise BijectionError(f"{word} does not start with DU")
        out = build_path(q.step_set, word[2:] + "D")
    else:
        raise BijectionError(f"unknown case {case!r}")
    if not _is_riordan(out):
        raise BijectionError(f"{word} is not in the {case} class")
    return out


def motzkin_class_inverse(p: Path, case: str) -> Path:
    if not _is_riordan(p) or not p.word.endswith("D"):
        raise BijectionError(f"{p.word} is not a nonempty Riordan path")
    body = p.word[:-1]
    if case == "leading-flat":
        return build_path(p.step_set, "F" + body)
    if case == "leading-du":
        return build_path(p.step_set, "DU" + body)
    raise BijectionError(f"unknown case {case!r}")


_PAIR = {
    ("up", "up"): ColoredStep("up"),
    ("down", "down"): ColoredStep("down"),
    ("up", "down"): ColoredStep("flat", DASHED),
    ("down", "up"): ColoredStep("flat", SOLID),
}
_UNPAIR = {v: k for k, v in _PAIR.items()}


def pair_to_two_colored(p: Path) -> list[ColoredStep]:
    """Read unit up/down steps two at a time."""
    if len(p.seq) % 2:
        raise BijectionError(f"{p.word} has an odd number of steps")
    if any(abs(st.dy) != 1 or st.dx != 1 for st in p.steps):
        raise BijectionError("pairing needs unit up and down steps")
    kinds = [st.kind for st in p.steps]
    return [_PAIR[kinds[i], kinds[i + 1]] for i in range(0, len(kinds), 2)]


def two_colored_to_pair(steps: Sequence[ColoredStep], step_set: StepSet | None = None) -> Path:
    step_set = step_set or dyck_steps()
    letter = {"up": "U", "down": "D"}
    word = []
    for st in steps:
        try:
            a, b = _UNPAIR[st]
        except KeyError:
            raise BijectionError(f"no pair encodes {st!r}") from None
        word.append(letter[a] + letter[b])
    return build_path(step_set, "".join(word))


def colored_height(steps: Sequence[ColoredStep]) -> int:
    return sum(1 if s.kind == "up" else -1 if s.kind == "down" else 0 for s in steps)


def block_group(p: Path, m: int) -> list[int]:
    """Height change of each block of ``m`` consecutive steps, divided by ``m``."""
    if m < 1:
        raise ValueError("block size must be positive")
    if len(p.seq) % m:
        raise BijectionError(f"{len(p.seq)} steps do not split into blocks of {m}")
    out = []
    steps = p.steps
    for i in range(0, len(steps), m):
        change = sum(st.dy for st in steps[i:i + m])
        if change % m:
            raise BijectionError(f"block at step {i} changes height by {change}, "
                                 f"not a multiple of {m}")
        out.append(change // m)
    return out


def schroder_steps() -> StepSet:
    return motzkin_steps(1, 2)


def motzkin_unit_steps() -> StepSet:
    return motzkin_steps(1, 1)


def schroder_paths(n: int, axis_flat: bool | None = None) -> Iterator[Path]:
    """Nonnegative Schroeder paths of semilength ``n`` (flat steps of length 2).

    ``axis_flat`` keeps only paths with (True) or without (False) a flat on the axis.
    """
    for k in range(n, -1, -1):
        for p in enumerate_family(FamilySpec.q(k, n - k, 1, 2, 0, "nonnegative")):
            if axis_flat is None or bool(_axis_flats(p)) == axis_flat:
                yield p


_DOWN_OR_FLAT = stats.Selector("down-or-flat-start")


def motzkin_class(n: int, case: str | None = None) -> Iterator[Path]:
    """Height-1 Motzkin-type paths of ``n + 1`` steps starting with D or F and
    having exactly one down-or-flat step on or below the axis.

    ``case`` narrows to ``leading-flat`` (first step F) or ``leading-du``.
    """
    first = {"leading-flat": "F", "leading-du": "D", None: "DF"}.get(case)
    if first is None:
        raise BijectionError(f"unknown case {case!r}")
    for k in range(n // 2, -1, -1):
        spec = FamilySpec.q(k, n - 2 * k, 1, 1, 1, f"first={first}")
        for p in enumerate_family(spec):
            if stats.count_on_or_below(p, _DOWN_OR_FLAT) == 1:
                yield p
