"""Steps, step sets, paths, conjugation, reflection and prime factorization.

Paths are immutable.  A path stores its step set and the sequence of step
indices; vertices are derived on demand.  Vertex ``i`` is the point before
step ``i`` (0-based), so a path with ``m`` steps has vertices ``0..m``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence


class PathError(ValueError):
    """Raised for malformed words, out-of-range rotations and similar misuse."""


@dataclass(frozen=True)
class Step:
    dx: int
    dy: int

    def __post_init__(self):
        if self.dx < 1:
            raise PathError(f"step must advance horizontally, got dx={self.dx}")

    @property
    def kind(self) -> str:
        if self.dy > 0:
            return "up"
        if self.dy < 0:
            return "down"
        return "flat"


@dataclass(frozen=True)
class StepSet:
    steps: tuple[Step, ...]
    labels: str

    def __post_init__(self):
        if not self.steps:
            raise PathError("a step set needs at least one step")
        if len(self.labels) != len(self.steps):
            raise PathError("one label per step is required")
        if len(set(self.labels)) != len(self.labels):
            raise PathError(f"labels must be distinct: {self.labels!r}")

    @classmethod
    def of(cls, **vectors: tuple[int, int]) -> StepSet:
        """``StepSet.of(U=(1, 1), D=(1, -1))``."""
        return cls(tuple(Step(*v) for v in vectors.values()), "".join(vectors))

    def index(self, label: str) -> int:
        i = self.labels.find(label)
        if i < 0 or len(label) != 1:
            raise PathError(f"unknown step label {label!r}")
        return i

    def step(self, label: str) -> Step:
        return self.steps[self.index(label)]

    def mirror(self) -> StepSet:
        """Reflect every vector about the x-axis.

        Canonical labels follow the direction: the image of an up step is
        a down step, so ``U`` and ``D`` trade places and ``F`` stays.
        """
        swap = {"U": "D", "D": "U"}
        labels = "".join(swap.get(c, c) for c in self.labels)
        return StepSet(tuple(Step(s.dx, -s.dy) for s in self.steps), labels)


def dyck_steps(r: int = 1) -> StepSet:
    """Up ``(1, 1)`` and down ``(1, -r)``."""
    return StepSet.of(U=(1, 1), D=(1, -r))


def motzkin_steps(r: int = 1, s: int = 1) -> StepSet:
    """Up ``(1, 1)``, down ``(1, -r)`` and flat ``(s, 0)``."""
    return StepSet.of(U=(1, 1), D=(1, -r), F=(s, 0))


def star_steps(r: int = 1) -> StepSet:
    """Up ``(1, r)`` and down ``(1, -1)``: the mirror image of :func:`dyck_steps`."""
    return StepSet.of(U=(1, r), D=(1, -1))


@dataclass(frozen=True)
class Path:
    step_set: StepSet
    seq: tuple[int, ...]

    def __post_init__(self):
        n = len(self.step_set.steps)
        for i in self.seq:
            if not 0 <= i < n:
                raise PathError(f"step index {i} outside the step set")

    @classmethod
    def from_word(cls, step_set: StepSet, word: str) -> Path:
        return build_path(step_set, word)

    @cached_property
    def word(self) -> str:
        labels = self.step_set.labels
        return "".join(labels[i] for i in self.seq)

    @cached_property
    def steps(self) -> tuple[Step, ...]:
        table = self.step_set.steps
        return tuple(table[i] for i in self.seq)

    @cached_property
    def vertices(self) -> tuple[tuple[int, int], ...]:
        x = y = 0
        out = [(0, 0)]
        for st in self.steps:
            x += st.dx
            y += st.dy
            out.append((x, y))
        return tuple(out)

    @cached_property
    def heights(self) -> tuple[int, ...]:
        return tuple(v[1] for v in self.vertices)

    @cached_property
    def positions(self) -> tuple[int, ...]:
        """x-coordinate at which each step starts."""
        return tuple(v[0] for v in self.vertices[:-1])

    @property
    def step_count(self) -> int:
        return len(self.seq)

    @property
    def length(self) -> int:
        """x-coordinate of the endpoint (differs from step count with wide flats)."""
        return self.vertices[-1][0]

    @property
    def end_height(self) -> int:
        return self.vertices[-1][1]

    def __len__(self) -> int:
        return len(self.seq)

    def __str__(self) -> str:
        return self.word

    def __add__(self, other: Path) -> Path:
        if other.step_set != self.step_set:
            raise PathError("cannot concatenate paths over different step sets")
        return Path(self.step_set, self.seq + other.seq)


def build_path(step_set: StepSet, labels: Iterable[str]) -> Path:
    """Encode a word over ``step_set.labels`` as a path.

    An unknown character is rejected with its 1-based position.
    """
    lookup = {c: i for i, c in enumerate(step_set.labels)}
    seq = []
    for pos, c in enumerate(labels, start=1):
        try:
            seq.append(lookup[c])
        except KeyError:
            raise PathError(f"unknown label {c!r} at position {pos}") from None
    return Path(step_set, tuple(seq))


def conjugate(p: Path, i: int) -> Path:
    """Rotate the step sequence left by ``i`` and re-anchor at the origin."""
    m = len(p.seq)
    if not 0 <= i <= m:
        raise PathError(f"rotation {i} outside 0..{m}")
    return Path(p.step_set, p.seq[i:] + p.seq[:i])


def conjugates(p: Path) -> list[Path]:
    return [conjugate(p, i) for i in range(max(len(p.seq), 1))]


def reflect(p: Path, target: StepSet | None = None) -> Path:
    """Mirror ``p`` across the x-axis.

    Every step ``(dx, dy)`` becomes ``(dx, -dy)``, looked up in ``target``.
    By default the target is the original step set when it is closed under
    mirroring (the unit up/down case), otherwise ``p.step_set.mirror()``.
    """
    src = p.step_set
    if target is None:
        mirrored = {Step(s.dx, -s.dy) for s in src.steps}
        target = src if mirrored == set(src.steps) else src.mirror()
    where = {st: i for i, st in enumerate(target.steps)}
    seq = []
    for st in p.steps:
        image = Step(st.dx, -st.dy)
        if image not in where:
            raise PathError(f"mirror of {st} is not in the target step set")
        seq.append(where[image])
    return Path(target, tuple(seq))


@dataclass(frozen=True)
class PrimeFactor:
    kind: str  # positive | negative | mixed | flat
    sub_path: Path
    start_height: int = 0


def _classify(heights: Sequence[int]) -> str:
    inner = heights[1:-1]
    if not inner:
        lo = hi = 0
    else:
        lo, hi = min(inner), max(inner)
    if lo > 0:
        return "positive"
    if hi < 0:
        return "negative"
    if lo == hi == 0 and len(heights) == 2:
        return "flat"
    return "mixed"


def factor_primes(p: Path) -> list[PrimeFactor]:
    """Cut ``p`` at every vertex on the x-axis.

    Between two consecutive returns a factor either stays strictly above
    the axis, strictly below it, or crosses it exactly once with a single
    long step (a mixed prime, possible when down steps have depth r > 1).
    A lone flat step on the axis is its own factor.
    """
    if p.end_height != 0:
        raise PathError(f"path ends at height {p.end_height}, not on the axis")
    h = p.heights
    out = []
    start = 0
    for i in range(1, len(h)):
        if h[i] == 0:
            sub = Path(p.step_set, p.seq[start:i])
            out.append(PrimeFactor(_classify(h[start:i + 1]), sub, 0))
            start = i
    return out
