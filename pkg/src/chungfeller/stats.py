"""Vertex selectors and the path statistics built on them.

A selector picks "special" vertices of a path.  Start selectors pick the
initial vertex of every matching step; pattern selectors (peak, valley,
double rise, double fall) pick the vertex between the two steps.  The
final vertex is never selected.  With ``cyclic=True`` the word is read
around the circle, so a pattern may straddle the end and the start and
select vertex 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .paths import Path, PathError

START_KINDS = {
    "up-start": {"up"},
    "down-start": {"down"},
    "flat-start": {"flat"},
    "all-starts": {"up", "down", "flat"},
    "up-or-flat-start": {"up", "flat"},
    "down-or-flat-start": {"down", "flat"},
    "up-or-down-start": {"up", "down"},
}

PATTERN_KINDS = {
    "peak": ("up", "down"),
    "valley": ("down", "up"),
    "double-rise": ("up", "up"),
    "double-fall": ("down", "down"),
    "circular-peak": ("up", "down"),
}

MOD_KINDS = {"up-start-mod": "up", "down-start-mod": "down"}


@dataclass(frozen=True)
class Selector:
    kind: str
    modulus: Optional[int] = None
    residue: Optional[int] = None

    def __post_init__(self):
        if self.kind in MOD_KINDS:
            if self.modulus is None or self.modulus < 1:
                raise ValueError(f"{self.kind} needs a positive modulus")
            if self.residue is None or not 0 <= self.residue < self.modulus:
                raise ValueError(f"residue must lie in 0..{self.modulus - 1}")
        elif self.kind not in START_KINDS and self.kind not in PATTERN_KINDS:
            raise ValueError(f"unknown selector {self.kind!r}")

    @classmethod
    def parse(cls, text: str) -> Selector:
        """Parse a CLI name such as ``peak`` or ``up-start-mod:2:0``."""
        parts = text.strip().split(":")
        if parts[0] in MOD_KINDS:
            if len(parts) != 3:
                raise ValueError(f"expected {parts[0]}:m:res, got {text!r}")
            return cls(parts[0], int(parts[1]), int(parts[2]))
        if len(parts) != 1:
            raise ValueError(f"unexpected arguments in selector {text!r}")
        return cls(parts[0])

    def __str__(self) -> str:
        if self.kind in MOD_KINDS:
            return f"{self.kind}:{self.modulus}:{self.residue}"
        return self.kind

    @property
    def is_pattern(self) -> bool:
        return self.kind in PATTERN_KINDS


def _step_kinds(p: Path) -> list[str]:
    return [st.kind for st in p.steps]


def select_vertices(p: Path, sel: Selector, cyclic: bool = False) -> list[int]:
    """Sorted indices of the vertices of ``p`` chosen by ``sel``."""
    kinds = _step_kinds(p)
    m = len(kinds)
    if sel.kind in START_KINDS:
        wanted = START_KINDS[sel.kind]
        if "flat" in wanted and sel.kind != "all-starts" and not any(
                st.kind == "flat" for st in p.step_set.steps):
            raise PathError(f"selector {sel} needs a flat step in the step set")
        return [i for i, k in enumerate(kinds) if k in wanted]
    if sel.kind in MOD_KINDS:
        if cyclic:
            raise PathError("position selectors are not rotation invariant; group blocks first")
        want = MOD_KINDS[sel.kind]
        pos = p.positions
        return [i for i, k in enumerate(kinds)
                if k == want and pos[i] % sel.modulus == sel.residue]
    first, second = PATTERN_KINDS[sel.kind]
    out = [i for i in range(1, m) if kinds[i - 1] == first and kinds[i] == second]
    wrap = m > 0 and kinds[-1] == first and kinds[0] == second
    if wrap and (cyclic or sel.kind == "circular-peak"):
        out.insert(0, 0)
    return out


def count_on_or_below(p: Path, sel: Selector, cyclic: bool = False) -> int:
    h = p.heights
    return sum(1 for i in select_vertices(p, sel, cyclic) if h[i] <= 0)


def count_on_or_above(p: Path, sel: Selector, cyclic: bool = False) -> int:
    h = p.heights
    return sum(1 for i in select_vertices(p, sel, cyclic) if h[i] >= 0)


def count_below(p: Path, sel: Selector) -> int:
    """Selected vertices strictly below the axis.

    For start selectors on unit up steps this is the classical count of
    steps lying below the axis.
    """
    h = p.heights
    return sum(1 for i in select_vertices(p, sel) if h[i] < 0)


@dataclass(frozen=True)
class StatReport:
    selected_indices: tuple[int, ...]
    on_or_below: int
    on_or_above: int

    @property
    def above(self) -> int:
        return len(self.selected_indices) - self.on_or_below


def stat_report(p: Path, sel: Selector, cyclic: bool = False) -> StatReport:
    idx = select_vertices(p, sel, cyclic)
    h = p.heights
    return StatReport(tuple(idx),
                      sum(1 for i in idx if h[i] <= 0),
                      sum(1 for i in idx if h[i] >= 0))


def descending_runs(p: Path) -> int:
    runs = 0
    prev = None
    for k in _step_kinds(p):
        if k == "down" and prev != "down":
            runs += 1
        prev = k
    return runs


def leftmost_highest_index(p: Path) -> int:
    h = p.heights
    return h.index(max(h))


def positive_vertex_count(p: Path) -> int:
    """Vertices strictly above the axis, endpoint included."""
    return sum(1 for y in p.heights if y > 0)


def pattern_count(p: Path, kind: str) -> int:
    """Number of peaks, valleys, double rises or double falls (non-cyclic)."""
    return len(select_vertices(p, Selector(kind)))
