"""Exhaustive generation of path families and statistic histograms.

A family is written ``P:n=3,r=1,h=1`` (or ``Q:k=..,l=..,r=..,s=..,h=..``,
``Pstar:n=..,r=..,h=..``) followed by optional ``+constraint`` suffixes,
for example ``P:n=3,r=1,h=1+first=U+peak-count=2``.
"""

from __future__ import annotations

import json
import os
from collections import Counter
from dataclasses import dataclass, field
from math import factorial
from typing import Callable, Iterator, Optional

from . import stats
from .paths import Path, StepSet, dyck_steps, motzkin_steps, star_steps
from .stats import Selector

DEFAULT_BUDGET = 10**7

_PARAMS = {
    "P": ("n", "r", "h"),
    "Q": ("k", "l", "r", "s", "h"),
    "Pstar": ("n", "r", "h"),
}

_PATTERN_COUNTS = {
    "peak-count": "peak",
    "valley-count": "valley",
    "circular-peak-count": "circular-peak",
    "double-rise-count": "double-rise",
    "double-fall-count": "double-fall",
}

_FLAG_CONSTRAINTS = {"nonnegative", "positive-interior", "no-flat-on-axis"}
_VALUE_CONSTRAINTS = {"first", "last", "descending-runs", "even-up-count", "even-down-count",
                      "mod-class-up-counts", "mod-class-down-counts", *_PATTERN_COUNTS}


class BudgetExceeded(RuntimeError):
    """The family is larger than the configured enumeration budget."""


def budget() -> int:
    raw = os.environ.get("CF_MAX_PATHS")
    return int(raw) if raw else DEFAULT_BUDGET


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[tuple[str, int], ...]
    constraints: tuple[tuple[str, Optional[str]], ...] = ()

    def __post_init__(self):
        if self.kind not in _PARAMS:
            raise ValueError(f"unknown family kind {self.kind!r}")
        names = tuple(k for k, _ in self.params)
        if names != _PARAMS[self.kind]:
            raise ValueError(f"{self.kind} takes parameters {','.join(_PARAMS[self.kind])}")
        for name, value in self.constraints:
            if name.startswith("count[") and name.endswith("]"):
                Selector.parse(name[6:-1])
                continue
            if name in _FLAG_CONSTRAINTS:
                if value is not None:
                    raise ValueError(f"constraint {name} takes no value")
            elif name in _VALUE_CONSTRAINTS:
                if value is None:
                    raise ValueError(f"constraint {name} needs a value")
            else:
                raise ValueError(f"unknown constraint {name!r}")

    @classmethod
    def p(cls, n: int, r: int = 1, h: int = 0, *constraints) -> FamilySpec:
        return cls("P", (("n", n), ("r", r), ("h", h)), _norm(constraints))

    @classmethod
    def q(cls, k: int, l: int, r: int = 1, s: int = 1, h: int = 0, *constraints) -> FamilySpec:
        return cls("Q", (("k", k), ("l", l), ("r", r), ("s", s), ("h", h)), _norm(constraints))

    @classmethod
    def pstar(cls, n: int, r: int = 1, h: int = 0, *constraints) -> FamilySpec:
        return cls("Pstar", (("n", n), ("r", r), ("h", h)), _norm(constraints))

    @classmethod
    def parse(cls, text: str) -> FamilySpec:
        head, *cons = text.strip().split("+")
        kind, _, body = head.partition(":")
        values = {}
        for item in filter(None, body.split(",")):
            key, eq, val = item.partition("=")
            if not eq:
                raise ValueError(f"expected name=value in {item!r}")
            values[key.strip()] = int(val)
        names = _PARAMS.get(kind)
        if names is None:
            raise ValueError(f"unknown family kind {kind!r}")
        missing = [k for k in names if k not in values]
        if missing or len(values) != len(names):
            raise ValueError(f"{kind} needs exactly {','.join(names)}")
        return cls(kind, tuple((k, values[k]) for k in names), _norm(cons))

    def with_constraints(self, *extra) -> FamilySpec:
        return FamilySpec(self.kind, self.params, self.constraints + _norm(extra))

    def __str__(self) -> str:
        head = f"{self.kind}:" + ",".join(f"{k}={v}" for k, v in self.params)
        tail = "".join(f"+{k}" if v is None else f"+{k}={v}" for k, v in self.constraints)
        return head + tail

    @property
    def args(self) -> dict[str, int]:
        return dict(self.params)

    def step_set(self) -> StepSet:
        a = self.args
        if self.kind == "P":
            return dyck_steps(a["r"])
        if self.kind == "Q":
            return motzkin_steps(a["r"], a["s"])
        return star_steps(a["r"])

    def step_counts(self) -> dict[str, int]:
        """How many times each label occurs in every member of the family."""
        a = self.args
        if self.kind == "P":
            counts = {"U": a["r"] * a["n"] + a["h"], "D": a["n"]}
        elif self.kind == "Q":
            counts = {"U": a["r"] * a["k"] + a["h"], "D": a["k"], "F": a["l"]}
        else:
            counts = {"U": a["n"], "D": a["r"] * a["n"] - a["h"]}
        negative = [k for k, v in a.items() if k != "h" and v < 0]
        if negative or any(v < 0 for v in counts.values()):
            raise ValueError(f"inconsistent parameters for {self}: step counts {counts}")
        return counts


def _norm(items) -> tuple[tuple[str, Optional[str]], ...]:
    out = []
    for item in items:
        if isinstance(item, tuple):
            name, value = item
            out.append((name, None if value is None else str(value)))
            continue
        name, eq, value = str(item).partition("=")
        out.append((name, value if eq else None))
    return tuple(out)


def _multinomial(counts) -> int:
    total = factorial(sum(counts))
    for c in counts:
        total //= factorial(c)
    return total


def family_size_bound(spec: FamilySpec) -> int:
    return _multinomial(spec.step_counts().values())


def _mod_counts(p: Path, kind: str, m: int) -> list[int]:
    out = [0] * m
    for st, x in zip(p.steps, p.positions):
        if st.kind == kind:
            out[x % m] += 1
    return out


def _predicate(name: str, value: Optional[str], spec: FamilySpec) -> Callable[[Path], bool]:
    if name.startswith("count["):
        sel = Selector.parse(name[6:-1])
        c = int(value)
        return lambda p: len(stats.select_vertices(p, sel)) == c
    if name in _PATTERN_COUNTS:
        sel = Selector(_PATTERN_COUNTS[name])
        c = int(value)
        return lambda p: len(stats.select_vertices(p, sel)) == c
    if name == "descending-runs":
        c = int(value)
        return lambda p: stats.descending_runs(p) == c
    if name in ("even-up-count", "even-down-count"):
        sel = Selector("up-start-mod" if name == "even-up-count" else "down-start-mod", 2, 0)
        c = int(value)
        return lambda p: len(stats.select_vertices(p, sel)) == c
    if name in ("mod-class-up-counts", "mod-class-down-counts"):
        want = [int(v) for v in value.split("/")]
        kind = "up" if name == "mod-class-up-counts" else "down"
        return lambda p: _mod_counts(p, kind, len(want)) == want
    if name == "last":
        allowed = set(value)
        return lambda p: bool(p.seq) and p.word[-1] in allowed
    if name == "no-flat-on-axis":
        def check(p):
            h = p.heights
            return not any(st.kind == "flat" and h[i] == 0 for i, st in enumerate(p.steps))
        return check
    return lambda p: True


def enumerate_family(spec: FamilySpec, limit: int | None = None) -> Iterator[Path]:
    """Yield every path of the family once, in lexicographic word order."""
    counts = spec.step_counts()
    cap = budget() if limit is None else limit
    bound = family_size_bound(spec)
    if bound > cap:
        raise BudgetExceeded(f"{spec} has up to {bound} paths, budget is {cap} (CF_MAX_PATHS)")
    step_set = spec.step_set()
    cons = dict(spec.constraints)
    floor = None
    if "nonnegative" in cons:
        floor = 0
    strict = "positive-interior" in cons
    first = set(cons["first"]) if "first" in cons else None
    checks = [_predicate(k, v, spec) for k, v in spec.constraints
              if k not in ("nonnegative", "positive-interior", "first")]

    order = sorted(counts)  # lexicographic by label
    idx = {lab: step_set.index(lab) for lab in order}
    dy = {lab: step_set.step(lab).dy for lab in order}
    remaining = dict(counts)
    total = sum(counts.values())
    seq: list[int] = []

    def rec(y: int) -> Iterator[tuple[int, ...]]:
        depth = len(seq)
        if depth == total:
            yield tuple(seq)
            return
        for lab in order:
            if not remaining[lab]:
                continue
            if depth == 0 and first is not None and lab not in first:
                continue
            ny = y + dy[lab]
            if floor is not None and ny < floor:
                continue
            if strict and depth + 1 < total and ny <= 0:
                continue
            remaining[lab] -= 1
            seq.append(idx[lab])
            yield from rec(ny)
            seq.pop()
            remaining[lab] += 1

    for s in rec(0):
        p = Path(step_set, s)
        if all(c(p) for c in checks):
            yield p


def count_family(spec: FamilySpec) -> int:
    return sum(1 for _ in enumerate_family(spec))


@dataclass
class DistributionTable:
    spec: str
    selector: str
    counts: dict[int, int] = field(default_factory=dict)
    total: int = 0

    def add(self, value: int, weight: int = 1) -> None:
        self.counts[value] = self.counts.get(value, 0) + weight
        self.total += weight

    def merge(self, other: DistributionTable) -> DistributionTable:
        out = DistributionTable(self.spec, self.selector, dict(self.counts), self.total)
        for v, c in other.counts.items():
            out.add(v, c)
        return out

    def uniform(self, domain: range | list[int]) -> bool:
        """Equal counts on every value of ``domain`` and nothing outside it."""
        dom = set(domain)
        if any(v not in dom for v, c in self.counts.items() if c):
            return False
        return len({self.counts.get(v, 0) for v in dom}) <= 1

    def common_count(self, domain: range | list[int]) -> Optional[int]:
        if not self.uniform(domain):
            return None
        dom = list(domain)
        return self.counts.get(dom[0], 0) if dom else 0

    def to_csv(self) -> str:
        lines = ["value,count"]
        lines += [f"{v},{self.counts[v]}" for v in sorted(self.counts)]
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "family": self.spec,
            "selector": self.selector,
            "counts": {str(v): str(self.counts[v]) for v in sorted(self.counts)},
            "total": str(self.total),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


RAW_STATISTICS: dict[str, Callable[[Path], int]] = {
    "leftmost-highest": stats.leftmost_highest_index,
    "positive-vertices": stats.positive_vertex_count,
    "descending-runs": stats.descending_runs,
}

COUNT_KINDS = ("on-or-below", "on-or-above", "below", *RAW_STATISTICS)


def statistic(sel: Optional[Selector], count_kind: str) -> Callable[[Path], int]:
    if count_kind in RAW_STATISTICS:
        return RAW_STATISTICS[count_kind]
    if sel is None:
        raise ValueError(f"count kind {count_kind} needs a selector")
    if count_kind == "on-or-below":
        return lambda p: stats.count_on_or_below(p, sel)
    if count_kind == "on-or-above":
        return lambda p: stats.count_on_or_above(p, sel)
    if count_kind == "below":
        return lambda p: stats.count_below(p, sel)
    raise ValueError(f"unknown count kind {count_kind!r}; known: {', '.join(COUNT_KINDS)}")


def distribution_table(spec: FamilySpec, sel: Optional[Selector],
                       count_kind: str = "on-or-below") -> DistributionTable:
    fn = statistic(sel, count_kind)
    label = count_kind if sel is None else f"{sel}/{count_kind}"
    table = DistributionTable(str(spec), label)
    for p in enumerate_family(spec):
        table.add(fn(p))
    return table


def distribution_by(spec: FamilySpec, key: Callable[[Path], object],
                    sel: Optional[Selector], count_kind: str = "on-or-below",
                    ) -> dict[object, DistributionTable]:
    """One pass over the family, histograms grouped by ``key(path)``."""
    fn = statistic(sel, count_kind)
    label = count_kind if sel is None else f"{sel}/{count_kind}"
    groups: dict[object, DistributionTable] = {}
    for p in enumerate_family(spec):
        k = key(p)
        if k not in groups:
            groups[k] = DistributionTable(f"{spec} [{k}]", label)
        groups[k].add(fn(p))
    return groups


def word_counter(spec: FamilySpec, fn: Callable[[Path], object]) -> Counter:
    return Counter(fn(p) for p in enumerate_family(spec))
