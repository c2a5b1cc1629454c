"""The cycle lemma variant and the special-vertex equidistribution engine.

For an integer sequence ``a`` of length ``n`` summing to 1, scale the
partial sums as ``n*(a_1+...+a_i) - i``.  These values are pairwise
distinct, and the rotation starting at index ``i`` has exactly as many
nonpositive partial sums as there are scaled values not exceeding the
``i``-th one.  So ranking the scaled sums tells, for every ``k``, which
rotation has exactly ``k`` nonpositive partial sums.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import accumulate
from typing import Optional, Sequence

from . import stats
from .enumeration import DistributionTable, FamilySpec, distribution_table
from .paths import Path, PathError, conjugate
from .stats import Selector


def _require_sum_one(a: Sequence[int]) -> None:
    if not a:
        raise ValueError("sequence must be nonempty")
    if sum(a) != 1:
        raise ValueError(f"sequence must sum to 1, sums to {sum(a)}")


def scaled_partial_sums(a: Sequence[int]) -> list[int]:
    _require_sum_one(a)
    n = len(a)
    prefix = [0, *accumulate(a)]
    return [n * prefix[i] - i for i in range(n)]


def nonpositive_prefix_count(a: Sequence[int]) -> int:
    """Prefix sums ``a_1+...+a_i <= 0`` for ``i = 0..n-1`` (the empty prefix counts)."""
    prefix = [0, *accumulate(a)]
    return sum(1 for s in prefix[:len(a)] if s <= 0)


def rotate(a: Sequence[int], i: int) -> list[int]:
    return list(a[i:]) + list(a[:i])


def unique_conjugate_with(a: Sequence[int], k: int) -> int:
    """The rotation index ``i`` whose rotation has exactly ``k`` nonpositive prefix sums."""
    scaled = scaled_partial_sums(a)
    n = len(a)
    if not 1 <= k <= n:
        raise ValueError(f"k must lie in 1..{n}")
    order = sorted(range(n), key=scaled.__getitem__)
    return order[k - 1]


def special_vertex_orbit(p: Path, sel: Selector) -> list[tuple[int, int]]:
    """Pairs ``(t, X)`` over rotations ``t`` that start at a special vertex.

    ``X`` is the number of special vertices of the rotated path lying on
    or below the axis, vertices read cyclically.  The X values are exactly
    ``1..k`` for ``k`` special vertices.
    """
    if p.end_height != 1:
        raise PathError(
            f"path ends at height {p.end_height}; the orbit needs height 1 "
            "(group steps into blocks first when heights move in multiples)")
    out = []
    for t in stats.select_vertices(p, sel, cyclic=True):
        q = conjugate(p, t)
        out.append((t, stats.count_on_or_below(q, sel, cyclic=True)))
    return out


@dataclass
class Verdict:
    table: DistributionTable
    domain: list[int]
    uniform: bool
    common_count: Optional[int]

    def to_dict(self) -> dict:
        return {
            "family": self.table.spec,
            "selector": self.table.selector,
            "counts": {str(v): str(self.table.counts.get(v, 0))
                       for v in sorted(set(self.domain) | set(self.table.counts))},
            "uniform": self.uniform,
            "common_count": None if self.common_count is None else str(self.common_count),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def verify_equidistribution(family: FamilySpec, sel: Optional[Selector],
                            count_kind: str = "on-or-below",
                            domain: Sequence[int] | None = None) -> Verdict:
    """Histogram a family exhaustively and decide whether it is flat on ``domain``.

    Without an explicit domain the observed range ``min..max`` is used.
    """
    table = distribution_table(family, sel, count_kind)
    if domain is None:
        vals = [v for v, c in table.counts.items() if c]
        domain = list(range(min(vals), max(vals) + 1)) if vals else []
    dom = list(domain)
    uniform = table.uniform(dom)
    return Verdict(table, dom, uniform, table.common_count(dom))
