"""Registry of equidistribution statements checked by exhaustive counting.

Each statement fixes a constrained family, a selector, a counting rule, a
value range and a closed form.  A check passes when the histogram is flat
on exactly that range and the common count equals the closed form.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterator, Optional

from . import closed_forms as cf
from . import stats
from .enumeration import (DistributionTable, FamilySpec, distribution_by,
                          distribution_table, enumerate_family)
from .paths import conjugate
from .stats import Selector


@dataclass
class Check:
    params: dict
    family: str
    statistic: str
    domain: tuple[int, int]
    counts: dict[int, int]
    uniform: bool
    common: Optional[int]
    expected: int
    passed: bool

    def to_dict(self) -> dict:
        return {
            "params": {k: str(v) for k, v in self.params.items()},
            "family": self.family,
            "statistic": self.statistic,
            "domain": [str(self.domain[0]), str(self.domain[1])],
            "counts": {str(v): str(c) for v, c in sorted(self.counts.items())},
            "uniform": self.uniform,
            "common": None if self.common is None else str(self.common),
            "expected": str(self.expected),
            "passed": self.passed,
        }


@dataclass
class TheoremReport:
    theorem: str
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {"theorem": self.theorem, "passed": self.passed,
                "checks": [c.to_dict() for c in self.checks]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _judge(table: DistributionTable, lo: int, hi: int, expected: int, params: dict) -> Check:
    dom = range(lo, hi + 1)
    uniform = table.uniform(dom)
    common = table.common_count(dom)
    return Check(params, table.spec, table.selector, (lo, hi), dict(table.counts),
                 uniform, common, expected, uniform and common == expected)


def _check(spec: FamilySpec, sel: Optional[str], kind: str, lo: int, hi: int,
           expected: int, **params) -> Check:
    table = distribution_table(spec, Selector.parse(sel) if sel else None, kind)
    return _judge(table, lo, hi, expected, params)


# ---- Catalan, Narayana, circular peaks -------------------------------------

def _t5(part: int, max_n: int = 6, **_) -> Iterator[Check]:
    for n in range(1, max_n + 1):
        if part == 1:
            yield _check(FamilySpec.p(n, 1, 1, "first=U"), "up-start", "on-or-below",
                         1, n + 1, cf.eval_form("catalan", 1, n=n), n=n)
        elif part == 2:
            yield _check(FamilySpec.p(n, 1, 1, "first=D"), "down-start", "on-or-below",
                         1, n, cf.eval_form("catalan", 3, n=n), n=n)
        else:
            yield _check(FamilySpec.p(n, 1, 1), "all-starts", "on-or-below",
                         1, 2 * n + 1, cf.eval_form("catalan", 2, n=n), n=n)


# (constraints, selector, value range, closed-form variant) per part.
def _narayana_parts(n: int, k: int, rn: int):
    return {
        1: (("first=D", "last=U", f"peak-count={k - 1}"), "peak", 0, k - 1),
        2: (("first=U", "last=D", f"valley-count={k - 1}"), "valley", 0, k - 1),
        3: (("first=U", "last=U", f"peak-count={k}"), "double-rise", 0, rn - k),
        4: (("first=D", "last=D", f"valley-count={k}"), "double-fall", 0, n - k - 1),
        5: (("first=U", f"peak-count={k}"), "up-start", 1, rn + 1),
        6: (("first=D", f"valley-count={k}"), "down-start", 1, n),
    }


_T6_VARIANT = {1: 2, 2: 2, 3: 3, 4: 6, 5: 4, 6: 1}
_NR_VARIANT = {1: 3, 2: 3, 3: 2, 4: 5, 5: 4, 6: 1}


def _k_range(part: int, n: int) -> range:
    return range(1, n) if part == 4 else range(1, n + 1)


def _t6(part: int, max_n: int = 6, **_) -> Iterator[Check]:
    for n in range(1, max_n + 1):
        for k in _k_range(part, n):
            cons, sel, lo, hi = _narayana_parts(n, k, n)[part]
            yield _check(FamilySpec.p(n, 1, 1, *cons), sel, "on-or-below", lo, hi,
                         cf.eval_form("narayana", _T6_VARIANT[part], n=n, k=k), n=n, k=k)


def _nr_nara(part: int, max_n: int = 4, r: int = 2, **_) -> Iterator[Check]:
    for n in range(1, max_n + 1):
        for k in _k_range(part, n):
            cons, sel, lo, hi = _narayana_parts(n, k, r * n)[part]
            expected = cf.eval_form("gen-narayana-r", _NR_VARIANT[part], n=n, k=k, r=r)
            yield _check(FamilySpec.p(n, r, 1, *cons), sel, "on-or-below", lo, hi,
                         expected, n=n, k=k, r=r)


def _narayana_cf(max_n: int = 6, **_) -> Iterator[Check]:
    for n in range(1, max_n + 1):
        for k in range(1, n + 1):
            yield _check(FamilySpec.p(n, 1, 0, f"descending-runs={k}"), "up-start", "below",
                         0, n, cf.eval_form("narayana", 4, n=n, k=k), n=n, k=k)


def _circular(max_n: int = 5, **_) -> Iterator[Check]:
    for n in range(1, max_n + 1):
        for k in range(1, n + 1):
            yield _check(FamilySpec.p(n, 1, 1, f"circular-peak-count={k}"), "all-starts",
                         "on-or-below", 1, 2 * n + 1,
                         cf.eval_form("narayana-circular", 1, n=n, k=k), n=n, k=k)


# ---- flat steps -----------------------------------------------------------

_T8 = {
    1: ("U", "up-start", lambda k, l: (1, k + 1), 1),
    2: ("D", "down-start", lambda k, l: (1, k), 2),
    3: ("F", "flat-start", lambda k, l: (1, l), 6),
    4: ("UF", "up-or-flat-start", lambda k, l: (1, k + l + 1), 3),
    5: ("DF", "down-or-flat-start", lambda k, l: (1, k + l), 4),
    6: ("UD", "up-or-down-start", lambda k, l: (1, 2 * k + 1), 5),
    7: (None, "all-starts", lambda k, l: (1, 2 * k + l + 1), 7),
}


def _t8(part: int, max_kl: int = 6, s_values=(1, 2), **_) -> Iterator[Check]:
    first, sel, rng, variant = _T8[part]
    for s in s_values:
        for k in range(max_kl + 1):
            for l in range(max_kl + 1 - k):
                lo, hi = rng(k, l)
                if hi < lo:
                    continue  # no step of the selected kind exists
                expected = cf.eval_form("t", variant, k=k, l=l)
                cons = (f"first={first}",) if first else ()
                yield _check(FamilySpec.q(k, l, 1, s, 1, *cons), sel, "on-or-below",
                             lo, hi, expected, k=k, l=l, s=s)


# ---- even positions and residues -------------------------------------------

def _th91(part: int, max_n: int = 6, **_) -> Iterator[Check]:
    for n in range(1, max_n + 1):
        if part == 1:
            for k in range(2, n + 1):
                yield _check(FamilySpec.p(n - 1, 1, 2, "first=D", f"even-down-count={k - 1}"),
                             "down-start-mod:2:0", "on-or-below", 1, k - 1,
                             cf.eval_form("narayana", 5, n=n, k=k), n=n, k=k)
        else:
            for k in range(1, n + 1):
                yield _check(FamilySpec.p(n - 1, 1, 2, "first=U", f"even-up-count={k}"),
                             "up-start-mod:2:0", "on-or-below", 1, k,
                             cf.eval_form("narayana", 2, n=n, k=k), n=n, k=k)


def _mod_vector(p, kind: str, m: int) -> tuple[int, ...]:
    out = [0] * m
    for st, x in zip(p.steps, p.positions):
        if st.kind == kind:
            out[x % m] += 1
    return tuple(out)


def _nrnara(part: int, max_n: int = 4, r: int = 2, **_) -> Iterator[Check]:
    m = r + 1
    for n in range(1, max_n + 1):
        if part == 2:
            spec = FamilySpec.p(n - 1, r, m, "first=U")
            sel = Selector("up-start-mod", m, 0)
            groups = distribution_by(spec, lambda p: _mod_vector(p, "up", m), sel)
            for parts in product(range(n + 1), repeat=m):
                if sum(parts) != n * r + 1 or parts[0] < 1:
                    continue
                table = groups.get(parts) or DistributionTable(f"{spec} [{parts}]", str(sel))
                expected = cf.eval_form("multi-narayana", 2, n=n, parts=parts)
                yield _judge(table, 1, parts[0], expected, {"n": n, "r": r, "classes": parts})
        else:
            if n < 2:
                continue
            spec = FamilySpec.p(n - 1, r, m, "first=D")
            sel = Selector("down-start-mod", m, 0)
            groups = distribution_by(spec, lambda p: _mod_vector(p, "down", m), sel)
            for parts in product(range(1, n + 2), repeat=m):
                if sum(q - 1 for q in parts) != n - 1 or parts[0] < 2:
                    continue
                downs = tuple(q - 1 for q in parts)
                table = groups.get(downs) or DistributionTable(f"{spec} [{downs}]", str(sel))
                mirrored = tuple(n - q + 1 for q in parts)
                expected = cf.eval_form("multi-narayana", 1, n=n, parts=mirrored)
                yield _judge(table, 1, parts[0] - 1, expected, {"n": n, "r": r, "classes": parts})


# ---- general down-step depth ------------------------------------------------

def _th11(part: int, max_n: int = 3, max_r: int = 3, **_) -> Iterator[Check]:
    for r in range(1, max_r + 1):
        for n in range(1, max_n + 1):
            if part == 1:
                yield _check(FamilySpec.p(n, r, 1, "first=U"), "up-start", "on-or-below",
                             1, r * n + 1, cf.eval_form("fuss-catalan", 3, n=n, r=r), n=n, r=r)
            elif part == 2:
                yield _check(FamilySpec.p(n, r, 1, "first=D"), "down-start", "on-or-below",
                             1, n, cf.eval_form("fuss-catalan", 2, n=n, r=r), n=n, r=r)
            else:
                yield _check(FamilySpec.p(n, r, 1), "all-starts", "on-or-below",
                             1, (r + 1) * n + 1, cf.eval_form("fuss-catalan", 1, n=n, r=r),
                             n=n, r=r)


def _cf_corollary_r(max_n: int = 3, max_r: int = 3, **_) -> Iterator[Check]:
    for r in range(1, max_r + 1):
        for n in range(1, max_n + 1):
            yield _check(FamilySpec.p(n, r, 0), "up-start", "below", 0, r * n,
                         cf.eval_form("fuss-catalan", 3, n=n, r=r), n=n, r=r)


def _th12(part: int, max_n: int = 3, max_r: int = 3, **_) -> Iterator[Check]:
    for r in range(1, max_r + 1):
        for n in range(1, max_n + 1):
            if r * n < 2:
                continue  # P(1,1,-1) is just D: no up step to count
            if part == 1:
                yield _check(FamilySpec.p(n, r, -1, "first=U"), "up-start", "on-or-above",
                             1, r * n - 1, cf.eval_form("fuss-catalan-2nd", 3, n=n, r=r),
                             n=n, r=r)
            elif part == 2:
                yield _check(FamilySpec.p(n, r, -1, "first=D"), "down-start", "on-or-above",
                             1, n, cf.eval_form("fuss-catalan-2nd", 2, n=n, r=r), n=n, r=r)
            else:
                yield _check(FamilySpec.p(n, r, -1), "all-starts", "on-or-above",
                             1, (r + 1) * n - 1, cf.eval_form("fuss-catalan-2nd", 1, n=n, r=r),
                             n=n, r=r)


# ---- Sparre Andersen ----------------------------------------------------------

def _sparre(max_n: int = 6, **_) -> Iterator[Check]:
    for n in range(1, max_n + 1):
        spec = FamilySpec.p(n, 1, 1)
        pos = distribution_table(spec, None, "positive-vertices")
        lh = distribution_table(spec, None, "leftmost-highest")
        chk = _judge(pos, 1, 2 * n + 1, cf.catalan(n), {"n": n})
        chk.passed = chk.passed and pos.counts == lh.counts
        yield chk


def lh_orbit_positions(n: int) -> bool:
    """Rotating a path whose highest point is its endpoint by ``i`` puts it at ``2n+1-i``."""
    for p in enumerate_family(FamilySpec.p(n, 1, 1)):
        if stats.leftmost_highest_index(p) != 2 * n + 1:
            continue
        for i in range(2 * n + 1):
            if stats.leftmost_highest_index(conjugate(p, i)) != 2 * n + 1 - i:
                return False
    return True


def _leftmost(max_n: int = 6, **_) -> Iterator[Check]:
    for n in range(1, max_n + 1):
        chk = _check(FamilySpec.p(n, 1, 1), None, "leftmost-highest", 1, 2 * n + 1,
                     cf.catalan(n), n=n)
        chk.passed = chk.passed and lh_orbit_positions(n)
        yield chk


def _parts(fn: Callable, ids: range) -> dict[int, Callable]:
    return {i: (lambda i: lambda **b: fn(i, **b))(i) for i in ids}


REGISTRY: dict[str, Callable[..., Iterator[Check]]] = {}
for _i, _f in _parts(_t5, range(1, 4)).items():
    REGISTRY[f"t5.{_i}"] = _f
for _i, _f in _parts(_t6, range(1, 7)).items():
    REGISTRY[f"t6.{_i}"] = _f
REGISTRY["narayana-cf"] = _narayana_cf
REGISTRY["circular"] = _circular
for _i, _f in _parts(_t8, range(1, 8)).items():
    REGISTRY[f"t8.{_i}"] = _f
for _i, _f in _parts(_th91, range(1, 3)).items():
    REGISTRY[f"th91.{_i}"] = _f
for _i, _f in _parts(_th11, range(1, 4)).items():
    REGISTRY[f"th11.{_i}"] = _f
REGISTRY["cf-corollary-r"] = _cf_corollary_r
for _i, _f in _parts(_th12, range(1, 4)).items():
    REGISTRY[f"th12.{_i}"] = _f
for _i, _f in _parts(_nr_nara, range(1, 7)).items():
    REGISTRY[f"nr-nara-forms.{_i}"] = _f
for _i, _f in _parts(_nrnara, range(1, 3)).items():
    REGISTRY[f"nrnara.{_i}"] = _f
REGISTRY["sparre-andersen"] = _sparre
REGISTRY["leftmost-highest"] = _leftmost


def verify_theorem(theorem_id: str, **bounds) -> TheoremReport:
    """Run every parameter tuple of a registered statement within ``bounds``.

    Recognised bounds: ``max_n``, ``max_r``, ``max_kl``, ``r``, ``s_values``.
    """
    try:
        fn = REGISTRY[theorem_id]
    except KeyError:
        raise KeyError(f"unknown theorem {theorem_id!r}; known: {', '.join(REGISTRY)}") from None
    bounds = {k: v for k, v in bounds.items() if v is not None}
    return TheoremReport(theorem_id, list(fn(**bounds)))


def positive_multiset_matches(n: int) -> bool:
    spec = FamilySpec.p(n, 1, 1)
    paths = list(enumerate_family(spec))
    return (Counter(map(stats.positive_vertex_count, paths))
            == Counter(map(stats.leftmost_highest_index, paths)))
