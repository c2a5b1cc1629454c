"""Closed-form counting formulas, each family with all its equivalent variants.

Every variant is a product of binomials times ``1/d`` for a single
denominator ``d``.  A variant whose denominator is not positive raises
:class:`DomainError`; a division that leaves a remainder raises
``ArithmeticError`` because it means the formula itself is wrong.
Variants are numbered from 1.
"""

from __future__ import annotations

from math import comb, prod
from typing import Callable, Sequence


class DomainError(ValueError):
    """Arguments fall outside the region where a variant is defined."""


def binom(n: int, k: int) -> int:
    """Binomial coefficient that is 0 off the usual triangle."""
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


def _div(num: int, den: int, label: str) -> int:
    if den <= 0:
        raise DomainError(f"denominator {label} = {den} is not positive")
    q, rem = divmod(num, den)
    if rem:
        raise ArithmeticError(f"{num} is not divisible by {label} = {den}")
    return q


# Each variant: (argument check or None, callable returning the value).
Form = Callable[..., int]


def _catalan_forms() -> list[Form]:
    return [
        lambda n: _div(binom(2 * n, n), n + 1, "n+1"),
        lambda n: _div(binom(2 * n + 1, n), 2 * n + 1, "2n+1"),
        lambda n: _div(binom(2 * n, n - 1), n, "n"),
    ]


def _narayana_forms() -> list[Form]:
    return [
        lambda n, k: _div(binom(n, k) * binom(n, k - 1), n, "n"),
        lambda n, k: _div(binom(n, k - 1) * binom(n - 1, k - 1), k, "k"),
        lambda n, k: _div(binom(n, k) * binom(n - 1, k - 1), n - k + 1, "n-k+1"),
        lambda n, k: _div(binom(n + 1, k) * binom(n - 1, k - 1), n + 1, "n+1"),
        lambda n, k: _div(binom(n, k) * binom(n - 1, k - 2), k - 1, "k-1"),
        lambda n, k: _div(binom(n, k - 1) * binom(n - 1, k), n - k, "n-k"),
    ]


def _narayana_circular(n: int, k: int) -> int:
    total = binom(n, k - 1) * binom(n, k) + binom(n + 1, k) * binom(n - 1, k - 1)
    return _div(total, 2 * n + 1, "2n+1")


def _t_forms() -> list[Form]:
    return [
        lambda k, l: _div(binom(2*k + l, 2*k) * binom(2*k, k), k + 1, "k+1"),
        lambda k, l: _div(binom(2*k + l, 2*k) * binom(2*k, k - 1), k, "k"),
        lambda k, l: _div(binom(2*k + l, k) * binom(k + l + 1, k + 1), k + l + 1, "k+l+1"),
        lambda k, l: _div(binom(2*k + l, k + 1) * binom(k + l, k), k + l, "k+l"),
        lambda k, l: _div(binom(2*k + l, 2*k) * binom(2*k + 1, k), 2*k + 1, "2k+1"),
        lambda k, l: _div(binom(2*k + l, k) * binom(k + l, k + 1), l, "l"),
        lambda k, l: _div(binom(2*k + l + 1, 2*k + 1) * binom(2*k + 1, k), 2*k + l + 1,
                          "2k+l+1"),
    ]


def _z_forms() -> list[Form]:
    return [
        lambda k, l: _div(binom(k + l, k) * binom(2*k + l, k - 1), k + l, "k+l"),
        lambda k, l: _div(binom(k + l - 1, k - 1) * binom(2*k + l, k - 1), k, "k"),
        lambda k, l: _div(binom(2*k + l, k) * binom(k + l - 1, k - 1), k + l + 1, "k+l+1"),
        lambda k, l: _div(binom(2*k + l, k - 1) * binom(k + l - 1, k), l, "l"),
        lambda k, l: _div(binom(2*k + l + 1, k) * binom(k + l - 1, k - 1), 2*k + l + 1,
                          "2k+l+1"),
    ]


def _fuss_forms() -> list[Form]:
    return [
        lambda n, r: _div(binom((r + 1)*n + 1, n), (r + 1)*n + 1, "(r+1)n+1"),
        lambda n, r: _div(binom((r + 1)*n, n - 1), n, "n"),
        lambda n, r: _div(binom((r + 1)*n, n), r*n + 1, "rn+1"),
    ]


def _fuss2_forms() -> list[Form]:
    return [
        lambda n, r: _div(binom((r + 1)*n - 1, n), (r + 1)*n - 1, "(r+1)n-1"),
        lambda n, r: _div(binom((r + 1)*n - 2, n - 1), n, "n"),
        lambda n, r: _div(binom((r + 1)*n - 2, n), r*n - 1, "rn-1"),
    ]


def _gen_narayana_forms() -> list[Form]:
    return [
        lambda n, k, r: _div(binom(r*n, k - 1) * binom(n, k), n, "n"),
        lambda n, k, r: _div(binom(r*n, k) * binom(n - 1, k - 1), r*n - k + 1, "rn-k+1"),
        lambda n, k, r: _div(binom(r*n, k - 1) * binom(n - 1, k - 1), k, "k"),
        lambda n, k, r: _div(binom(r*n + 1, k) * binom(n - 1, k - 1), r*n + 1, "rn+1"),
        lambda n, k, r: _div(binom(r*n, k - 1) * binom(n - 1, k), n - k, "n-k"),
    ]


def _check_parts(n: int, parts: Sequence[int]) -> None:
    r = len(parts) - 1
    if r < 1:
        raise DomainError("need at least two class counts")
    if sum(parts) != n * r + 1:
        raise DomainError(f"class counts must sum to n*r+1 = {n * r + 1}, got {sum(parts)}")


def _multi_forms() -> list[Form]:
    def first(n, parts):
        _check_parts(n, parts)
        return _div(prod(binom(n, q) for q in parts), n, "n")

    def second(n, parts):
        _check_parts(n, parts)
        rest = prod(binom(n, q) for q in parts[1:])
        return _div(binom(n - 1, parts[0] - 1) * rest, parts[0], "n0")

    return [first, second]


def _ballot(n: int, r: int, h: int) -> int:
    if n == 0:
        return 1
    m = (r + 1) * n + h
    return _div(h * binom(m, n), m, "(r+1)n+h")


# Aggregate kernels (no variants): Motzkin, Schroeder and their "no axis flat" kin.
def motzkin_nk(n: int, k: int) -> int:
    return _div(binom(n, 2*k) * binom(2*k, k), k + 1, "k+1")


def schroder_nk(n: int, k: int) -> int:
    return _div(binom(n + k, 2*k) * binom(2*k, k), k + 1, "k+1")


def riordan_nk(n: int, k: int) -> int:
    if k == 0:
        return 1 if n == 0 else 0
    return _div(binom(n - k - 1, k - 1) * binom(n, k - 1), k, "k")


def small_schroder_nk(n: int, k: int) -> int:
    if k == 0:
        return 1 if n == 0 else 0
    return _div(binom(n - 1, k - 1) * binom(n + k, k - 1), k, "k")


def motzkin(n: int) -> int:
    return sum(motzkin_nk(n, k) for k in range(n // 2 + 1))


def schroder(n: int) -> int:
    return sum(schroder_nk(n, k) for k in range(n + 1))


def riordan(n: int) -> int:
    return sum(riordan_nk(n, k) for k in range(n // 2 + 1))


def small_schroder(n: int) -> int:
    return sum(small_schroder_nk(n, k) for k in range(n + 1))


FORMS: dict[str, list[Form]] = {
    "catalan": _catalan_forms(),
    "narayana": _narayana_forms(),
    "narayana-circular": [_narayana_circular],
    "t": _t_forms(),
    "z": _z_forms(),
    "motzkin": [motzkin],
    "motzkin-nk": [motzkin_nk],
    "riordan": [riordan],
    "riordan-nk": [riordan_nk],
    "schroder": [schroder],
    "schroder-nk": [schroder_nk],
    "small-schroder": [small_schroder],
    "small-schroder-nk": [small_schroder_nk],
    "ballot": [_ballot],
    "fuss-catalan": _fuss_forms(),
    "fuss-catalan-2nd": _fuss2_forms(),
    "gen-narayana-r": _gen_narayana_forms(),
    "multi-narayana": _multi_forms(),
}

# Variant used when none is requested.
CANONICAL = {"z": 2}

# Extra argument constraints shared by every variant of a family.
_FAMILY_DOMAIN = {
    "narayana": lambda a: a["n"] >= 1 or "n >= 1",
    "narayana-circular": lambda a: a["n"] >= 1 or "n >= 1",
    "gen-narayana-r": lambda a: (a["n"] >= 1 and a["r"] >= 1) or "n >= 1 and r >= 1",
    "z": lambda a: a["k"] >= 1 or "k >= 1",
    "fuss-catalan-2nd": lambda a: (a["n"] >= 1 and a["r"] >= 1) or "n >= 1 and r >= 1",
}


def variant_count(family: str) -> int:
    return len(_forms(family))


def _forms(family: str) -> list[Form]:
    try:
        return FORMS[family]
    except KeyError:
        raise KeyError(f"unknown family {family!r}; known: {', '.join(sorted(FORMS))}") from None


def eval_form(family: str, variant: int | None = None, **args) -> int:
    """Evaluate one variant of a family; ``variant`` is 1-based."""
    forms = _forms(family)
    if variant is None:
        variant = CANONICAL.get(family, 1)
    if not 1 <= variant <= len(forms):
        raise DomainError(f"{family} has variants 1..{len(forms)}, not {variant}")
    check = _FAMILY_DOMAIN.get(family)
    if check is not None:
        verdict = check(args)
        if verdict is not True:
            raise DomainError(f"{family} requires {verdict}")
    return forms[variant - 1](**args)


def try_eval(family: str, variant: int, **args) -> int | None:
    """Like :func:`eval_form` but returns None outside the variant's domain."""
    try:
        return eval_form(family, variant, **args)
    except DomainError:
        return None


def catalan(n: int) -> int:
    return eval_form("catalan", 1, n=n)


def narayana(n: int, k: int) -> int:
    if n == 0:
        return 1 if k == 0 else 0
    return eval_form("narayana", 1, n=n, k=k)


def t_number(k: int, l: int) -> int:
    return eval_form("t", 1, k=k, l=l)


def z_number(k: int, l: int) -> int:
    if k == 0:
        return 1 if l == 0 else 0
    return eval_form("z", 2, k=k, l=l)


def fuss_catalan(n: int, r: int) -> int:
    return eval_form("fuss-catalan", 1, n=n, r=r)


def gen_narayana(n: int, k: int, r: int) -> int:
    return eval_form("gen-narayana-r", 1, n=n, k=k, r=r)


_SEQUENCES = {
    "catalan": catalan,
    "motzkin": motzkin,
    "riordan": riordan,
    "schroder": schroder,
    "small-schroder": small_schroder,
}

# The Riordan list is conventionally quoted from n = 1 (0, 1, 1, 3, ...).
_DEFAULT_OFFSET = {"riordan": 1}


def sequence(family: str, count: int, r: int | None = None,
             offset: int | None = None) -> list[int]:
    """First ``count`` terms of an aggregate sequence."""
    if offset is None:
        offset = _DEFAULT_OFFSET.get(family, 0)
    if family == "fuss-catalan":
        if r is None:
            raise ValueError("fuss-catalan needs r")
        return [fuss_catalan(n, r) for n in range(offset, offset + count)]
    try:
        fn = _SEQUENCES[family]
    except KeyError:
        known = ", ".join(sorted([*_SEQUENCES, "fuss-catalan"]))
        raise KeyError(f"unknown sequence {family!r}; known: {known}") from None
    return [fn(n) for n in range(offset, offset + count)]


def _rel_m_r(b):
    return all(motzkin_nk(n + k, k) == schroder_nk(n, k)
               for n in range(b + 1) for k in range(b + 1))


def _rel_j_s(b):
    return all(riordan_nk(n + k, k) == small_schroder_nk(n, k)
               for n in range(b + 1) for k in range(b + 1))


def _rel_r_2s(b):
    return all(schroder(n) == 2 * small_schroder(n) for n in range(1, b + 1))


def _rel_m_jj(b):
    return all(motzkin(n) == riordan(n) + riordan(n + 1) for n in range(b + 1))


def _rel_t_z(b):
    # T(k,l) = Z(k,l) + Z(k+1,l-1): a path either has no flat on the axis or
    # it maps to one with an extra up/down pair in place of its last axis flat.
    return all(t_number(k, l) == z_number(k, l) + (z_number(k + 1, l - 1) if l else 0)
               for k in range(b + 1) for l in range(b + 1))


def _rel_nara_sum(b):
    return all(sum(narayana(n, k) for k in range(1, n + 1)) == catalan(n)
               for n in range(1, b + 1))


def _rel_nr_sum(b):
    return all(sum(gen_narayana(n, k, r) for k in range(1, n + 1)) == fuss_catalan(n, r)
               for r in range(1, 4) for n in range(1, b + 1))


def _rel_circ_sum(b):
    for n in range(1, b + 1):
        for k in range(1, n + 1):
            total = binom(n, k - 1) * binom(n, k) + binom(n + 1, k) * binom(n - 1, k - 1)
            if total != (2*n + 1) * narayana(n, k):
                return False
    return True


RELATIONS: dict[str, Callable[[int], bool]] = {
    "M-R": _rel_m_r,
    "J-S": _rel_j_s,
    "R-2S": _rel_r_2s,
    "M-JJ": _rel_m_jj,
    "T-Z": _rel_t_z,
    "nara-sum": _rel_nara_sum,
    "Nr-sum": _rel_nr_sum,
    "circ-sum": _rel_circ_sum,
}


def relation_check(relation_id: str, bound: int = 8) -> bool:
    try:
        fn = RELATIONS[relation_id]
    except KeyError:
        raise KeyError(f"unknown relation {relation_id!r}; known: {', '.join(RELATIONS)}") from None
    return fn(bound)
