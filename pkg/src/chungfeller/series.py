"""Truncated multivariate power series with exact rational coefficients.

A :class:`SeriesRing` fixes variable names and nonnegative integer weights.
The weighted degree of a monomial is the dot product of its exponents with
the weights, and a series of order ``N`` knows every coefficient of
weighted degree at most ``N``.  Weight-0 variables therefore behave as
polynomial parameters inside each degree: ``E(x, s)`` lives in the ring
``x:1, s:0``.

Named series are built from functional equations or path decompositions;
the closed forms they should equal serve as test oracles only.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence, Union

Number = Union[int, Fraction]
Monomial = tuple[int, ...]


class SeriesError(ValueError):
    pass


class SeriesRing:
    def __init__(self, names: Sequence[str], weights: Sequence[int] | None = None,
                 order: int = 12):
        names = tuple(names)
        weights = tuple(weights) if weights is not None else (1,) * len(names)
        if len(set(names)) != len(names):
            raise SeriesError("variable names must be distinct")
        if len(weights) != len(names) or any(w < 0 for w in weights):
            raise SeriesError("one nonnegative weight per variable")
        if not any(weights):
            raise SeriesError("at least one variable needs positive weight")
        self.names = names
        self.weights = weights
        self.order = order
        self._pos = {n: i for i, n in enumerate(names)}

    def __repr__(self) -> str:
        body = ", ".join(f"{n}:{w}" for n, w in zip(self.names, self.weights))
        return f"SeriesRing({body}; order {self.order})"

    def __eq__(self, other) -> bool:
        return (isinstance(other, SeriesRing) and self.names == other.names
                and self.weights == other.weights)

    def __hash__(self) -> int:
        return hash((self.names, self.weights))

    def index(self, name: str) -> int:
        try:
            return self._pos[name]
        except KeyError:
            raise SeriesError(f"no variable {name!r} in {self!r}") from None

    def weight(self, name: str) -> int:
        return self.weights[self.index(name)]

    def degree(self, mono: Monomial) -> int:
        return sum(w * e for w, e in zip(self.weights, mono))

    def zero_mono(self) -> Monomial:
        return (0,) * len(self.names)

    def series(self, terms: Mapping[Monomial, Number], order: int | None = None) -> Series:
        return Series(self, terms, self.order if order is None else order)

    def const(self, c: Number) -> Series:
        return self.series({self.zero_mono(): Fraction(c)})

    def zero(self) -> Series:
        return self.series({})

    def one(self) -> Series:
        return self.const(1)

    def var(self, name: str) -> Series:
        e = [0] * len(self.names)
        e[self.index(name)] = 1
        return self.series({tuple(e): Fraction(1)})

    def monomial(self, c: Number = 1, **exps: int) -> Series:
        e = [0] * len(self.names)
        for name, k in exps.items():
            e[self.index(name)] = k
        return self.series({tuple(e): Fraction(c)})

    def vars(self) -> tuple[Series, ...]:
        return tuple(self.var(n) for n in self.names)

    def with_order(self, order: int) -> SeriesRing:
        return SeriesRing(self.names, self.weights, order)


class Series:
    __slots__ = ("ring", "terms", "order")

    def __init__(self, ring: SeriesRing, terms: Mapping[Monomial, Number], order: int):
        self.ring = ring
        self.order = order
        deg = ring.degree
        self.terms = {m: Fraction(c) for m, c in terms.items() if c and deg(m) <= order}

    # -- helpers -----------------------------------------------------------
    def _lift(self, other) -> Series:
        if isinstance(other, Series):
            if other.ring != self.ring:
                raise SeriesError("series belong to different rings")
            return other
        if isinstance(other, (int, Fraction)):
            return Series(self.ring, {self.ring.zero_mono(): Fraction(other)}, self.order)
        return NotImplemented

    def _new(self, terms, order) -> Series:
        return Series(self.ring, terms, order)

    def grade(self, d: int) -> dict[Monomial, Fraction]:
        deg = self.ring.degree
        return {m: c for m, c in self.terms.items() if deg(m) == d}

    def valuation(self) -> int | None:
        if not self.terms:
            return None
        return min(map(self.ring.degree, self.terms))

    def truncate(self, order: int) -> Series:
        return self._new(self.terms, min(order, self.order))

    def coeff(self, **exps: int) -> Fraction:
        e = [0] * len(self.ring.names)
        for name, k in exps.items():
            e[self.ring.index(name)] = k
        mono = tuple(e)
        if self.ring.degree(mono) > self.order:
            raise SeriesError(f"coefficient of degree {self.ring.degree(mono)} "
                              f"is beyond order {self.order}")
        return self.terms.get(mono, Fraction(0))

    def constant(self) -> Fraction:
        return self.terms.get(self.ring.zero_mono(), Fraction(0))

    def __eq__(self, other) -> bool:
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        n = min(self.order, other.order)
        return self.truncate(n).terms == other.truncate(n).terms

    def __repr__(self) -> str:
        if not self.terms:
            return f"0 + O({self.order + 1})"
        parts = []
        for m in sorted(self.terms, key=lambda m: (self.ring.degree(m), m)):
            mono = "*".join(n if e == 1 else f"{n}^{e}"
                            for n, e in zip(self.ring.names, m) if e)
            parts.append(f"{self.terms[m]}" + (f"*{mono}" if mono else ""))
        return " + ".join(parts) + f" + O({self.order + 1})"

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other) -> Series:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return self._new(out, min(self.order, other.order))

    __radd__ = __add__

    def __neg__(self) -> Series:
        return self._new({m: -c for m, c in self.terms.items()}, self.order)

    def __sub__(self, other) -> Series:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> Series:
        return (-self) + other

    def __mul__(self, other) -> Series:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        order = min(self.order, other.order)
        deg = self.ring.degree
        out: dict[Monomial, Fraction] = {}
        b_items = [(m, c, deg(m)) for m, c in other.terms.items()]
        for ma, ca in self.terms.items():
            da = deg(ma)
            for mb, cb, db in b_items:
                if da + db > order:
                    continue
                m = tuple(x + y for x, y in zip(ma, mb))
                out[m] = out.get(m, 0) + ca * cb
        return self._new(out, order)

    __rmul__ = __mul__

    def _split_constant(self) -> tuple[Fraction, Series]:
        zero = self.grade(0)
        c = zero.get(self.ring.zero_mono(), Fraction(0))
        if len(zero) > (1 if c else 0) or c == 0:
            raise SeriesError("degree-0 part must be a nonzero constant")
        rest = dict(self.terms)
        del rest[self.ring.zero_mono()]
        return c, self._new(rest, self.order)

    def inverse(self) -> Series:
        c, g = self._split_constant()
        q = g * (-1 / c)
        total = self._new({self.ring.zero_mono(): Fraction(1)}, self.order)
        power = total
        for _ in range(self.order):
            power = power * q
            if not power.terms:
                break
            total = total + power
        return total * (1 / c)

    def __truediv__(self, other) -> Series:
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        other = self._lift(other)
        return self * other.inverse()

    def __rtruediv__(self, other) -> Series:
        return self._lift(other) * self.inverse()

    def __pow__(self, k: int) -> Series:
        if not isinstance(k, int):
            raise SeriesError("only integer powers are supported")
        if k < 0:
            return self.inverse() ** (-k)
        result = self._new({self.ring.zero_mono(): Fraction(1)}, self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def sqrt(self) -> Series:
        c, g = self._split_constant()
        if c != 1:
            raise SeriesError("square root needs constant term 1")
        total = self._new({self.ring.zero_mono(): Fraction(1)}, self.order)
        power = total
        coef = Fraction(1)
        for k in range(1, self.order + 1):
            coef = coef * (Fraction(1, 2) - (k - 1)) / k
            power = power * g
            if not power.terms:
                break
            total = total + power * coef
        return total

    # -- calculus and substitutions ----------------------------------------
    def derivative(self, name: str) -> Series:
        i = self.ring.index(name)
        out = {}
        for m, c in self.terms.items():
            if m[i]:
                e = list(m)
                e[i] -= 1
                out[tuple(e)] = c * m[i]
        return self._new(out, self.order - self.ring.weights[i])

    def subs(self, name: str, value: Number) -> Series:
        """Substitute a number for a weight-0 variable."""
        i = self.ring.index(name)
        if self.ring.weights[i]:
            raise SeriesError(f"can only substitute weight-0 variables, {name} has weight "
                              f"{self.ring.weights[i]}")
        value = Fraction(value)
        out: dict[Monomial, Fraction] = {}
        for m, c in self.terms.items():
            e = list(m)
            k = e[i]
            e[i] = 0
            key = tuple(e)
            out[key] = out.get(key, 0) + c * value ** k
        return self._new(out, self.order)

    def swap(self, a: str, b: str) -> Series:
        i, j = self.ring.index(a), self.ring.index(b)
        if self.ring.weights[i] != self.ring.weights[j]:
            raise SeriesError("can only swap variables of equal weight")
        out = {}
        for m, c in self.terms.items():
            e = list(m)
            e[i], e[j] = e[j], e[i]
            out[tuple(e)] = c
        return self._new(out, self.order)

    def mul_monomial(self, **exps: int) -> Series:
        shift = [0] * len(self.ring.names)
        for name, k in exps.items():
            shift[self.ring.index(name)] = k
        out = {tuple(x + y for x, y in zip(m, shift)): c for m, c in self.terms.items()}
        return self._new(out, self.order + self.ring.degree(tuple(shift)))

    def div_monomial(self, **exps: int) -> Series:
        shift = [0] * len(self.ring.names)
        for name, k in exps.items():
            shift[self.ring.index(name)] = k
        out = {}
        for m, c in self.terms.items():
            e = tuple(x - y for x, y in zip(m, shift))
            if min(e) < 0:
                raise SeriesError(f"series is not divisible by {exps}")
            out[e] = c
        return self._new(out, self.order - self.ring.degree(tuple(shift)))

    def restricted(self, **exps: int) -> Series:
        """Keep only terms with the given exponents (e.g. a fixed power of a parameter)."""
        idx = {self.ring.index(n): k for n, k in exps.items()}
        return self._new({m: c for m, c in self.terms.items()
                          if all(m[i] == k for i, k in idx.items())}, self.order)

    def map_into(self, ring: SeriesRing, mapping: Mapping[str, object],
                 order: int | None = None) -> Series:
        """Rewrite into another ring.

        ``mapping`` sends each source variable to a target variable name,
        a number, or a target :class:`Series`.  Variables missing from the
        mapping keep their name.  Each substituted image must not lower
        weighted degree, so coefficients up to the returned order are exact.
        """
        images = []
        for name, w in zip(self.ring.names, self.ring.weights):
            img = mapping.get(name, name)
            if isinstance(img, str):
                img = ring.var(img)
            elif isinstance(img, (int, Fraction)):
                if w and img:
                    raise SeriesError(f"cannot set weighted variable {name} to a nonzero number")
                img = ring.const(img)
            images.append(img)
        if order is None:
            order = self.order
            for img, w in zip(images, self.ring.weights):
                v = img.valuation()
                if w and v is not None and v < w:
                    raise SeriesError("image lowers degree; pass an explicit order")
        cache: dict[tuple[int, int], Series] = {}

        def power(i: int, k: int) -> Series:
            key = (i, k)
            if key not in cache:
                cache[key] = (images[i] ** k).truncate(order)
            return cache[key]

        total = ring.series({}, order)
        for m, c in self.terms.items():
            term = ring.series({ring.zero_mono(): c}, order)
            for i, k in enumerate(m):
                if k:
                    term = term * power(i, k)
            total = total + term
        return total.truncate(order)


def compose(outer: Sequence[Number], inner: Series) -> Series:
    """Evaluate ``sum outer[k] * inner**k`` for an inner series with no degree-0 part."""
    v = inner.valuation()
    if inner.grade(0):
        raise SeriesError("inner series must have no degree-0 terms")
    ring = inner.ring
    if v is None:
        return ring.series({ring.zero_mono(): Fraction(outer[0]) if outer else 0}, inner.order)
    order = min(inner.order, len(outer) * v - 1)
    acc = ring.series({}, order)
    for c in reversed(list(outer)):
        acc = acc * inner.truncate(order) + Fraction(c)
    return acc.truncate(order)


def univariate_coeffs(s: Series, name: str) -> list[Fraction]:
    """Coefficient list of a series in a single variable of its ring."""
    i = s.ring.index(name)
    w = s.ring.weights[i]
    n = s.order // w if w else s.order
    out = [Fraction(0)] * (n + 1)
    for m, c in s.terms.items():
        if any(e for j, e in enumerate(m) if j != i):
            raise SeriesError(f"series depends on variables other than {name}")
        if m[i] <= n:
            out[m[i]] = c
    return out


def divided_difference(f: Series, a: str, b: str) -> Series:
    """``(f(a) - f(b)) / (a - b)`` computed monomial by monomial.

    ``f`` must not involve ``b``; each ``a**m`` becomes
    ``sum_{i<m} a**i * b**(m-1-i)``.
    """
    ring = f.ring
    i, j = ring.index(a), ring.index(b)
    if ring.weights[i] != ring.weights[j]:
        raise SeriesError("divided difference needs variables of equal weight")
    out: dict[Monomial, Fraction] = {}
    for m, c in f.terms.items():
        if m[j]:
            raise SeriesError(f"series already involves {b}")
        for k in range(m[i]):
            e = list(m)
            e[i], e[j] = k, m[i] - 1 - k
            key = tuple(e)
            out[key] = out.get(key, 0) + c
    return Series(ring, out, f.order - ring.weights[i])


# ---- fixed points ---------------------------------------------------------------

def iterate_to_fixed_point(step: Callable[[Series], Series], seed: Series,
                           max_iter: int | None = None) -> Series:
    """Iterate ``step`` from ``seed`` until a full pass changes nothing."""
    limit = seed.order + 2 if max_iter is None else max_iter
    current = seed
    for _ in range(limit + 1):
        nxt = step(current).truncate(seed.order)
        if nxt.terms == current.terms:
            return nxt
        current = nxt
    raise SeriesError(f"map did not stabilize within {limit} iterations")


def _catalan_map(ring):
    x = ring.var("x")
    return lambda c: 1 / (1 - x * c)


def _fuss_map(ring, r):
    x = ring.var("x")
    return lambda f: 1 + x * f ** (r + 1)


def _peaks_map(ring, r):
    x, t = ring.var("x"), ring.var("t")
    return lambda F: 1 + x * F ** r * (F - 1 + t)


def _gen_narayana_map(ring, r):
    x, t = ring.var("x"), ring.var("t")
    return lambda G: x * (1 + G) ** r * (t + G)


def _mxst_map(ring):
    x, t = ring.var("x"), ring.var("t")
    return lambda M: 1 / (1 - x * t * M.swap("s", "t"))


def _pmodr_map(ring):
    alphas = ring.vars()

    def step(F):
        out = ring.one()
        for a in alphas:
            out = out * (a + F)
        return out
    return step


def solve_fixed_point(name: str, order: int = 12, r: int = 1) -> Series:
    """Solve one of the built-in functional equations to ``order``.

    ``catalan``: c = 1/(1 - x c);  ``fuss``: f = 1 + x f^(r+1);
    ``peaks-r``: F = 1 + x F^r (F - 1 + t);  ``gen-narayana``: G = x (1+G)^r (t+G);
    ``mxst``: M(x,s,t) = 1/(1 - x t M(x,t,s));
    ``pmodr``: F = (a0 + F)(a1 + F)...(ar + F), graded by total degree in the a_i.
    """
    if name == "catalan":
        ring = SeriesRing(("x",), order=order)
        return iterate_to_fixed_point(_catalan_map(ring), ring.one())
    if name == "fuss":
        ring = SeriesRing(("x",), order=order)
        return iterate_to_fixed_point(_fuss_map(ring, r), ring.one())
    if name == "peaks-r":
        ring = SeriesRing(("x", "t"), (1, 0), order=order)
        return iterate_to_fixed_point(_peaks_map(ring, r), ring.one())
    if name == "gen-narayana":
        ring = SeriesRing(("x", "t"), (1, 0), order=order)
        return iterate_to_fixed_point(_gen_narayana_map(ring, r), ring.zero())
    if name == "mxst":
        ring = SeriesRing(("x", "s", "t"), (1, 0, 0), order=order)
        return iterate_to_fixed_point(_mxst_map(ring), ring.one())
    if name == "pmodr":
        ring = SeriesRing(tuple(f"a{i}" for i in range(r + 1)), order=order)
        return iterate_to_fixed_point(_pmodr_map(ring), ring.zero())
    raise KeyError(f"unknown functional equation {name!r}")


# ---- Lagrange inversion -------------------------------------------------------------

def lagrange_ring(params: Iterable[str] = (), order: int = 12) -> SeriesRing:
    """Ring with the series variable ``u`` and weight-0 parameters."""
    params = tuple(params)
    return SeriesRing(("u", *params), (1,) + (0,) * len(params), order=order)


def _extract_u(s: Series, k: int, scale: Fraction):
    ring = s.ring
    if k > s.order:
        raise SeriesError(f"need order {k}, series has order {s.order}")
    got = {m[1:]: c * scale for m, c in s.terms.items() if m[0] == k}
    if len(ring.names) == 1:
        return got.get((), Fraction(0))
    return {m: c for m, c in sorted(got.items())}


def lagrange_coeff(g: Series, k: int, n: int):
    """Coefficient of ``x^n`` in ``f^k`` where ``f = x g(f)``: ``(k/n) [u^(n-k)] g^n``.

    Returns a Fraction, or a dict from parameter exponents to Fractions when
    the ring carries parameters.
    """
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    if g.ring.names[0] != "u" or g.ring.weights[0] != 1:
        raise SeriesError("g must be a series in u (weight 1)")
    if g.order < n - k:
        raise SeriesError(f"g must be known to order {n - k}")
    return _extract_u(g.truncate(n - k) ** n, n - k, Fraction(k, n))


def lagrange_phi_coeff(g: Series, phi: Series, n: int, shift: int = 0):
    """``[x^n] phi(f)`` for ``f = x g(f)`` as ``[u^n] (1 - u g'/g) phi g^n``.

    ``phi`` is a Laurent series given as ``u**shift`` times the power series
    ``phi``.  The product is expanded as ``phi g^n - u phi g' g^(n-1)`` so no
    division by ``g`` is needed.
    """
    target = n - shift
    if target < 0:
        return _extract_u(g.ring.zero(), 0, Fraction(1))
    if phi.order < target or g.order < target:
        raise SeriesError(f"phi and g must be known to order {target}")
    g = g.truncate(target)
    phi = phi.truncate(target)
    if n == 0:
        body = phi - phi * g.derivative("u").mul_monomial(u=1) / g
    else:
        u_gp = g.derivative("u").mul_monomial(u=1).truncate(target)
        body = phi * g ** n - phi * u_gp * g ** (n - 1)
    return _extract_u(body.truncate(target), target, Fraction(1))


# ---- named series ---------------------------------------------------------------------

def _catalan_coeffs(order: int) -> list[Fraction]:
    return univariate_coeffs(solve_fixed_point("catalan", order), "x")


def _fuss_coeffs(order: int, r: int) -> list[Fraction]:
    return univariate_coeffs(solve_fixed_point("fuss", order, r), "x")


def narayana_series(order: int) -> Series:
    """E(x, s) = sum N(n, m) s^(m-1) x^n, from the peak equation F = 1 + x F (F - 1 + s)."""
    F = solve_fixed_point("peaks-r", order, 1)
    ring = SeriesRing(("x", "s"), (1, 0), order)
    return (F - 1).map_into(ring, {"x": "x", "t": "s"}).div_monomial(s=1)


def _e_in(ring: SeriesRing, var: str, order: int) -> Series:
    """E(x, var) placed in ``ring`` (which holds x with weight 1 and var with weight 0)."""
    return narayana_series(order).map_into(ring, {"x": "x", "s": var})


def _xy_ring(order: int) -> SeriesRing:
    return SeriesRing(("x", "y"), (1, 1), order)


def _c_of(ring: SeriesRing, inner: Series, order: int) -> Series:
    return compose(_catalan_coeffs(order), inner)


def f_upper(order: int) -> Series:
    ring = _xy_ring(order)
    x, y = ring.vars()
    return 1 / (1 - x * _c_of(ring, x, order) - y * _c_of(ring, y, order))


def g_lower(order: int) -> Series:
    ring = _xy_ring(order)
    x, y = ring.vars()
    cx, cy = _c_of(ring, x, order), _c_of(ring, y, order)
    return cx * cy / (1 - x * cx - y * cy)


def _c_squares(order: int):
    ring = _xy_ring(order)
    x, y = ring.vars()
    return ring, x, y, _c_of(ring, x * x, order), _c_of(ring, y * y, order)


def h_all(order: int) -> Series:
    ring, x, y, cx2, cy2 = _c_squares(order)
    return cx2 * cy2 / (1 - x * y * cx2 * cy2)


def p_leftmost(order: int) -> Series:
    """Paths ending at height 1, steps before the left-most highest vertex marked x."""
    ring, x, y, cx2, cy2 = _c_squares(order)
    return x * cx2 * cy2 / (1 - x * y * cx2 * cy2)


def m_series(order: int) -> Series:
    return solve_fixed_point("mxst", order)


def g_even(order: int) -> Series:
    """Paths starting with a down step that end two levels up, even down steps
    above the axis marked ``a`` and on or below marked ``b``."""
    ring = SeriesRing(("x", "a", "b"), (1, 0, 0), order)
    M = m_series(order)
    m_b1 = M.map_into(ring, {"x": "x", "s": "b", "t": 1})
    m_a1 = M.map_into(ring, {"x": "x", "s": "a", "t": 1})
    m_1a = M.map_into(ring, {"x": "x", "s": 1, "t": "a"})
    x, a, b = ring.vars()
    return b * x * x * m_b1 * m_a1 * m_1a / (1 - x * m_1a - b * x * m_b1)


def _cg(ring: SeriesRing, down: str, up: str, r: int, order: int) -> Series:
    """C_g(down, up) = f(down * up^r) with f = 1 + x f^(r+1)."""
    inner = ring.var(down) * ring.var(up) ** r
    return compose(_fuss_coeffs(order, r), inner)


def prime_parts(ring: SeriesRing, r: int) -> dict[str, Series]:
    """Prime generating functions for P(n, r, 0) in a ring over x, s, y, t.

    x marks down steps on or below the axis, y those above; s marks up steps
    on or below, t those above.
    """
    order = ring.order
    cg_yt = _cg(ring, "y", "t", r, order)
    cg_xs = _cg(ring, "x", "s", r, order)
    x, s, y, t = (ring.var(n) for n in ("x", "s", "y", "t"))
    sc_x = s * cg_xs
    tc_y = t * cg_yt
    fp = y * s * cg_yt * tc_y ** (r - 1)
    fn = x * sc_x ** r
    fm = ring.zero()
    for i in range(1, r):
        fm = fm + s * cg_yt * tc_y ** (r - 1 - i) * y * sc_x ** i
    denom = 1 - fn - fp - fm
    g0 = 1 / denom
    g1 = s * cg_yt / denom
    return {"Cg": cg_yt, "Fp": fp, "Fn": fn, "Fm": fm, "G0": g0, "G1": g1}


def up_graded_ring(order: int) -> SeriesRing:
    return SeriesRing(("x", "s", "y", "t"), (0, 1, 0, 1), order)


def down_graded_ring(order: int) -> SeriesRing:
    return SeriesRing(("x", "s", "y", "t"), (1, 0, 1, 0), order)


def step_graded_ring(order: int) -> SeriesRing:
    return SeriesRing(("x", "s", "y", "t"), (1, 1, 1, 1), order)


def g1_up(order: int, r: int = 2) -> Series:
    """Paths of P(n, r, 1) that start with an up step, graded by up steps."""
    parts = prime_parts(up_graded_ring(order), r)
    return (1 - parts["Fn"]) * parts["G1"]


def g1_down(order: int, r: int = 2) -> Series:
    """Paths of P(n, r, 1) that start with a down step, graded by down steps."""
    parts = prime_parts(down_graded_ring(order), r)
    return parts["Fn"] * parts["G1"]


def _l_ring(order: int):
    ring = SeriesRing(("x", "s", "t"), (1, 0, 0), order)
    return ring, _e_in(ring, "s", order), _e_in(ring, "t", order)


def l_peak(order: int) -> Series:
    ring, es, et = _l_ring(order)
    s = ring.var("s")
    return (1 + et) / (1 - s * es * et)


def l_valley(order: int) -> Series:
    ring, es, et = _l_ring(order)
    t = ring.var("t")
    return (1 + es) / (1 - t * es * et)


def l_double_rise(order: int) -> Series:
    ring, es, et = _l_ring(order)
    t = ring.var("t")
    return es * (1 + t * et) / (1 - t * es * et)


def l_double_fall(order: int) -> Series:
    ring, es, et = _l_ring(order)
    t = ring.var("t")
    return et * (1 + es) * es / (1 - t * et * es)


def catalan_series(order: int) -> Series:
    return solve_fixed_point("catalan", order)


NAMED: dict[str, Callable[..., Series]] = {
    "c": catalan_series,
    "E": narayana_series,
    "f_upper": f_upper,
    "g_lower": g_lower,
    "h_all": h_all,
    "P_lh": p_leftmost,
    "M": m_series,
    "G_even": g_even,
    "Cg": lambda order, r=2: prime_parts(step_graded_ring(order), r)["Cg"],
    "Fp": lambda order, r=2: prime_parts(step_graded_ring(order), r)["Fp"],
    "Fn": lambda order, r=2: prime_parts(step_graded_ring(order), r)["Fn"],
    "Fm": lambda order, r=2: prime_parts(step_graded_ring(order), r)["Fm"],
    "G0": lambda order, r=2: prime_parts(step_graded_ring(order), r)["G0"],
    "G1": lambda order, r=2: prime_parts(step_graded_ring(order), r)["G1"],
    "G1U": g1_up,
    "G1D": g1_down,
    "L_pk": l_peak,
    "L_v": l_valley,
    "L_dr": l_double_rise,
    "L_df": l_double_fall,
}

_TAKES_R = {"Cg", "Fp", "Fn", "Fm", "G0", "G1", "G1U", "G1D"}


def named_series(name: str, order: int = 8, r: int | None = None) -> Series:
    try:
        fn = NAMED[name]
    except KeyError:
        raise KeyError(f"unknown series {name!r}; known: {', '.join(NAMED)}") from None
    if name in _TAKES_R and r is not None:
        return fn(order, r=r)
    return fn(order)


# ---- identities -----------------------------------------------------------------------

def _id_e13a(order):
    ring = _xy_ring(order + 1)
    x, y = ring.vars()
    cx = _c_of(ring, x, order + 1)
    lhs = divided_difference(x * cx, "x", "y")
    rhs = f_upper(order + 1)
    return [(lhs, rhs)]


def _id_chain(order):
    ring, es, et = _l_ring(order)
    s, t = ring.var("s"), ring.var("t")
    first = 1 + divided_difference(s * es, "s", "t")
    second = 1 + es * (1 + t * et) / (1 - t * es * et)
    third = (1 + et) / (1 - s * es * et)
    fourth = (1 + es) / (1 - t * es * et)
    return [(first, second), (second, third), (third, fourth)]


def _id2(order):
    ring, es, et = _l_ring(order)
    x, s, t = ring.vars()
    first = divided_difference(es, "s", "t")
    second = (1 + es) * es * et / (1 - t * es * et)
    third = x * (1 + et) * es / (1 - x * (1 + s * es) - x * t * (1 + et))
    return [(first, second), (second, third)]


def _id3(order):
    ring, x, y, cx2, cy2 = _c_squares(order + 1)
    lhs = h_all(order + 1)
    rhs = divided_difference(x * cx2, "x", "y")
    return [(lhs, rhs)]


def _sqrt1(order):
    ring = SeriesRing(("x",), order=order)
    x = ring.var("x")
    c = catalan_series(order)
    return [(1 / (1 - 2 * x * c), 1 / (1 - 4 * x).sqrt())]


def _sqrt2(order):
    ring = SeriesRing(("x",), order=order)
    x = ring.var("x")
    c = catalan_series(order)
    return [(c / (1 - x * c * c), 1 / (1 - 4 * x).sqrt())]


def _e_c(order):
    E = narayana_series(order).subs("s", 1)
    ring = SeriesRing(("x",), order=order)
    e1 = E.map_into(ring, {"x": "x", "s": 0})
    return [(e1, catalan_series(order) - 1)]


def _e_m(order):
    ring = SeriesRing(("x", "s"), (1, 0), order)
    M = m_series(order)
    E = narayana_series(order)
    s = ring.var("s")
    m_1s = M.map_into(ring, {"x": "x", "s": 1, "t": "s"})
    m_s1 = M.map_into(ring, {"x": "x", "s": "s", "t": 1})
    x = ring.var("x")
    return [(m_1s, 1 + s * E), (m_s1, 1 + E),
            (E, x * m_s1 * m_1s)]


def _e_m_printed(order):
    ring = SeriesRing(("x", "s"), (1, 0), order)
    M = m_series(order)
    E = narayana_series(order)
    s = ring.var("s")
    m_1s = M.map_into(ring, {"x": "x", "s": 1, "t": "s"})
    m_s1 = M.map_into(ring, {"x": "x", "s": "s", "t": 1})
    return [(m_1s, 1 + E), (m_s1, 1 + s * E)]


def _g1u_closed(order, r=2):
    lhs = g1_up(order + 1, r).subs("x", 1).subs("y", 1)
    ring = up_graded_ring(order + 1)
    t = ring.var("t")
    cg_1t = _cg(ring, "y", "t", r, order + 1).subs("y", 1)
    s = ring.var("s")
    rhs = s * divided_difference(t * cg_1t, "t", "s")
    return [(lhs.truncate(order), rhs.truncate(order))]


def _g1d_closed(order, r=2):
    lhs = g1_down(order + 1, r).subs("s", 1).subs("t", 1)
    ring = down_graded_ring(order + 1)
    x = ring.var("x")
    f_x = compose(_fuss_coeffs(order + 1, r), x)
    rhs = x * divided_difference(f_x, "x", "y")
    return [(lhs.truncate(order), rhs.truncate(order))]


def _e_closed(radicand: str):
    def check(order):
        ring = SeriesRing(("x", "s"), (1, 0), order + 1)
        x, s = ring.vars()
        if radicand == "printed":
            rad = (1 - x + x * s) ** 2 - 4 * x * s
        else:
            rad = (1 - x - x * s) ** 2 - 4 * x * x * s
        num = 1 - x - x * s - rad.sqrt()
        closed = num.div_monomial(x=1, s=1) * Fraction(1, 2)
        return [(closed.truncate(order), narayana_series(order))]
    return check


def _m_closed(order):
    ring = SeriesRing(("x", "s", "t"), (1, 0, 0), order + 1)
    x, s, t = ring.vars()
    rad = (1 - t * x + s * x) ** 2 - 4 * s * x
    closed = 1 + (1 - t * x - s * x - rad.sqrt()).div_monomial(x=1, s=1) * Fraction(1, 2)
    return [(closed.truncate(order), m_series(order))]


IDENTITIES: dict[str, Callable[[int], list[tuple[Series, Series]]]] = {
    "e13a": _id_e13a,
    "id-chain": _id_chain,
    "id2": _id2,
    "id3": _id3,
    "sqrt-1": _sqrt1,
    "sqrt-2": _sqrt2,
    "E-c": _e_c,
    "E-M": _e_m,
    "E-M-printed": _e_m_printed,
    "G1U-closed": _g1u_closed,
    "G1D-closed": _g1d_closed,
    "E-closed-printed": _e_closed("printed"),
    "E-closed-standard": _e_closed("standard"),
    "M-closed": _m_closed,
}


def identity_sides(identity_id: str, order: int) -> list[tuple[Series, Series]]:
    try:
        fn = IDENTITIES[identity_id]
    except KeyError:
        raise KeyError(f"unknown identity {identity_id!r}; known: {', '.join(IDENTITIES)}") from None
    return fn(order)


def identity_check(identity_id: str, order: int = 10) -> bool:
    for lhs, rhs in identity_sides(identity_id, order):
        n = min(lhs.order, rhs.order)
        if n < order:
            raise SeriesError(f"{identity_id}: sides only known to order {n}")
        if lhs.truncate(order).terms != rhs.truncate(order).terms:
            return False
    return True
