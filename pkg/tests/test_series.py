from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from chungfeller import closed_forms as cf
from chungfeller import series as S
from chungfeller import stats
from chungfeller.enumeration import FamilySpec, enumerate_family
from chungfeller.series import SeriesError, SeriesRing
from chungfeller.stats import Selector


def x_ring(order=12):
    ring = SeriesRing(("x",), order=order)
    return ring, ring.var("x")


def coeffs(s, n):
    return [int(c) for c in S.univariate_coeffs(s, "x")[:n]]


def test_sqrt_squares_back():
    ring, x = x_ring()
    r = (1 - 4 * x).sqrt()
    assert r * r == 1 - 4 * x


def test_catalan_functional_equation():
    ring, x = x_ring()
    c = S.named_series("c", 12)
    assert (1 - x * c) * c == ring.one()
    assert coeffs(S.named_series("c", 5), 6) == [1, 1, 2, 5, 14, 42]


def test_derivative_shifts_coefficients():
    c = S.named_series("c", 10)
    d = S.univariate_coeffs(c.derivative("x"), "x")
    base = S.univariate_coeffs(c, "x")
    assert d[:9] == [(n + 1) * base[n + 1] for n in range(9)]


def test_fuss_fixed_point():
    f = S.solve_fixed_point("fuss", 4, 2)
    assert coeffs(f, 5) == [1, 1, 3, 12, 55]


def test_narayana_polynomial():
    E = S.named_series("E", 6)
    assert [E.coeff(x=4, s=j) for j in range(4)] == [1, 6, 6, 1]


def test_inverse_and_division():
    ring, x = x_ring(8)
    s = 1 + x + x * x
    assert s * s.inverse() == ring.one()
    assert (s / s) == ring.one()
    with pytest.raises(SeriesError):
        x.inverse()


def test_mixed_rings_rejected():
    _, x = x_ring()
    y = SeriesRing(("y",)).var("y")
    with pytest.raises(SeriesError):
        x + y


def test_compose_with_geometric_series():
    ring, x = x_ring(8)
    geo = S.compose([1] * 9, x + 0 * x)
    assert geo * (1 - x) == ring.one()


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=6), st.lists(st.integers(-5, 5), min_size=1, max_size=6))
def test_product_is_commutative_and_matches_convolution(a, b):
    ring, x = x_ring(8)
    pa = sum((c * x ** i for i, c in enumerate(a)), ring.zero())
    pb = sum((c * x ** i for i, c in enumerate(b)), ring.zero())
    prod = pa * pb
    assert prod == pb * pa
    conv = [sum(a[i] * b[n - i] for i in range(n + 1) if i < len(a) and n - i < len(b))
            for n in range(9)]
    assert S.univariate_coeffs(prod, "x")[:9] == [Fraction(v) for v in conv]


def test_lagrange_examples():
    ring = S.lagrange_ring((), 6)
    u = ring.var("u")
    assert S.lagrange_coeff((1 + u) ** 2, 1, 3) == 5
    g = 2 + u
    for n in range(1, 5):
        assert S.lagrange_coeff(g, n, n) == Fraction(2) ** n


def test_lagrange_phi_examples():
    ring = S.lagrange_ring(("t",), 6)
    u, t = ring.vars()
    got = S.lagrange_phi_coeff((1 + u) * (t + u), 1 + u, 3)
    assert got[(2,)] == 3 == cf.narayana(3, 2)
    got = S.lagrange_phi_coeff((1 + u) ** 2 * (t + u), 1 + u, 3)
    for k in range(1, 4):
        assert got[(k,)] == cf.gen_narayana(3, k, 2)


@pytest.mark.parametrize("r", [1, 2, 3])
def test_lagrange_matches_fixed_point_and_ballot(r):
    f = S.solve_fixed_point("fuss", 10, r)
    ring = S.lagrange_ring((), 10)
    u = ring.var("u")
    for h in (1, 2, 3):
        fh = S.univariate_coeffs(f ** h, "x")
        for n in range(1, 11):
            # f - 1 = x (1 + (f - 1))^(r+1), so f^h is a polynomial in f - 1
            lag = sum(cf.binom(h, k) * S.lagrange_coeff((1 + u) ** (r + 1), k, n)
                      for k in range(1, min(h, n) + 1))
            assert lag == fh[n] == cf.eval_form("ballot", n=n, r=r, h=h)


@pytest.mark.parametrize("name", sorted(set(S.IDENTITIES) - {"E-M-printed"}))
def test_identities_hold(name):
    assert S.identity_check(name, 10)


def test_printed_e_m_form_fails():
    assert not S.identity_check("E-M-printed", 8)


def test_identity_order_too_high_rejected():
    with pytest.raises(KeyError):
        S.identity_check("nonexistent", 4)


@pytest.mark.parametrize("name,shift,step", [("f_upper", 0, 1), ("g_lower", 1, 1), ("h_all", 0, 2)])
def test_antidiagonals_are_catalan(name, shift, step):
    s = S.named_series(name, 8)
    for d in range(0, 9):
        grade = s.grade(d)
        if d % step:
            assert not grade
            continue
        n = d // step + shift
        assert grade == {(i, d - i): cf.catalan(n) for i in range(d + 1)}


def test_leftmost_series_antidiagonals():
    s = S.named_series("P_lh", 9)
    for n in range(0, 4):
        d = 2 * n + 1
        assert s.grade(d) == {(i, d - i): cf.catalan(n) for i in range(1, d + 1)}


def _split(p, sel, cyclic=False):
    idx = stats.select_vertices(p, sel, cyclic=cyclic)
    below = sum(1 for i in idx if p.heights[i] <= 0)
    return below, len(idx) - below


@pytest.mark.parametrize("name,pattern,first,last", [
    ("L_pk", "peak", "D", "U"),
    ("L_v", "valley", "U", "D"),
    ("L_dr", "double-rise", "U", "U"),
    ("L_df", "double-fall", "D", "D"),
])
def test_pattern_series_against_enumeration(name, pattern, first, last):
    L = S.named_series(name, 6)
    sel = Selector(pattern)
    for n in range(1, 7):
        want = {(m[1], m[2]): c for m, c in L.terms.items() if m[0] == n}
        got = Counter(_split(p, sel) for p in
                      enumerate_family(FamilySpec.p(n, 1, 1, f"first={first}", f"last={last}")))
        assert want == got


def test_even_position_series_against_enumeration():
    G = S.named_series("G_even", 7)
    sel = Selector.parse("down-start-mod:2:0")
    for n in range(2, 8):
        want = {(m[1], m[2]): c for m, c in G.terms.items() if m[0] == n}
        got = Counter(tuple(reversed(_split(p, sel)))
                      for p in enumerate_family(FamilySpec.p(n - 1, 1, 2, "first=D")))
        assert want == got


def test_even_position_series_closed_pattern():
    G = S.named_series("G_even", 8)
    for n in range(2, 9):
        for k in range(2, n + 1):
            for j in range(1, k):
                want = Fraction(cf.binom(n - 1, k - 2) * cf.binom(n, k), k - 1)
                assert G.coeff(x=n, a=k - 1 - j, b=j) == want


def _step_vector(p):
    h = p.heights
    v = [0, 0, 0, 0]  # downs on/below, ups on/below, downs above, ups above
    for i, st in enumerate(p.steps):
        v[(0 if h[i] <= 0 else 2) + (0 if st.kind == "down" else 1)] += 1
    return tuple(v)


@pytest.mark.parametrize("r,max_n", [(1, 4), (2, 3), (3, 2)])
def test_prime_series_against_enumeration(r, max_n):
    G1 = S.named_series("G1", (r + 2) * max_n + 1, r=r)
    for n in range(0, max_n + 1):
        want = {m: c for m, c in G1.terms.items() if m[0] + m[2] == n and m[1] + m[3] == r * n + 1}
        got = Counter(_step_vector(p) for p in enumerate_family(FamilySpec.p(n, r, 1)))
        assert want == got


@pytest.mark.parametrize("r", [1, 2])
def test_up_start_series_against_enumeration(r):
    G = S.named_series("G1U", 7, r=r)
    for n in range(0, 3):
        ups = r * n + 1
        want = Counter()
        for m, c in G.terms.items():
            if m[1] + m[3] == ups and m[0] + m[2] == n:
                want[m] += c
        got = Counter(_step_vector(p) for p in enumerate_family(FamilySpec.p(n, r, 1, "first=U")))
        assert want == got


def test_named_series_unknown():
    with pytest.raises(KeyError):
        S.named_series("nope")
