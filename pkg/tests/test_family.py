import math
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from quinticcert.arith import squarefree_kernel
from quinticcert.family import (
    COROLLARY_F,
    RANK0_CUBIC,
    TWIST_43,
    DegenerateParameter,
    NotCoprime,
    WindowEmpty,
    WParam,
    branch_conjugacy,
    branch_quadratic,
    build_poly,
    check_conditions,
    corollary_poly,
    corollary_quad_disc,
    curve_search,
    derived_params,
    family_in_s,
    integral_x_search,
    kernel_is_1_mod_4,
    specialization_plan,
    totally_real_scan,
    two_adic_class,
)
from quinticcert.local import integral_model
from quinticcert.poly import UniPoly, X, discriminant, discriminant_in_t, real_root_intervals, sturm_count

W = Fraction(-2, 3)
coprime_w = st.tuples(st.integers(-200, 200), st.integers(1, 200)).filter(lambda t: math.gcd(*t) == 1)


def test_derived_params():
    assert derived_params(W) == (Fraction(8, 9), Fraction(86, 81))


def test_wparam_validation():
    with pytest.raises(ValueError):
        WParam(2, 4)
    with pytest.raises(ValueError):
        WParam(1, -3)
    assert WParam.of("-4/6") == WParam(-2, 3)


def test_build_poly_matches_expansion():
    s = Fraction(5, 7)
    w = Fraction(3, 11)
    expected = X**2 * (X - 1) ** 3 + 2 * s**2 * (50 * w**2 - 27) * (10 * w**2 + 8 * w + 1) * (X - 2 * w**2)
    assert build_poly(w, s) == expected


def test_corollary_normalization():
    # s = 27 sigma turns f_{-2/3, s} into X^2 (X-1)^3 - 86 sigma^2 (9X - 8)
    for sigma in (Fraction(1), Fraction(86), Fraction(-3, 5)):
        target = X**2 * (X - 1) ** 3 - 86 * sigma**2 * (9 * X - 8)
        assert build_poly(W, 27 * sigma) == target
        assert COROLLARY_F.specialize(sigma) == target


def test_build_poly_rejects_s_zero():
    with pytest.raises(DegenerateParameter):
        build_poly(W, 0)


def test_conditions_examples():
    r = check_conditions(W)
    assert r.kernel == 43 and r.a_ok and r.b_ok and r.bprime_ok and r.c_positive
    r = check_conditions(Fraction(1, 2))
    assert r.product == 58 * 30 and r.kernel == 435 and r.kernel_primes == (3, 5, 29) and r.a_ok is False
    r = check_conditions(0)
    assert not r.b_ok
    r = check_conditions(Fraction(3, 4))
    assert r.kernel == -101 and r.a_ok is False and "negative" in r.note


def test_window_endpoints_are_closed_and_exact():
    assert check_conditions(Fraction("-0.7348")).b_ok
    assert check_conditions(Fraction("0.645")).bprime_ok
    assert not check_conditions(Fraction("0.7349")).b_ok
    assert not check_conditions(Fraction("-0.156")).b_ok
    assert check_conditions(Fraction("-0.155")).b_ok


@given(coprime_w)
def test_condition_product_identity(t):
    wp = WParam(*t)
    assert wp.condition_product() == wp.w2**4 * wp.c / 2


@given(coprime_w)
def test_bprime_implies_b(t):
    r = check_conditions(Fraction(*t))
    if r.bprime_ok:
        assert r.b_ok


def test_specialization_plans():
    p = specialization_plan(W)
    assert p.candidates == (Fraction(54),) and p.selected == 54 and p.corollary
    assert p.corollary_values([1]) == [Fraction(2322)]
    assert specialization_plan(Fraction(1, 2)).candidates == (Fraction(2),)
    p = specialization_plan(Fraction(1, 3))
    assert p.candidates == (Fraction(54), Fraction(162))
    assert p.selected == 54 and p.kernel_1_mod_4 == (True, False)


@pytest.mark.parametrize("w", ["1/3", "1", "-1/3", "3/5", "-5/7", "7/9", "1/7", "-3/5"])
def test_both_odd_selection_gives_kernel_1_mod_4(w):
    p = specialization_plan(w)
    assert p.selected is not None
    g, _ = integral_model(build_poly(w, p.selected))
    s, _ = squarefree_kernel(int(discriminant(g)))
    assert s % 4 == 1


def test_two_adic_class_without_factoring():
    for n in (-43 * 9 * 16, 12, -3 * 25, 7 * 121 * 4, 5 * 49):
        s, _ = squarefree_kernel(n)
        assert kernel_is_1_mod_4(n) == (s % 4 == 1)
        assert two_adic_class(n)[0] == (s % 2 == 0)


def test_corollary_quad_disc():
    N1 = 2**11 * 3**10 * 43**6 - 43**3 * 263 * 883 + 108
    assert corollary_quad_disc(1) == -43 * N1
    for u in (1, 7, 11, 13, -7):
        assert corollary_quad_disc(u) < 0
    with pytest.raises(NotCoprime):
        corollary_quad_disc(5)


@pytest.mark.parametrize("u", [1, 7, 11])
def test_corollary_kernel_matches_formula(u):
    disc = int(discriminant(corollary_poly(u)))
    q = corollary_quad_disc(u)
    # disc / q must be a rational square
    r = Fraction(disc, q)
    assert r > 0 and math.isqrt(r.numerator) ** 2 == r.numerator and math.isqrt(r.denominator) ** 2 == r.denominator


def test_branch_quadratics():
    q = branch_quadratic(W)
    assert q * Fraction(-6561) == UniPoly([7776, -232229, 1679616])
    assert branch_quadratic(Fraction(1, 5)) * Fraction(-15625) == UniPoly([114264, 1339875, 4000000])
    assert branch_conjugacy(W) and branch_conjugacy(Fraction(1, 5))


def test_branch_quadratic_against_sympy():
    t, x = sympy.symbols("t x")
    for w in (Fraction(1, 2), Fraction(-7, 10)):
        a = sympy.Rational(2 * w.numerator**2, w.denominator**2)
        d = sympy.factor_list(sympy.discriminant(x**2 * (x - 1) ** 3 - t * (x - a), x))
        quad = [f for f, _ in d[1] if sympy.degree(f, t) == 2][0]
        ours = branch_quadratic(w)
        theirs = sympy.Poly(quad, t).all_coeffs()[::-1]
        ratio = ours[2] / Fraction(str(theirs[2]))
        assert all(ours[i] == ratio * Fraction(str(theirs[i])) for i in range(3))


def test_twist_quartic():
    assert TWIST_43 == UniPoly([27, 0, -50]) * UniPoly([1, 8, 10])


def test_curve_search_small_and_full():
    pts = curve_search(43, TWIST_43, 3)
    assert {(p.W, p.Y) for p in pts} >= {(W, Fraction(1, 9)), (W, Fraction(-1, 9))}
    pts = curve_search(43, TWIST_43, 300)
    assert len(pts) == 20 and len({p.W for p in pts}) == 10
    for p in pts:
        assert 43 * p.Y**2 == TWIST_43(p.W)
        assert max(abs(p.W.numerator), p.W.denominator) <= 300
    assert pts == sorted(pts)


def test_rank0_search():
    pts = integral_x_search(RANK0_CUBIC, -(10**3), 10**6)
    assert [(p.W, p.Y) for p in pts] == [(0, 0), (15, 0), (24, 0)]


def test_totally_real_scan():
    hits = totally_real_scan(W)
    assert hits
    for s0, n in hits:
        assert n == 5 and sturm_count(build_poly(W, s0)) == 5
    def cube_over_square(s):
        c = round(abs(s.numerator) ** (1 / 3))
        return c**3 == abs(s.numerator) and math.isqrt(s.denominator) ** 2 == s.denominator

    assert any(cube_over_square(s) for s, _ in hits)


def test_totally_real_scan_outside_window():
    with pytest.raises(WindowEmpty):
        totally_real_scan(Fraction(1, 2))


def test_real_root_count_constant_on_tail():
    boxes = real_root_intervals(discriminant_in_t(family_in_s(W)), Fraction(1, 10**6))
    top = boxes[-1][1]
    counts = {sturm_count(build_poly(W, top + k)) for k in (1, 1000)}
    assert len(counts) == 1
