import math
import random
from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given, strategies as st

from quinticcert.poly import (
    PolyInT,
    UniPoly,
    X,
    discriminant,
    discriminant_in_t,
    gcd,
    real_root_count,
    real_root_intervals,
    resultant,
    shift_scale,
    squarefree_part,
    sturm_count,
)

t_sym, x_sym = sympy.symbols("t x")
small = st.integers(-20, 20)


def to_sympy(f: UniPoly):
    return sum(sympy.Rational(c.numerator, c.denominator) * x_sym**i for i, c in enumerate(f.coeffs))


def polys(min_deg=1, max_deg=6):
    return st.lists(small, min_size=min_deg + 1, max_size=max_deg + 1).map(UniPoly).filter(
        lambda f: f.degree >= min_deg
    )


def test_arithmetic_basics():
    f = UniPoly([1, 2, 3])
    g = UniPoly([-1, 1])
    q, r = divmod(f * g + 5, g)
    assert q == f and r == UniPoly([5])
    assert (f**3).degree == 6
    assert f(Fraction(1, 2)) == Fraction(11, 4)
    assert UniPoly([]).degree == -1
    assert str(UniPoly([1, 0, -1])) == "-X^2 + 1"
    assert f(g) == UniPoly([2, -4, 3])


def test_resultant_examples():
    assert resultant(X**2 - 1, X - 1) == 0
    a, b = Fraction(3), Fraction(-5)
    assert resultant(X - a, X - b) == a - b
    assert resultant(X**2 + 1, X**2 - 2) == 9


def sylvester(f: UniPoly, g: UniPoly) -> sympy.Matrix:
    m, n = f.degree, g.degree
    a = [sympy.Rational(c.numerator, c.denominator) for c in reversed(f.coeffs)]
    b = [sympy.Rational(c.numerator, c.denominator) for c in reversed(g.coeffs)]
    rows = [[0] * i + a + [0] * (n - 1 - i) for i in range(n)]
    rows += [[0] * i + b + [0] * (m - 1 - i) for i in range(m)]
    return sympy.Matrix(rows)


@given(polys(1, 5), polys(1, 5))
def test_resultant_matches_sylvester_determinant(f, g):
    assert resultant(f, g) == Fraction(str(sylvester(f, g).det()))


def test_discriminant_classical_formulas():
    b, c, p, q = Fraction(3), Fraction(-7), Fraction(2), Fraction(5)
    assert discriminant(X**2 + b * X + c) == b * b - 4 * c
    assert discriminant(X**3 + p * X + q) == -4 * p**3 - 27 * q**2
    assert discriminant(X**2 + 1) == -4


@given(polys(2, 6))
def test_discriminant_matches_sympy(f):
    assert discriminant(f) == Fraction(str(sympy.discriminant(to_sympy(f), x_sym)))


@given(polys(1, 4), st.fractions(min_value=-10, max_value=10, max_denominator=20))
def test_repeated_root_kills_discriminant(f, r):
    g = f * (X - r) * (X - r)
    assert discriminant(g) == 0


def test_discriminant_shift_invariance_on_quintics():
    rng = random.Random(7)
    for _ in range(100):
        f = UniPoly([rng.randint(-9, 9) for _ in range(5)] + [1])
        alpha = Fraction(rng.randint(-30, 30), rng.randint(1, 9))
        assert discriminant(f.compose_linear(alpha, 1)) == discriminant(f)


def test_discriminant_in_t_small_cases():
    F = PolyInT([UniPoly([0, -1]), UniPoly([0]), UniPoly([1])])  # X^2 - t
    assert discriminant_in_t(F) == UniPoly([0, 4])


def test_discriminant_in_t_matches_sympy_for_branch_family():
    F = PolyInT([UniPoly([0, Fraction(8, 9)]), UniPoly([0, -1]), UniPoly([-1]), UniPoly([3]), UniPoly([-3]), UniPoly([1])])
    expr = x_sym**2 * (x_sym - 1) ** 3 - t_sym * (x_sym - sympy.Rational(8, 9))
    expected = sympy.Poly(sympy.discriminant(expr, x_sym), t_sym).all_coeffs()[::-1]
    assert discriminant_in_t(F) == UniPoly([Fraction(str(c)) for c in expected])


def test_discriminant_in_t_specialization_commutes():
    F = PolyInT([UniPoly([0, 0, 688]), UniPoly([0, 0, -774]), UniPoly([-1]), UniPoly([3]), UniPoly([-3]), UniPoly([1])])
    delta = discriminant_in_t(F)
    rng = random.Random(3)
    points = [Fraction(86)] + [Fraction(rng.randint(-500, 500), rng.randint(1, 50)) for _ in range(19)]
    for t0 in points:
        assert delta(t0) == discriminant(F.specialize(t0))


def test_shift_scale_examples():
    assert shift_scale(X**2, 1, -2, 1) == UniPoly([1, -4, 4])
    with pytest.raises(ValueError):
        shift_scale(X**2, 1, 0, 1)


def test_sturm_examples():
    assert sturm_count(X**2 + 1) == 0
    assert sturm_count(X**2 - 2) == 2
    assert sturm_count(X**2 - 2, 0, 2) == 1
    assert sturm_count(X**2 - 2, -math.inf, 0) == 1
    assert sturm_count(X**2 - 4, -2, 2) == 1  # interval is (lo, hi]
    assert real_root_count((X - 1) ** 3 * (X + 2)) == 2


def test_sturm_agrees_with_numpy_on_random_quintics():
    rng = random.Random(11)
    checked = 0
    while checked < 100:
        f = UniPoly([rng.randint(-9, 9) for _ in range(5)] + [1])
        if discriminant(f) == 0:
            continue
        roots = np.roots([float(c) for c in reversed(f.coeffs)])
        imag = np.abs(roots.imag)
        if np.any((imag > 1e-9) & (imag < 1e-4)):
            continue  # too close to call numerically
        assert sturm_count(f) == int(np.sum(imag <= 1e-9))
        checked += 1


def test_real_root_intervals_isolate():
    f = (X - 1) * (X - Fraction(101, 100)) * (X + 3) * (X**2 + 1)
    boxes = real_root_intervals(f, Fraction(1, 1000))
    assert len(boxes) == 3
    for a, b in boxes:
        assert b - a <= Fraction(1, 1000) and sturm_count(squarefree_part(f), a, b) == 1


def test_gcd_and_squarefree_part():
    f = (X - 1) ** 2 * (X + 2)
    assert gcd(f, f.derivative()) == X - 1
    assert squarefree_part(f) == ((X - 1) * (X + 2)).monic()


def test_integral_helpers():
    f = UniPoly([Fraction(1, 2), 3])
    assert not f.is_integral()
    assert f.content() == Fraction(1, 2)
    assert f.scale_roots(2) == UniPoly([1, 3])
