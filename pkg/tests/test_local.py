from fractions import Fraction

import pytest

from quinticcert.arith import valuation
from quinticcert.ffield import DegreePattern, ModPoly, WildPrime, degree_pattern
from quinticcert.family import build_poly, corollary_poly, exceptional_plans, corollary_s
from quinticcert.local import (
    InconclusiveReduction,
    ScaledReduction,
    analyze_clusters,
    apply_plans,
    certify_prime,
    certify_wild,
    integral_model,
    quadratic_ramifies,
)
from quinticcert.poly import UniPoly, X, discriminant, shift_scale


def test_unramified_prime():
    f = X**5 - X - 1
    c = certify_prime(f, 7)
    assert c.inertia_class == "unramified" and c.method == "separability" and c.ok


def test_valuation_one_cyclic_and_obstructed():
    good = (X - 1) ** 2 * (X - 2) * (X - 3) * (X - 4) + 7
    assert valuation(discriminant(good), 7) == 1
    c = certify_prime(good, 7)
    assert c.inertia_class == "transposition" and c.method == "valuation-one"
    assert c.residual_pattern == DegreePattern.separable([1, 1, 1]) and c.decomposition_cyclic and c.ok

    bad = (X - 1) ** 2 * (X**2 + 1) * (X - 3) + 7
    assert valuation(discriminant(bad), 7) == 1
    c = certify_prime(bad, 7)
    assert c.inertia_class == "transposition"
    assert c.decomposition_cyclic is False and c.obstruction_free is False and not c.ok
    assert "C2 x C2" in c.note


def test_two_transpositions_rejected():
    g = (X - 1) ** 2 * (X - 2) ** 2 * (X - 3) + 7
    c = certify_prime(g, 7)
    assert c.method == "dedekind-tame" and c.inertia_class == "other" and not c.ok


def test_wild_prime_guard():
    with pytest.raises(WildPrime):
        certify_prime(X**5 - X - 1, 5)


def test_corollary_at_43_residual_cubic_splits():
    f = corollary_poly(1)
    # 43^-3 f(1 - 43 X): recompute the residual cubic rather than trusting a printed sign
    r = ModPoly.from_unipoly(shift_scale(f, 1, -43, 43**3), 43)
    assert r.degree == 3 and r.is_squarefree()
    assert r == ModPoly([-8, 0, 0, -1], 43)  # -(X^3 + 8)
    assert degree_pattern(r) == DegreePattern.separable([1, 1, 1])
    c = certify_prime(f, 43, kernel=-43)
    assert c.inertia_class == "transposition" and c.method == "scaled-reduction"
    assert c.residual_pattern == DegreePattern.separable([1, 1, 1]) and c.decomposition_cyclic


def test_cluster_analysis_at_43_without_plans():
    ca = analyze_clusters(corollary_poly(1), 43)
    assert ca.pairs == 1 and ca.unramified == DegreePattern.separable([1, 1, 1])
    assert ca.inertia() == "transposition"


@pytest.mark.parametrize("u", [7, 11])
def test_primes_dividing_u_are_unramified(u):
    f = corollary_poly(u)
    assert valuation(discriminant(f), u) == 18
    c = certify_prime(f, u)
    assert c.inertia_class == "unramified" and c.method == "scaled-reduction"


def test_shipped_plan_at_43_for_higher_powers():
    u = 43  # sigma = 86 * 43^3, d = 1
    s = corollary_s(u)
    plans = exceptional_plans(Fraction(-2, 3), s)[43]
    assert plans[0].beta == -(43**3) and plans[0].normalizer == 43**9
    f = corollary_poly(u)
    r = plans[0].residual(f, 43)
    assert r.degree == 3 and r.is_squarefree()


def test_wild_separable_and_scaled():
    f = corollary_poly(1)
    c3 = certify_wild(f, 3)
    assert c3.inertia_class == "unramified" and c3.residual_pattern.degrees() == (3, 2)
    c2 = certify_wild(f, 2)
    assert c2.inertia_class == "unramified" and c2.method == "scaled-reduction"


@pytest.mark.parametrize("w1,w2", [(-2, 3), (1, 1), (1, 3)])
def test_mod2_plan_gives_x3_plus_1(w1, w2):
    f = build_poly(Fraction(w1, w2), 2 * w2**3)
    plan = ScaledReduction(Fraction(1), Fraction(-2), Fraction(8))
    assert plan.residual(f, 2) == ModPoly([1, 0, 0, 1], 2)
    ca = apply_plans(f, 2, [plan])
    assert ca.unramified.total == 3 and ca.inertia() == "at-most-transposition"


def test_wild_inconclusive_raises():
    # near 0 the cluster reduces to (Y - 1)^2 mod 3: inseparable, so nothing is decided
    f = (X - 3) ** 2 * (X**3 + X + 1) + 3**5
    with pytest.raises(InconclusiveReduction) as exc:
        certify_wild(f, 3)
    assert exc.value.certificate.inertia_class == "undetermined"


def test_apply_plans_rejects_overlap():
    f = corollary_poly(1)
    p1 = ScaledReduction(Fraction(1), Fraction(43), Fraction(43**3))
    p2 = ScaledReduction(Fraction(44), Fraction(43), Fraction(43**3))
    with pytest.raises(ValueError):
        apply_plans(f, 43, [p1, p2])


def test_quadratic_ramification():
    assert quadratic_ramifies(-43, 43) and not quadratic_ramifies(-43, 2)
    assert quadratic_ramifies(3, 2) and quadratic_ramifies(2, 2) and not quadratic_ramifies(5, 2)


def test_integral_model():
    f = build_poly(Fraction(-2, 3), Fraction(86))
    g, d = integral_model(f)
    assert g.is_integral() and g.lc() == 1
    assert discriminant(g) == Fraction(d) ** 20 * discriminant(f)
    with pytest.raises(ValueError):
        integral_model(2 * X**5 + 1)


def test_rescaled_plan_matches():
    f = build_poly(Fraction(1, 3), 2)
    g, d = integral_model(f)
    assert d > 1
    plan = ScaledReduction(Fraction(1), Fraction(-2), Fraction(8)).rescaled(d)
    assert (plan.alpha, plan.beta, plan.normalizer) == (d, -2 * d, 8 * d**5)
    assert shift_scale(g, plan.alpha, plan.beta, plan.normalizer) == shift_scale(f, 1, -2, 8)
