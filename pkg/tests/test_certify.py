import json
from fractions import Fraction

import pytest

from quinticcert.arith import Effort, squarefree_kernel
from quinticcert.certify import (
    BranchPoint,
    WitnessNotFound,
    certify_corollary,
    certify_specialization,
    exceptional_set,
    fundamental_discriminant,
    galois_s5,
    intersection_multiplicity,
)
from quinticcert.local import ScaledReduction
from quinticcert.family import COROLLARY_F, corollary_poly, corollary_quad_disc, family_in_s
from quinticcert.poly import PolyInT, UniPoly, X

W = Fraction(-2, 3)


@pytest.fixture(scope="module")
def certs():
    return {u: certify_corollary(u) for u in (1, 7)}


def test_galois_corollary_witnesses():
    g = galois_s5(corollary_poly(1))
    assert g.group == "S5"
    (p1, pat1), (p2, pat2) = g.witnesses
    assert (p1, pat1.degrees()) == (3, (3, 2))
    assert p2 == 5 and pat2.degrees() in ((5,), (4, 1))


def test_galois_classical_quintic():
    g = galois_s5(X**5 - X - 1, bound=100)
    assert all(p < 100 for p, _ in g.witnesses)


def test_galois_reducible_has_no_witness():
    with pytest.raises(WitnessNotFound):
        galois_s5(X**5 - 1)
    with pytest.raises(WitnessNotFound):
        galois_s5((X**2 + 1) * (X**3 - X - 1), bound=500)


def test_exceptional_sets():
    assert exceptional_set(COROLLARY_F) == {2, 3, 5, 43, 97}
    assert exceptional_set(family_in_s(W)) == {2, 3, 5, 43, 97}
    assert exceptional_set(PolyInT([UniPoly([0, -1]), UniPoly([0]), UniPoly([1])]), group_order=2) == {2}
    assert exceptional_set(family_in_s(Fraction(1, 5))) == {2, 3, 5, 23}


def test_exceptional_set_sign_invariance():
    F = COROLLARY_F
    G = F.substitute_t(UniPoly([0, -1]))
    assert exceptional_set(G) == exceptional_set(F)


def test_intersection_multiplicity():
    assert intersection_multiplicity(None, Fraction(5, 8), 2) == 3
    assert intersection_multiplicity(X, 86, 43) == 1
    assert intersection_multiplicity(X**2 - 2, 3, 7) == 1
    with pytest.raises(ValueError):
        intersection_multiplicity(X - 2, 2, 3)


def test_fundamental_discriminant():
    assert fundamental_discriminant(-43) == -43
    assert fundamental_discriminant(-1) == -4
    assert fundamental_discriminant(2) == 8


def test_corollary_certified(certs):
    for u, c in certs.items():
        assert c.status == "certified", c.reason
        assert c.kernel == squarefree_kernel(corollary_quad_disc(u))[0]
        assert c.fundamental_disc == c.kernel and c.kernel % 4 == 1
        assert c.signature == 3
        for p in (2, 3, 5, 97):
            assert c.local(p).inertia_class == "unramified"
        assert c.local(43).inertia_class == "transposition"
    assert certs[1].kernel != certs[7].kernel


def test_certified_invariants(certs):
    for c in certs.values():
        transp = [l for l in c.locals if l.inertia_class == "transposition"]
        assert c.kernel % 2
        prod = 1
        for l in transp:
            prod *= l.prime
            assert l.residual_pattern.degrees() in ((1, 1, 1), (3,))
            assert l.decomposition_cyclic and l.obstruction_free
        assert prod == abs(c.kernel)
        assert all(c.disc % p for p, _ in c.galois.witnesses)
        for l in c.locals:
            assert (l.obstruction_free is False) == (
                l.inertia_class == "transposition" and l.residual_pattern.has_even_part()
            )


def test_certificate_json_roundtrip(certs):
    rec = json.loads(json.dumps(certs[1].to_json()))
    assert int(rec["disc"]) == certs[1].disc
    assert int(rec["kernel"]) == certs[1].kernel
    assert rec["status"] == "certified" and rec["seed"] == "0"
    assert all(isinstance(l["prime"], str) for l in rec["locals"])


def test_s_zero_is_branch_point():
    with pytest.raises(BranchPoint):
        certify_specialization(W, 0)


def test_plan_value_54_fails_at_43():
    c = certify_specialization(W, 54)
    assert c.status == "failed"
    assert c.local(43).inertia_class == "other"
    assert c.local(2).inertia_class == "unramified"


def test_small_budget_gives_uncertified():
    c = certify_corollary(11, effort=Effort(trial_bound=100, rho_iterations=50, time_limit=5))
    assert c.status == "uncertified" and "cofactor" in c.reason


def test_corollary_rejects_non_coprime():
    with pytest.raises(ValueError):
        certify_corollary(5)


def test_user_plans_are_used():
    # w = 1/3, s = 2 w2^3 has a shipped plan at 2; a user copy is merged, not duplicated
    plan = ScaledReduction(Fraction(1), Fraction(-2), Fraction(8))
    w = Fraction(1, 3)
    s = 2 * 27
    plain = certify_specialization(w, s, plans={})
    manual = certify_specialization(w, s, plans={2: [plan]})
    assert manual.local(2).inertia_class == plain.local(2).inertia_class
    assert plan.rescaled(manual.scale) in manual.local(2).plans
    assert manual.local(2).plans == plain.local(2).plans
