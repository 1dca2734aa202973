# Scaled reductions: how the awkward primes 2, 43 and p | u are settled.
#
# For a root cluster near r mod p the polynomial p^-N f(r + p^h X) is
# reduced mod p.  A separable residual of degree k proves k roots lie in the
# unramified closure of Q_p.  Run with:  python3 demos/02_local_reductions.py

from fractions import Fraction

from quinticcert.ffield import ModPoly, degree_pattern
from quinticcert.family import build_poly, corollary_poly
from quinticcert.local import analyze_clusters, certify_prime
from quinticcert.poly import shift_scale

f = corollary_poly(1)
print("f mod 43 =", ModPoly.from_unipoly(f, 43))

# Three roots near 1 at distance 43^-1: the residual cubic.
cubic = ModPoly.from_unipoly(shift_scale(f, 1, -43, 43**3), 43)
print("43^-3 f(1 - 43X) mod 43 =", cubic, " pattern", degree_pattern(cubic))

# The two roots near 0 sit at valuation 3/2: a ramified pair, i.e. a transposition.
ca = analyze_clusters(f, 43)
print(f"cluster analysis at 43: {ca.unramified} unramified, {ca.pairs} ramified pair(s) -> {ca.inertia()}")
print("certificate:", certify_prime(f, 43, kernel=-43).to_json())

# At 2 the same polynomial splits into clusters of slopes 3 and 1.
ca2 = analyze_clusters(f, 2)
print(f"\ncluster analysis at 2: {ca2.unramified}, unresolved {ca2.unresolved} -> {ca2.inertia()}")

# For the generic plan value s = 2 w2^3 the shift 1 - 2X works directly.
for w1, w2 in ((-2, 3), (1, 1), (1, 3)):
    g = shift_scale(build_poly(Fraction(w1, w2), 2 * w2**3), 1, -2, 8)
    print(f"w = {w1}/{w2}: (1/8) f(1 - 2X) mod 2 = {ModPoly.from_unipoly(g, 2)}")

# Primes dividing u: v_p(disc) = 18, yet p is unramified.
for u in (7, 11):
    cert = certify_prime(corollary_poly(u), u)
    print(f"\nu = {u}: v = {cert.v_disc}, {cert.inertia_class}, pattern {cert.residual_pattern}")
    for plan in cert.plans:
        print("   plan", plan.to_json())
