"""Walk through w = -2/3 from parameter check to certified quadratic fields.

Run with:  python3 demos/01_corollary_fields.py
"""

from fractions import Fraction

from quinticcert.certify import certify_corollary, exceptional_set
from quinticcert.family import (
    COROLLARY_F,
    build_poly,
    check_conditions,
    corollary_quad_disc,
    derived_params,
)

w = Fraction(-2, 3)

# The parameter: a = 2w^2 and c(w), then conditions a), b), b').
a, c = derived_params(w)
print(f"w = {w}:  a = {a},  c = {c}")
report = check_conditions(w)
print(f"condition product {report.product}, kernel {report.kernel}, "
      f"a={report.a_ok} b={report.b_ok} b'={report.b_ok and report.bprime_ok}")

# With s = 27 sigma the family reads X^2 (X-1)^3 - 86 sigma^2 (9X - 8).
sigma = Fraction(86)
print("f =", build_poly(w, 27 * sigma))
assert build_poly(w, 27 * sigma) == COROLLARY_F.specialize(sigma)

# Primes where reduction of the family itself could misbehave.
print("exceptional primes:", sorted(exceptional_set(COROLLARY_F)))

# sigma = 86 u^3 for u prime to 30: each gives an imaginary quadratic field.
for u in (1, 7, 11):
    cert = certify_corollary(u)
    print(f"\nu = {u}: status {cert.status}, fundamental discriminant {cert.fundamental_disc}")
    print(f"  -43 N(u) = {corollary_quad_disc(u)}")
    print(f"  real roots: {cert.signature}")
    for loc in cert.locals:
        print(f"  p = {loc.prime:>22}  v = {loc.v_disc:>2}  {str(loc.inertia_class):<13} "
              f"{str(loc.residual_pattern or ''):<10} via {loc.method}")
    w3, w5 = cert.galois.witnesses
    print(f"  S5 witnesses: p = {w3[0]} {w3[1]}, p = {w5[0]} {w5[1]}")
