# Admissible parameters w and the genus-1 curve they live on.
#
# Condition a) with kernel 43 means 43 Y^2 = (-50W^2 + 27)(10W^2 + 8W + 1)
# has a rational point with W = w.

from quinticcert.family import (
    RANK0_CUBIC,
    TWIST_43,
    branch_conjugacy,
    check_conditions,
    curve_search,
    integral_x_search,
    specialization_plan,
    totally_real_scan,
)

points = curve_search(43, TWIST_43, 300)
ws = sorted({p.W for p in points})
print(f"{len(points)} points with both signs of Y, {len(ws)} distinct W")
for w in ws:
    r = check_conditions(w)
    plan = specialization_plan(w)
    print(f"  W = {str(w):>9}  a)={r.a_ok!s:<5} b)={r.b_ok!s:<5} b')={r.bprime_ok!s:<5} "
          f"conjugate branch points: {branch_conjugacy(w)!s:<5} s0 = {plan.selected}")

print("\nY^2 = X(X-15)(X-24), integer X in [-1000, 10^6]:",
      [(str(p.W), str(p.Y)) for p in integral_x_search(RANK0_CUBIC, -1000, 10**6)])

print("\ntotally real specializations at w = -2/3:", [str(s) for s, _ in totally_real_scan("-2/3")])
