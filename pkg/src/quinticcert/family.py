"""The quintic family f_{w,s} and everything parameterized by w.

    f_{w,s}(X) = X^2 (X-1)^3 + 2 s^2 (50 w^2 - 27)(10 w^2 + 8 w + 1)(X - 2 w^2)

With a = 2w^2 and c = 2(27 - 50w^2)(10w^2 + 8w + 1) this is
X^2 (X-1)^3 - c s^2 (X - a).  At w = -2/3 one has a = 8/9, c = 86/81 and
the substitution s = 27 sigma gives X^2 (X-1)^3 - 86 sigma^2 (9X - 8);
``sigma`` is called the *corollary coordinate* below.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .arith import (
    Effort,
    IncompleteFactorization,
    NegativeKernel,
    all_primes_1_mod_3,
    factorize,
    valuation,
)
from .local import ScaledReduction, integral_model
from .poly import (
    PolyInT,
    UniPoly,
    discriminant,
    discriminant_in_t,
    real_root_intervals,
    sturm_count,
)

__all__ = [
    "WParam",
    "ConditionReport",
    "CurvePoint",
    "DegenerateParameter",
    "NotCoprime",
    "WindowEmpty",
    "parse_rational",
    "derived_params",
    "check_conditions",
    "build_poly",
    "family_in_s",
    "branch_family",
    "COROLLARY_W",
    "COROLLARY_F",
    "corollary_poly",
    "corollary_s",
    "corollary_quad_disc",
    "specialization_plan",
    "exceptional_plans",
    "branch_quadratic",
    "branch_conjugacy",
    "curve_search",
    "integral_x_search",
    "totally_real_scan",
    "two_adic_class",
    "kernel_is_1_mod_4",
    "in_b_window",
    "in_bprime_window",
    "SpecializationPlan",
    "TWIST_43",
    "RANK0_CUBIC",
    "B_WINDOW",
    "BPRIME_WINDOW",
]

# decimal endpoints as printed, closed intervals
B_WINDOW = ((Fraction("-0.7348"), Fraction("-0.645")), (Fraction("-0.155"), Fraction("0.7348")))
BPRIME_WINDOW = (Fraction("0.645"), Fraction("0.7348"))


class DegenerateParameter(ValueError):
    pass


class NotCoprime(ValueError):
    pass


class WindowEmpty(LookupError):
    pass


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


@dataclass(frozen=True)
class WParam:
    w1: int
    w2: int

    def __post_init__(self):
        if self.w2 <= 0 or math.gcd(self.w1, self.w2) != 1:
            raise ValueError(f"need coprime w1, w2 > 0; got {self.w1}/{self.w2}")

    @classmethod
    def of(cls, w) -> "WParam":
        if isinstance(w, WParam):
            return w
        w = Fraction(w) if not isinstance(w, str) else parse_rational(w)
        return cls(w.numerator, w.denominator)

    @property
    def w(self) -> Fraction:
        return Fraction(self.w1, self.w2)

    @property
    def a(self) -> Fraction:
        return 2 * self.w**2

    @property
    def c(self) -> Fraction:
        w = self.w
        return 2 * (27 - 50 * w**2) * (10 * w**2 + 8 * w + 1)

    def condition_product(self) -> int:
        """(-50 w1^2 + 27 w2^2)(10 w1^2 + 8 w1 w2 + w2^2); equals w2^4 c / 2."""
        w1, w2 = self.w1, self.w2
        return (-50 * w1**2 + 27 * w2**2) * (10 * w1**2 + 8 * w1 * w2 + w2**2)

    def __str__(self):
        return str(self.w)


def derived_params(w) -> tuple[Fraction, Fraction]:
    wp = WParam.of(w)
    return wp.a, wp.c


@dataclass(frozen=True)
class ConditionReport:
    w: Fraction
    product: int
    kernel: int | None
    kernel_primes: tuple[int, ...]
    a_ok: bool | None
    b_ok: bool
    bprime_ok: bool
    c_positive: bool
    note: str = ""

    def to_json(self) -> dict:
        return {
            "w": str(self.w),
            "product": str(self.product),
            "kernel": None if self.kernel is None else str(self.kernel),
            "kernel_primes": [str(p) for p in self.kernel_primes],
            "a_ok": self.a_ok,
            "b_ok": self.b_ok,
            "bprime_ok": self.bprime_ok,
            "c_positive": self.c_positive,
            "note": self.note,
        }


def in_b_window(w: Fraction) -> bool:
    return w != 0 and any(lo <= w <= hi for lo, hi in B_WINDOW)


def in_bprime_window(w: Fraction) -> bool:
    lo, hi = BPRIME_WINDOW
    return lo <= abs(w) <= hi


def check_conditions(w, effort: Effort | None = None) -> ConditionReport:
    wp = WParam.of(w)
    prod = wp.condition_product()
    note = ""
    kernel = None
    kprimes: tuple[int, ...] = ()
    if prod == 0:
        a_ok = False
        note = "product vanishes"
    else:
        fi = factorize(prod, effort)
        if not fi.complete:
            a_ok = None
            note = f"unfactored cofactor {fi.cofactor}"
        else:
            kprimes = tuple(fi.kernel_primes())
            kernel = fi.sign * math.prod(kprimes)
            try:
                a_ok = all_primes_1_mod_3(fi)
            except NegativeKernel:
                a_ok = False
                note = "negative kernel"
            except IncompleteFactorization:
                a_ok = None
    return ConditionReport(
        w=wp.w,
        product=prod,
        kernel=kernel,
        kernel_primes=kprimes,
        a_ok=a_ok,
        b_ok=in_b_window(wp.w),
        bprime_ok=in_bprime_window(wp.w),
        c_positive=wp.c > 0,
        note=note,
    )


def build_poly(w, s) -> UniPoly:
    wp = WParam.of(w)
    s = Fraction(s)
    if s == 0:
        raise DegenerateParameter("s = 0 gives X^2 (X-1)^3")
    if wp.c == 0:
        raise DegenerateParameter(f"c(w) = 0 at w = {wp}")
    base = UniPoly([0, 0, -1, 3, -3, 1])  # X^2 (X-1)^3
    k = wp.c * s * s
    return base - UniPoly([-k * wp.a, k])


def family_in_s(w) -> PolyInT:
    """F(s, X) = X^2 (X-1)^3 - c s^2 (X - a), coefficients in Q[s]."""
    wp = WParam.of(w)
    a, c = wp.a, wp.c
    return PolyInT(
        [
            UniPoly([0, 0, c * a]),
            UniPoly([0, 0, -c]),
            UniPoly([-1]),
            UniPoly([3]),
            UniPoly([-3]),
            UniPoly([1]),
        ]
    )


def branch_family(w) -> PolyInT:
    """X^2 (X-1)^3 - t (X - 2 w^2) over Q[t]."""
    a = WParam.of(w).a
    return PolyInT([UniPoly([0, a]), UniPoly([0, -1]), UniPoly([-1]), UniPoly([3]), UniPoly([-3]), UniPoly([1])])


COROLLARY_W = Fraction(-2, 3)
# X^2 (X-1)^3 - 86 t^2 (9X - 8)
COROLLARY_F = PolyInT(
    [UniPoly([0, 0, 688]), UniPoly([0, 0, -774]), UniPoly([-1]), UniPoly([3]), UniPoly([-3]), UniPoly([1])]
)


def corollary_s(u: int) -> Fraction:
    """Family coordinate s for the corollary specialization sigma = 86 u^3."""
    return Fraction(27 * 86 * u**3)


def corollary_poly(u: int) -> UniPoly:
    return COROLLARY_F.specialize(86 * u**3)


def _check_u(u: int):
    if math.gcd(u, 30) != 1:
        raise NotCoprime(f"u = {u} is not coprime to 30")


def corollary_quad_disc(u: int) -> int:
    """-43 (2^11 3^10 43^6 u^12 - 43^3 263 883 u^6 + 108)."""
    _check_u(u)
    return -43 * (2**11 * 3**10 * 43**6 * u**12 - 43**3 * 263 * 883 * u**6 + 108)


def two_adic_class(disc: int) -> tuple[int, int]:
    """(v_2(kernel), odd part of kernel mod 4) for the squarefree kernel of disc.

    Needs no factorization: the odd square part m^2 is 1 mod 8.
    """
    v = valuation(disc, 2)
    odd = disc // 2**v
    return v % 2, odd % 4


def kernel_is_1_mod_4(disc: int) -> bool:
    v, r = two_adic_class(disc)
    return v == 0 and r == 1


@dataclass(frozen=True)
class SpecializationPlan:
    w: Fraction
    rule: str
    candidates: tuple[Fraction, ...]
    kernel_1_mod_4: tuple[bool, ...]
    selected: Fraction | None
    corollary: bool = False

    def corollary_values(self, us) -> list[Fraction]:
        if not self.corollary:
            return []
        out = []
        for u in us:
            _check_u(u)
            out.append(corollary_s(u))
        return out

    def to_json(self) -> dict:
        return {
            "w": str(self.w),
            "rule": self.rule,
            "candidates": [str(s) for s in self.candidates],
            "kernel_1_mod_4": list(self.kernel_1_mod_4),
            "selected": None if self.selected is None else str(self.selected),
            "corollary_form": "s0 = 2322 u^3 (sigma = 86 u^3), gcd(u, 30) = 1" if self.corollary else None,
        }


def specialization_plan(w) -> SpecializationPlan:
    """Values s0 chosen so 2 is unramified in the quadratic subfield.

    w1 odd, w2 even: s0 = w2^3 / 4.  w1 even, w2 odd: s0 = 2 w2^3.  Both
    odd: whichever of 2 w2^3, 6 w2^3 gives a discriminant whose squarefree
    kernel is 1 mod 4 (``selected`` is None if neither does).  At
    w = -2/3 the corollary family sigma = 86 u^3 (family s = 2322 u^3)
    is flagged as well.
    """
    wp = WParam.of(w)
    w1, w2 = wp.w1, wp.w2
    if w1 % 2 and not w2 % 2:
        cands = (Fraction(w2**3, 4),)
        rule = "w1 odd, w2 even"
    elif not w1 % 2 and w2 % 2:
        cands = (Fraction(2 * w2**3),)
        rule = "w1 even, w2 odd"
    else:
        cands = (Fraction(2 * w2**3), Fraction(6 * w2**3))
        rule = "w1, w2 odd"
    checks = tuple(kernel_is_1_mod_4(_disc_int(wp, s)) for s in cands)
    if len(cands) == 1:
        selected = cands[0]
    else:
        selected = next((s for s, ok in zip(cands, checks) if ok), None)
    return SpecializationPlan(wp.w, rule, cands, checks, selected, wp.w == COROLLARY_W)


def _disc_int(wp: WParam, s) -> int:
    g, _ = integral_model(build_poly(wp, s))
    return int(discriminant(g))


def exceptional_plans(w, s) -> dict[int, list[ScaledReduction]]:
    """Shipped scaled-reduction plans keyed by prime, for f_{w,s} itself.

    * p = 2, w2 odd, s in {2 w2^3, 6 w2^3}: (1/8) f(1 - 2X) is X^3 + 1 mod 2.
    * p = 43, w = -2/3, sigma = s/27 = 86 (43^d u')^3:
      43^-(6d+3) f(1 - 43^(2d+1) X) is a separable cubic mod 43.
    """
    wp = WParam.of(w)
    s = Fraction(s)
    plans: dict[int, list[ScaledReduction]] = {}
    if wp.w2 % 2 and s in (2 * wp.w2**3, 6 * wp.w2**3):
        plans[2] = [ScaledReduction(Fraction(1), Fraction(-2), Fraction(8))]
    if wp.w == COROLLARY_W:
        sigma = s / 27
        cube = sigma / 86
        if cube.denominator == 1 and cube != 0:
            u = _icbrt(cube.numerator)
            if u is not None:
                d = valuation(u, 43)
                plans[43] = [ScaledReduction(Fraction(1), Fraction(-(43 ** (2 * d + 1))), Fraction(43 ** (6 * d + 3)))]
    return plans


def _icbrt(n: int) -> int | None:
    sign = -1 if n < 0 else 1
    m = abs(n)
    r = round(m ** (1 / 3)) if m < 2**1000 else int(m ** (1 / 3))
    for c in (r - 1, r, r + 1):
        if c >= 0 and c**3 == m:
            return sign * c
    lo, hi = 0, 1 << (m.bit_length() // 3 + 1)
    while lo < hi:
        mid = (lo + hi) // 2
        if mid**3 < m:
            lo = mid + 1
        else:
            hi = mid
    return sign * lo if lo**3 == m else None


def branch_quadratic(w) -> UniPoly:
    """The quadratic factor of disc_X(X^2 (X-1)^3 - t (X - 2w^2)) after removing powers of t."""
    delta = discriminant_in_t(branch_family(w))
    k = 0
    while delta[k] == 0:
        k += 1
    q = UniPoly(delta.coeffs[k:])
    if q.degree != 2:
        raise DegenerateParameter(f"branch locus degenerates at w = {w}")
    return q


def _is_rational_square(x: Fraction) -> bool:
    if x < 0:
        return False
    a, b = math.isqrt(x.numerator), math.isqrt(x.denominator)
    return a * a == x.numerator and b * b == x.denominator


def branch_conjugacy(w) -> bool:
    """True iff the two non-zero finite branch points are conjugate (irrational)."""
    q = branch_quadratic(w)
    return not _is_rational_square(q[1] ** 2 - 4 * q[0] * q[2])


@dataclass(frozen=True, order=True)
class CurvePoint:
    W: Fraction
    Y: Fraction

    def to_json(self) -> dict:
        return {"W": str(self.W), "Y": str(self.Y)}


def _homogeneous_value(q: UniPoly, a: int, b: int) -> int:
    """b^4 q(a/b) for deg q <= 4."""
    if q.degree > 4:
        raise ValueError("degree at most 4")
    return sum(int(c) * a**i * b ** (4 - i) for i, c in enumerate(q.coeffs))


def _farey(height: int) -> Iterator[tuple[int, int]]:
    for b in range(1, height + 1):
        for a in range(-height, height + 1):
            if math.gcd(a, b) == 1:
                yield a, b


def curve_search(D: int, q: UniPoly, height: int) -> list[CurvePoint]:
    """All (W, Y) with D Y^2 = q(W), W = a/b, |a|, b <= height, gcd(a, b) = 1."""
    if height < 1:
        raise ValueError("height must be >= 1")
    if not q.is_integral():
        raise ValueError("q must have integer coefficients")
    pts = []
    for a, b in _farey(height):
        val = _homogeneous_value(q, a, b)
        if val * D < 0 or val % D:
            continue
        y2 = val // D
        y = math.isqrt(y2)
        if y * y != y2:
            continue
        W = Fraction(a, b)
        Y = Fraction(y, b * b)
        pts.append(CurvePoint(W, Y))
        if y:
            pts.append(CurvePoint(W, -Y))
    return sorted(pts)


def integral_x_search(g: UniPoly, lo: int, hi: int) -> list[CurvePoint]:
    """Integer X in [lo, hi] with g(X) a perfect square; points (X, +-Y)."""
    cs = g.int_coeffs()
    pts = []
    for x in range(lo, hi + 1):
        v = 0
        for c in reversed(cs):
            v = v * x + c
        if v < 0:
            continue
        y = math.isqrt(v)
        if y * y == v:
            pts.append(CurvePoint(Fraction(x), Fraction(y)))
            if y:
                pts.append(CurvePoint(Fraction(x), Fraction(-y)))
    return sorted(pts)


# 43 Y^2 = (-50 W^2 + 27)(10 W^2 + 8 W + 1)
TWIST_43 = UniPoly([27, 216, 220, -400, -500])
# Y^2 = X (X - 15)(X - 24)
RANK0_CUBIC = UniPoly([0, 360, -39, 1])


def _simple_in(lo: Fraction, hi: Fraction, max_den: int = 10**6) -> Fraction:
    """A short rational strictly inside (lo, hi)."""
    mid = (lo + hi) / 2
    for den in (1, 2, 4, 8, 10, 16, 100, 1000, 10**4, 10**5, max_den):
        x = Fraction(round(mid * den), den)
        if lo < x < hi:
            return x
    return mid


def _cube_over_square_in(lo: Fraction, hi: Fraction, max_v: int = 200) -> Fraction | None:
    """Some u^3 / v^2 (gcd(u, v) = 1) strictly inside (lo, hi)."""
    for v in range(1, max_v + 1):
        for target in (lo, (lo + hi) / 2, hi):
            x = float(target) * v * v
            base = round(abs(x) ** (1 / 3)) * (1 if x >= 0 else -1)
            for u in (base - 1, base, base + 1):
                if math.gcd(u, v) == 1:
                    cand = Fraction(u**3, v * v)
                    if lo < cand < hi:
                        return cand
    return None


def totally_real_scan(w, resolution: int = 3) -> list[tuple[Fraction, int]]:
    """Rational s0 with f_{w,s0} totally real.

    The real-root count is constant between consecutive real roots of
    disc_X f_{w,s} (a polynomial in s), so each gap between isolating
    intervals, and each tail, is sampled ``resolution`` times plus one
    value of the form u^3 / v^2 when one is found.
    """
    delta = discriminant_in_t(family_in_s(w))
    boxes = real_root_intervals(delta, Fraction(1, 10**9))
    span = max([Fraction(1)] + [abs(x) for box in boxes for x in box])
    edges = [-2 * span] + [x for box in boxes for x in box] + [2 * span]
    found = set()
    for lo, hi in zip(edges[::2], edges[1::2]):
        if not lo < hi:
            continue
        samples = [_simple_in(lo + (hi - lo) * (k - 1) / resolution, lo + (hi - lo) * k / resolution)
                   for k in range(1, resolution + 1)]
        cand = _cube_over_square_in(lo, hi)
        if cand is not None:
            samples.append(cand)
        for s0 in samples:
            f = build_poly(w, s0) if s0 != 0 else None
            if f is None or discriminant(f) == 0:
                continue
            if sturm_count(f) == 5:
                found.add((s0, 5))
    if not found:
        raise WindowEmpty(f"no totally real specialization found for w = {w}")
    return sorted(found)
