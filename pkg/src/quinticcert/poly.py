"""Dense univariate polynomials over Q and two-variable families F(t, X).

Coefficients are stored low degree first.  Sign conventions:

* ``resultant(f, g)`` is the determinant of the Sylvester matrix with the
  coefficients of ``f`` in the first ``deg g`` rows.  Equivalently
  ``lc(f)**deg(g) * prod g(alpha_i)`` over the roots of ``f``, so
  ``resultant(X - a, X - b) == a - b``.
* ``discriminant(f) = (-1)**(d(d-1)/2) * resultant(f, f') / lc(f)``, which
  gives ``disc(X**2 + 1) == -4``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "UniPoly",
    "PolyInT",
    "X",
    "resultant",
    "discriminant",
    "discriminant_in_t",
    "shift_scale",
    "sturm_sequence",
    "sturm_count",
    "real_root_count",
    "squarefree_part",
    "real_root_intervals",
]


def _frac(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class UniPoly:
    """Immutable dense polynomial with Fraction coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def constant(cls, c) -> "UniPoly":
        return cls([c])

    @classmethod
    def from_roots(cls, roots) -> "UniPoly":
        f = cls([1])
        for r in roots:
            f = f * cls([-_frac(r), 1])
        return f

    # -- basic structure -------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            if isinstance(other, (int, Fraction)):
                other = UniPoly([other])
            else:
                return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UniPoly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("X" if i == 1 else f"X^{i}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = str(abs(c)) + ("*" + mono if mono else "")
            terms.append(("- " if c < 0 else "+ ") + body)
        out = " ".join(terms)
        return out[2:] if out.startswith("+ ") else "-" + out[2:]

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def int_coeffs(self) -> list[int]:
        if not self.is_integral():
            raise ValueError("polynomial has non-integral coefficients")
        return [c.numerator for c in self.coeffs]

    def monic(self) -> "UniPoly":
        lc = self.lc()
        return UniPoly(c / lc for c in self.coeffs)

    def content(self) -> Fraction:
        """Positive rational c with self/c primitive integral."""
        if not self.coeffs:
            return Fraction(0)
        num = 0
        den = 1
        for c in self.coeffs:
            num = math.gcd(num, c.numerator)
            den = den * c.denominator // math.gcd(den, c.denominator)
        return Fraction(num, den)

    # -- arithmetic ------------------------------------------------------

    def _coerce(self, other) -> "UniPoly":
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return UniPoly([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = UniPoly([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other: "UniPoly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UniPoly(), self
        quot = [Fraction(0)] * (dq + 1)
        lc = other.lc()
        for k in range(dq, -1, -1):
            c = rem[k + len(other.coeffs) - 1] / lc
            quot[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return UniPoly(quot), UniPoly(rem[: len(other.coeffs) - 1])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError("division is not exact")
        return q

    def __call__(self, x):
        """Horner evaluation; ``x`` may be a number or a UniPoly."""
        acc = UniPoly() if isinstance(x, UniPoly) else Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "UniPoly":
        return UniPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def compose_linear(self, alpha, beta) -> "UniPoly":
        """self(alpha + beta*X)."""
        return self(UniPoly([alpha, beta]))

    def scale_roots(self, d) -> "UniPoly":
        """d**deg * self(X/d): roots multiplied by d."""
        d = _frac(d)
        n = self.degree
        return UniPoly(c * d ** (n - i) for i, c in enumerate(self.coeffs))

    def sign_at(self, x) -> int:
        v = self(x)
        return (v > 0) - (v < 0)


X = UniPoly([0, 1])


def gcd(f: UniPoly, g: UniPoly) -> UniPoly:
    """Monic gcd over Q."""
    while not g.is_zero():
        f, g = g, f % g
    return f.monic() if not f.is_zero() else f


def squarefree_part(f: UniPoly) -> UniPoly:
    g = gcd(f, f.derivative())
    return f.exact_div(g).monic() if g.degree > 0 else f.monic()


def resultant(f: UniPoly, g: UniPoly) -> Fraction:
    """Resultant over Q via the Euclidean remainder sequence.

    Uses res(f, g) = (-1)**(m n) lc(g)**(m - deg r) res(g, r) with r = f mod g.
    """
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant of the zero polynomial")
    acc = Fraction(1)
    while True:
        m, n = f.degree, g.degree
        if n == 0:
            return acc * g.lc() ** m
        r = f % g
        if r.is_zero():
            return Fraction(0)
        if (m * n) % 2:
            acc = -acc
        acc *= g.lc() ** (m - r.degree)
        f, g = g, r


def discriminant(f: UniPoly) -> Fraction:
    d = f.degree
    if d < 1:
        raise ValueError("discriminant needs degree >= 1")
    if d == 1:
        return Fraction(1)
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return sign * resultant(f, f.derivative()) / f.lc()


class PolyInT:
    """F(t, X) = sum_i a_i(t) X**i with each a_i a UniPoly in t."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[UniPoly]):
        cs = [c if isinstance(c, UniPoly) else UniPoly([c]) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def from_dict(cls, terms: dict[tuple[int, int], object]) -> "PolyInT":
        """Build from ``{(deg_X, deg_t): coefficient}``."""
        dx = max(i for i, _ in terms)
        dt = max(j for _, j in terms)
        grid = [[0] * (dt + 1) for _ in range(dx + 1)]
        for (i, j), c in terms.items():
            grid[i][j] += c
        return cls([UniPoly(row) for row in grid])

    @property
    def degree_x(self) -> int:
        return len(self.coeffs) - 1

    @property
    def degree_t(self) -> int:
        return max(c.degree for c in self.coeffs)

    def specialize(self, t0) -> UniPoly:
        return UniPoly(c(_frac(t0)) for c in self.coeffs)

    def substitute_t(self, g: UniPoly) -> "PolyInT":
        """F(g(t), X)."""
        return PolyInT([c(g) for c in self.coeffs])

    def clear_denominators(self) -> "PolyInT":
        den = 1
        for c in self.coeffs:
            for a in c.coeffs:
                den = den * a.denominator // math.gcd(den, a.denominator)
        return PolyInT([c * den for c in self.coeffs])

    def __eq__(self, other):
        return isinstance(other, PolyInT) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"PolyInT({[str(c) for c in self.coeffs]})"


def _interpolate(xs: Sequence[Fraction], ys: Sequence[Fraction]) -> UniPoly:
    """Newton divided-difference interpolation."""
    n = len(xs)
    coef = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    poly = UniPoly([coef[-1]])
    for i in range(n - 2, -1, -1):
        poly = poly * UniPoly([-xs[i], 1]) + coef[i]
    return poly


def discriminant_in_t(F: PolyInT) -> UniPoly:
    """Discriminant of F with respect to X, as a polynomial in t.

    The discriminant is a polynomial in the coefficients of total degree
    ``2n - 2``, so its t-degree is at most ``(2n - 2) * deg_t F``.  It is
    recovered by exact interpolation through that many + 1 specializations
    at integers where the X-degree does not drop.
    """
    n = F.degree_x
    if n < 2:
        raise ValueError("X-degree must be at least 2")
    bound = (2 * n - 2) * F.degree_t
    lead = F.coeffs[-1]
    xs: list[Fraction] = []
    ys: list[Fraction] = []
    k = 0
    while len(xs) <= bound:
        t0 = Fraction((k + 1) // 2 * (1 if k % 2 else -1))
        k += 1
        if lead(t0) == 0:
            continue
        xs.append(t0)
        ys.append(discriminant(F.specialize(t0)))
    return _interpolate(xs, ys)


def shift_scale(f: UniPoly, alpha, beta, normalizer=1) -> UniPoly:
    """normalizer**-1 * f(alpha + beta*X)."""
    beta, normalizer = _frac(beta), _frac(normalizer)
    if beta == 0 or normalizer == 0:
        raise ValueError("beta and normalizer must be nonzero")
    g = f.compose_linear(_frac(alpha), beta)
    return UniPoly(c / normalizer for c in g.coeffs)


# -- Sturm sequences -----------------------------------------------------

def sturm_sequence(f: UniPoly) -> list[UniPoly]:
    seq = [f, f.derivative()]
    while not seq[-1].is_zero() and seq[-1].degree > 0:
        r = seq[-2] % seq[-1]
        if r.is_zero():
            break
        seq.append(-r)
    return seq


def _sign_at_infinity(p: UniPoly, positive: bool) -> int:
    s = 1 if p.lc() > 0 else -1
    if not positive and p.degree % 2:
        s = -s
    return s


def _variations(signs: Iterable[int]) -> int:
    nz = [s for s in signs if s]
    return sum(1 for a, b in zip(nz, nz[1:]) if a != b)


def _signs(seq: list[UniPoly], x) -> list[int]:
    if x == math.inf:
        return [_sign_at_infinity(p, True) for p in seq]
    if x == -math.inf:
        return [_sign_at_infinity(p, False) for p in seq]
    return [p.sign_at(x) for p in seq]


def sturm_count(f: UniPoly, lo=-math.inf, hi=math.inf) -> int:
    """Number of distinct real roots of squarefree ``f`` in (lo, hi]."""
    if f.degree < 1:
        return 0
    seq = sturm_sequence(f)
    lo = lo if lo in (math.inf, -math.inf) else _frac(lo)
    hi = hi if hi in (math.inf, -math.inf) else _frac(hi)
    return _variations(_signs(seq, lo)) - _variations(_signs(seq, hi))


def real_root_count(f: UniPoly) -> int:
    """Distinct real roots of an arbitrary nonzero polynomial."""
    return sturm_count(squarefree_part(f))


def cauchy_bound(f: UniPoly) -> Fraction:
    lc = abs(f.lc())
    return 1 + max((abs(c) / lc for c in f.coeffs[:-1]), default=Fraction(0))


def real_root_intervals(f: UniPoly, width) -> list[tuple[Fraction, Fraction]]:
    """Disjoint intervals (a, b], b - a <= width, each holding one real root."""
    g = squarefree_part(f)
    if g.degree < 1:
        return []
    seq = sturm_sequence(g)
    width = _frac(width)

    def count(a, b):
        return _variations(_signs(seq, a)) - _variations(_signs(seq, b))

    B = cauchy_bound(g)
    out = []
    stack = [(-B, B)]
    while stack:
        a, b = stack.pop()
        n = count(a, b)
        if n == 0:
            continue
        if n == 1 and b - a <= width:
            out.append((a, b))
            continue
        m = (a + b) / 2
        stack += [(m, b), (a, m)]
    return sorted(out)
