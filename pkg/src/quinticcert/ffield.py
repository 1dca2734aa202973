"""Polynomials over GF(p): factorization and the local tests built on it.

A :class:`ModPoly` is a coefficient tuple (low degree first) with entries
in ``range(p)``.  Factorization is the textbook pipeline: squarefree
decomposition, distinct-degree splitting, then Cantor-Zassenhaus
equal-degree splitting (trace map for p = 2).  The random splitting
elements come from ``random.Random(seed)`` so results are reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .arith import is_prime, valuation
from .poly import UniPoly, discriminant

__all__ = [
    "ModPoly",
    "DegreePattern",
    "WildPrime",
    "factor_mod_p",
    "degree_pattern",
    "is_irreducible",
    "distinct_root_count",
    "dedekind_index_test",
    "tame_disc_valuation",
]


class WildPrime(ValueError):
    """Raised for p <= 5, where ramification in a quintic may be wild."""


class ModPoly:
    __slots__ = ("p", "coeffs")

    def __init__(self, coeffs: Iterable, p: int):
        cs = []
        for c in coeffs:
            if isinstance(c, Fraction):
                if c.denominator % p == 0:
                    raise ZeroDivisionError(f"denominator divisible by {p}")
                c = c.numerator * pow(c.denominator, -1, p)
            cs.append(int(c) % p)
        while cs and cs[-1] == 0:
            cs.pop()
        self.p = p
        self.coeffs: tuple[int, ...] = tuple(cs)

    @classmethod
    def from_unipoly(cls, f: UniPoly, p: int) -> "ModPoly":
        return cls(f.coeffs, p)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def __eq__(self, other):
        return isinstance(other, ModPoly) and self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __lt__(self, other):
        return (self.degree, self.coeffs[::-1]) < (other.degree, other.coeffs[::-1])

    def __repr__(self):
        return f"ModPoly({list(self.coeffs)}, p={self.p})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("X" if i == 1 else f"X^{i}")
            terms.append(mono if (mono and c == 1) else f"{c}{'*' + mono if mono else ''}")
        return " + ".join(terms) + f" (mod {self.p})"

    def _new(self, coeffs) -> "ModPoly":
        return ModPoly(coeffs, self.p)

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        a, b = self.coeffs, other.coeffs
        return self._new((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n))

    def __neg__(self):
        return self._new(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return self._new(c * other for c in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return self._new(())
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return self._new(out)

    __rmul__ = __mul__

    def __divmod__(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        p = self.p
        rem = list(self.coeffs)
        db = other.degree
        if len(rem) - 1 < db:
            return self._new(()), self
        inv = pow(other.lc(), -1, p)
        quot = [0] * (len(rem) - db)
        for k in range(len(rem) - 1 - db, -1, -1):
            c = rem[k + db] * inv % p
            quot[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] = (rem[k + j] - c * b) % p
        return self._new(quot), self._new(rem[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.p
        return acc

    def monic(self) -> "ModPoly":
        if not self.coeffs:
            return self
        inv = pow(self.lc(), -1, self.p)
        return self * inv

    def derivative(self) -> "ModPoly":
        return self._new(i * c for i, c in enumerate(self.coeffs) if i)

    def gcd(self, other: "ModPoly") -> "ModPoly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def powmod(self, e: int, mod: "ModPoly") -> "ModPoly":
        result = self._new((1,))
        base = self % mod
        while e:
            if e & 1:
                result = result * base % mod
            base = base * base % mod
            e >>= 1
        return result

    def is_squarefree(self) -> bool:
        return self.degree <= 0 or self.gcd(self.derivative()).degree == 0

    def lift(self) -> UniPoly:
        """Integer lift with coefficients in [0, p)."""
        return UniPoly(self.coeffs)

    def roots(self) -> list[int]:
        """Distinct roots in GF(p), ascending."""
        return sorted((-g.coeffs[0]) % self.p for g, _ in factor_mod_p(self) if g.degree == 1)


def _x(p: int) -> ModPoly:
    return ModPoly((0, 1), p)


def _pth_root(f: ModPoly) -> ModPoly:
    p = f.p
    return ModPoly(f.coeffs[::p], p)


def squarefree_decomposition(f: ModPoly) -> list[tuple[ModPoly, int]]:
    """Monic squarefree factors ``(g, m)`` with f = lc * prod g**m."""
    f = f.monic()
    out: list[tuple[ModPoly, int]] = []
    if f.degree <= 0:
        return out
    c = f.gcd(f.derivative())
    w = f // c
    i = 1
    while w.degree > 0:
        y = w.gcd(c)
        z = w // y
        if z.degree > 0:
            out.append((z, i))
        i += 1
        w = y
        c = c // y
    if c.degree > 0:
        for g, m in squarefree_decomposition(_pth_root(c)):
            out.append((g, m * f.p))
    return out


def distinct_degree(f: ModPoly) -> list[tuple[ModPoly, int]]:
    """Split squarefree monic f into products of equal-degree irreducibles."""
    p = f.p
    out = []
    h = _x(p)
    d = 0
    while f.degree >= 2 * (d + 1):
        d += 1
        h = h.powmod(p, f)
        g = f.gcd(h - _x(p))
        if g.degree > 0:
            out.append((g, d))
            f = f // g
            h = h % f
    if f.degree > 0:
        out.append((f, f.degree))
    return out


def equal_degree(f: ModPoly, d: int, rng: random.Random) -> list[ModPoly]:
    """Split squarefree monic f whose irreducible factors all have degree d."""
    n = f.degree
    if n == d:
        return [f]
    p = f.p
    while True:
        a = ModPoly([rng.randrange(p) for _ in range(n)], p)
        if a.degree <= 0:
            continue
        if p == 2:
            t = a
            acc = a
            for _ in range(d - 1):
                t = t * t % f
                acc = acc + t
            b = acc
        else:
            b = a.powmod((p**d - 1) // 2, f) - ModPoly((1,), p)
        g = f.gcd(b)
        if 0 < g.degree < n:
            return equal_degree(g, d, rng) + equal_degree(f // g, d, rng)


def is_irreducible(f: ModPoly) -> bool:
    """Rabin's test: X^(p^n) = X mod f and no proper-subfield roots."""
    n = f.degree
    if n < 1:
        return False
    if n == 1:
        return True
    f = f.monic()
    p = f.p
    x = _x(p)
    if x.powmod(p**n, f) != x % f:
        return False
    for q in {q for q in range(2, n + 1) if n % q == 0 and is_prime(q)}:
        if f.gcd(x.powmod(p ** (n // q), f) - x).degree > 0:
            return False
    return True


def factor_mod_p(f: ModPoly, seed: int = 0) -> list[tuple[ModPoly, int]]:
    """Monic irreducible factors with multiplicities, sorted.

    The product of ``g**m`` over the result equals ``f.monic()``.
    """
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if not is_prime(f.p):
        raise ValueError(f"{f.p} is not prime")
    rng = random.Random(seed)
    out = []
    for g, m in squarefree_decomposition(f):
        for h, d in distinct_degree(g):
            for irr in equal_degree(h, d, rng):
                out.append((irr, m))
    out.sort(key=lambda fm: (fm[0].degree, fm[1], fm[0].coeffs[::-1]))
    return out


@dataclass(frozen=True, order=True)
class DegreePattern:
    """Sorted multiset of (degree of irreducible factor, multiplicity)."""

    parts: tuple[tuple[int, int], ...]

    @classmethod
    def of(cls, pairs: Iterable[tuple[int, int]]) -> "DegreePattern":
        return cls(tuple(sorted(pairs)))

    @classmethod
    def separable(cls, degrees: Iterable[int]) -> "DegreePattern":
        return cls.of((d, 1) for d in degrees)

    @property
    def total(self) -> int:
        return sum(d * m for d, m in self.parts)

    @property
    def is_separable(self) -> bool:
        return all(m == 1 for _, m in self.parts)

    def degrees(self) -> tuple[int, ...]:
        """Factor degrees with multiplicity, sorted descending (a cycle type)."""
        out = []
        for d, m in self.parts:
            out += [d] * m
        return tuple(sorted(out, reverse=True))

    def has_even_part(self) -> bool:
        return any(d % 2 == 0 for d, _ in self.parts)

    def __add__(self, other: "DegreePattern") -> "DegreePattern":
        return DegreePattern.of(self.parts + other.parts)

    def __str__(self):
        return "{" + ",".join(f"{d}^{m}" if m > 1 else str(d) for d, m in self.parts) + "}"

    def to_json(self) -> list[list[int]]:
        return [[d, m] for d, m in self.parts]


def degree_pattern(f: ModPoly, seed: int = 0) -> DegreePattern:
    return DegreePattern.of((g.degree, m) for g, m in factor_mod_p(f, seed))


def distinct_root_count(f: ModPoly, seed: int = 0) -> int:
    """Number of distinct roots of f in an algebraic closure of GF(p)."""
    return sum(g.degree for g, _ in factor_mod_p(f, seed))


def dedekind_index_test(f: UniPoly, p: int, seed: int = 0) -> bool:
    """True iff p does not divide the index [O_K : Z[theta]].

    ``f`` must be monic with integer coefficients.  With f = prod g_i^e_i
    mod p, put g = prod g_i, h = prod g_i^(e_i - 1) (integer lifts) and
    M = (f - g h) / p; the index is prime to p iff gcd(g, h, M) = 1 mod p.
    """
    if f.lc() != 1 or not f.is_integral():
        raise ValueError("Dedekind criterion needs a monic integer polynomial")
    fbar = ModPoly.from_unipoly(f, p)
    facs = factor_mod_p(fbar, seed)
    g = UniPoly([1])
    h = UniPoly([1])
    for gi, e in facs:
        lift = gi.lift()
        g = g * lift
        h = h * lift ** (e - 1)
    M = (f - g * h) * Fraction(1, p)
    if not M.is_integral():
        raise ArithmeticError("lift is not congruent to f mod p")
    Mbar = ModPoly.from_unipoly(M, p)
    common = ModPoly.from_unipoly(g, p).gcd(ModPoly.from_unipoly(h, p))
    return common.gcd(Mbar).degree == 0


def tame_disc_valuation(f: UniPoly, p: int, seed: int = 0) -> int | None:
    """Valuation at p of the field discriminant of Q[X]/(f), or None.

    Only claims an answer where it is forced: ``v_p(disc f) <= 1``, or the
    Dedekind test passes so that the factorization of p follows the
    factorization of f mod p and (tamely) v = sum (e_i - 1) f_i.
    """
    if p <= 5:
        raise WildPrime(f"p = {p} may be wildly ramified in a quintic")
    d = discriminant(f)
    if d == 0:
        raise ValueError("f is not separable")
    v = valuation(d, p)
    if v <= 1:
        return v
    if not dedekind_index_test(f, p, seed):
        return None
    facs = factor_mod_p(ModPoly.from_unipoly(f, p), seed)
    tame = sum((e - 1) * g.degree for g, e in facs)
    if tame != v:
        raise ArithmeticError("Dedekind test passed but valuations disagree")
    return tame
