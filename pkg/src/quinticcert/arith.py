"""Integer arithmetic: primality, factorization, squarefree kernels.

Rationals are plain :class:`fractions.Fraction` values and integers are
Python ints; nothing here wraps them.

Primality policy
----------------
:func:`is_prime` runs Miller-Rabin on the first twelve prime bases.  That
set is a proven deterministic test below 3.3e24, which covers every
``n < 2**64``.  Above ``2**64`` the answer is reported as a strong probable
prime, and :class:`FactoredInteger` lists such factors in ``probable``.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

__all__ = [
    "Effort",
    "FactoredInteger",
    "IncompleteFactorization",
    "NegativeKernel",
    "all_primes_1_mod_3",
    "factorize",
    "is_prime",
    "primes_up_to",
    "squarefree_kernel",
    "valuation",
]

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
DETERMINISTIC_LIMIT = 2**64


class IncompleteFactorization(ArithmeticError):
    """The effort budget ran out before the cofactor could be split."""


class NegativeKernel(ValueError):
    pass


@dataclass(frozen=True)
class Effort:
    """Budget for :func:`factorize`.

    ``rho_iterations`` is the total number of Brent steps across all
    restarts; ``time_limit`` is wall-clock seconds (``None`` = unbounded).
    """

    trial_bound: int = 10**6
    rho_iterations: int = 20_000_000
    time_limit: float | None = 120.0
    seed: int = 0

    def __post_init__(self):
        if self.trial_bound < 2 or self.rho_iterations < 1:
            raise ValueError("effort bounds must be positive")


@dataclass(frozen=True)
class FactoredInteger:
    sign: int
    factors: dict[int, int] = field(default_factory=dict)
    cofactor: int = 1
    complete: bool = True
    probable: frozenset[int] = frozenset()

    def value(self) -> int:
        n = self.sign * self.cofactor
        for p, e in self.factors.items():
            n *= p**e
        return n

    def primes(self) -> list[int]:
        return sorted(self.factors)

    def kernel_primes(self) -> list[int]:
        """Primes appearing to an odd power."""
        return sorted(p for p, e in self.factors.items() if e % 2)

    def __str__(self):
        if self.sign == 0:
            return "0"
        parts = [f"{p}^{e}" if e > 1 else str(p) for p, e in sorted(self.factors.items())]
        if self.cofactor != 1:
            parts.append(f"[{self.cofactor}]")
        body = " * ".join(parts) or "1"
        return ("-" if self.sign < 0 else "") + body


@lru_cache(maxsize=4)
def primes_up_to(n: int) -> tuple[int, ...]:
    if n < 2:
        return ()
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, n + 1, i)))
    return tuple(i for i, v in enumerate(sieve) if v)


def _strong_probable_prime(n: int, a: int) -> bool:
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    x = pow(a, d, n)
    if x in (1, n - 1):
        return True
    for _ in range(r - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


# extra bases used only above 2**64, where the answer is "probable prime"
_EXTRA_BASES = (41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)


def is_prime(n: int) -> bool:
    """Miller-Rabin on the primes up to 37: a proof below 2**64 (3.3e24 in
    fact).  Larger n also get 13 more bases and count as probable primes."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    bases = _MR_BASES if n < 2**64 else _MR_BASES + _EXTRA_BASES
    return all(_strong_probable_prime(n, a) for a in bases)


def valuation(n, p: int) -> int:
    """p-adic valuation of a nonzero integer or Fraction."""
    if isinstance(n, Fraction):
        return valuation(n.numerator, p) - valuation(n.denominator, p)
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def _brent(n: int, rng: random.Random, budget: int) -> tuple[int | None, int]:
    """One Pollard-Brent run.  Returns (factor or None, iterations used)."""
    y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
    g = r = q = 1
    used = 0
    x = ys = y
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = math.gcd(q, n)
            k += m
        used += r
        r *= 2
        if used > budget:
            return None, used
    if g == n:
        # batch overshot; backtrack one step at a time
        while True:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
            if g > 1:
                break
    return (g if g != n else None), used


def factorize(n: int, effort: Effort | None = None) -> FactoredInteger:
    """Trial division up to ``effort.trial_bound``, then Pollard-Brent rho."""
    if n == 0:
        raise ValueError("cannot factor 0")
    effort = effort or Effort()
    sign = -1 if n < 0 else 1
    n = abs(n)
    factors: dict[int, int] = {}

    for p in primes_up_to(effort.trial_bound):
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            factors[p] = e
    if n == 1:
        return FactoredInteger(sign, factors)
    if n <= effort.trial_bound**2 or is_prime(n):
        factors[n] = factors.get(n, 0) + 1
        probable = frozenset({n}) if n >= DETERMINISTIC_LIMIT else frozenset()
        return FactoredInteger(sign, factors, probable=probable)

    rng = random.Random(effort.seed)
    deadline = None if effort.time_limit is None else time.monotonic() + effort.time_limit
    budget = effort.rho_iterations
    stack = [n]
    leftover = 1
    while stack:
        m = stack.pop()
        if is_prime(m):
            factors[m] = factors.get(m, 0) + 1
            continue
        r = math.isqrt(m)
        if r * r == m:
            stack += [r, r]
            continue
        d = None
        while d is None and budget > 0:
            if deadline is not None and time.monotonic() > deadline:
                break
            d, used = _brent(m, rng, min(budget, 1 << 22))
            budget -= used
        if d is None:
            leftover *= m
            continue
        stack += [d, m // d]

    probable = frozenset(p for p in factors if p >= DETERMINISTIC_LIMIT)
    return FactoredInteger(sign, factors, leftover, leftover == 1, probable)


def squarefree_kernel(n: int, effort: Effort | None = None) -> tuple[int, int]:
    """Return ``(s, m)`` with ``n = s * m**2`` and ``s`` squarefree."""
    fi = n if isinstance(n, FactoredInteger) else factorize(n, effort)
    if not fi.complete:
        raise IncompleteFactorization(f"unfactored cofactor {fi.cofactor}")
    s, m = fi.sign, 1
    for p, e in fi.factors.items():
        s *= p ** (e % 2)
        m *= p ** (e // 2)
    return s, m


def all_primes_1_mod_3(f: FactoredInteger) -> bool:
    """Whether every prime in the squarefree kernel of ``f`` is 1 mod 3.

    A negative kernel raises :class:`NegativeKernel`.
    """
    if not f.complete:
        raise IncompleteFactorization(f"unfactored cofactor {f.cofactor}")
    if f.sign < 0:
        raise NegativeKernel("kernel is negative")
    return all(p % 3 == 1 for p in f.kernel_primes())
