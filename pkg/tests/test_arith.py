import math
import random

import pytest
import sympy
from hypothesis import given, strategies as st

from quinticcert.arith import (
    Effort,
    FactoredInteger,
    IncompleteFactorization,
    NegativeKernel,
    all_primes_1_mod_3,
    factorize,
    is_prime,
    primes_up_to,
    squarefree_kernel,
    valuation,
)
from fractions import Fraction


def test_factorize_small_examples():
    f = factorize(108)
    assert f.sign == 1 and f.factors == {2: 2, 3: 3} and f.complete
    g = factorize(-43)
    assert g.sign == -1 and g.factors == {43: 1}


def test_factorize_corollary_norm_at_one():
    n = 2**11 * 3**10 * 43**6 - 43**3 * 263 * 883 + 108
    f = factorize(n)
    assert f.complete and f.value() == n
    assert f.factors == {int(p): e for p, e in sympy.factorint(n).items()}


def test_factorize_zero_rejected():
    with pytest.raises(ValueError):
        factorize(0)


def test_factorize_large_semiprime_uses_rho():
    p, q = 1000000007, 998244353
    f = factorize(p * q * 12)
    assert f.factors == {2: 2, 3: 1, p: 1, q: 1}


def test_budget_exhaustion_is_reported():
    p, q = 2**61 - 1, 2**89 - 1  # both prime
    f = factorize(p * q, Effort(trial_bound=100, rho_iterations=10, time_limit=5))
    assert not f.complete and f.cofactor == p * q
    assert f.value() == p * q
    with pytest.raises(IncompleteFactorization):
        squarefree_kernel(f)


def test_probable_primes_flagged():
    big = 2**89 - 1
    f = factorize(big)
    assert f.factors == {big: 1} and big in f.probable


@given(st.integers(min_value=2, max_value=10**6))
def test_reconstruction_and_kernel(n):
    f = factorize(n)
    assert f.value() == n
    assert all(is_prime(p) for p in f.factors)
    s, m = squarefree_kernel(n)
    assert s * m * m == n
    assert all(s % (d * d) for d in range(2, math.isqrt(abs(s)) + 1))


@given(st.integers(min_value=-10**6, max_value=10**6).filter(bool), st.integers(1, 500))
def test_kernel_ignores_square_factors(n, k):
    assert squarefree_kernel(n * k * k)[0] == squarefree_kernel(n)[0]


@pytest.mark.parametrize("n,expected", [(12, (3, 2)), (43, (43, 1)), (-18, (-2, 3))])
def test_squarefree_kernel_examples(n, expected):
    assert squarefree_kernel(n) == expected


def test_is_prime_matches_sieve():
    sieve = set(primes_up_to(10**6))
    assert all(is_prime(n) == (n in sieve) for n in range(-5, 200_000))


def test_is_prime_matches_sieve_full_range():
    sieve = set(primes_up_to(10**6))
    rng = random.Random(1)
    for n in rng.sample(range(10**6), 50_000):
        assert is_prime(n) == (n in sieve)


def test_is_prime_known_pseudoprimes():
    for n in (561, 3215031751, 3825123056546413051, 318665857834031151167461):
        assert not is_prime(n)
    assert is_prime(2**61 - 1)


def test_valuation():
    assert valuation(108, 3) == 3
    assert valuation(81, 3) == 4
    assert valuation(Fraction(86, 81), 3) == -4
    assert valuation(Fraction(86, 81), 43) == 1
    with pytest.raises(ValueError):
        valuation(0, 3)


def test_all_primes_1_mod_3():
    assert all_primes_1_mod_3(factorize(43))
    assert all_primes_1_mod_3(factorize(91))
    assert not all_primes_1_mod_3(factorize(5))
    assert all_primes_1_mod_3(factorize(43 * 4 * 49 * 9))  # squares are ignored
    with pytest.raises(NegativeKernel):
        all_primes_1_mod_3(factorize(-43))


def test_factored_integer_str():
    assert str(factorize(-360)) == "-2^3 * 3^2 * 5"
    assert str(FactoredInteger(1, {}, 1)) == "1"
