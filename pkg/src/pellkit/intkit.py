"""Exact integer primitives: square root, gcd, primality, factorization,
square-free core, Jacobi symbol, Euler phi.

Everything is arbitrary-precision and deterministic.  Nothing here returns a
probabilistic answer: primality uses a fixed Miller-Rabin witness set that is
a proven deterministic test below MR_VALID_BELOW, and factorization either
completes exactly or raises.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

# Witness set of Sorenson & Webster: Miller-Rabin with these 12 bases is a
# deterministic primality test for every n below this bound.
MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
MR_VALID_BELOW = 3_317_044_064_679_887_385_961_981

DEFAULT_TRIAL_BOUND = 10_000_000
TRIAL_BOUND_ENV = "PELLKIT_TRIAL_BOUND"


class FactorizationIncompleteError(ValueError):
    """Trial division hit its bound and the cofactor could not be certified prime."""


def isqrt(n: int) -> tuple[int, bool]:
    """Floor square root of n with an exactness flag: (r, r*r == n)."""
    if n < 0:
        raise ValueError("isqrt: negative input")
    r = math.isqrt(n)
    return r, r * r == n


def gcd(a: int, b: int) -> int:
    """Nonnegative greatest common divisor; gcd(0, 0) == 0."""
    return math.gcd(a, b)


def is_prime(n: int) -> bool:
    """Deterministic primality test for 0 <= n < MR_VALID_BELOW."""
    if n < 2:
        return False
    for p in MR_WITNESSES:
        if n % p == 0:
            return n == p
    if n >= MR_VALID_BELOW:
        raise ValueError("is_prime: n exceeds the deterministic witness range")
    d = n - 1
    s = (d & -d).bit_length() - 1  # n-1 = d * 2^s with d odd
    d >>= s
    for a in MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Factorization:
    """Complete prime factorization of `value` as (prime, exponent) pairs,
    primes strictly increasing."""

    value: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        recomposed = 1
        prev = 1
        for p, e in self.factors:
            if p <= prev or e < 1:
                raise ValueError("Factorization: primes must increase, exponents >= 1")
            prev = p
            recomposed *= p**e
        if recomposed != self.value:
            raise ValueError("Factorization: factors do not recompose value")

    def __str__(self):
        if not self.factors:
            return "1"
        return "*".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors)


def _trial_bound(trial_bound: int | None) -> int:
    if trial_bound is not None:
        return trial_bound
    return int(os.environ.get(TRIAL_BOUND_ENV, DEFAULT_TRIAL_BOUND))


def factorize(n: int, trial_bound: int | None = None) -> Factorization:
    """Exact factorization by trial division up to `trial_bound` (default from
    PELLKIT_TRIAL_BOUND or 10^7), with the cofactor certified prime by
    is_prime.  Raises FactorizationIncompleteError instead of guessing.
    """
    if n < 1:
        raise ValueError("factorize: n must be >= 1")
    bound = _trial_bound(trial_bound)
    value = n
    factors = []
    e = 0
    while n % 2 == 0:
        n //= 2
        e += 1
    if e:
        factors.append((2, e))
    d = 3
    while d * d <= n and d <= bound:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            factors.append((d, e))
        d += 2
    if n > 1:
        if d * d > n:
            factors.append((n, 1))  # no factor <= sqrt(n): prime
        elif n < MR_VALID_BELOW and is_prime(n):
            factors.append((n, 1))
        else:
            raise FactorizationIncompleteError(
                f"factorize: cofactor {n} not resolved with trial bound {bound}"
            )
    return Factorization(value, tuple(factors))


def squarefree_core(n: int, trial_bound: int | None = None) -> tuple[int, bool]:
    """Remove every square factor of n: returns (core, core == n)."""
    fac = factorize(n, trial_bound)
    core = 1
    for p, e in fac.factors:
        if e % 2:
            core *= p
    return core, core == n


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd n >= 1; the Legendre symbol when n is prime."""
    if n <= 0 or n % 2 == 0:
        raise ValueError("jacobi: n must be a positive odd integer")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def euler_phi(n: int, trial_bound: int | None = None) -> int:
    """Euler totient, computed from the exact factorization."""
    fac = factorize(n, trial_bound)
    phi = n
    for p, _ in fac.factors:
        phi //= p
        phi *= p - 1
    return phi
