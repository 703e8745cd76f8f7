"""Periodic continued fractions of sqrt(m) through the integer-only PQa
recurrence, plus convergents carrying their Pell values x^2 - m*y^2.

The surd state type handles any (P + sqrt(D))/Q internally; only sqrt(m) is
exposed here (the half-integral unit search in `pell` drives the same state
machine with P=1, Q=2).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import islice
from typing import Iterator

from .intkit import gcd, isqrt


@dataclass(frozen=True)
class SurdState:
    """Quadratic surd (P + sqrt(D)) / Q; Q must divide D - P^2 (the PQa
    well-formedness condition, preserved by step())."""

    P: int
    Q: int
    D: int

    def __post_init__(self):
        if self.Q == 0:
            raise ValueError("SurdState: Q must be nonzero")
        if self.D <= 0 or isqrt(self.D)[1]:
            raise ValueError("SurdState: D must be a positive nonsquare")
        if (self.D - self.P * self.P) % self.Q != 0:
            raise ValueError("SurdState: Q must divide D - P^2")

    def floor(self) -> int:
        # floor((P + sqrt(D))/Q) in pure integers; sqrt(D) is irrational, so
        # for Q < 0 an exactly divisible P + isqrt(D) must round down once more.
        num = self.P + isqrt(self.D)[0]
        a = num // self.Q
        if self.Q < 0 and num % self.Q == 0:
            a -= 1
        return a

    def step(self) -> tuple[int, "SurdState"]:
        """One PQa step: returns (partial quotient, successor state)."""
        a = self.floor()
        p = a * self.Q - self.P
        q = (self.D - p * p) // self.Q
        return a, SurdState(p, q, self.D)


@dataclass(frozen=True)
class CFExpansion:
    """sqrt(m) = [a0; period repeating], with the minimal period."""

    m: int
    a0: int
    period: tuple[int, ...]
    period_length: int

    def __post_init__(self):
        if not self.period or self.period_length != len(self.period):
            raise ValueError("CFExpansion: period_length must match the period")
        if self.a0 != isqrt(self.m)[0]:
            raise ValueError("CFExpansion: a0 must be floor(sqrt(m))")
        if self.period[-1] != 2 * self.a0:
            raise ValueError("CFExpansion: period must end with 2*a0")


@dataclass(frozen=True)
class Convergent:
    """Truncation p_k/q_k of sqrt(m) with pell_value = p_k^2 - m*q_k^2."""

    index: int
    numerator: int
    denominator: int
    pell_value: int

    def __post_init__(self):
        if gcd(self.numerator, self.denominator) != 1:
            raise ValueError("Convergent: numerator and denominator must be coprime")


def cf_sqrt(m: int) -> CFExpansion:
    """Minimal-period continued fraction of sqrt(m) for nonsquare m >= 2.

    The period is detected on the full (P, Q) surd state, not on partial
    quotients: quotient runs can coincide transiently, states cannot.
    """
    root, exact = isqrt(m) if m >= 0 else (0, False)
    if m < 2 or exact:
        raise ValueError(f"cf_sqrt: m must be >= 2 and not a perfect square (got {m})")
    a0, state = SurdState(0, 1, m).step()
    first = state
    period = []
    while True:
        a, nxt = state.step()
        period.append(a)
        if nxt == first:
            return CFExpansion(m, a0, tuple(period), len(period))
        state = nxt


def iter_convergents(exp: CFExpansion) -> Iterator[Convergent]:
    """Lazily yield convergents of sqrt(m); numerators grow exponentially, so
    callers slice rather than materialize."""
    m = exp.m
    p_prev, q_prev = 1, 0
    p, q = exp.a0, 1
    k = 0
    while True:
        yield Convergent(k, p, q, p * p - m * q * q)
        a = exp.period[k % exp.period_length]
        p, p_prev = a * p + p_prev, p
        q, q_prev = a * q + q_prev, q
        k += 1


def convergents(exp: CFExpansion, count: int) -> list[Convergent]:
    """First `count` convergents of the expansion."""
    if count < 1:
        raise ValueError("convergents: count must be >= 1")
    return list(islice(iter_convergents(exp), count))


def period_length(m: int) -> int:
    """Length of the minimal period of the continued fraction of sqrt(m)."""
    return cf_sqrt(m).period_length
