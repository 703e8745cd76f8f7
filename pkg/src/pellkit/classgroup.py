"""Class numbers of real quadratic fields by exact enumeration of reduced
primitive indefinite binary quadratic forms and their rho-cycles.

The cycle count of discriminant D is the narrow class number h+; the wide
class number follows from the norm of the fundamental unit (h = h+ when the
norm is -1, h = h+/2 when it is +1).  All sqrt(D) comparisons are done on
squares in integer arithmetic: a float at the reduction-window boundary can
silently merge or split cycles.
"""

from __future__ import annotations

from dataclasses import dataclass

from .intkit import gcd, isqrt, squarefree_core
from .pell import unit_norm


@dataclass(frozen=True)
class IndefiniteForm:
    """Primitive integral form a*x^2 + b*x*y + c*y^2 of discriminant
    D = b^2 - 4ac > 0, D nonsquare."""

    a: int
    b: int
    c: int
    D: int

    def __post_init__(self):
        if self.a == 0 or self.c == 0:
            raise ValueError("IndefiniteForm: outer coefficients must be nonzero")
        if self.b * self.b - 4 * self.a * self.c != self.D:
            raise ValueError("IndefiniteForm: discriminant mismatch")
        if self.D <= 0 or isqrt(self.D)[1]:
            raise ValueError("IndefiniteForm: discriminant must be positive nonsquare")
        if gcd(gcd(self.a, self.b), self.c) != 1:
            raise ValueError("IndefiniteForm: form must be primitive")

    def is_reduced(self) -> bool:
        # |sqrt(D) - 2|a|| < b < sqrt(D), decided on integers
        s = isqrt(self.D)[0]
        if self.b <= 0 or self.b > s:
            return False
        ta = 2 * abs(self.a)
        return ta - self.b <= s and ta + self.b >= s + 1

    def coefficients(self) -> tuple[int, int, int]:
        return self.a, self.b, self.c


def _rho_step(f: IndefiniteForm) -> IndefiniteForm:
    # Successor (c, b', *) with b' = -b (mod 2|c|), b' placed in the standard
    # window: (-|c|, |c|] while |c| > sqrt(D), else (sqrt(D) - 2|c|, sqrt(D)).
    s = isqrt(f.D)[0]
    c = f.c
    cabs = abs(c)
    if cabs > s:
        b2 = (-f.b) % (2 * cabs)
        if b2 > cabs:
            b2 -= 2 * cabs
    else:
        b2 = s - ((s + f.b) % (2 * cabs))
    c2 = (b2 * b2 - f.D) // (4 * c)
    return IndefiniteForm(c, b2, c2, f.D)


def reduce(f: IndefiniteForm) -> IndefiniteForm:
    """A reduced form equivalent to f (identity on already-reduced forms)."""
    steps = 0
    while not f.is_reduced():
        f = _rho_step(f)
        steps += 1
        if steps > 10_000:
            raise ArithmeticError("reduce: reduction did not terminate")
    return f


def rho(f: IndefiniteForm) -> IndefiniteForm:
    """Cycle successor of a reduced form; iterating returns to f after the
    (even) cycle length."""
    if not f.is_reduced():
        raise ValueError("rho: form must be reduced")
    return _rho_step(f)


def _validate_discriminant(D: int) -> int:
    if D <= 0 or D % 4 not in (0, 1) or isqrt(D)[1]:
        raise ValueError(f"invalid indefinite discriminant {D}")
    return isqrt(D)[0]


def reduced_forms(D: int) -> list[IndefiniteForm]:
    """Every reduced primitive form of discriminant D, by running b over
    0 < b < sqrt(D) with b = D (mod 2) and factoring (D - b^2)/4 into
    +-a * c inside the reduction window."""
    s = _validate_discriminant(D)
    forms = []
    for b in range(2 - D % 2, s + 1, 2):
        K = (D - b * b) // 4
        a_lo = max(1, (s + 2 - b) // 2)  # 2a >= s + 1 - b
        a_hi = (s + b) // 2              # 2a <= s + b
        for a in range(a_lo, a_hi + 1):
            if K % a:
                continue
            c = K // a
            if gcd(gcd(a, b), c) != 1:
                continue
            forms.append(IndefiniteForm(a, b, -c, D))
            forms.append(IndefiniteForm(-a, b, c, D))
    return forms


def is_fundamental_discriminant(D: int) -> bool:
    if D <= 0 or isqrt(D)[1]:
        return False
    if D % 4 == 1:
        return squarefree_core(D)[1]
    if D % 4 != 0:
        return False
    q = D // 4
    return q % 4 in (2, 3) and squarefree_core(q)[1]


def narrow_class_number(D: int) -> int:
    """Number of rho-cycles partitioning the reduced forms of the fundamental
    discriminant D (non-fundamental discriminants are a different object and
    are rejected)."""
    if not is_fundamental_discriminant(D):
        raise ValueError(f"narrow_class_number: {D} is not a fundamental discriminant")
    forms = reduced_forms(D)
    seen: set[tuple[int, int, int]] = set()
    cycles = 0
    for f in forms:
        if f.coefficients() in seen:
            continue
        cycles += 1
        g = f
        while g.coefficients() not in seen:
            seen.add(g.coefficients())
            g = rho(g)
    return cycles


def discriminant_of(m: int) -> int:
    """Fundamental discriminant of Q(sqrt(m)): m when m = 1 (mod 4), else 4m."""
    if m < 2 or not squarefree_core(m)[1]:
        raise ValueError("discriminant_of: m must be square-free and >= 2")
    return m if m % 4 == 1 else 4 * m


@dataclass(frozen=True)
class ClassData:
    """Narrow and wide class numbers of Q(sqrt(m)) with the unit-norm
    correction tying them together."""

    m: int
    D: int
    h_narrow: int
    h_wide: int
    unit_norm: int

    def __post_init__(self):
        if self.unit_norm not in (1, -1):
            raise ValueError("ClassData: unit_norm must be +-1")
        expected = self.h_wide * (2 if self.unit_norm == 1 else 1)
        if self.h_wide < 1 or expected != self.h_narrow:
            raise ValueError("ClassData: narrow/wide relation violated")


def class_number(m: int) -> ClassData:
    """Exact class data of Q(sqrt(m)) for square-free m >= 2.

    h_narrow comes from cycle counting alone; h_wide divides it by two
    exactly when the fundamental unit has norm +1.
    """
    if m < 2 or not squarefree_core(m)[1]:
        raise ValueError("class_number: m must be square-free and >= 2 "
                         "(pass the square-free core)")
    D = discriminant_of(m)
    h_plus = narrow_class_number(D)
    norm = unit_norm(m)
    if norm == 1:
        if h_plus % 2:
            raise ArithmeticError("class_number: odd narrow class number with a +1 unit")
        h = h_plus // 2
    else:
        h = h_plus
    return ClassData(m, D, h_plus, h, norm)
