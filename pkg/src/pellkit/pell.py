"""Fundamental solutions of x^2 - m*y^2 = +-1, fundamental units of real
quadratic fields, closed-form units for the four d^2 + r families
(r in {-1, +3, +2, -2}), and a complete decision procedure for
x^2 - m*y^2 = N.

Solvability certificates are about primitive solutions (coprime x, y); for
square-free |N| that is every solution.  A NoSolution certificate is a proof:
either a full two-period convergent scan (|N| < sqrt(m)) or a bounded sweep
below the classical fundamental-solution height (larger |N|).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import islice

from .cfrac import SurdState, cf_sqrt, iter_convergents
from .intkit import gcd, isqrt, squarefree_core

D2MINUS1 = "D2MINUS1"  # m = d^2 - 1, even d
D2PLUS3 = "D2PLUS3"    # m = d^2 + 3, 3 | d
D2PLUS2 = "D2PLUS2"    # m = d^2 + 2, odd d
D2MINUS2 = "D2MINUS2"  # m = d^2 - 2, odd d

RD_FAMILIES = (D2MINUS1, D2PLUS3, D2PLUS2, D2MINUS2)


@dataclass(frozen=True)
class QuadraticInteger:
    """(a + b*sqrt(m)) / denom with denom in {1, 2}; denom 2 requires
    m = 1 (mod 4) and a = b (mod 2), and is kept in lowest terms."""

    a: int
    b: int
    m: int
    denom: int = 1

    def __post_init__(self):
        if self.m < 2 or isqrt(self.m)[1]:
            raise ValueError("QuadraticInteger: m must be a positive nonsquare")
        if self.denom == 2:
            if self.m % 4 != 1:
                raise ValueError("QuadraticInteger: denom 2 requires m = 1 (mod 4)")
            if (self.a - self.b) % 2 != 0:
                raise ValueError("QuadraticInteger: denom 2 requires a = b (mod 2)")
            if self.a % 2 == 0 and self.b % 2 == 0:
                raise ValueError("QuadraticInteger: not in lowest terms (use make)")
        elif self.denom != 1:
            raise ValueError("QuadraticInteger: denom must be 1 or 2")

    @classmethod
    def make(cls, a: int, b: int, m: int, denom: int = 1) -> "QuadraticInteger":
        """Construct, reducing (even, even)/2 to lowest terms."""
        if denom == 2 and a % 2 == 0 and b % 2 == 0:
            a, b, denom = a // 2, b // 2, 1
        return cls(a, b, m, denom)

    @property
    def norm(self) -> int:
        num = self.a * self.a - self.m * self.b * self.b
        d2 = self.denom * self.denom
        if num % d2 != 0:
            raise ArithmeticError("QuadraticInteger: norm is not an integer")
        return num // d2

    def conjugate(self) -> "QuadraticInteger":
        return QuadraticInteger(self.a, -self.b, self.m, self.denom)

    def __mul__(self, other: "QuadraticInteger") -> "QuadraticInteger":
        if not isinstance(other, QuadraticInteger):
            return NotImplemented
        if other.m != self.m:
            raise ValueError("QuadraticInteger: mixed radicands")
        a = self.a * other.a + self.b * other.b * self.m
        b = self.a * other.b + self.b * other.a
        denom = self.denom * other.denom
        while denom % 2 == 0 and a % 2 == 0 and b % 2 == 0:
            a, b, denom = a // 2, b // 2, denom // 2
        if denom > 2:
            raise ArithmeticError("QuadraticInteger: product fell outside the order")
        return QuadraticInteger(a, b, self.m, denom)

    def __str__(self):
        if self.b == 0:
            body = str(self.a)
        else:
            mag = f"sqrt({self.m})" if abs(self.b) == 1 else f"{abs(self.b)}*sqrt({self.m})"
            body = f"{self.a} {'+' if self.b > 0 else '-'} {mag}"
        return f"({body})/2" if self.denom == 2 else body


@dataclass(frozen=True)
class PellCertificate:
    """Outcome of deciding x^2 - m*y^2 = target over coprime positive (x, y).

    `solutions` lists one least-positive representative per solution class
    (empty means provably none exist); `scan_length` records how many
    candidates the completed scan covered; `method` names the scan.
    """

    m: int
    target: int
    solutions: tuple[tuple[int, int], ...]
    scan_length: int
    method: str

    def __post_init__(self):
        if self.scan_length < 1:
            raise ValueError("PellCertificate: scan_length must be >= 1")
        for x, y in self.solutions:
            if x * x - self.m * y * y != self.target:
                raise ValueError(f"PellCertificate: ({x},{y}) does not solve the equation")

    @property
    def has_solutions(self) -> bool:
        return bool(self.solutions)


def _require_nonsquare(m: int, who: str) -> None:
    if m < 2 or isqrt(m)[1]:
        raise ValueError(f"{who}: m must be >= 2 and not a perfect square (got {m})")


def pell_fundamental(m: int) -> tuple[int, int]:
    """Least positive solution of x^2 - m*y^2 = 1.

    Sits at convergent index l-1 (even period l) or 2l-1 (odd l).
    """
    _require_nonsquare(m, "pell_fundamental")
    exp = cf_sqrt(m)
    ell = exp.period_length
    idx = ell - 1 if ell % 2 == 0 else 2 * ell - 1
    conv = next(islice(iter_convergents(exp), idx, None))
    if conv.pell_value != 1:
        raise ArithmeticError("pell_fundamental: +1 missing at the classical index")
    return conv.numerator, conv.denominator


def neg_pell(m: int) -> tuple[int, int] | None:
    """Least positive solution of x^2 - m*y^2 = -1, present exactly when the
    period of sqrt(m) is odd; then it is the convergent at index l-1."""
    _require_nonsquare(m, "neg_pell")
    exp = cf_sqrt(m)
    ell = exp.period_length
    if ell % 2 == 0:
        return None
    conv = next(islice(iter_convergents(exp), ell - 1, None))
    if conv.pell_value != -1:
        raise ArithmeticError("neg_pell: -1 missing at the classical index")
    return conv.numerator, conv.denominator


def _half_unit_scan(m: int) -> QuadraticInteger | None:
    """PQa on (1 + sqrt(m))/2 for m = 1 (mod 4): the first return of Q to 2
    yields the fundamental unit (G + B*sqrt(m))/2 of the maximal order.
    Returns None if the state cycle closes without Q = 2 (not expected)."""
    state = SurdState(1, 2, m)
    g_prev, g = -1, 2  # G_{-2} = -P0, G_{-1} = Q0
    b_prev, b = 1, 0   # B_{-2},      B_{-1}
    seen = set()
    while True:
        a, nxt = state.step()
        g_prev, g = g, a * g + g_prev
        b_prev, b = b, a * b + b_prev
        if nxt.Q == 2:
            unit = QuadraticInteger.make(g, b, m, 2)
            if abs(unit.norm) != 1:
                raise ArithmeticError("half-unit scan produced a non-unit")
            return unit
        key = (nxt.P, nxt.Q)
        if key in seen:
            return None
        seen.add(key)
        state = nxt


def fundamental_unit(m: int) -> QuadraticInteger:
    """Fundamental unit (> 1) of the ring of integers of Q(sqrt(m)) for
    square-free m >= 2.  For m = 1 (mod 4) the half-integral search runs
    first; otherwise the unit comes from the +-1 Pell solutions."""
    if m < 2 or not squarefree_core(m)[1]:
        raise ValueError("fundamental_unit: m must be square-free and >= 2 "
                         "(pass the square-free core)")
    if m % 4 == 1:
        unit = _half_unit_scan(m)
        if unit is not None:
            return unit
    sol = neg_pell(m)
    if sol is None:
        sol = pell_fundamental(m)
    return QuadraticInteger(sol[0], sol[1], m)


def unit_norm(m: int) -> int:
    """Norm (+1 or -1) of the fundamental unit of Q(sqrt(m))."""
    return fundamental_unit(m).norm


def rd_unit(family: str, d: int) -> QuadraticInteger:
    """Closed-form unit of norm +1 for m = d^2 + r:

      D2MINUS1 (r = -1, even d >= 2):  d + sqrt(m)
      D2PLUS3  (r = +3, 3 | d):        ((2d^2+3) + 2d*sqrt(m)) / 3, exactly integral
      D2PLUS2  (r = +2, odd d >= 3):   (d^2+1) + d*sqrt(m)
      D2MINUS2 (r = -2, odd d >= 3):   (d^2-1) + d*sqrt(m)
    """
    if family == D2MINUS1:
        if d < 2 or d % 2:
            raise ValueError("rd_unit: D2MINUS1 requires even d >= 2")
        m, a, b = d * d - 1, d, 1
    elif family == D2PLUS3:
        if d < 3 or d % 3:
            raise ValueError("rd_unit: D2PLUS3 requires d divisible by 3")
        m = d * d + 3
        num_a, num_b = 2 * d * d + 3, 2 * d
        if num_a % 3 or num_b % 3:
            raise ArithmeticError("rd_unit: division by 3 not exact")
        a, b = num_a // 3, num_b // 3
    elif family == D2PLUS2:
        if d < 3 or d % 2 == 0:
            raise ValueError("rd_unit: D2PLUS2 requires odd d >= 3")
        m, a, b = d * d + 2, d * d + 1, d
    elif family == D2MINUS2:
        if d < 3 or d % 2 == 0:
            raise ValueError("rd_unit: D2MINUS2 requires odd d >= 3")
        m, a, b = d * d - 2, d * d - 1, d
    else:
        raise ValueError(f"rd_unit: unknown family {family!r}")
    unit = QuadraticInteger(a, b, m)
    if unit.norm != 1:
        raise ArithmeticError("rd_unit: closed form is not a +1 unit")
    return unit


def brute_force_solve(m: int, N: int, y_max: int) -> list[tuple[int, int]]:
    """All (x, y) with 1 <= y <= y_max, x >= 0 and x^2 - m*y^2 = N, by testing
    m*y^2 + N for squareness.  Independent oracle; makes no completeness claim."""
    if m < 1:
        raise ValueError("brute_force_solve: m must be positive")
    if N == 0:
        raise ValueError("brute_force_solve: N must be nonzero")
    if y_max < 1:
        raise ValueError("brute_force_solve: y_max must be >= 1")
    out = []
    for y in range(1, y_max + 1):
        t = m * y * y + N
        if t < 0:
            continue
        x, exact = isqrt(t)
        if exact:
            out.append((x, y))
    return out


def _unit_times(x: int, y: int, m: int, u: int, v: int) -> tuple[int, int]:
    # (x + y sqrt(m)) * (u + v sqrt(m))
    return x * u + y * v * m, x * v + y * u


def _solve_by_convergents(m: int, N: int) -> PellCertificate:
    # Complete for coprime solutions when N^2 < m: every positive primitive
    # solution is a convergent, and the pell_value sequence has period l
    # (l even) or 2l (l odd).  Scanning exactly 2l covers both.
    exp = cf_sqrt(m)
    ell = exp.period_length
    convs = list(islice(iter_convergents(exp), 2 * ell))
    plus_one = convs[ell - 1] if ell % 2 == 0 else convs[2 * ell - 1]
    if plus_one.pell_value != 1:
        raise ArithmeticError("solve_pm_N: +1 unit missing from the scan")
    u, v = plus_one.numerator, plus_one.denominator
    found: list[tuple[int, int]] = []
    for conv in convs:
        if conv.pell_value != N:
            continue
        sol = (conv.numerator, conv.denominator)
        # drop unit multiples of an earlier hit: same class, larger height
        if any(_unit_times(x0, y0, m, u, v) == sol for x0, y0 in found):
            continue
        found.append(sol)
    return PellCertificate(m, N, tuple(found), 2 * ell, "convergents")


def _same_class(s: tuple[int, int], t: tuple[int, int], m: int, N: int) -> bool:
    # Classical criterion: (x1 x2 - m y1 y2)/N and (x1 y2 - y1 x2)/N integral.
    x1, y1 = s
    x2, y2 = t
    return (x1 * x2 - m * y1 * y2) % N == 0 and (x1 * y2 - y1 * x2) % N == 0


def _is_negative(x: int, y: int, m: int) -> bool:
    # sign of x + y*sqrt(m), exactly
    if x >= 0 and y >= 0:
        return False
    if x <= 0 and y <= 0:
        return True
    if x > 0:  # y < 0
        return x * x < m * y * y
    return m * y * y < x * x  # x < 0, y > 0


def _least_positive(x: int, y: int, m: int, u: int, v: int) -> tuple[int, int]:
    # Least member of the class of x + y*sqrt(m) with both coordinates positive.
    if _is_negative(x, y, m):
        x, y = -x, -y
    steps = 0
    while x <= 0 or y <= 0:
        x, y = _unit_times(x, y, m, u, v)
        steps += 1
        if steps > 64:
            raise ArithmeticError("solve_pm_N: positivity normalization diverged")
    return x, y


def _solve_by_bounded_search(m: int, N: int) -> PellCertificate:
    # For N^2 >= m the convergent theorem no longer covers the search space.
    # Every solution class still contains a representative (x, y) with
    # 0 <= y <= v*sqrt(|N|) / sqrt(2(u -+ 1)), (u, v) the least +1 solution,
    # so a bounded sweep over y is complete for all solutions.
    u, v = pell_fundamental(m)
    denom = 2 * (u - 1) if N < 0 else 2 * (u + 1)
    y_bound = isqrt((v * v * abs(N)) // denom)[0] + 1
    reps: list[tuple[int, int]] = []
    for y in range(0, y_bound + 1):
        t = m * y * y + N
        if t < 0:
            continue
        x, exact = isqrt(t)
        if not exact:
            continue
        candidates = [(x, y)]
        if x > 0 and y > 0:
            candidates.append((-x, y))
        for cand in candidates:
            if gcd(cand[0], cand[1]) != 1:
                continue  # certificates cover coprime solutions
            if any(_same_class(cand, r, m, N) for r in reps):
                continue
            reps.append(cand)
    sols = sorted(_least_positive(x, y, m, u, v) for x, y in reps)
    return PellCertificate(m, N, tuple(sols), y_bound + 1, "bounded-search")


def solve_pm_N(m: int, N: int) -> PellCertificate:
    """Decide x^2 - m*y^2 = N over coprime positive (x, y), completely.

    For N^2 < m: scans the pell_value of every convergent over two full
    periods (2l convergents), which classically covers every primitive
    solution class; the returned solutions are the least positive
    representative of each class.  For N^2 >= m: falls back to the complete
    bounded sweep below the fundamental-solution height.  Either way, an
    empty certificate is a proof that no coprime solution exists.
    """
    _require_nonsquare(m, "solve_pm_N")
    if N == 0:
        raise ValueError("solve_pm_N: N must be nonzero")
    if N * N < m:
        return _solve_by_convergents(m, N)
    return _solve_by_bounded_search(m, N)
