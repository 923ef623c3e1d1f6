"""Carry-free combinatorics behind the monomial-count sequence N_m.

Binomial and multinomial parities in characteristic 2 reduce to statements
about binary digits: a multinomial coefficient is odd exactly when the parts
add without carries.  Writing ``a + b lessdot c`` for "a_i + b_i <= c_i in
every binary digit", the monomial-count machinery is

    b_set(s, r)      the set {2^r * l1 + l2 : l1 + l2 lessdot s}
    count_nm(m, r)   sum of |b_set(s, r)| over 0 <= s < 2^m

For r = 1 the sequence count_nm(m, 1) also satisfies two recurrences and a
closed form in Z[sqrt(2)]; all three are implemented and cross-checked in
tests.  Everything here is exact integer arithmetic, never floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import BudgetError, ParameterError

#: cost cap for direct enumeration: count_nm(m, r) walks ~4^m assignments
DEFAULT_ENUMERATION_BUDGET = 4 ** 14


def lessdot(a: int, b: int, c: int) -> bool:
    """Digitwise a_i + b_i <= c_i in base 2.

    Equivalent to: a and b have disjoint bits and a | b is a submask of c.
    """
    if a < 0 or b < 0 or c < 0:
        raise ParameterError("lessdot is defined on non-negative integers")
    return (a & b) == 0 and (a | b) | c == c


def multinomial_parity(n: int, parts: Sequence[int]) -> int:
    """Parity of the multinomial coefficient n choose (parts).

    1 iff the coefficient is odd, i.e. the parts are pairwise digit-disjoint
    and OR together to n (the addition involves no carries).
    """
    if n < 0 or any(p < 0 for p in parts):
        raise ParameterError("negative argument")
    if sum(parts) != n:
        raise ParameterError(f"parts sum to {sum(parts)}, expected {n}")
    return 1 if sum(p.bit_count() for p in parts) == n.bit_count() else 0


def _b_values(s: int, r: int) -> set[int]:
    # Each set bit of s goes to l1, to l2, or to neither (3-way walk);
    # deduplication happens as the set grows.
    vals = {0}
    i = 0
    while s >> i:
        if (s >> i) & 1:
            hi = 1 << (i + r)
            lo = 1 << i
            vals = {v + c for v in vals for c in (0, lo, hi)}
        i += 1
    return vals


def b_set(s: int, r: int = 1) -> list[int]:
    """Sorted elements of {2^r * l1 + l2 : l1 + l2 lessdot s}."""
    if s < 0:
        raise ParameterError("s must be non-negative")
    if r < 1:
        raise ParameterError("r must be a positive integer")
    return sorted(_b_values(s, r))


def count_nm(m: int, r: int = 1, budget: int = DEFAULT_ENUMERATION_BUDGET) -> int:
    """N_m = sum over s < 2^m of |b_set(s, r)|, by direct enumeration."""
    if m < 0:
        raise ParameterError("m must be non-negative")
    if r < 1:
        raise ParameterError("r must be a positive integer")
    if 4 ** m > budget:
        raise BudgetError(f"count_nm(m={m}) needs ~4^{m} set insertions, over budget {budget}")
    return sum(len(_b_values(s, r)) for s in range(1 << m))


def nm_recurrence(m: int) -> int:
    """N_m for r=1 via N_m = 4 N_{m-1} - 2 N_{m-2}, seeded N_0=1, N_1=4."""
    if m < 0:
        raise ParameterError("m must be non-negative")
    if m == 0:
        return 1
    prev, cur = 1, 4
    for _ in range(m - 1):
        prev, cur = cur, 4 * cur - 2 * prev
    return cur


def nm_long_recurrence(m: int) -> int:
    """N_m for r=1 via the convolution N_m = sum_{j=1}^{m+1} (2^j - 1) N_{m-j}.

    Seeds N_0 = N_{-1} = 1.  Agrees with nm_recurrence for every m >= 1.
    """
    if m < 1:
        raise ParameterError("m must be a positive integer")
    seq = [1, 1]  # N_{-1}, N_0 at offsets 0, 1
    for k in range(1, m + 1):
        seq.append(sum(((1 << j) - 1) * seq[k - j + 1] for j in range(1, k + 2)))
    return seq[m + 1]


@dataclass(frozen=True)
class Zsqrt2:
    """Exact element u + v*sqrt(2) of Z[sqrt(2)]."""

    u: int
    v: int

    def __add__(self, other: "Zsqrt2") -> "Zsqrt2":
        return Zsqrt2(self.u + other.u, self.v + other.v)

    def __sub__(self, other: "Zsqrt2") -> "Zsqrt2":
        return Zsqrt2(self.u - other.u, self.v - other.v)

    def __mul__(self, other: "Zsqrt2") -> "Zsqrt2":
        return Zsqrt2(
            self.u * other.u + 2 * self.v * other.v,
            self.u * other.v + self.v * other.u,
        )

    def __pow__(self, e: int) -> "Zsqrt2":
        if e < 0:
            raise ParameterError("negative power")
        r = Zsqrt2(1, 0)
        b = self
        while e:
            if e & 1:
                r = r * b
            b = b * b
            e >>= 1
        return r

    def sign(self) -> int:
        """Sign of u + v*sqrt(2), decided purely on integers.

        For mixed signs compare u^2 with 2 v^2; they are equal only at 0
        because sqrt(2) is irrational.
        """
        u, v = self.u, self.v
        if u >= 0 and v >= 0:
            return 1 if (u or v) else 0
        if u <= 0 and v <= 0:
            return -1
        if u > 0:  # v < 0
            return 1 if u * u > 2 * v * v else -1
        return 1 if 2 * v * v > u * u else -1  # u < 0, v > 0

    def __le__(self, other: "Zsqrt2") -> bool:
        return (self - other).sign() <= 0

    def __lt__(self, other: "Zsqrt2") -> bool:
        return (self - other).sign() < 0

    def __repr__(self) -> str:
        return f"{self.u}{self.v:+d}*sqrt(2)"


def nm_closed_form(m: int) -> int:
    """N_m for r=1 from the closed form in Z[sqrt(2)].

    With (2 + sqrt(2))^m = u + v*sqrt(2), the two conjugate terms of the
    closed form collapse to the integer u + 2v.
    """
    if m < 0:
        raise ParameterError("m must be non-negative")
    p = Zsqrt2(2, 1) ** m
    return p.u + 2 * p.v


def nm_growth_bound_holds(m: int, value: int | None = None) -> bool:
    """Exact check of 2*N_m <= (1 + sqrt(2)) * (2 + sqrt(2))^m in Z[sqrt(2)].

    This is the r=1 growth bound with the 1/2 factor cleared; the conjugate
    term it drops is positive, so the inequality holds for every m.
    """
    n_m = nm_closed_form(m) if value is None else value
    lhs = Zsqrt2(2 * n_m, 0)
    rhs = Zsqrt2(1, 1) * (Zsqrt2(2, 1) ** m)
    return lhs <= rhs


def fifteen_sixteenths_bound(m: int, r: int) -> int:
    """The exact integer 15^t * 4^(m - 2t) with t = floor(m / (r+1)).

    Equals (15/16)^t * 4^m; the t-fold product bound that the real-exponent
    form (15/16)^(m/(r+1)) * 4^m is derived from.
    """
    if m < 0 or r < 1:
        raise ParameterError("need m >= 0 and r >= 1")
    t = m // (r + 1)
    return 15 ** t * 4 ** (m - 2 * t)


def nm_bound(m: int, r: int, budget: int = DEFAULT_ENUMERATION_BUDGET) -> tuple[int, bool]:
    """(N_m, bound_holds) with every comparison done in exact integers.

    bound_holds checks N_m * 16^t <= 15^t * 4^m for t = floor(m / (r+1)),
    the floor-weakened form of the (15/16)^(m/(r+1)) bound; for r = 1 the
    Z[sqrt(2)] growth bound is required to hold as well.
    """
    value = count_nm(m, r, budget=budget)
    t = m // (r + 1)
    holds = value * 16 ** t <= 15 ** t * 4 ** m
    if r == 1:
        holds = holds and nm_growth_bound_holds(m, value)
    return value, holds
