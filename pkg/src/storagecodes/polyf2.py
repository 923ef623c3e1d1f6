"""Sparse polynomials over GF(2) in the variables (x1, x2, y1, y2).

A polynomial is the set of its monomials (every present coefficient is 1);
adding a monomial twice cancels it.  Internally the set is a sorted numpy
uint64 array with 16 bits per exponent, packed as

    code = e_x1 << 48 | e_x2 << 32 | e_y1 << 16 | e_y2

so that products are plain integer additions of codes and duplicate
cancellation is one sort-and-count pass.  The packing caps every exponent
at 2^16 - 1, far above any exponent this toolkit produces (at most
n * (2^t - 1)); operations that would overflow a field raise BudgetError
instead of corrupting neighbours.

The certification route never leaves coefficient space: rank(p) is the
GF(2) rank of the coefficient matrix of p, whose rows are indexed by
(e_x1, e_x2) and columns by (e_y1, e_y2).  Squaring in characteristic 2
doubles exponents, which only relabels rows and columns, so d^(2^t - 1) is
expanded as the product of the t doubled copies d^(2^i), i < t, keeping
every factor as small as d itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

import numpy as np

from .bitmatrix import SparseBitMatrix
from .errors import BudgetError, ParameterError
from .field import FieldMatrix, GF2m

EXP_BITS = 16
EXP_MAX = (1 << EXP_BITS) - 1
_SHIFTS = (48, 32, 16, 0)  # x1, x2, y1, y2

#: default cap on monomial pairs formed by one product
DEFAULT_MONOMIAL_BUDGET = 10 ** 8

#: default cap on certification exponents
DEFAULT_T_MAX = 8


class Monomial(NamedTuple):
    """Exponent 4-tuple of one monomial x1^a x2^b y1^c y2^d."""

    x1: int
    x2: int
    y1: int
    y2: int


def _pack(mon: Monomial | tuple[int, int, int, int]) -> int:
    code = 0
    for e, sh in zip(mon, _SHIFTS):
        if not 0 <= e <= EXP_MAX:
            raise BudgetError(f"exponent {e} outside 0..{EXP_MAX}")
        code |= e << sh
    return code


def _unpack(code: int) -> Monomial:
    return Monomial(*((code >> sh) & EXP_MAX for sh in _SHIFTS))


def _xor_reduce(codes: np.ndarray) -> np.ndarray:
    vals, counts = np.unique(codes, return_counts=True)
    return vals[(counts & 1) == 1]


class SparsePoly:
    """A polynomial over GF(2) as a sorted, duplicate-free code array."""

    __slots__ = ("_codes",)

    def __init__(self, codes: np.ndarray):
        self._codes = codes  # owned, sorted uint64, no duplicates

    @classmethod
    def from_monomials(cls, monomials: Iterable[tuple[int, int, int, int]]) -> "SparsePoly":
        packed = np.array([_pack(m) for m in monomials], dtype=np.uint64)
        return cls(_xor_reduce(packed))

    @classmethod
    def zero(cls) -> "SparsePoly":
        return cls(np.zeros(0, dtype=np.uint64))

    @classmethod
    def one(cls) -> "SparsePoly":
        return cls.from_monomials([(0, 0, 0, 0)])

    def __len__(self) -> int:
        return int(self._codes.size)

    def __bool__(self) -> bool:
        return self._codes.size > 0

    def __eq__(self, other) -> bool:
        return isinstance(other, SparsePoly) and np.array_equal(self._codes, other._codes)

    def __repr__(self) -> str:
        return f"SparsePoly({len(self)} monomials)"

    def monomials(self) -> list[Monomial]:
        return [_unpack(int(c)) for c in self._codes]

    def __add__(self, other: "SparsePoly") -> "SparsePoly":
        """Sum over GF(2): the symmetric difference of the monomial sets."""
        return SparsePoly(_xor_reduce(np.concatenate([self._codes, other._codes])))

    def __mul__(self, other: "SparsePoly") -> "SparsePoly":
        return poly_mul(self, other)

    def max_exponents(self) -> Monomial:
        """Per-variable degree (0 for the zero polynomial)."""
        if not self._codes.size:
            return Monomial(0, 0, 0, 0)
        return Monomial(
            *(int(((self._codes >> np.uint64(sh)) & np.uint64(EXP_MAX)).max()) for sh in _SHIFTS)
        )


def poly_d(n: int) -> SparsePoly:
    """The base polynomial (x1 + y1)^n + x2 + y2 for odd n >= 1.

    The binomial (x1 + y1)^n keeps exactly the terms x1^i y1^(n-i) with i a
    submask of n (odd binomial coefficients have carry-free splits).
    """
    if n < 1 or n % 2 == 0:
        raise ParameterError(f"n={n}: need an odd integer >= 1")
    mons: list[tuple[int, int, int, int]] = [(0, 1, 0, 0), (0, 0, 0, 1)]
    i = n
    while True:
        mons.append((i, 0, n - i, 0))
        if i == 0:
            break
        i = (i - 1) & n
    return SparsePoly.from_monomials(mons)


def poly_mul(p: SparsePoly, q: SparsePoly, budget: int = DEFAULT_MONOMIAL_BUDGET) -> SparsePoly:
    """Product over GF(2), with XOR-cancellation of colliding monomials."""
    if len(p) * len(q) > budget:
        raise BudgetError(f"product forms {len(p)}x{len(q)} monomial pairs, over budget {budget}")
    if not p or not q:
        return SparsePoly.zero()
    pe, qe = p.max_exponents(), q.max_exponents()
    if any(a + b > EXP_MAX for a, b in zip(pe, qe)):
        raise BudgetError(f"product exponents would exceed the {EXP_MAX} cap")
    sums = (p._codes[:, None] + q._codes[None, :]).ravel()
    return SparsePoly(_xor_reduce(sums))


def frobenius(p: SparsePoly, i: int) -> SparsePoly:
    """p^(2^i): every exponent multiplied by 2^i, monomial count unchanged."""
    if i < 1:
        raise ParameterError("i must be a positive integer")
    factor = 1 << i
    if any(e * factor > EXP_MAX for e in p.max_exponents()):
        raise BudgetError(f"exponents * 2^{i} would exceed the {EXP_MAX} cap")
    return SparsePoly(np.sort(p._codes * np.uint64(factor)))


def poly_pow_mersenne(p: SparsePoly, t: int, budget: int = DEFAULT_MONOMIAL_BUDGET) -> SparsePoly:
    """p^(2^t - 1) as the product of frobenius(p, i) for i = 0..t-1."""
    if t < 1:
        raise ParameterError("t must be a positive integer")
    acc = p
    for i in range(1, t):
        acc = poly_mul(acc, frobenius(p, i), budget=budget)
    return acc


def coeff_matrix(p: SparsePoly) -> SparseBitMatrix:
    """One 1-entry per monomial: row key (e_x1, e_x2), column key (e_y1, e_y2)."""
    rows = p._codes >> np.uint64(32)
    cols = p._codes & np.uint64(0xFFFFFFFF)
    return SparseBitMatrix.from_packed(rows, cols)


def poly_rank(p: SparsePoly) -> int:
    """GF(2) rank of the compacted coefficient matrix."""
    return coeff_matrix(p).compact().rank()


def eval_matrix(p: SparsePoly, field: GF2m, max_entries: int = 1 << 31) -> FieldMatrix:
    """The q^2 x q^2 matrix of values p(x1, x2, y1, y2) over GF(2^m).

    Entries are field elements, so the result is a FieldMatrix and its
    ``.rank()`` is the rank over the field.  Work is |monomials| * q^4
    table lookups, capped by max_entries.
    """
    q = field.q
    n_vert = q * q
    if len(p) * n_vert * n_vert > max_entries:
        raise BudgetError(
            f"evaluating {len(p)} monomials on a {n_vert}x{n_vert} grid exceeds the budget"
        )
    ids = np.arange(n_vert, dtype=np.int64)
    hi = ids >> field.m
    lo = ids & (q - 1)
    base = np.arange(q, dtype=np.int64)
    acc = np.zeros((n_vert, n_vert), dtype=np.int64)
    for mon in p.monomials():
        u = field.mul_vec(field.pow_vec(base, mon.x1)[hi], field.pow_vec(base, mon.x2)[lo])
        v = field.mul_vec(field.pow_vec(base, mon.y1)[hi], field.pow_vec(base, mon.y2)[lo])
        acc ^= field.outer_mul(u, v)
    return FieldMatrix(field, acc)


@dataclass(frozen=True)
class CertificationResult:
    """Outcome of the low-rank certification search for one exponent n.

    certified means rank(d^(2^t - 1)) < 4^t at the reported t, which bounds
    the evaluation-matrix rank of every larger member of the family by a
    vanishing fraction of its size via the factorisation of 2^m - 1 into
    blocks of t doublings.  c_constant is the largest rank seen at the
    earlier exponents 0 <= i < t (the multiplier of the resulting bound).
    """

    n: int
    t: int
    poly_rank: int
    threshold: int
    certified: bool
    c_constant: int
    trace: tuple[tuple[int, int, int], ...]  # (t, rank, threshold)

    def __post_init__(self):
        if self.certified != (self.poly_rank < self.threshold):
            raise ParameterError("inconsistent certification result")


def certify_unit_rate(
    n: int,
    t_max: int = DEFAULT_T_MAX,
    budget: int = DEFAULT_MONOMIAL_BUDGET,
) -> CertificationResult:
    """Search t = 1..t_max for rank(d^(2^t - 1)) < 4^t, d = (x1+y1)^n + x2 + y2.

    Stops at the first certifying t.  n = 1 is allowed here (the degenerate
    base certifies immediately at t = 1); the graph family itself starts at
    n = 3.  On budget exhaustion the raised BudgetError carries the partial
    trace in its ``trace`` attribute.
    """
    if n < 1 or n % 2 == 0:
        raise ParameterError(f"n={n}: need an odd integer >= 1")
    if t_max < 1:
        raise ParameterError("t_max must be a positive integer")
    base = poly_d(n)
    trace: list[tuple[int, int, int]] = []
    earlier_ranks = [1]  # rank at i = 0: the constant polynomial
    acc = base
    for t in range(1, t_max + 1):
        if t > 1:
            try:
                acc = poly_mul(acc, frobenius(base, t - 1), budget=budget)
            except BudgetError as err:
                err.trace = tuple(trace)
                raise
        rank_t = poly_rank(acc)
        threshold = 4 ** t
        trace.append((t, rank_t, threshold))
        if rank_t < threshold:
            return CertificationResult(
                n=n,
                t=t,
                poly_rank=rank_t,
                threshold=threshold,
                certified=True,
                c_constant=max(earlier_ranks),
                trace=tuple(trace),
            )
        earlier_ranks.append(rank_t)
    last_t, last_rank, last_threshold = trace[-1]
    return CertificationResult(
        n=n,
        t=last_t,
        poly_rank=last_rank,
        threshold=last_threshold,
        certified=False,
        c_constant=max(earlier_ranks),
        trace=tuple(trace),
    )
