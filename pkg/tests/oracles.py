"""Independent brute-force oracles used across the test modules.

Everything here avoids the package's elimination and enumeration paths on
purpose: ranks come from enumerating row spans, parities from factorials,
and set constructions from quadratic scans.
"""

import math


def span_rank(row_ints) -> int:
    """log2 of the number of distinct GF(2) combinations of the rows.

    Exponential in the rank; keep it for matrices of rank up to ~20.
    """
    span = {0}
    for r in row_ints:
        span |= {v ^ r for v in span}
    return int(math.log2(len(span)))


def pivot_rank(row_ints) -> int:
    """GF(2) rank by plain top-bit pivot reduction on Python ints."""
    pivots = {}
    rank = 0
    for v in row_ints:
        while v:
            top = v.bit_length() - 1
            if top in pivots:
                v ^= pivots[top]
            else:
                pivots[top] = v
                rank += 1
                break
    return rank


def multinomial_parity_by_factorials(n: int, parts) -> int:
    total = math.factorial(n)
    for p in parts:
        total //= math.factorial(p)
    return total % 2


def b_set_by_pair_scan(s: int, r: int) -> list[int]:
    """Quadratic scan over all (l1, l2) pairs below s."""
    out = set()
    for l1 in range(s + 1):
        for l2 in range(s + 1):
            if l1 & l2 == 0 and (l1 | l2) | s == s:
                out.add((l1 << r) + l2)
    return sorted(out)


def poly_mul_by_dict(p_monomials, q_monomials) -> set:
    """Schoolbook product of monomial sets with XOR coefficients."""
    acc = set()
    for a in p_monomials:
        for b in q_monomials:
            m = tuple(x + y for x, y in zip(a, b))
            acc ^= {m}
    return acc
