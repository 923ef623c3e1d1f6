"""Walk through the carry-free counting machinery.

The number of monomials that survive the characteristic-2 expansion of the
indicator polynomial is governed by the sets

    B_s = {2^r*l1 + l2 : l1 + l2 lessdot s},  N_m = sum of |B_s| over s < 2^m

where "lessdot" means the binary digits add without carries.  This script
prints the small sets, checks the two recurrences and the closed form
against direct enumeration, and tabulates the exact growth bounds.
"""

from fractions import Fraction

from storagecodes import (
    Zsqrt2,
    b_set,
    count_nm,
    nm_bound,
    nm_closed_form,
    nm_long_recurrence,
    nm_recurrence,
)

print("The first few b-sets (r = 1):")
for s in range(8):
    vals = b_set(s, 1)
    print(f"  B_{s} = {vals}   (size {len(vals)})")

print("\nFour ways to the same sequence:")
print(f"{'m':>3} {'enumerate':>10} {'short rec':>10} {'long rec':>10} {'closed':>10}")
for m in range(11):
    row = [
        count_nm(m, 1),
        nm_recurrence(m),
        nm_long_recurrence(m) if m >= 1 else 1,
        nm_closed_form(m),
    ]
    assert len(set(row)) == 1
    print(f"{m:>3} " + " ".join(f"{v:>10}" for v in row))

print("\nThe closed form lives in Z[sqrt(2)]: with (2+sqrt(2))^m = u + v*sqrt(2),")
print("the value is u + 2v.  For m = 5:")
p = Zsqrt2(2, 1) ** 5
print(f"  (2+sqrt(2))^5 = {p}  ->  N_5 = {p.u} + 2*{p.v} = {p.u + 2 * p.v}")

print("\nGeneralized counts with the exact (15/16)-power bound, r = 2:")
print(f"{'m':>3} {'N_m':>8} {'bound ok':>9} {'N_m / 4^m':>12}")
for m in range(11):
    value, holds = nm_bound(m, 2)
    ratio = Fraction(value, 4 ** m)
    print(f"{m:>3} {value:>8} {str(holds):>9} {float(ratio):>12.6f}")

print("\nThe ratio N_m / 4^m is the lever: it tends to zero, and it upper")
print("bounds the parity-check rank ratio of the matching code family.")
