"""Low-rank certificates: a finite computation that pins an asymptotic rate.

For d = (x1+y1)^n + x2 + y2, the coefficient matrix of d^(2^t - 1) has rows
indexed by the (e_x1, e_x2) exponent pairs and columns by (e_y1, e_y2).  If
its GF(2) rank drops below 4^t for some t, then the evaluation matrices of
every large family member factor through blocks of t doublings, and the
parity-check rank ratio of the family is forced to zero.

The search expands d^(2^t - 1) as the product of the t doubled copies
d^(2^i) (squaring only doubles exponents in characteristic 2), so each new
factor is as sparse as d itself.
"""

import time

from storagecodes import certify_unit_rate

for n in (3, 5, 7):
    start = time.perf_counter()
    res = certify_unit_rate(n, t_max=6)
    elapsed = time.perf_counter() - start
    print(f"n = {n}:")
    for t, rank, threshold in res.trace:
        mark = "<" if rank < threshold else ">="
        print(f"  t={t}: rank {rank:>6} {mark} {threshold:>6}")
    if res.certified:
        print(f"  certified at t = {res.t} (rank {res.poly_rank} < 4^{res.t}), "
              f"c = {res.c_constant}, {elapsed:.1f}s")
    else:
        print(f"  no certificate up to t = {res.t}, {elapsed:.1f}s")
    print()

print("n = 7 needs the full t = 6 expansion (about 16k monomials; the")
print("compacted coefficient matrix is ~6.4k square) and certifies with")
print("rank 3256 against the threshold 4096.  The long n = 11 and n = 13")
print("runs live behind the --extended flag of the certify subcommand.")
