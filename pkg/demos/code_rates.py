"""Rank reports for the storage codes on the n = 3 graph family.

Each vertex of the graph carries one code coordinate, and a word is a
codeword iff every coordinate equals the XOR of its neighbours.  The
parity-check matrix is the coset matrix H (adjacency + identity); the code
rate is 1 - rank(H)/4^m, so a vanishing rank ratio means unit rate.

The report also computes W (the entrywise complement) and D (the same
indicator after the relabelling x2 -> x2 + x1^n), whose ranks sandwich and
equal rank(H) up to 1, plus the monomial-count bound N_m on rank(D).
"""

from storagecodes import FamilyParams, GF2m, build_graph, code_report, sample_codewords
from storagecodes.storage import coset_matrix, verify_repair

print(f"{'m':>3} {'size':>6} {'rank H':>7} {'rank W':>7} {'rank D':>7} "
      f"{'N_m':>6} {'dim':>6} {'rate':>10}")
for m in range(1, 6):
    rep = code_report(FamilyParams(3, m))
    print(f"{m:>3} {rep.size:>6} {rep.rank_h:>7} {rep.rank_w:>7} {rep.rank_d:>7} "
          f"{rep.n_m:>6} {rep.dimension:>6} {str(rep.rate):>10}")
    assert rep.sandwich_ok and rep.substitution_ok and rep.nm_ok and rep.closed_form_ok

print("""
rank(H) tracks the monomial count N_m, not the matrix size 4^m, which is
why the rate climbs towards 1.  Note the rank ratio ties at 1/2 for the
two smallest members (2/4 and 8/16) before it starts to drop.
""")

print("Sampled codewords repair from neighbourhoods (n=3, m=3):")
field = GF2m(3)
params = FamilyParams(3, 3)
h = coset_matrix(params, field)
graph = build_graph(params, field)
words = sample_codewords(h, count=5, seed=2024)
for i, w in enumerate(words):
    ok = verify_repair(graph, w)
    corrupted = verify_repair(graph, w ^ 1)
    print(f"  word {i}: weight {bin(w).count('1'):>3}  repairs: {ok}   "
          f"after one flipped bit: {corrupted}")
