"""How p decomposes in S = K(A^(1/p)) and in its degree-p subfield M.

With mu = v^n and d the order of v/mu mod p:
  primary case     p O_M = P_0 * (P_1 ... P_nu)^d,  nu = (p-1)/d, so p = 1 + nu*d
  non-primary case p O_M = P^p

The closed forms are then re-derived from double cosets in the metacyclic
model of Gal(S/Q).

Run:  python demos/04_decomposition.py
"""

from cyclodecomp import CaseParams, compute_d, decompose, irregular_pairs, oracle_decompose, sigma_orbits_on_primes
from cyclodecomp.oracle import build_group

# %% p = 37, the eigenspace attached to B_32
rep = irregular_pairs(37)
pair = rep.pairs[0]
params = CaseParams(37, rep.v, pair.n, primary=True)
print("d =", compute_d(params))
for ext in ("K/Q", "S/K", "S/Q", "M/Q", "N/M"):
    s = decompose(params, ext)
    print(f"{ext}: degree {s.degree:5d}  (e, f, count) = {s.triples}")

# %% sigma_mu permutes the p primes of S above lambda; its orbits give the primes of M
w = build_group(37, rep.v, pair.n).w
print("orbits:", sigma_orbits_on_primes(37, w))

# %% Same shape from group theory alone
print("oracle M/Q:", oracle_decompose(params, "M/Q").triples)
print("non-primary M/Q:", decompose(CaseParams(37, rep.v, pair.n, primary=False), "M/Q").triples)

# %% All irregular pairs below 160
for p in (37, 59, 67, 101, 103, 131, 149, 157):
    r = irregular_pairs(p)
    for q in r.pairs:
        s = decompose(CaseParams(p, r.v, q.n), "M/Q")
        print(f"p={p:3d} k={q.k:3d} n={q.n:3d}  M/Q {s.triples}")
