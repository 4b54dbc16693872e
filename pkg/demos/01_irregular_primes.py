"""Irregular primes from Bernoulli numbers mod p.

A prime p is irregular when it divides the numerator of some B_k, k even,
2 <= k <= p-3. Each such k gives an exponent n = 1 - k mod (p-1) and an
eigenvalue mu = v^n for the generator zeta -> zeta^v.

Run:  python demos/01_irregular_primes.py
"""

from cyclodecomp import irregular_pairs
from cyclodecomp.fp import primes_between

# %% Which primes below 200 are irregular?
for p in primes_between(5, 200):
    rep = irregular_pairs(p)
    if rep.irregular:
        pairs = ", ".join(f"k={q.k} (n={q.n}, mu={q.mu})" for q in rep.pairs)
        print(f"p = {p:3d}  v = {rep.v}  index {rep.index}:  {pairs}")

# %% 37 is the smallest: B_32 is divisible by 37, giving n = 5.
rep = irregular_pairs(37)
print(rep)
