"""Jacobi sums: genuine cyclotomic integers with J * conj(J) = q.

For q == 1 mod p and chi of order p on F_q, J(chi, chi) lies in Z[zeta_p].
Here -J turns out to be 1 mod lambda^3 but not mod lambda^4 (t = 3).

Run:  python demos/05_jacobi_witnesses.py
"""

from cyclodecomp import conjugate, jacobi_sum, norm, witness_primarity
from cyclodecomp.witness import auxiliary_primes

for p in (5, 7, 37):
    for q in auxiliary_primes(p, 2):
        w = jacobi_sum(p, q)
        ok = w.J * conjugate(w.J) == q
        r = witness_primarity(w)
        line = f"p={p:2d} q={q:4d} g={w.g:2d}  J*conj(J)==q: {ok}  t={r.t} class={r.klass.value}"
        if p < 37:
            line += f"  N(J)=q^{(p - 1) // 2}: {norm(w.J) == q ** ((p - 1) // 2)}"
        print(line)
