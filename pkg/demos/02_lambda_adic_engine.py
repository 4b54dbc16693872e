"""Arithmetic in Z[zeta_p] and lambda-adic expansions.

lambda = zeta - 1 generates the prime above p, and p = unit * lambda^(p-1).
Every element has a unique digit expansion sum a_i lambda^i with a_i in [0, p-1].

Run:  python demos/02_lambda_adic_engine.py
"""

from cyclodecomp import CycInt, conjugate, galois_apply, norm, pi_expansion, pi_valuation

p = 7
z = CycInt.zeta(p)
lam = CycInt.lam(p)

# %% Basic ring arithmetic, reduced mod 1 + zeta + ... + zeta^(p-1)
print("zeta^6       =", z ** 6)
print("lambda^2     =", lam * lam)
print("conj(lambda) =", conjugate(lam))
print("sigma_3(z+2) =", galois_apply(3, z + 2))

# %% Norms and valuations
print("N(lambda) =", norm(lam))
print("v(p)      =", pi_valuation(CycInt.from_int(p, p)))
print("v(0)      =", pi_valuation(CycInt.from_int(p, 0)))

# %% Digit expansions: zeta^2 = 1 + 2 lambda + lambda^2
print(pi_expansion(z ** 2, 4).digits)
x = CycInt(p, [12, -5, 3, 0, 8, 1])
e = pi_expansion(x, 9)
print("digits of x:", e.digits)
print("v(x - recomposed) >= 9:", pi_valuation(e.recompose() - x, cap=9) >= 9)
