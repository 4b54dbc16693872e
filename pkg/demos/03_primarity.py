"""Semi-primary, primary and hyper-primary units.

For A prime to lambda with residue a: it is semi-primary if A == a mod lambda^2,
primary if A == a^p mod lambda^p, hyper-primary if A == a^p mod lambda^(p+1).
For non-primary singular numbers the valuation t of A - a^p is even, t = 2m;
the report flags whether an input has that shape.

Run:  python demos/03_primarity.py
"""

from cyclodecomp import CycInt, check_hyper_primary_unit_form, classify_primarity, normalize_semi_primary

p = 11
lam = CycInt.lam(p)

samples = {
    "3^p": CycInt.from_int(p, 3**p),
    "1 + lambda^4": lam**4 + 1,
    "1 + lambda^5": lam**5 + 1,
    "1 + lambda^p": lam**p + 1,
    "1 + lambda^(p+1)": lam ** (p + 1) + 1,
    "zeta": CycInt.zeta(p),
}
for name, A in samples.items():
    r = classify_primarity(A)
    print(f"{name:18s} class={r.klass.value:16s} t={r.t}  m={r.m}  dichotomy_ok={r.dichotomy_ok}")

# %% A zeta-twist makes any unit semi-primary
A = lam * 3 + 2
j, A2 = normalize_semi_primary(A)
print(f"zeta^{j} * (2 + 3 lambda) is semi-primary:", classify_primarity(A2).semi_primary)

print("1 + lambda^(p+1) has lambda^(p+1) || A - 1:", check_hyper_primary_unit_form(lam ** (p + 1) + 1))
