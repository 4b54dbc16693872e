"""Jacobi sums J(chi, chi) as test data for the lambda-adic classifiers."""

from __future__ import annotations

from dataclasses import dataclass

from .classify import PrimarityReport, classify_primarity, normalize_semi_primary
from .cyclo import CycInt, _reduce
from .errors import ValidationError
from .fp import check_prime, is_primitive_root, smallest_primitive_root

__all__ = ["JacobiWitness", "jacobi_sum", "witness_primarity", "auxiliary_primes"]


@dataclass(frozen=True)
class JacobiWitness:
    p: int
    q: int
    g: int
    J: CycInt

    def to_dict(self) -> dict:
        return {"p": self.p, "q": self.q, "g": self.g, "element": self.J.to_dict()}


def auxiliary_primes(p: int, count: int) -> list[int]:
    """The first ``count`` primes q with q == 1 (mod p)."""
    out = []
    q = p + 1
    while len(out) < count:
        try:
            out.append(check_prime(q))
        except ValidationError:
            pass
        q += p
    return out


def jacobi_sum(p: int, q: int, g: int | None = None) -> JacobiWitness:
    """J = sum over x in F_q minus {0, 1} of chi(x) chi(1 - x), chi(g^k) = zeta_p^k."""
    check_prime(p, minimum=3)
    check_prime(q, minimum=3)
    if q % p != 1:
        raise ValidationError(f"q = {q} is not 1 mod p = {p}")
    if g is None:
        g = smallest_primitive_root(q)
    elif not 1 <= g < q or not is_primitive_root(q, g):
        raise ValidationError(f"g = {g} does not generate (Z/{q})^*")
    log = [0] * q
    acc = 1
    for k in range(q - 1):
        log[acc] = k
        acc = acc * g % q
    cyc = [0] * p
    for x in range(2, q):
        cyc[(log[x] + log[1 - x + q]) % p] += 1
    return JacobiWitness(p, q, g, CycInt(p, _reduce(p, cyc)))


def witness_primarity(w: JacobiWitness) -> PrimarityReport:
    """Classify -J after the zeta-twist that makes it semi-primary."""
    _, A = normalize_semi_primary(-w.J)
    return classify_primarity(A)
