"""Bernoulli numbers modulo p and irregular pairs.

The exponent attached to an irregular index k is ``n = 1 - k mod (p-1)``:
the generator ``zeta -> zeta^v`` acts on the k-th eigenspace of the p-class
group by ``v^(1-k)``. This orientation is a convention; everything downstream
also accepts n directly.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .fp import check_prime, smallest_primitive_root, is_primitive_root
from .errors import ValidationError

__all__ = ["IrregularPair", "IrregularityReport", "bernoulli_mod_p", "irregular_pairs", "exponent_for_index"]


def bernoulli_mod_p(p: int) -> dict[int, int]:
    """B_k mod p for every even k with 2 <= k <= p-3.

    Runs the recurrence ``sum_{j<=m} C(m+1, j) B_j = 0`` entirely in F_p. All
    B_j with j <= p-3 are p-integral (von Staudt-Clausen), and m+1 <= p-2 is
    invertible, so nothing breaks along the way.
    """
    check_prime(p)
    top = p - 3
    # binomial row C(m+1, .) mod p, updated in place
    row = [1, 1]
    B = [1]
    for m in range(1, top + 1):
        row = [1] + [(row[j - 1] + row[j]) % p for j in range(1, len(row))] + [1]
        s = 0
        for j in range(m):
            if B[j]:
                s += row[j] * B[j]
        B.append(-s * pow(m + 1, -1, p) % p)
    return {k: B[k] for k in range(2, top + 1, 2)}


def exponent_for_index(p: int, k: int) -> int:
    """Map an even irregular index k to its eigenvalue exponent n in [2, p-2]."""
    if k % 2 or not 2 <= k <= p - 3:
        raise ValidationError(f"k must be even with 2 <= k <= {p - 3}, got {k}")
    n = (1 - k) % (p - 1)
    assert 2 <= n <= p - 2
    return n


@dataclass(frozen=True)
class IrregularPair:
    k: int
    n: int
    mu: int


@dataclass(frozen=True)
class IrregularityReport:
    p: int
    v: int
    pairs: tuple[IrregularPair, ...] = field(default_factory=tuple)

    @property
    def index(self) -> int:
        return len(self.pairs)

    @property
    def irregular(self) -> bool:
        return bool(self.pairs)

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "v": self.v,
            "index": self.index,
            "pairs": [{"k": q.k, "n": q.n, "mu": q.mu} for q in self.pairs],
        }

    @classmethod
    def from_dict(cls, d: dict) -> IrregularityReport:
        pairs = tuple(IrregularPair(q["k"], q["n"], q["mu"]) for q in d["pairs"])
        rep = cls(d["p"], d["v"], pairs)
        if rep.index != d["index"]:
            raise ValidationError("index does not match the number of pairs")
        return rep


def irregular_pairs(p: int, v: int | None = None) -> IrregularityReport:
    """Every even k in [2, p-3] with p | B_k, with exponent n and mu = v^n."""
    check_prime(p)
    if v is None:
        v = smallest_primitive_root(p)
    elif not is_primitive_root(p, v):
        raise ValidationError(f"{v} is not a primitive root mod {p}")
    pairs = []
    for k, b in bernoulli_mod_p(p).items():
        if b == 0:
            n = exponent_for_index(p, k)
            pairs.append(IrregularPair(k, n, pow(v, n, p)))
    return IrregularityReport(p, v, tuple(pairs))
