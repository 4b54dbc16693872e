"""Closed-form decomposition of p in the tower Q < K < S and in M, N.

K = Q(zeta_p), S = K(A^(1/p)) for a singular A on the eigenspace where
sigma_mu(omega) = omega^mu mod pi^2 with mu = v^n, M the degree-p subfield
fixed by sigma_mu and N the intermediate field with [N:M] = (p-1)/d. Nothing
here builds A or S: the shapes depend only on (p, v, n) and on whether S/K is
unramified (the primary case).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import ValidationError
from .fp import check_prime, is_primitive_root, mult_order

__all__ = [
    "EXTENSIONS",
    "PrimeEntry",
    "DecompShape",
    "CaseParams",
    "conjugation_multiplier",
    "compute_d",
    "decompose_K_over_Q",
    "decompose_S_over_K",
    "decompose_S_over_Q",
    "decompose_M_over_Q",
    "decompose_N_over_M",
    "decompose",
]

EXTENSIONS = ("K/Q", "S/K", "S/Q", "M/Q", "N/M")


@dataclass(frozen=True, order=True)
class PrimeEntry:
    e: int
    f: int
    count: int


@dataclass(frozen=True)
class DecompShape:
    """How p factors in an extension: (e, f, count) entries, sorted by (e, f).

    Construction enforces sum(e * f * count) == degree.
    """

    extension: str
    degree: int
    primes: tuple[PrimeEntry, ...]

    def __post_init__(self) -> None:
        if self.extension not in EXTENSIONS:
            raise ValidationError(f"unknown extension {self.extension!r}")
        merged: dict[tuple[int, int], int] = {}
        for q in self.primes:
            if min(q.e, q.f, q.count) < 1:
                raise ValidationError(f"entries must be positive: {q}")
            merged[(q.e, q.f)] = merged.get((q.e, q.f), 0) + q.count
        canon = tuple(PrimeEntry(e, f, c) for (e, f), c in sorted(merged.items()))
        object.__setattr__(self, "primes", canon)
        total = sum(q.e * q.f * q.count for q in canon)
        if total != self.degree:
            raise ValidationError(
                f"{self.extension}: sum e*f*count = {total} != degree {self.degree}"
            )

    @classmethod
    def of(cls, extension: str, degree: int, triples: Iterable[tuple[int, int, int]]) -> DecompShape:
        return cls(extension, degree, tuple(PrimeEntry(*t) for t in triples))

    @property
    def triples(self) -> list[tuple[int, int, int]]:
        return [(q.e, q.f, q.count) for q in self.primes]

    @property
    def prime_count(self) -> int:
        return sum(q.count for q in self.primes)

    def to_dict(self) -> dict:
        return {
            "extension": self.extension,
            "degree": self.degree,
            "primes": [{"e": q.e, "f": q.f, "count": q.count} for q in self.primes],
        }

    @classmethod
    def from_dict(cls, d: dict) -> DecompShape:
        return cls.of(d["extension"], d["degree"], ((q["e"], q["f"], q["count"]) for q in d["primes"]))


@dataclass(frozen=True)
class CaseParams:
    p: int
    v: int
    n: int
    primary: bool = True

    def __post_init__(self) -> None:
        check_prime(self.p)
        if not 1 <= self.v <= self.p - 1 or not is_primitive_root(self.p, self.v):
            raise ValidationError(f"v = {self.v} is not a primitive root mod {self.p}")
        if not 2 <= self.n <= self.p - 2:
            raise ValidationError(f"n must satisfy 2 <= n <= {self.p - 2}, got {self.n}")

    @property
    def mu(self) -> int:
        return pow(self.v, self.n, self.p)


def conjugation_multiplier(params: CaseParams) -> int:
    """w = v * mu^-1 = v^(1-n); sigma_mu theta sigma_mu^-1 = theta^w."""
    p = params.p
    return pow(params.v, (1 - params.n) % (p - 1), p)


def compute_d(params: CaseParams) -> int:
    """Common ramification index of the ramified primes of M over p."""
    d = mult_order(params.p, conjugation_multiplier(params))
    assert d > 1, "n != 1 forces mu != v"
    return d


def decompose_K_over_Q(p: int) -> DecompShape:
    check_prime(p)
    return DecompShape.of("K/Q", p - 1, [(p - 1, 1, 1)])


def decompose_S_over_K(params: CaseParams) -> DecompShape:
    p = params.p
    if params.primary:
        return DecompShape.of("S/K", p, [(1, 1, p)])
    return DecompShape.of("S/K", p, [(p, 1, 1)])


def decompose_S_over_Q(params: CaseParams) -> DecompShape:
    p = params.p
    if params.primary:
        return DecompShape.of("S/Q", p * (p - 1), [(p - 1, 1, p)])
    return DecompShape.of("S/Q", p * (p - 1), [(p * (p - 1), 1, 1)])


def decompose_M_over_Q(params: CaseParams) -> DecompShape:
    p = params.p
    if not params.primary:
        return DecompShape.of("M/Q", p, [(p, 1, 1)])
    d = compute_d(params)
    # one unramified prime below the sigma_mu-fixed prime, the rest ramified with e = d
    return DecompShape.of("M/Q", p, [(1, 1, 1), (d, 1, (p - 1) // d)])


def decompose_N_over_M(params: CaseParams) -> DecompShape:
    """Relative shape over each ramified prime of M: totally ramified, e = (p-1)/d."""
    if not params.primary:
        raise ValidationError("N/M is only described in the primary case")
    k = (params.p - 1) // compute_d(params)
    return DecompShape.of("N/M", k, [(k, 1, 1)])


def decompose(params: CaseParams, extension: str) -> DecompShape:
    if extension == "K/Q":
        return decompose_K_over_Q(params.p)
    table = {
        "S/K": decompose_S_over_K,
        "S/Q": decompose_S_over_Q,
        "M/Q": decompose_M_over_Q,
        "N/M": decompose_N_over_M,
    }
    if extension not in table:
        raise ValidationError(f"unknown extension {extension!r}")
    return table[extension](params)
