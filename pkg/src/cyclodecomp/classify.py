"""Semi-primary, primary and hyper-primary classification of units at lambda.

For A prime to lambda with residue a mod lambda, a^p mod lambda^(p+1) depends
only on a mod p (two lifts differ by a multiple of p^2 and v(p^2) = 2p-2), so
the existential "for some integer a" reduces to the single lift of the residue.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .cyclo import CycInt, Valuation, pi_expansion, pi_valuation, residue
from .errors import DomainError

__all__ = [
    "PrimarityClass",
    "PrimarityReport",
    "is_semi_primary",
    "normalize_semi_primary",
    "classify_primarity",
    "check_hyper_primary_unit_form",
]


class PrimarityClass(str, Enum):
    NOT_SEMI_PRIMARY = "not_semi_primary"
    NON_PRIMARY = "non_primary"
    PRIMARY = "primary"
    HYPER_PRIMARY = "hyper_primary"


@dataclass(frozen=True)
class PrimarityReport:
    residue_a0: int
    semi_primary: bool
    t: Valuation
    klass: PrimarityClass
    m: int | None
    dichotomy_ok: bool

    def to_dict(self) -> dict:
        return {
            "residue_a0": self.residue_a0,
            "semi_primary": self.semi_primary,
            "t": self.t.to_json(),
            "class": self.klass.value,
            "m": self.m,
            "dichotomy_ok": self.dichotomy_ok,
        }

    @classmethod
    def from_dict(cls, d: dict) -> PrimarityReport:
        return cls(
            residue_a0=d["residue_a0"],
            semi_primary=d["semi_primary"],
            t=Valuation.from_json(d["t"]),
            klass=PrimarityClass(d["class"]),
            m=d["m"],
            dichotomy_ok=d["dichotomy_ok"],
        )


def _require_unit(A: CycInt) -> None:
    if residue(A) == 0:
        raise DomainError("A must be prime to lambda (v_pi(A) = 0)")


def is_semi_primary(A: CycInt) -> tuple[bool, int]:
    """Whether A == a mod lambda^2 for an integer a, together with a mod p."""
    _require_unit(A)
    a0, a1 = pi_expansion(A, 2).digits
    return a1 == 0, a0


def normalize_semi_primary(A: CycInt) -> tuple[int, CycInt]:
    """Return (j, zeta^j * A) with the product semi-primary.

    zeta^j = 1 + j*lambda mod lambda^2, so j = -a1/a0 mod p kills the linear digit.
    """
    _require_unit(A)
    p = A.p
    a0, a1 = pi_expansion(A, 2).digits
    j = -a1 * pow(a0, -1, p) % p
    return j, A.shift(j)


def classify_primarity(A: CycInt) -> PrimarityReport:
    _require_unit(A)
    p = A.p
    semi, a0 = is_semi_primary(A)
    t = pi_valuation(A - a0**p, cap=p + 2)
    if not semi:
        klass = PrimarityClass.NOT_SEMI_PRIMARY
    elif t >= p + 1:
        klass = PrimarityClass.HYPER_PRIMARY
    elif t >= p:
        klass = PrimarityClass.PRIMARY
    else:
        klass = PrimarityClass.NON_PRIMARY
    primary = klass in (PrimarityClass.PRIMARY, PrimarityClass.HYPER_PRIMARY)
    even_t = t.is_finite_exact and int(t) % 2 == 0
    m = int(t) // 2 if klass is PrimarityClass.NON_PRIMARY and even_t else None
    return PrimarityReport(
        residue_a0=a0,
        semi_primary=semi,
        t=t,
        klass=klass,
        m=m,
        dichotomy_ok=primary or even_t,
    )


def check_hyper_primary_unit_form(A: CycInt) -> bool:
    """True iff lambda^(p+1) exactly divides A - 1."""
    _require_unit(A)
    t = pi_valuation(A - 1, cap=A.p + 3)
    return t.is_finite_exact and int(t) == A.p + 1
