"""Exact arithmetic in Z[zeta_p] and the lambda-adic engine.

Elements are stored in the power basis ``zeta^0 .. zeta^(p-2)`` with unbounded
integer coefficients. ``lambda = zeta - 1`` generates the unique prime above p;
its residue field is F_p and ``zeta == 1`` there, so the residue of an element
is the sum of its coefficients mod p.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DomainError, ValidationError
from .fp import check_prime

__all__ = [
    "CycInt",
    "Valuation",
    "PiExpansion",
    "galois_apply",
    "conjugate",
    "norm",
    "residue",
    "div_lambda_exact",
    "pi_valuation",
    "pi_expansion",
    "default_cap",
    "dumps_element",
    "loads_element",
]


def _reduce(p: int, cyc: Sequence[int]) -> tuple[int, ...]:
    # cyc has length p and represents sum cyc[i] zeta^i with zeta^p = 1;
    # 1 + zeta + ... + zeta^(p-1) = 0 eliminates the top coefficient.
    top = cyc[p - 1]
    if top:
        return tuple(c - top for c in cyc[: p - 1])
    return tuple(cyc[: p - 1])


class CycInt:
    """An element of Z[zeta_p] as p-1 power-basis coefficients."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs: Iterable[int]) -> None:
        coeffs = tuple(coeffs)
        if len(coeffs) != p - 1:
            raise ValidationError(f"expected {p - 1} coefficients, got {len(coeffs)}")
        if not all(isinstance(c, int) and not isinstance(c, bool) for c in coeffs):
            raise ValidationError("coefficients must be integers")
        self.p = p
        self.coeffs = coeffs

    # constructors

    @classmethod
    def from_int(cls, p: int, m: int) -> CycInt:
        check_prime(p, minimum=3)
        return cls(p, (m,) + (0,) * (p - 2))

    @classmethod
    def zeta(cls, p: int, k: int = 1) -> CycInt:
        """zeta^k for any integer k."""
        check_prime(p, minimum=3)
        cyc = [0] * p
        cyc[k % p] = 1
        return cls(p, _reduce(p, cyc))

    @classmethod
    def lam(cls, p: int) -> CycInt:
        return cls.zeta(p) - 1

    @classmethod
    def from_lambda_digits(cls, p: int, digits: Sequence[int]) -> CycInt:
        """sum digits[i] * lambda^i, by Horner's rule."""
        acc = cls.from_int(p, 0)
        for a in reversed(digits):
            acc = acc.mul_lambda() + a
        return acc

    # structure

    def _cyc(self) -> list[int]:
        return list(self.coeffs) + [0]

    def _coerce(self, other: CycInt | int) -> CycInt:
        if isinstance(other, CycInt):
            if other.p != self.p:
                raise ValidationError(f"mismatched primes {self.p} and {other.p}")
            return other
        if isinstance(other, int):
            return CycInt.from_int(self.p, other)
        return NotImplemented

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int) and not isinstance(other, bool):
            other = CycInt.from_int(self.p, other)
        if not isinstance(other, CycInt):
            return NotImplemented
        return self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.p, self.coeffs))

    def __repr__(self) -> str:
        return f"CycInt({self.p}, {list(self.coeffs)})"

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(str(c) if i == 0 else f"{c}*z^{i}" if i > 1 else f"{c}*z")
        return " + ".join(terms) if terms else "0"

    # ring operations

    def __add__(self, other: CycInt | int) -> CycInt:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CycInt(self.p, (a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> CycInt:
        return CycInt(self.p, (-a for a in self.coeffs))

    def __sub__(self, other: CycInt | int) -> CycInt:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CycInt(self.p, (a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other: int) -> CycInt:
        return -self + other

    def __mul__(self, other: CycInt | int) -> CycInt:
        if isinstance(other, int) and not isinstance(other, bool):
            return CycInt(self.p, (a * other for a in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        p = self.p
        cyc = [0] * p
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    cyc[(i + j) % p] += a * b
        return CycInt(p, _reduce(p, cyc))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> CycInt:
        if e < 0:
            raise DomainError("negative powers are not defined in Z[zeta]")
        result = CycInt.from_int(self.p, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, k: int) -> CycInt:
        """zeta^k * self, a rotation of the cyclic representation."""
        p = self.p
        cyc = self._cyc()
        k %= p
        rot = cyc[p - k :] + cyc[: p - k]
        return CycInt(p, _reduce(p, rot))

    def mul_lambda(self) -> CycInt:
        return self.shift(1) - self

    # serialization

    def to_dict(self) -> dict:
        return {"p": self.p, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_dict(cls, d: dict) -> CycInt:
        try:
            p = d["p"]
            raw = d["coeffs"]
        except (KeyError, TypeError) as exc:
            raise ValidationError(f"element document needs 'p' and 'coeffs': {exc}") from None
        if isinstance(p, bool) or not isinstance(p, int):
            raise ValidationError("'p' must be an integer")
        check_prime(p, minimum=3)
        if not isinstance(raw, list) or not all(isinstance(c, str) for c in raw):
            raise ValidationError("'coeffs' must be a list of decimal strings")
        try:
            coeffs = [int(c, 10) for c in raw]
        except ValueError as exc:
            raise ValidationError(f"bad coefficient: {exc}") from None
        return cls(p, coeffs)


def dumps_element(x: CycInt) -> str:
    return json.dumps(x.to_dict(), indent=2) + "\n"


def loads_element(text: str) -> CycInt:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"element file is not valid JSON: {exc}") from None
    return CycInt.from_dict(d)


# Galois action


def galois_apply(a: int, x: CycInt) -> CycInt:
    """Image of x under zeta -> zeta^a."""
    p = x.p
    a %= p
    if a == 0:
        raise ValidationError(f"exponent must be prime to {p}")
    cyc = [0] * p
    for i, c in enumerate(x.coeffs):
        cyc[i * a % p] += c
    return CycInt(p, _reduce(p, cyc))


def conjugate(x: CycInt) -> CycInt:
    return galois_apply(x.p - 1, x)


def norm(x: CycInt) -> int:
    """Product of all p-1 Galois conjugates, as a rational integer."""
    acc = x
    for a in range(2, x.p):
        acc = acc * galois_apply(a, x)
    if not acc.is_rational():
        raise AssertionError(f"norm has irrational part: {acc!r}")
    return acc.coeffs[0]


# lambda-adic engine


def residue(x: CycInt) -> int:
    """Image of x in Z[zeta]/(lambda) = F_p."""
    return sum(x.coeffs) % x.p


def div_lambda_exact(x: CycInt) -> CycInt:
    """The y with lambda * y == x; x must lie in the prime above p."""
    p = x.p
    total = sum(x.coeffs)
    if total % p:
        raise DomainError("element is not divisible by lambda")
    # x = sum c_i (zeta^i - 1) + total, (zeta^i - 1)/lambda = 1 + ... + zeta^(i-1),
    # and p/lambda = -sum_j (p-1-j) zeta^j.
    q = total // p
    out = [0] * (p - 1)
    tail = 0
    for j in range(p - 2, -1, -1):
        out[j] = tail - q * (p - 1 - j)
        tail += x.coeffs[j]
    return CycInt(p, out)


@dataclass(frozen=True)
class Valuation:
    """A lambda-adic valuation that may be a lower bound or infinite.

    ``value`` is the exact valuation, the cap that was reached (``exact`` false),
    or ``math.inf`` for zero.
    """

    value: float
    exact: bool = True

    @classmethod
    def infinite(cls) -> Valuation:
        return cls(math.inf, True)

    @classmethod
    def at_least(cls, cap: int) -> Valuation:
        return cls(cap, False)

    @property
    def is_infinite(self) -> bool:
        return self.value == math.inf

    @property
    def is_finite_exact(self) -> bool:
        return self.exact and not self.is_infinite

    def __ge__(self, k: int) -> bool:
        # a lower bound is >= k when the bound itself is
        return self.value >= k

    def __lt__(self, k: int) -> bool:
        return self.exact and self.value < k

    def __int__(self) -> int:
        if not self.is_finite_exact:
            raise DomainError(f"valuation is not a finite exact integer: {self}")
        return int(self.value)

    def __str__(self) -> str:
        if self.is_infinite:
            return "infinite"
        return str(int(self.value)) if self.exact else f">={int(self.value)}"

    def to_json(self) -> int | str:
        return int(self.value) if self.is_finite_exact else str(self)

    @classmethod
    def from_json(cls, v: int | str) -> Valuation:
        if isinstance(v, int) and not isinstance(v, bool):
            return cls(v)
        if v == "infinite":
            return cls.infinite()
        if isinstance(v, str) and v.startswith(">="):
            return cls.at_least(int(v[2:]))
        raise ValidationError(f"bad valuation {v!r}")


def default_cap(p: int) -> int:
    return 2 * p + 2


def pi_valuation(x: CycInt, cap: int | None = None) -> Valuation:
    """v_lambda(x), exact below ``cap``; a lower bound ``>= cap`` otherwise."""
    if cap is None:
        cap = default_cap(x.p)
    if cap < 1:
        raise ValidationError("cap must be >= 1")
    if x.is_zero():
        return Valuation.infinite()
    for v in range(cap):
        if residue(x):
            return Valuation(v)
        x = div_lambda_exact(x)
    return Valuation.at_least(cap)


@dataclass(frozen=True)
class PiExpansion:
    p: int
    digits: tuple[int, ...]

    @property
    def precision(self) -> int:
        return len(self.digits)

    def recompose(self) -> CycInt:
        return CycInt.from_lambda_digits(self.p, self.digits)


def pi_expansion(x: CycInt, k: int) -> PiExpansion:
    """Digits a_0..a_{k-1} in [0, p-1] with x == sum a_i lambda^i mod lambda^k."""
    if k < 1:
        raise ValidationError("precision must be >= 1")
    digits = []
    for _ in range(k):
        a = residue(x)
        digits.append(a)
        x = div_lambda_exact(x - a)
    return PiExpansion(x.p, tuple(digits))
