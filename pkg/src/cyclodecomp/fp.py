"""Residue arithmetic modulo a small prime p.

Scalars are plain Python ints reduced into ``[0, p-1]``; every function takes
the modulus explicitly.
"""

from __future__ import annotations

from math import gcd, isqrt

from .errors import ValidationError

__all__ = [
    "is_prime",
    "check_prime",
    "prime_factors",
    "is_primitive_root",
    "smallest_primitive_root",
    "mult_order",
    "discrete_log",
    "primes_between",
]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for f in range(3, isqrt(n) + 1, 2):
        if n % f == 0:
            return False
    return True


def check_prime(p: int, minimum: int = 5) -> int:
    """Return ``p`` if it is a prime ``>= minimum``, else raise ValidationError."""
    if isinstance(p, bool) or not isinstance(p, int):
        raise ValidationError(f"p must be an integer, got {p!r}")
    if p < minimum or not is_prime(p):
        raise ValidationError(f"p must be a prime >= {minimum}, got {p}")
    return p


def primes_between(lo: int, hi: int) -> list[int]:
    """Primes q with lo <= q <= hi."""
    return [q for q in range(max(lo, 2), hi + 1) if is_prime(q)]


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n >= 1, ascending."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def _unit(p: int, x: int, name: str = "x") -> int:
    x %= p
    if x == 0:
        raise ValidationError(f"{name} must be nonzero mod {p}")
    return x


def mult_order(p: int, x: int) -> int:
    """Least t >= 1 with x**t == 1 (mod p)."""
    check_prime(p, minimum=2)
    x = _unit(p, x)
    t = p - 1
    for q in prime_factors(p - 1):
        while t % q == 0 and pow(x, t // q, p) == 1:
            t //= q
    return t


def is_primitive_root(p: int, v: int) -> bool:
    check_prime(p, minimum=2)
    if not 1 <= v <= p - 1:
        raise ValidationError(f"v must lie in [1, {p - 1}], got {v}")
    return mult_order(p, v) == p - 1


def smallest_primitive_root(p: int) -> int:
    """Least v >= 2 generating the multiplicative group mod p."""
    check_prime(p, minimum=3)
    for v in range(2, p):
        if is_primitive_root(p, v):
            return v
    raise AssertionError("unreachable: every prime has a primitive root")


def discrete_log(p: int, v: int, y: int) -> int:
    """The unique n in [0, p-2] with v**n == y (mod p), found by scanning.

    ``v`` must be a primitive root; p is small enough that a linear scan is fine.
    """
    check_prime(p, minimum=2)
    y = _unit(p, y, "y")
    if not is_primitive_root(p, v % p):
        raise ValidationError(f"{v} is not a primitive root mod {p}")
    acc = 1
    for n in range(p - 1):
        if acc == y:
            return n
        acc = acc * v % p
    raise AssertionError("unreachable for a primitive root")


def coprime(a: int, b: int) -> bool:
    return gcd(a, b) == 1
