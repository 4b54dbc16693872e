import math

import pytest

from cyclodecomp.errors import ValidationError
from cyclodecomp.fp import (
    discrete_log,
    is_prime,
    is_primitive_root,
    mult_order,
    smallest_primitive_root,
)

from oracles import brute_order, primes_upto


def test_is_prime_matches_sieve():
    sieve = set(primes_upto(2000))
    assert [n for n in range(2001) if is_prime(n)] == sorted(sieve)


@pytest.mark.parametrize("p,v,expected", [(37, 2, True), (37, 1, False), (67, 2, True), (37, 3, False)])
def test_is_primitive_root(p, v, expected):
    assert is_primitive_root(p, v) is expected


def test_primitive_root_facts_used_in_examples():
    assert pow(2, 18, 37) == 36 and pow(2, 12, 37) != 1
    assert pow(2, 33, 67) == 66 and pow(2, 22, 67) != 1 and pow(2, 6, 67) != 1


@pytest.mark.parametrize("p,v", [(36, 5), (37, 0), (37, 37), (4, 1)])
def test_is_primitive_root_rejects(p, v):
    with pytest.raises(ValidationError):
        is_primitive_root(p, v)


@pytest.mark.parametrize("p,expected", [(37, 2), (7, 3), (5, 2), (23, 5), (191, 19)])
def test_smallest_primitive_root(p, expected):
    assert smallest_primitive_root(p) == expected


@pytest.mark.parametrize("p,x,expected", [(37, 7, 9), (37, 1, 1), (37, 36, 2)])
def test_mult_order_examples(p, x, expected):
    assert mult_order(p, x) == expected


def test_mult_order_rejects_zero():
    with pytest.raises(ValidationError):
        mult_order(37, 74)


@pytest.mark.parametrize("y,expected", [(1, 0), (2, 1), (32, 5)])
def test_discrete_log_examples(y, expected):
    assert discrete_log(37, 2, y) == expected


def test_discrete_log_rejects():
    with pytest.raises(ValidationError):
        discrete_log(37, 2, 0)
    with pytest.raises(ValidationError):
        discrete_log(37, 3, 5)


@pytest.mark.parametrize("p", [p for p in primes_upto(200) if p >= 5])
def test_order_properties_exhaustive(p):
    v = smallest_primitive_root(p)
    for x in range(1, p):
        t = mult_order(p, x)
        assert t == brute_order(p, x)
        assert (p - 1) % t == 0
        assert pow(v, discrete_log(p, v, x), p) == x
    for k in range(p - 1):
        assert mult_order(p, pow(v, k, p)) == (p - 1) // math.gcd(p - 1, k)
