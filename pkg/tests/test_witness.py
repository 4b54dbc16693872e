import logging

import pytest

from cyclodecomp.classify import PrimarityClass, classify_primarity, normalize_semi_primary
from cyclodecomp.cyclo import CycInt, conjugate, galois_apply, norm, pi_valuation
from cyclodecomp.errors import ValidationError
from cyclodecomp.fp import is_primitive_root
from cyclodecomp.witness import auxiliary_primes, jacobi_sum, witness_primarity

from oracles import embed

log = logging.getLogger(__name__)

CASES = [(5, 11), (5, 31), (37, 149), (7, 29), (11, 23), (13, 53)]


def direct_jacobi(p, q, g):
    """Complex-valued Jacobi sum by direct summation with an explicit character table."""
    import cmath

    chi = {}
    x = 1
    for k in range(q - 1):
        chi[x] = cmath.exp(2j * cmath.pi * k / p)
        x = x * g % q
    return sum(chi[x] * chi[(1 - x) % q] for x in range(2, q))


@pytest.mark.parametrize("p,q", CASES)
def test_weil_identity(p, q):
    w = jacobi_sum(p, q)
    assert w.J * conjugate(w.J) == q
    for a in range(1, p):
        Ja = galois_apply(a, w.J)
        assert Ja * conjugate(Ja) == q


@pytest.mark.parametrize("p,q", [(5, 11), (5, 31), (7, 29)])
def test_matches_direct_summation(p, q):
    w = jacobi_sum(p, q)
    assert abs(embed(p, w.J.coeffs) - direct_jacobi(p, q, w.g)) < 1e-9


@pytest.mark.parametrize("p,q", [(5, 11), (5, 31), (7, 29), (11, 23)])
def test_norm(p, q):
    assert norm(jacobi_sum(p, q).J) == q ** ((p - 1) // 2)


def test_p37_smallest_generator():
    w = jacobi_sum(37, 149)
    assert w.g == 2 and 149 == 1 + 4 * 37


@pytest.mark.parametrize("p,q", [(5, 11), (7, 29), (11, 67)])
def test_generator_change_gives_galois_conjugate(p, q):
    w = jacobi_sum(p, q)
    orbit = {galois_apply(a, w.J) for a in range(1, p)}
    for u in range(2, q - 1):
        g2 = pow(w.g, u, q)
        if is_primitive_root(q, g2):
            J2 = jacobi_sum(p, q, g2).J
            assert J2 in orbit
            assert {galois_apply(a, J2) for a in range(1, p)} == orbit


def test_rejects():
    with pytest.raises(ValidationError):
        jacobi_sum(5, 13)
    with pytest.raises(ValidationError):
        jacobi_sum(5, 11, 3)  # 3 has order 5 mod 11
    with pytest.raises(ValidationError):
        jacobi_sum(5, 21)


def test_auxiliary_primes():
    assert auxiliary_primes(5, 3) == [11, 31, 41]
    assert auxiliary_primes(37, 1) == [149]


@pytest.mark.parametrize("p,q", CASES)
def test_witness_primarity(p, q):
    w = jacobi_sum(p, q)
    assert pi_valuation(w.J).value == 0
    j, _ = normalize_semi_primary(-w.J)
    assert j == 0  # -J is already semi-primary
    rep = witness_primarity(w)
    log.info("p=%d q=%d %s", p, q, rep.to_dict())
    # frozen after the first verified run: -J == 1 + c*lambda^3, c != 0
    assert rep.klass is PrimarityClass.NON_PRIMARY
    assert int(rep.t) == 3 and rep.residue_a0 == 1
    assert rep == classify_primarity(-w.J)


def test_element_dict():
    w = jacobi_sum(5, 11)
    assert CycInt.from_dict(w.to_dict()["element"]) == w.J
    assert w.J == CycInt(5, [0, 2, -2, -1])
