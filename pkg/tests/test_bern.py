from fractions import Fraction

import pytest

from cyclodecomp.bern import IrregularityReport, bernoulli_mod_p, exponent_for_index, irregular_pairs
from cyclodecomp.errors import ValidationError

from oracles import bernoulli_exact, bernoulli_mod_p_exact, primes_upto

PRIMES = [p for p in primes_upto(200) if p >= 5]


def test_exact_oracle_sanity():
    B = bernoulli_exact(12)
    assert B[2] == Fraction(1, 6) and B[4] == Fraction(-1, 30) and B[12] == Fraction(-691, 2730)


def test_bernoulli_p5():
    assert bernoulli_mod_p(5) == {2: 1}


def test_bernoulli_p37_has_zero_at_32():
    assert bernoulli_mod_p(37)[32] == 0


def test_regular_31():
    assert 0 not in bernoulli_mod_p(31).values()
    assert irregular_pairs(31).index == 0


@pytest.mark.parametrize("p", PRIMES)
def test_agrees_with_exact_rationals(p):
    assert bernoulli_mod_p(p) == bernoulli_mod_p_exact(p)


def test_irregular_primes_below_160():
    irregular = [p for p in PRIMES if p < 160 and irregular_pairs(p).irregular]
    assert irregular == [37, 59, 67, 101, 103, 131, 149, 157]


def test_157_has_two_pairs():
    rep = irregular_pairs(157)
    assert rep.index == 2
    assert [q.k for q in rep.pairs] == [62, 110]


@pytest.mark.parametrize("p", PRIMES)
def test_pair_invariants(p):
    rep = irregular_pairs(p)
    for q in rep.pairs:
        assert q.k % 2 == 0 and 2 <= q.k <= p - 3
        assert 2 <= q.n <= p - 2
        assert q.mu == pow(rep.v, q.n, p)
        assert q.mu != rep.v


def test_exponent_convention():
    # n = 1 - k mod (p - 1)
    assert exponent_for_index(37, 32) == 5
    assert exponent_for_index(67, 58) == 9
    with pytest.raises(ValidationError):
        exponent_for_index(37, 33)
    with pytest.raises(ValidationError):
        exponent_for_index(37, 36)


def test_explicit_v():
    rep = irregular_pairs(37, v=5)
    assert rep.v == 5 and rep.pairs[0].mu == pow(5, 5, 37)
    with pytest.raises(ValidationError):
        irregular_pairs(37, v=3)


def test_report_dict_round_trip():
    rep = irregular_pairs(157)
    assert IrregularityReport.from_dict(rep.to_dict()) == rep
