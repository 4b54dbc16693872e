"""Exit criteria. Each test records a ``criterion`` label; the terminal summary prints PASS/FAIL per line."""

import random
import time

import pytest

from cyclodecomp.bern import irregular_pairs
from cyclodecomp.classify import PrimarityClass, check_hyper_primary_unit_form, classify_primarity
from cyclodecomp.cyclo import CycInt, conjugate, norm, pi_expansion, pi_valuation
from cyclodecomp.decomp import CaseParams, compute_d, decompose
from cyclodecomp.fp import smallest_primitive_root
from cyclodecomp.oracle import build_group, sigma_orbits_on_primes, verify_sweep
from cyclodecomp.witness import jacobi_sum

from oracles import bernoulli_mod_p_exact, primes_upto

SWEEP_PRIMES = [p for p in primes_upto(199) if p >= 5]


def swept_params():
    for p in SWEEP_PRIMES:
        v = smallest_primitive_root(p)
        for n in range(2, p - 1):
            yield p, v, n


@pytest.fixture
def criterion(record_property):
    def label(text):
        record_property("criterion", text)

    return label


def test_ac1_closed_form_M(criterion):
    criterion("AC1 closed form M/Q for (37, 2, 5, primary) = [(1,1,1),(9,1,4)], 1 + 4*9 = 37, < 1 s")
    t0 = time.perf_counter()
    shape = decompose(CaseParams(37, 2, 5, True), "M/Q")
    elapsed = time.perf_counter() - t0
    assert shape.triples == [(1, 1, 1), (9, 1, 4)]
    (_, _, unram), (d, _, nu) = shape.triples
    assert unram == 1 and 1 + nu * d == 37
    assert elapsed < 1.0


@pytest.mark.slow
def test_ac2_oracle_sweep(criterion):
    criterion("AC2 closed forms == double-coset oracle, 5 <= p <= 199, all n, both cases, K/Q S/K S/Q M/Q, < 5 min single-threaded")
    t0 = time.perf_counter()
    diffs = verify_sweep(199, jobs=1)
    elapsed = time.perf_counter() - t0
    assert diffs == []
    assert elapsed < 300


def test_ac3_orbit_structure(criterion):
    criterion("AC3 one fixed prime, all other sigma_mu-orbits of size d, d > 1, every swept (p, n)")
    for p, v, n in swept_params():
        w = build_group(p, v, n).w
        d = compute_d(CaseParams(p, v, n))
        assert d > 1
        orbits = sigma_orbits_on_primes(p, w)
        assert [o for o in orbits if len(o) == 1] == [(0,)]
        assert all(len(o) == d for o in orbits[1:])
        wd = pow(w, d, p)
        assert all(i * wd % p == i for o in orbits for i in o)


def test_ac4_non_primary(criterion):
    criterion("AC4 non-primary: M/Q [(p,1,1)], S/K [(p,1,1)], S/Q [(p(p-1),1,1)] for all swept parameters")
    for p, v, n in swept_params():
        params = CaseParams(p, v, n, primary=False)
        assert decompose(params, "M/Q").triples == [(p, 1, 1)]
        assert decompose(params, "S/K").triples == [(p, 1, 1)]
        assert decompose(params, "S/Q").triples == [(p * (p - 1), 1, 1)]


def test_ac5_irregular_pairs(criterion):
    criterion("AC5 irregular pairs for p < 160 match the exact-rational Bernoulli oracle, < 30 s")
    expected = {(37, 32), (59, 44), (67, 58), (101, 68), (103, 24), (131, 22), (149, 130), (157, 62), (157, 110)}
    t0 = time.perf_counter()
    found = {(p, q.k) for p in SWEEP_PRIMES if p < 160 for q in irregular_pairs(p).pairs}
    elapsed = time.perf_counter() - t0
    oracle = {(p, k) for p in SWEEP_PRIMES if p < 160 for k, b in bernoulli_mod_p_exact(p).items() if b == 0}
    assert found == expected == oracle
    assert elapsed < 30


def test_ac6_pi_adic_engine(criterion):
    criterion("AC6 v_pi(p) = p-1 for p in {5,7,37}; norm(lambda) = p; recomposition residual v_pi >= k on 1000 random elements, p in {5,37}")
    for p in (5, 7, 37):
        v = pi_valuation(CycInt.from_int(p, p), cap=2 * p)
        assert v.exact and int(v) == p - 1
        assert norm(CycInt.lam(p)) == p
    rng = random.Random(0x5EED)
    for p in (5, 37):
        for _ in range(1000):
            x = CycInt(p, [rng.randint(-(10**12), 10**12) for _ in range(p - 1)])
            k = rng.randint(1, p + 2)
            residual = pi_expansion(x, k).recompose() - x
            assert pi_valuation(residual, cap=k) >= k


def test_ac7_classifier_suite(criterion):
    criterion("AC7 a^p hyper_primary; 1+lambda^(2m) non_primary with m and dichotomy_ok; 1+lambda^odd dichotomy_ok false; 1+lambda^(p+1) unit form")
    for p in (5, 7, 11, 13, 37):
        lam = CycInt.lam(p)
        for a in (1, 2, 3, p + 2, 10**6 + 3):
            if a % p:
                assert classify_primarity(CycInt.from_int(p, a**p)).klass is PrimarityClass.HYPER_PRIMARY
        for m in range(1, (p + 1) // 2):
            rep = classify_primarity(lam ** (2 * m) + 1)
            assert rep.klass is PrimarityClass.NON_PRIMARY and rep.m == m and rep.dichotomy_ok
        for t in range(1, p, 2):
            assert classify_primarity(lam**t + 1).dichotomy_ok is False
        assert check_hyper_primary_unit_form(lam ** (p + 1) + 1)


def test_ac8_jacobi(criterion):
    criterion("AC8 J * conj(J) = q exactly for (5,11), (5,31), (37,149), < 5 s")
    t0 = time.perf_counter()
    for p, q in ((5, 11), (5, 31), (37, 149)):
        J = jacobi_sum(p, q).J
        assert J * conjugate(J) == q
    assert time.perf_counter() - t0 < 5
