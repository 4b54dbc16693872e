"""Decomposition of p in p-cyclotomic fields, singular Kummer extensions and their degree-p subfields."""

from .bern import IrregularityReport, bernoulli_mod_p, irregular_pairs
from .classify import (
    PrimarityClass,
    PrimarityReport,
    check_hyper_primary_unit_form,
    classify_primarity,
    is_semi_primary,
    normalize_semi_primary,
)
from .cyclo import CycInt, PiExpansion, Valuation, conjugate, div_lambda_exact, galois_apply, norm, pi_expansion, pi_valuation
from .decomp import (
    CaseParams,
    DecompShape,
    compute_d,
    decompose,
    decompose_K_over_Q,
    decompose_M_over_Q,
    decompose_N_over_M,
    decompose_S_over_K,
    decompose_S_over_Q,
)
from .errors import DomainError, ValidationError
from .oracle import build_group, oracle_decompose, sigma_orbits_on_primes, verify_sweep
from .witness import JacobiWitness, jacobi_sum, witness_primarity

__version__ = "0.1.0"
