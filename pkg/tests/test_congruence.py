"""Constant derivation and exact congruence verification."""

from fractions import Fraction

import pytest

from partible.congruence import (
    HypothesisViolation,
    constant_table,
    delannoy_ring_check,
    derive_constant,
    integrality_check,
    odd_power_sum_zero,
    odd_power_symbolic_zero,
    sweep,
    verify,
)
from partible.exact import legendre_symbol, primes_in_range
from partible.ratfunc import Z
from partible.sequences import delannoy_poly_terms


def test_derive_constant_worked_values():
    assert derive_constant("apery", 0) == 1
    assert derive_constant("apery", 1) == 0
    assert derive_constant("apery", 2) == 1
    assert derive_constant("delannoy_number", 0) == 1
    assert derive_constant("delannoy_number", 1) == 13
    assert derive_constant("delannoy_poly", 0) == 1 / Z
    assert derive_constant("apery_signed", 0) == 1


def test_derive_constant_odd_delannoy_is_zero():
    for r in range(5):
        assert derive_constant("delannoy_poly", r, power_parity="odd") == 0
        assert derive_constant("delannoy_number", r, power_parity="odd") == 0


def test_derive_constant_specialization_consistency():
    for r in range(4):
        symbolic = derive_constant("delannoy_poly", r)
        for z0 in (1, 2, 5):
            assert symbolic.evaluate(z0) == derive_constant("delannoy_poly", r, z=z0)
    assert derive_constant("delannoy_poly", 1).evaluate(1) == 13


def test_derive_constant_rejections():
    with pytest.raises(ValueError):
        derive_constant("apery", 1, power_parity="even")
    with pytest.raises(ValueError):
        derive_constant("apery", -1)
    with pytest.raises(ValueError):
        derive_constant("delannoy_number", 0, z=2)


def test_constant_table_denominator_structure():
    apery = constant_table("apery", 10)
    assert apery.denominator_support <= {2}
    signed = constant_table("apery_signed", 10)
    assert signed.denominator_support <= {3}
    sym = constant_table("delannoy_poly", 10)
    assert sym.z_in_denominator
    for c in sym.entries.values():
        assert delannoy_ring_check(c)


def test_integrality_check():
    apery = constant_table("apery", 10)
    assert integrality_check(apery, 5)
    assert integrality_check(apery, 97)
    signed = constant_table("apery_signed", 10)
    assert integrality_check(signed, 7)
    # 2 may legitimately divide apery denominators (e.g. 1/8-type entries)
    bad2 = all(Fraction(c).denominator % 2 for c in apery.entries.values())
    assert integrality_check(apery, 2) == bad2


def test_verify_worked_cells():
    rep = verify("apery", 0, 7)
    assert rep.passed and rep.lhs == 7 and rep.rhs == 7 and rep.e == 3
    rep = verify("apery", 1, 5)
    assert rep.passed and rep.lhs == 0 and rep.rhs == 0
    rep = verify("delannoy_poly", 3, 11, z=2)
    assert rep.passed and rep.lhs == 0
    rep = verify("apery_signed", 0, 5)
    assert rep.passed and rep.rhs == (-5) % 125 == 120
    assert legendre_symbol(5, 3) == -1


def test_delannoy_number_base_congruence():
    # sum D_k == (-1/p) mod p, the anchor for the even-power family
    for p in primes_in_range(5, 60):
        total = sum(delannoy_poly_terms(p, 1)) % p
        assert total == legendre_symbol(-1, p) % p


def test_verify_even_parity_delannoy_poly():
    rep = verify("delannoy_poly", 1, 13, z=3, power_parity="even")
    assert rep.passed and rep.power == 4


def test_verify_hypothesis_violations():
    with pytest.raises(HypothesisViolation):
        verify("apery", 0, 3)
    with pytest.raises(HypothesisViolation):
        verify("apery", 0, 8)
    with pytest.raises(HypothesisViolation):
        verify("delannoy_poly", 0, 5, z=10)
    with pytest.raises(HypothesisViolation):
        verify("delannoy_poly", 0, 5)
    with pytest.raises(HypothesisViolation):
        verify("apery", 0, 7, e=2)
    with pytest.raises(HypothesisViolation):
        verify("delannoy_number", 0, 2)


def test_sweep_small_grids():
    reports = sweep("apery", 3, 50)
    assert {rep.p for rep in reports} == set(primes_in_range(5, 50))
    assert all(rep.passed for rep in reports)
    assert len(reports) == 4 * len(primes_in_range(5, 50))

    reports = sweep("delannoy_poly", 2, 30, z_values=[1, 2, 5])
    assert all(rep.passed for rep in reports)
    # gcd filter drops p | z cells
    assert not any(rep.p == 5 and rep.z == 5 for rep in reports)
    assert not any(rep.p == 2 for rep in reports)


def test_sweep_excludes_small_primes_for_apery():
    reports = sweep("apery", 1, 10)
    assert {rep.p for rep in reports} == {5, 7}


def test_sweep_parallel_matches_serial():
    serial = sweep("apery", 2, 40)
    parallel = sweep("apery", 2, 40, jobs=2)
    assert [r.to_dict() | {"elapsed": 0} for r in serial] == \
           [r.to_dict() | {"elapsed": 0} for r in parallel]


def test_constants_do_not_depend_on_p():
    # one derivation, reused across the whole sweep
    c3 = derive_constant("apery", 3)
    for p in primes_in_range(5, 80):
        rep = verify("apery", 3, p, _constant=c3)
        assert rep.passed


def test_odd_power_sum_zero():
    assert odd_power_sum_zero(5, 0)
    assert sum(range(1, 10, 2)) == 25
    assert odd_power_sum_zero(7, 2)
    assert odd_power_sum_zero(11, 5)
    with pytest.raises(ValueError):
        odd_power_sum_zero(2, 1)


def test_odd_power_symbolic_zero():
    for p in (3, 5, 11, 17):
        for r in (0, 1, 3):
            assert odd_power_symbolic_zero(p, r)
