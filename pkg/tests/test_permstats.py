import math
from itertools import permutations

import pytest

from localh.permstats import (
    EnumerationBoundError,
    derangement_enum,
    derangement_recurrence,
    enumeration_bound,
    eulerian_polynomial,
    permutations_lex,
)
from localh.polynomials import ONE, ZERO, Polynomial, gamma_extract, is_unimodal


def test_permutations_lex_matches_itertools():
    for n in range(6):
        assert list(permutations_lex(n)) == sorted(permutations(range(1, n + 1)))


def test_eulerian_examples():
    assert eulerian_polynomial(3) == Polynomial([1, 4, 1])
    assert eulerian_polynomial(1) == ONE
    assert eulerian_polynomial(4) == Polynomial([1, 11, 11, 1])


def test_eulerian_counts_sum_to_factorial():
    for d in range(7):
        assert sum(eulerian_polynomial(d).coeffs) == math.factorial(d)


def test_derangement_examples():
    assert derangement_enum(0) == ONE
    assert derangement_enum(1) == ZERO
    assert derangement_enum(3) == Polynomial([0, 1, 1])
    assert derangement_enum(4) == Polynomial([0, 1, 7, 1])


def test_derangement_counts():
    # number of derangements: 1, 0, 1, 2, 9, 44, 265
    for d, count in enumerate([1, 0, 1, 2, 9, 44, 265]):
        assert sum(derangement_enum(d).coeffs) == count


def test_recurrence_examples():
    assert derangement_recurrence(2) == Polynomial([0, 1])
    assert derangement_recurrence(3) == Polynomial([0, 1, 1])
    assert derangement_recurrence(4) == Polynomial([0, 1, 7, 1])


@pytest.mark.parametrize("d", range(9))
def test_recurrence_matches_enumeration(d):
    assert derangement_recurrence(d) == derangement_enum(d)


@pytest.mark.parametrize("d", range(9))
def test_derangement_symmetric_unimodal_gamma_nonneg(d):
    p = derangement_recurrence(d)
    assert p.is_symmetric(d)
    assert is_unimodal(p.padded(d))
    assert gamma_extract(p, d).is_nonnegative


def test_bound_guard(monkeypatch):
    with pytest.raises(EnumerationBoundError):
        derangement_enum(10)
    monkeypatch.setenv("LOCALH_MAX_ENUM", "10")
    assert enumeration_bound() == 10
    monkeypatch.setenv("LOCALH_MAX_ENUM", "13")
    with pytest.raises(EnumerationBoundError):
        enumeration_bound()


def test_negative_order_rejected():
    with pytest.raises(ValueError):
        derangement_recurrence(-1)
    with pytest.raises(ValueError):
        eulerian_polynomial(-1)
