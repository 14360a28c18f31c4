"""Recurrence fitting, rational forms, and the curve checks."""

from fractions import Fraction

import pytest

from motivic.errors import InsufficientDataError, NonIntegralCoefficientsError
from motivic.rat import (
    RationalFn,
    expand_rational,
    min_recurrence,
    poly_gcd,
    poly_mul,
    rational_from_json,
    rational_to_json,
    to_rational,
    weil_validate,
)
from motivic.witt import from_pointcounts, witt_vector

# frozen counts from an independent brute-force enumeration (see
# test_varieties.py for the affine-chart cross-check)
E2_PROJ_COUNTS = [3, 9, 9, 9, 33, 81]
E3_PROJ_COUNTS = [6, 12, 18, 96, 246, 684]


def test_poly_helpers():
    assert poly_mul((1, -1), (1, -2)) == (1, -3, 2)
    assert poly_mul((), (1, 2)) == ()
    g = poly_gcd((1, -3, 2), (1, -2))
    # the shared root is 1/2, so the monic gcd is t - 1/2
    assert g == (Fraction(-1, 2), Fraction(1))


def test_min_recurrence_projective_line():
    counts = [1 + 2**m for m in range(1, 7)]
    rec = min_recurrence(counts)
    assert rec is not None
    assert rec.order == 2
    assert rec.coeffs == (3, -2)


def test_min_recurrence_minimality_and_edges():
    assert min_recurrence([0, 0, 0, 0]).order == 0
    rec = min_recurrence([5, 5, 5, 5])
    assert rec.order == 1 and rec.coeffs == (1,)
    rec = min_recurrence([1, 2, 4, 8, 16, 32])
    assert rec.order == 1 and rec.coeffs == (2,)
    assert min_recurrence([1, 1, 2, 3, 7, 11]) is None
    assert min_recurrence([1 + 2**m for m in range(1, 7)], max_order=1) is None
    with pytest.raises(InsufficientDataError):
        min_recurrence([4])


def test_to_rational_projective_line():
    counts = [1 + 2**m for m in range(1, 7)]
    f = to_rational(from_pointcounts(counts), 2)
    assert f == RationalFn((1,), (1, -3, 2))


def test_to_rational_prefers_smallest_denominator():
    counts = [2**m for m in range(1, 7)]
    f = to_rational(from_pointcounts(counts), 2)
    assert f == RationalFn((1,), (1, -2))


def test_to_rational_no_fit_and_precision_guard():
    w = witt_vector((1, 2, 4, 8, 16, 1))
    assert to_rational(w, 1) is None
    assert to_rational(w, 3) is None
    with pytest.raises(InsufficientDataError):
        to_rational(w, 4)


def test_to_rational_at_pade_determinacy():
    # four coefficients are exactly enough for a [0/2] form: the
    # window has no verification margin but the unique fit is right
    counts = [3**m + 1 for m in range(1, 5)]
    f = to_rational(from_pointcounts(counts), 2)
    assert f == RationalFn((1,), (1, -4, 3))


def test_to_rational_rejects_nonintegral_fit():
    # the window fits q1 = -3/2, so P = 1 + 13/2 t cannot be cleared
    w = witt_vector((8, 12, 18, 27))
    with pytest.raises(NonIntegralCoefficientsError):
        to_rational(w, 1)


def test_curve_zetas():
    f2 = to_rational(from_pointcounts(E2_PROJ_COUNTS), 2)
    assert f2 == RationalFn((1, 0, 2), (1, -3, 2))
    rep2 = weil_validate(f2, 2)
    assert rep2.passed and rep2.genus == 1

    f3 = to_rational(from_pointcounts(E3_PROJ_COUNTS), 2)
    assert f3 == RationalFn((1, 2, 3), (1, -4, 3))
    rep3 = weil_validate(f3, 3)
    assert rep3.passed and rep3.genus == 1


def test_weil_genus_zero_pass():
    f = to_rational(from_pointcounts([1 + 5**m for m in range(1, 7)]), 2)
    rep = weil_validate(f, 5)
    assert rep.passed and rep.genus == 0


def test_weil_failures():
    failed = {n: ok for n, ok, _ in weil_validate(
        RationalFn((1, 1), (1, -3, 2)), 2).checks}
    assert not failed["even-degree"]
    assert not failed["functional-equation"]

    # symmetric numerator whose inverse roots are 1 and 2, not sqrt(2)
    rep = weil_validate(RationalFn((1, -3, 2), (1, -3, 2)), 2)
    by_name = {n: ok for n, ok, _ in rep.checks}
    assert by_name["functional-equation"]
    assert not by_name["root-modulus"]
    assert rep.genus == 1 and not rep.passed

    rep = weil_validate(RationalFn((1,), (1, -2)), 2)
    assert not {n: ok for n, ok, _ in rep.checks}["denominator"]


def test_expand_and_json_roundtrip():
    f = RationalFn((1, 0, 2), (1, -3, 2))
    series = expand_rational(f, 6)
    assert series[0] == 1
    assert series[1:] == list(E2_PROJ_COUNTS_AS_COEFFS[:6])
    assert rational_from_json(rational_to_json(f)) == f


# coefficients a_m of Z_{E2} = exp(sum N_m t^m / m); fixed here from the
# Witt-vector route so the expansion check does not depend on rat.py
E2_PROJ_COUNTS_AS_COEFFS = tuple(from_pointcounts(E2_PROJ_COUNTS).coeffs)
