"""Tests for numerical semigroups and the curve's Weierstrass semigroup."""

from __future__ import annotations

from fractions import Fraction

import pytest

from src.curve import params_make
from src.exceptions import ValidationError
from src.semigroup import (
    curve_generators,
    curve_semigroup,
    explicit_apery_set,
    sg_from_generators,
)

# Every (s, h) with 2h < s and q <= 64
VALID_PARAMS = [(3, 1), (4, 1), (5, 1), (5, 2), (6, 1), (6, 2)]

GAPS_8 = (1, 2, 3, 4, 5, 6, 7, 9, 11, 14, 15, 17, 19, 27)


def test_q8_semigroup(semigroup8):
    assert semigroup8.generators == (8, 10, 12, 13)
    assert semigroup8.genus == 14
    assert semigroup8.conductor == 28
    assert semigroup8.multiplicity == 8
    assert semigroup8.gaps == GAPS_8
    assert semigroup8.is_symmetric()


def test_membership(semigroup8):
    assert 0 in semigroup8
    assert 27 not in semigroup8
    assert 28 in semigroup8
    assert 10**6 in semigroup8
    assert -8 not in semigroup8


@pytest.mark.parametrize(
    ("i", "rho"),
    [(0, 0), (1, 8), (2, 10), (3, 12), (4, 13), (13, 26), (14, 28), (50, 64)],
)
def test_rho_and_index(semigroup8, i, rho):
    assert semigroup8.rho(i) == rho
    assert semigroup8.rho_index(rho) == i


def test_rho_index_of_gap_raises(semigroup8):
    with pytest.raises(ValidationError):
        semigroup8.rho_index(27)


@pytest.mark.parametrize(
    ("m", "count"), [(-1, 0), (0, 1), (7, 1), (13, 5), (27, 14), (63, 50)],
)
def test_count_up_to(semigroup8, m, count):
    assert semigroup8.count_up_to(m) == count


@pytest.mark.parametrize(
    ("n", "nongap"), [(0, 0), (9, 8), (19, 18), (27, 26), (80, 80)],
)
def test_largest_nongap_at_most(semigroup8, n, nongap):
    assert semigroup8.largest_nongap_at_most(n) == nongap


def test_apery_set_of_q8(semigroup8):
    apery = semigroup8.apery_set(8)
    assert apery.elements == (0, 10, 12, 13, 22, 23, 25, 35)
    assert apery.genus_from_identity() == Fraction(14)
    assert apery.conductor_from_identity() == 28


def test_apery_set_needs_positive_member(semigroup8):
    with pytest.raises(ValidationError):
        semigroup8.apery_set(9)
    with pytest.raises(ValidationError):
        semigroup8.apery_set(0)


@pytest.mark.parametrize(("s", "h"), VALID_PARAMS)
def test_gap_count_matches_genus_formula(s, h):
    params = params_make(s, h)
    assert curve_semigroup(params).genus == params.qbar * (params.q - 1) // 2


@pytest.mark.parametrize("s", [3, 4, 5])
def test_apery_set_matches_closed_form(s):
    params = params_make(s, 1)
    apery = curve_semigroup(params).apery_set(params.q)
    assert set(apery.elements) == explicit_apery_set(params)
    assert len(explicit_apery_set(params)) == params.q


@pytest.mark.parametrize(("s", "h"), VALID_PARAMS)
def test_curve_semigroup_is_symmetric(s, h):
    params = params_make(s, h)
    semigroup = curve_semigroup(params)
    assert semigroup.conductor == 2 * semigroup.genus
    assert semigroup.is_symmetric()


def test_curve_generators_are_pole_orders():
    assert curve_generators(params_make(5, 2)) == (32, 36, 40, 41)


@pytest.mark.parametrize(
    ("generators", "symmetric"),
    [((3, 5), True), ((3, 5, 7), False), ((4, 6, 9), True), ((5, 6, 7, 8, 9), False)],
)
def test_symmetry_of_small_semigroups(generators, symmetric):
    assert sg_from_generators(generators).is_symmetric() is symmetric


def test_trivial_semigroup():
    semigroup = sg_from_generators([1])
    assert semigroup.genus == 0
    assert semigroup.conductor == 0
    assert semigroup.gaps == ()
    assert semigroup.is_symmetric()
    assert semigroup.order_bound(5) == 7


@pytest.mark.parametrize("generators", [[], [4, 6], [0, 3], [-2, 3]])
def test_invalid_generators_raise(generators):
    with pytest.raises(ValidationError):
        sg_from_generators(generators)


def test_feng_rao_nu_by_brute_force(semigroup8):
    nongaps = [semigroup8.rho(i) for i in range(120)]
    for ell in range(60):
        target = semigroup8.rho(ell + 1)
        pairs = sum(1 for a in nongaps for b in nongaps if a + b == target)
        assert semigroup8.feng_rao_nu(ell) == pairs


def test_order_bound_values(semigroup8):
    assert semigroup8.feng_rao_nu(0) == 2
    assert semigroup8.order_bound(0) == 2
    # rho_67 = 81 lies past 2c = 56, where nu = rho - 2g + 1
    assert semigroup8.order_bound(66) == 54


def test_order_bound_is_nondecreasing(semigroup8):
    bounds = [semigroup8.order_bound(ell) for ell in range(100)]
    assert bounds == sorted(bounds)


def test_order_bound_dominates_goppa_dual_bound(semigroup8):
    # C^⊥(D, rho_ell P) has Goppa-type bound rho_ell - (2g - 2)
    two_g_minus_2 = 2 * semigroup8.genus - 2
    for ell in range(100):
        rho = semigroup8.rho(ell)
        if rho > two_g_minus_2:
            assert semigroup8.order_bound(ell) >= rho - two_g_minus_2


def test_negative_indices_raise(semigroup8):
    for method in (semigroup8.rho, semigroup8.feng_rao_nu, semigroup8.order_bound):
        with pytest.raises(ValidationError):
            method(-1)


def test_to_dict(semigroup8):
    summary = semigroup8.to_dict()
    assert summary["genus"] == 14
    assert summary["apery_set"] == [0, 10, 12, 13, 22, 23, 25, 35]
    assert summary["symmetric"] is True
