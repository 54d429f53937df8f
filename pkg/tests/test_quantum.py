"""Tests for the t-point and CSS quantum parameter tables."""

from __future__ import annotations

import pytest

from src.agcode import code_spec_make, gen_matrix, is_subcode
from src.config import QUANTUM_CSV_COLUMNS
from src.exceptions import SingletonViolationError, ValidationError
from src.quantum import (
    Construction,
    QuantumCodeParams,
    SweepRanges,
    best_per_dimension,
    css_params,
    quantum_table,
    singleton_report,
    t_point_params,
)


@pytest.fixture(scope="module")
def t_point_table8(params8):
    return quantum_table(params8, Construction.T_POINT)


@pytest.fixture(scope="module")
def css_table8(params8):
    return quantum_table(params8, Construction.CSS_ORDER_BOUND)


def test_t_point_single_row(params8):
    code = t_point_params(params8, 40, 50)
    assert (code.n, code.k, code.d_lower) == (64, 10, 14)
    assert code.delta_q_upper == 28
    assert code.relative_defect_upper == pytest.approx(0.4375)
    assert code.details == {"goppa_term": 14, "dual_term": 14}


def test_t_point_smallest_pair(params8):
    code = t_point_params(params8, 27, 28)
    assert (code.k, code.d_lower) == (1, 1)


@pytest.mark.parametrize(("a", "b"), [(26, 30), (40, 40), (50, 45), (40, 64)])
def test_t_point_rejects_invalid_pairs(params8, a, b):
    with pytest.raises(ValidationError):
        t_point_params(params8, a, b)


def test_t_point_reports_every_violation(params8):
    with pytest.raises(ValidationError) as info:
        t_point_params(params8, 26, 20)
    assert "2g - 2 = 26" in info.value.reason
    assert "; " in info.value.reason


def test_css_single_row(params8, semigroup8):
    code = css_params(params8, 1, 1)
    assert code.n == 64
    assert code.k == 1
    assert code.details["rho_a"] == 8
    assert code.details["rho_a_plus_b"] == 10
    assert code.details["rho_perp"] == 80
    assert code.details["dual_index"] == 66
    assert code.details["d_order_dual"] == 54
    assert code.d_lower == min(code.details["d_order_a"], 54)
    assert code.d_lower == semigroup8.order_bound(1)


@pytest.mark.parametrize(("a_idx", "b_gap"), [(1, 5), (10, 20), (30, 19)])
def test_css_dimension_counts_nongaps(params8, semigroup8, a_idx, b_gap):
    code = css_params(params8, a_idx, b_gap)
    rho_a, rho_ab = code.details["rho_a"], code.details["rho_a_plus_b"]
    assert code.k == semigroup8.count_up_to(rho_ab) - semigroup8.count_up_to(rho_a)


def test_css_gap_dual_cap_uses_nongap_below(params8):
    # rho_49 = 63 gives rho_perp = 27, a gap
    code = css_params(params8, 1, 48)
    assert code.details["rho_perp"] == 27
    assert code.details["dual_nongap"] == 26


@pytest.mark.parametrize(("a_idx", "b_gap"), [(0, 3), (3, 0), (1, 49), (40, 40)])
def test_css_rejects_invalid_inputs(params8, a_idx, b_gap):
    with pytest.raises(ValidationError):
        css_params(params8, a_idx, b_gap)


def test_singleton_report_for_trivial_code():
    code = QuantumCodeParams(4, 4, 1, Construction.T_POINT, 0, 4)
    report = singleton_report(code)
    assert report.delta_q_upper == 0
    assert report.to_dict()["singleton_holds"] is True


def test_singleton_violation_raises():
    code = QuantumCodeParams(4, 2, 3, Construction.CSS_ORDER_BOUND, 1, 2)
    with pytest.raises(SingletonViolationError):
        singleton_report(code)


def test_negative_parameters_raise():
    with pytest.raises(ValidationError):
        QuantumCodeParams(64, -1, 3, Construction.T_POINT, 40, 39)


def test_construction_names():
    assert Construction.from_cli("css") is Construction.CSS_ORDER_BOUND
    assert Construction.from_cli("tpoint") is Construction.T_POINT
    assert Construction.from_cli("t_point") is Construction.T_POINT
    with pytest.raises(ValidationError):
        Construction.from_cli("steane")


def test_t_point_table_q8(t_point_table8):
    assert len(t_point_table8) == 666
    keys = [row.sort_key() for row in t_point_table8]
    assert keys == sorted(keys)
    best_k10 = next(row for row in t_point_table8 if row.k == 10)
    assert best_k10.d_lower == 14


@pytest.mark.slow
def test_t_point_table_q16(params16):
    assert len(quantum_table(params16, Construction.T_POINT)) == 9316


def test_tables_respect_singleton(t_point_table8, css_table8):
    for row in (*t_point_table8, *css_table8):
        assert 2 * row.d_lower + row.k <= row.n + 2
        assert row.delta_q_upper >= 0


def test_css_table_q8_covers_every_pair(css_table8):
    # a_idx + b_gap ranges over 2..49
    assert len(css_table8) == 48 * 49 // 2
    assert {row.construction for row in css_table8} == {Construction.CSS_ORDER_BOUND}


@pytest.mark.slow
def test_css_table_q16_respects_singleton(params16):
    for row in quantum_table(params16, Construction.CSS_ORDER_BOUND):
        assert 2 * row.d_lower + row.k <= row.n + 2


def test_best_distance_decreases_with_dimension(t_point_table8):
    best = best_per_dimension(t_point_table8)
    assert [row.k for row in best] == list(range(1, 37))
    distances = [row.d_lower for row in best]
    assert distances == sorted(distances, reverse=True)


def test_parallel_and_sequential_tables_agree(params8, t_point_table8):
    assert quantum_table(params8, Construction.T_POINT, max_workers=1) == (
        t_point_table8
    )


def test_sweep_ranges(params8):
    table = quantum_table(
        params8, Construction.T_POINT, SweepRanges(a_min=40, a_max=41, b_max=45),
    )
    assert [(row.a, row.b) for row in sorted(table, key=lambda r: (r.a, r.b))] == [
        (40, 41), (40, 42), (40, 43), (40, 44), (40, 45),
        (41, 42), (41, 43), (41, 44), (41, 45),
    ]
    single = quantum_table(params8, Construction.T_POINT, SweepRanges.single(40, 50))
    assert single == [t_point_params(params8, 40, 50)]


def test_empty_sweep_raises(params8):
    with pytest.raises(ValidationError):
        quantum_table(params8, Construction.T_POINT, SweepRanges(a_min=70))


@pytest.mark.parametrize(("a", "b"), [(27, 40), (40, 50), (50, 63)])
def test_t_point_codes_are_nested(params8, a, b):
    small = gen_matrix(code_spec_make(params8, a))
    large = gen_matrix(code_spec_make(params8, b))
    assert is_subcode(small, large)
    assert large.rank() - small.rank() == t_point_params(params8, a, b).k


def test_row_follows_csv_columns(params8):
    code = t_point_params(params8, 40, 50)
    assert tuple(code.to_row()) == QUANTUM_CSV_COLUMNS
    assert code.to_dict()["details"] == code.details
