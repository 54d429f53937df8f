"""Tests for curve parameters, rational points, automorphisms and Castle checks."""

from __future__ import annotations

import itertools

import numpy as np
import pytest

from src.curve import (
    AffinePoint,
    Alpha,
    Beta,
    Delta,
    apply_automorphism,
    apply_to_points,
    castle_check,
    compose,
    count_points,
    curve_equation_holds,
    equivalent_params,
    eval_v,
    eval_w,
    fiber,
    local_parameter_valuation,
    params_make,
    point_statistics,
    points,
    pole_order,
    solve_additive,
    v_identity_holds,
    w_identity_holds,
    weak_castle_witness,
)
from src.exceptions import BudgetExceededError, ValidationError
from src.gf2m import embed, field_make


def test_q8_parameters(params8):
    assert (params8.q, params8.q0, params8.qbar, params8.n1) == (8, 2, 4, 2)
    assert params8.genus == 14
    assert params8.to_dict()["genus"] == 14


@pytest.mark.parametrize(
    ("s", "h", "reason"),
    [(2, 1, "reducible"), (4, 2, "reducible"), (3, 2, "birational"), (3, 0, "q0")],
)
def test_invalid_parameters_raise(s, h, reason):
    with pytest.raises(ValidationError) as info:
        params_make(s, h)
    assert reason in info.value.reason


def test_equivalent_params():
    assert equivalent_params(5, 3) == params_make(5, 2)
    assert equivalent_params(7, 2) == params_make(7, 2)
    with pytest.raises(ValidationError):
        equivalent_params(4, 2)


@pytest.mark.parametrize(
    ("s", "ext", "count"),
    [
        (3, 1, 65),
        (4, 1, 257),
        (4, 2, 257),
        (4, 3, 257),
        (4, 4, 65537),
        (5, 1, 1025),
        (5, 2, 1025),
        (5, 3, 96257),
    ],
)
def test_point_counts(s, ext, count):
    assert count_points(params_make(s, 1), ext) == count


def test_point_count_with_one_worker_matches(params16):
    assert count_points(params16, 2, max_workers=1) == count_points(params16, 2)


def test_points_over_base_field(params8, points8):
    assert len(points8) == 64
    assert points8.count_with_infinity == 65
    assert np.all(curve_equation_holds(params8, points8.xs, points8.ys))

    keys = [point.key() for point in points8]
    assert keys == sorted(keys)
    assert len(set(keys)) == 64
    assert next(points8.hex_rows()) == ("0", "0")


@pytest.mark.parametrize("ext", [2, 3])
def test_enumeration_agrees_with_count(params8, ext):
    point_set = points(params8, ext)
    assert point_set.count_with_infinity == count_points(params8, ext)
    assert np.all(curve_equation_holds(params8, point_set.xs, point_set.ys))


def test_progress_hook_reaches_total(params16):
    calls = []
    count_points(params16, 4, progress=lambda done, total: calls.append((done, total)))
    assert calls[-1][0] == calls[-1][1]


def test_budgets(params8):
    with pytest.raises(BudgetExceededError) as info:
        points(params8, 9)
    assert "count-only" in info.value.hint
    with pytest.raises(BudgetExceededError):
        count_points(params8, 11)
    with pytest.raises(ValidationError):
        count_points(params8, 0)


def test_additive_equation_over_quadratic_extension(params8):
    spec = field_make(6)
    solvable = 0
    for c in spec.elements():
        solutions = solve_additive(c, params8)
        if solutions:
            solvable += 1
            assert len(solutions) == 8
            assert all(y**8 + y == c for y in solutions)
    # The image of y -> y^q + y has index q
    assert solvable == 8


def test_additive_equation_needs_containing_field(params8):
    with pytest.raises(ValidationError):
        solve_additive(field_make(4).element(1), params8)


@pytest.mark.parametrize("ext", [1, 2])
def test_fibres_over_base_field(params8, ext):
    spec = params8.ext_field(ext)
    for a in field_make(3).elements():
        image = embed(a, params8.base_field(), spec)
        assert len(fiber(params8, image, ext)) == 8


def test_fiber_rejects_foreign_element(params8):
    with pytest.raises(ValidationError):
        fiber(params8, field_make(4).element(1), 1)


@pytest.mark.parametrize(("s", "ext"), [(3, 1), (3, 2), (4, 1)])
def test_v_and_w_identities(s, ext):
    params = params_make(s, 1)
    point_set = points(params, ext)
    assert np.all(v_identity_holds(params, point_set.xs, point_set.ys))
    assert np.all(w_identity_holds(params, point_set.xs, point_set.ys))


def test_scalar_v_and_w_agree_with_arrays(params8, points8):
    for point in itertools.islice(points8, 10):
        assert eval_v(point, params8) ** 8 + eval_v(point, params8) == (
            point.x**4 * (point.x**8 + point.x)
        )
        assert eval_w(point, params8) ** 2 == point.y * point.x**2 + eval_v(
            point, params8,
        )


def test_pole_orders(params8):
    assert [pole_order(*e, params8) for e in np.eye(4, dtype=int).tolist()] == [
        8, 10, 12, 13,
    ]
    assert pole_order(1, 1, 1, 1, params8) == 43
    with pytest.raises(ValidationError):
        pole_order(-1, 0, 0, 0, params8)


@pytest.mark.parametrize(("s", "h"), [(3, 1), (4, 1), (5, 2), (7, 3)])
def test_local_parameter(s, h):
    assert local_parameter_valuation(params_make(s, h)) == 1


def _keys(xs, ys):
    return sorted(zip(xs.view(np.ndarray).tolist(), ys.view(np.ndarray).tolist()))


def test_automorphisms_permute_points(params8, points8):
    base = params8.base_field().elements()
    original = _keys(points8.xs, points8.ys)
    maps = [Alpha(b, c) for b in base for c in base[:3]]
    maps += [Beta(d) for d in base[1:]] + [Delta(a) for a in base]

    for automorphism in maps:
        xs, ys = apply_to_points(automorphism, points8)
        assert np.all(curve_equation_holds(params8, xs, ys))
        assert _keys(xs, ys) == original


def test_automorphisms_over_extension(params8):
    point_set = points(params8, 2)
    base = params8.base_field()
    alpha = Alpha(base.element(3), base.element(5))
    automorphism = compose(alpha, Beta(base.element(6)))
    xs, ys = apply_to_points(automorphism, point_set)
    assert np.all(curve_equation_holds(params8, xs, ys))


def test_group_laws(params8, points8):
    base = params8.base_field().elements()
    xs, ys = points8.xs, points8.ys

    def same(first, second):
        one = first.apply(params8, xs, ys)
        two = second.apply(params8, xs, ys)
        return np.all(one[0] == two[0]) and np.all(one[1] == two[1])

    for b, c in itertools.product(base, base):
        alpha = Alpha(b, c)
        assert same(compose(alpha, alpha), Delta(b**3))
        assert same(compose(Delta(b), Delta(c)), Delta(b + c))

    for d, e in itertools.product(base[1:], base[1:]):
        assert same(compose(Beta(d), Beta(e)), Beta(d * e))


def test_single_point_image(params8, points8):
    point = next(iter(points8))
    one = params8.base_field().element(1)
    image = apply_automorphism(Delta(one), point, params8)
    shifted = AffinePoint(point.x, point.y + one, 1)
    assert image == shifted
    assert image != point
    assert len({image, shifted}) == 1


def test_automorphism_constants_must_lie_in_base_field(params8, points8):
    with pytest.raises(ValidationError):
        Beta(params8.base_field().element(0))
    with pytest.raises(ValidationError):
        apply_to_points(Delta(field_make(6).element(9)), points8)


@pytest.mark.parametrize(
    ("s", "h"), [(3, 1), (4, 1), (5, 1), (5, 2), (6, 1), (6, 2)],
)
def test_castle_property(s, h):
    params = params_make(s, h)
    report = castle_check(params)
    assert report.symmetric
    assert report.rational_points == params.q**2 + 1
    assert report.c2
    assert report.castle
    assert report.lewittes_optimal
    assert report.to_dict()["castle"] is True


def test_castle_fails_over_extensions(params8):
    report = castle_check(params8, 2)
    assert report.symmetric
    assert not report.c2


@pytest.mark.parametrize(("s", "ext"), list(itertools.product([3, 4], [1, 2, 3])))
def test_weak_castle_fibres(s, ext):
    params = params_make(s, 1)
    report = weak_castle_witness(params, ext)
    assert report.pole_order == params.q
    assert len(report.fibre_sizes) == params.q
    assert set(report.fibre_sizes.values()) == {params.q}
    assert report.fibres_on_curve
    assert report.holds


def test_point_statistics():
    statistics = point_statistics(params_make(5, 1), 3).to_dict()
    assert statistics["rational_points"] == 96257
    assert statistics["rational_points"] <= statistics["hasse_weil_bound"]
    assert statistics["many_points"] is True


def test_points_per_genus_exceeds_2q0(params8):
    statistics = point_statistics(params8, 1).to_dict()
    assert statistics["exceeds_2q0_per_genus"] is True


@pytest.mark.parametrize(
    ("s", "ext", "k"), [(3, 1, 2), (3, 1, 3), (4, 1, 2), (3, 2, 2)],
)
def test_points_persist_in_extensions(s, ext, k):
    params = params_make(s, 1)
    small, large = params.ext_field(ext), params.ext_field(ext * k)
    point_set = points(params, ext)
    xs, ys = embed(point_set.xs, small, large), embed(point_set.ys, small, large)
    assert np.all(curve_equation_holds(params, xs, ys))

    large_keys = {point.key() for point in points(params, ext * k)}
    embedded = zip(xs.view(np.ndarray).tolist(), ys.view(np.ndarray).tolist())
    assert set(embedded) <= large_keys
    assert count_points(params, ext) <= count_points(params, ext * k)


def test_empty_fibres_over_quadratic_extension(params16):
    spec = params16.ext_field(2)
    sizes = {int(a): len(fiber(params16, a, 2)) for a in spec.elements()}
    subfield = embed(params16.base_field().elements(), params16.base_field(), spec)
    inside = {int(a) for a in subfield}

    assert {sizes[a] for a in inside} == {16}
    outside = [a for a in sizes if a not in inside]
    assert sum(1 for a in outside if sizes[a] == 0) == 240
