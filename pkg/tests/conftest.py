"""Shared fixtures: the q = 8 curve, its semigroup and its rational points."""

from __future__ import annotations

import pytest

from src.curve import CurveParams, PointSet, cached_points, params_make
from src.semigroup import NumericalSemigroup, curve_semigroup


@pytest.fixture(scope="session")
def params8() -> CurveParams:
    return params_make(3, 1)


@pytest.fixture(scope="session")
def params16() -> CurveParams:
    return params_make(4, 1)


@pytest.fixture(scope="session")
def semigroup8(params8: CurveParams) -> NumericalSemigroup:
    return curve_semigroup(params8)


@pytest.fixture(scope="session")
def points8(params8: CurveParams) -> PointSet:
    return cached_points(params8, 1)


@pytest.fixture
def in_tmp_dir(tmp_path, monkeypatch):
    """Run in a scratch directory so the session log does not leak."""
    monkeypatch.chdir(tmp_path)
    return tmp_path
