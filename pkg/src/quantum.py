"""Quantum code parameters from the one-point codes of the curve.

Two constructions are supported, both of length n = q^2:

- t_point: the single-point form of the general t-point construction, giving
  [[q^2, b - a, d]] with d >= min(q^2 - b, a - 2g + 2) for 2g - 2 < a < b < q^2.
- css: nested duals C^⊥(D, rho_{a+b} P) ⊆ C^⊥(D, rho_a P), giving [[q^2, b, d]] with d
  bounded below by the order bound of both codes.

Every distance here is a lower bound, so the Singleton defect is an upper bound.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import TYPE_CHECKING

from .config import MAX_WORKERS, QUANTUM_CSV_COLUMNS
from .exceptions import SingletonViolationError, ValidationError
from .general_utils import run_in_parallel
from .semigroup import curve_semigroup

if TYPE_CHECKING:
    from collections.abc import Callable

    from .curve import CurveParams


class Construction(str, Enum):
    """Quantum construction tags, as written in the tables."""

    CSS_ORDER_BOUND = "css_order_bound"
    T_POINT = "t_point"

    @classmethod
    def from_cli(cls, name: str) -> Construction:
        """Map the command-line names css and tpoint to tags."""
        aliases = {"css": cls.CSS_ORDER_BOUND, "tpoint": cls.T_POINT}
        if name in aliases:
            return aliases[name]
        try:
            return cls(name)
        except ValueError as exc:
            message = f"unknown construction {name!r}"
            raise ValidationError(message, "construction in {css, tpoint}") from exc


@dataclass(frozen=True)
class QuantumCodeParams:
    """[[n, k, d >= d_lower]]_q with the inputs that produced it.

    For t_point, (a, b) are the two pole-order caps; for css they are a_idx and b_gap.
    """

    n: int
    k: int
    d_lower: int
    construction: Construction
    a: int
    b: int
    details: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self) -> None:
        """Reject negative dimension or distance."""
        if self.k < 0 or self.d_lower < 0:
            message = f"[[{self.n}, {self.k}, {self.d_lower}]] has a negative entry"
            raise ValidationError(message, "k >= 0 and d >= 0")

    @property
    def delta_q_upper(self) -> int:
        """Upper bound on the Singleton defect n - k - 2d + 2."""
        return self.n - self.k - 2 * self.d_lower + 2

    @property
    def relative_defect_upper(self) -> float:
        """Upper bound on delta_Q / n."""
        return self.delta_q_upper / self.n

    def sort_key(self) -> tuple:
        """Order by k, then largest d first."""
        return (self.k, -self.d_lower, self.construction.value, self.a, self.b)

    def to_row(self) -> dict:
        """One table row, columns in CSV order."""
        row = {
            "n": self.n,
            "k": self.k,
            "d_lower": self.d_lower,
            "construction": self.construction.value,
            "a": self.a,
            "b": self.b,
            "delta_q_upper": self.delta_q_upper,
        }
        return {column: row[column] for column in QUANTUM_CSV_COLUMNS}

    def to_dict(self) -> dict:
        """Row plus the intermediate values."""
        return {**self.to_row(), "details": self.details}


def t_point_params(params: CurveParams, a: int, b: int) -> QuantumCodeParams:
    """[[q^2, b - a, min(q^2 - b, a - 2g + 2)]] for 2g - 2 < a < b < q^2."""
    n = params.q**2
    lower = 2 * params.genus - 2

    violations = []
    if a <= lower:
        violations.append(f"a > 2g - 2 = {lower} (got a = {a})")
    if b <= a:
        violations.append(f"a < b (got a = {a}, b = {b})")
    if b >= n:
        violations.append(f"b < q^2 = {n} (got b = {b})")
    if violations:
        raise ValidationError("; ".join(violations), f"{lower} < a < b < {n}")

    return QuantumCodeParams(
        n=n,
        k=b - a,
        d_lower=min(n - b, a - lower),
        construction=Construction.T_POINT,
        a=a,
        b=b,
        details={"goppa_term": n - b, "dual_term": a - lower},
    )


def css_params(params: CurveParams, a_idx: int, b_gap: int) -> QuantumCodeParams:
    """[[q^2, b_gap, d]] from C^⊥(D, rho_{a+b} P) ⊆ C^⊥(D, rho_a P)."""
    if a_idx < 1 or b_gap < 1:
        message = f"a_idx = {a_idx}, b_gap = {b_gap} must both be positive"
        raise ValidationError(message, "a_idx >= 1 and b_gap >= 1")

    semigroup = curve_semigroup(params)
    n = params.q**2
    rho_a = semigroup.rho(a_idx)
    rho_ab = semigroup.rho(a_idx + b_gap)
    if rho_ab >= n:
        message = f"rho_{a_idx + b_gap} = {rho_ab} is not below N = {n}"
        raise ValidationError(message, "rho_{a+b} < N")

    rho_perp = n + 2 * params.genus - 2 - rho_ab
    if rho_perp < 0:
        message = f"dual parameter {rho_perp} is negative"
        raise ValidationError(message, "N + 2g - 2 - rho_{a+b} >= 0")

    # A gap as dual cap gives the same code as the nongap below it
    dual_nongap = semigroup.largest_nongap_at_most(rho_perp)
    dual_index = semigroup.rho_index(dual_nongap)
    d_order_a = semigroup.order_bound(a_idx)
    d_order_dual = semigroup.order_bound(dual_index)

    return QuantumCodeParams(
        n=n,
        k=b_gap,
        d_lower=min(d_order_a, d_order_dual),
        construction=Construction.CSS_ORDER_BOUND,
        a=a_idx,
        b=b_gap,
        details={
            "rho_a": rho_a,
            "rho_a_plus_b": rho_ab,
            "rho_perp": rho_perp,
            "dual_nongap": dual_nongap,
            "dual_index": dual_index,
            "d_order_a": d_order_a,
            "d_order_dual": d_order_dual,
        },
    )


@dataclass(frozen=True)
class SingletonReport:
    """Quantum Singleton accounting for a row; both defects are upper bounds."""

    n: int
    k: int
    d_lower: int
    delta_q_upper: int
    relative_defect_upper: float

    def to_dict(self) -> dict:
        """JSON-ready report."""
        return {
            "n": self.n,
            "k": self.k,
            "d_lower": self.d_lower,
            "delta_q_upper": self.delta_q_upper,
            "relative_defect_upper": self.relative_defect_upper,
            "singleton_holds": True,
        }


def singleton_report(code: QuantumCodeParams) -> SingletonReport:
    """Check 2d + k <= n + 2 and report the defect bounds."""
    if 2 * code.d_lower + code.k > code.n + 2:
        message = (
            f"[[{code.n}, {code.k}, {code.d_lower}]] from {code.construction.value} "
            f"(a = {code.a}, b = {code.b}) breaks the quantum Singleton bound"
        )
        raise SingletonViolationError(message, "2d + k <= n + 2")

    return SingletonReport(
        n=code.n,
        k=code.k,
        d_lower=code.d_lower,
        delta_q_upper=code.delta_q_upper,
        relative_defect_upper=code.relative_defect_upper,
    )


# ============================
# Parameter sweeps
# ============================
@dataclass(frozen=True)
class SweepRanges:
    """Inclusive bounds on the two sweep inputs; None means the full valid range."""

    a_min: int | None = None
    a_max: int | None = None
    b_min: int | None = None
    b_max: int | None = None

    @classmethod
    def single(cls, a: int, b: int) -> SweepRanges:
        """Ranges selecting exactly one (a, b)."""
        return cls(a, a, b, b)

    def clip(self, lower: int, upper: int, *, first: bool) -> range:
        """Intersect the a- (first) or b-bounds with [lower, upper]."""
        low, high = (self.a_min, self.a_max) if first else (self.b_min, self.b_max)
        low = lower if low is None else max(low, lower)
        high = upper if high is None else min(high, upper)
        return range(low, high + 1)


def _t_point_rows(params: CurveParams, ranges: SweepRanges, a: int) -> list:
    b_values = ranges.clip(a + 1, params.q**2 - 1, first=False)
    return [t_point_params(params, a, b) for b in b_values]


def _css_rows(params: CurveParams, ranges: SweepRanges, a_idx: int) -> list:
    # N = q^2 exceeds the conductor, so rho_j < N exactly when j < N - g
    last = params.q**2 - params.genus - 1 - a_idx
    b_values = ranges.clip(1, last, first=False)
    return [css_params(params, a_idx, b_gap) for b_gap in b_values]


def quantum_table(
    params: CurveParams,
    construction: Construction,
    ranges: SweepRanges | None = None,
    max_workers: int = MAX_WORKERS,
    progress: Callable[[int, int], None] | None = None,
) -> list[QuantumCodeParams]:
    """Sweep every valid input pair, deduplicate and sort by (k, -d_lower)."""
    ranges = ranges or SweepRanges()
    n = params.q**2

    if construction is Construction.T_POINT:
        a_values = ranges.clip(2 * params.genus - 1, n - 2, first=True)

        def worker(a: int) -> list[QuantumCodeParams]:
            return _t_point_rows(params, ranges, a)
    else:
        a_values = ranges.clip(1, n - params.genus - 2, first=True)

        def worker(a: int) -> list[QuantumCodeParams]:
            return _css_rows(params, ranges, a)

    results = run_in_parallel(worker, list(a_values), max_workers, progress)
    table = list(dict.fromkeys(row for rows in results for row in rows))
    if not table:
        message = f"no valid {construction.value} inputs in {ranges}"
        raise ValidationError(message, "nonempty valid range")

    for row in table:
        singleton_report(row)

    logging.info("Built %d %s rows", len(table), construction.value)
    return sorted(table, key=QuantumCodeParams.sort_key)


def best_per_dimension(table: list[QuantumCodeParams]) -> list[QuantumCodeParams]:
    """Keep, for every k, the first row with the largest d_lower."""
    best: dict[int, QuantumCodeParams] = {}
    for row in sorted(table, key=QuantumCodeParams.sort_key):
        best.setdefault(row.k, row)
    return [best[k] for k in sorted(best)]
