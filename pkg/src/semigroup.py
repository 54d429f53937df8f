"""Numerical semigroups: membership, gaps, Apéry sets, symmetry and the order bound.

A semigroup is given by generators with gcd 1. Membership is decided once, by dynamic
programming up to the conductor plus the largest generator; past the conductor every
integer is a member, so the table never has to grow. The Feng-Rao function and the
order bound are computed from that table.
"""

from __future__ import annotations

import bisect
import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import TYPE_CHECKING

import numpy as np

from .exceptions import SuzukiError, ValidationError

if TYPE_CHECKING:
    from .curve import CurveParams


@dataclass(frozen=True)
class AperySet:
    """Least member of S in every residue class modulo the base."""

    base: int
    elements: tuple[int, ...]

    def __len__(self) -> int:
        """Number of elements, equal to the base."""
        return len(self.elements)

    def genus_from_identity(self) -> Fraction:
        """Genus as (1/s) sum(x) - (s-1)/2."""
        return Fraction(sum(self.elements), self.base) - Fraction(self.base - 1, 2)

    def conductor_from_identity(self) -> int:
        """Conductor as 1 + max(x) - s."""
        return 1 + max(self.elements) - self.base


class NumericalSemigroup:
    """Semigroup of nonnegative integers generated by `generators`.

    Immutable once built: genus, conductor, multiplicity and the membership table are
    computed in the constructor, and the derived tables are cached on first use.
    """

    def __init__(self, generators: tuple[int, ...]) -> None:
        """Decide membership up to the conductor plus the largest generator."""
        self.generators = generators
        self.multiplicity = generators[0]

        member, conductor = _membership_table(generators)
        self.conductor = conductor
        self._member = member
        self._small_nongaps = tuple(
            int(n) for n in np.flatnonzero(member[:conductor])
        )
        self.genus = conductor - len(self._small_nongaps)

    def __repr__(self) -> str:
        """Show the generators."""
        return f"NumericalSemigroup({', '.join(map(str, self.generators))})"

    def __contains__(self, n: int) -> bool:
        """Membership test."""
        if n < 0:
            return False
        if n >= len(self._member):
            return True
        return bool(self._member[n])

    @cached_property
    def gaps(self) -> tuple[int, ...]:
        """All gaps in increasing order."""
        return tuple(int(n) for n in np.flatnonzero(~self._member[: self.conductor]))

    def indicator(self, limit: int) -> np.ndarray:
        """Boolean membership vector for 0..limit."""
        indicator = np.ones(limit + 1, dtype=bool)
        known = min(limit + 1, len(self._member))
        indicator[:known] = self._member[:known]
        return indicator

    def count_up_to(self, m: int) -> int:
        """Return |S ∩ [0, m]|, which is 0 for negative m."""
        if m < 0:
            return 0
        if m >= self.conductor:
            return m - self.genus + 1
        return bisect.bisect_right(self._small_nongaps, m)

    def largest_nongap_at_most(self, n: int) -> int:
        """Return the largest member not exceeding n (n >= 0)."""
        if n < 0:
            message = f"no member of the semigroup is at most {n}"
            raise ValidationError(message, "n >= 0")
        if n >= self.conductor:
            return n
        return self._small_nongaps[bisect.bisect_right(self._small_nongaps, n) - 1]

    def rho(self, i: int) -> int:
        """Return the i-th nongap, counting rho_0 = 0."""
        if i < 0:
            message = f"nongap index {i} is negative"
            raise ValidationError(message, "i >= 0")
        if i < len(self._small_nongaps):
            return self._small_nongaps[i]
        return i + self.genus

    def rho_index(self, n: int) -> int:
        """Return i with rho(i) = n; n must be a member."""
        if n not in self:
            message = f"{n} is a gap of {self!r}"
            raise ValidationError(message, "n is a nongap")
        if n >= self.conductor:
            return n - self.genus
        return bisect.bisect_left(self._small_nongaps, n)

    def apery_set(self, s: int) -> AperySet:
        """Return Ap(S, s) = {x in S : x - s not in S}."""
        if s <= 0 or s not in self:
            message = f"{s} is not a positive member of {self!r}"
            raise ValidationError(message, "s in S, s > 0")

        # The least member of each class is below conductor + s
        least: dict[int, int] = {}
        for n in np.flatnonzero(self.indicator(self.conductor + s - 1)):
            least.setdefault(int(n) % s, int(n))

        return AperySet(base=s, elements=tuple(sorted(least.values())))

    def is_symmetric(self) -> bool:
        """Tell whether c(S) = 2 g(S), cross-checked against the gap pairing."""
        by_conductor = self.conductor == 2 * self.genus

        top = 2 * self.genus - 1
        by_pairing = all(
            (x in self) != ((top - x) in self) for x in range(top + 1)
        )

        if by_conductor != by_pairing:
            message = f"symmetry tests disagree for {self!r}"
            raise SuzukiError(message, "c(S) = 2g(S) iff x in S <=> 2g-1-x not in S")

        return by_conductor

    def feng_rao_nu(self, ell: int) -> int:
        """Count ordered pairs (i, j) with rho_i + rho_j = rho_{ell+1}."""
        if ell < 0:
            message = f"Feng-Rao index {ell} is negative"
            raise ValidationError(message, "ell >= 0")

        target = self.rho(ell + 1)
        indicator = self.indicator(target)
        return int(np.count_nonzero(indicator & indicator[::-1]))

    @cached_property
    def _order_bound_table(self) -> np.ndarray:
        """Suffix minima of nu_m for 0 <= m <= M, with rho_{M+1} = 2c."""
        # Past rho_{m+1} = 2c, nu_m = rho_{m+1} - 2g + 1 is strictly increasing
        limit = 2 * self.conductor
        last = self.rho_index(limit) - 1
        if last < 0:
            return np.zeros(0, dtype=np.int64)

        indicator = self.indicator(limit).astype(np.int64)
        pair_counts = np.convolve(indicator, indicator)[: limit + 1]
        targets = np.array([self.rho(m + 1) for m in range(last + 1)])
        nus = pair_counts[targets]
        return np.minimum.accumulate(nus[::-1])[::-1]

    def order_bound(self, ell: int) -> int:
        """Return d_ORD = min{nu_m : m >= ell}."""
        if ell < 0:
            message = f"order-bound index {ell} is negative"
            raise ValidationError(message, "ell >= 0")

        table = self._order_bound_table
        if ell < len(table):
            return int(table[ell])
        return self.feng_rao_nu(ell)

    def to_dict(self) -> dict:
        """JSON-ready summary of the semigroup."""
        return {
            "generators": list(self.generators),
            "genus": self.genus,
            "conductor": self.conductor,
            "multiplicity": self.multiplicity,
            "symmetric": self.is_symmetric(),
            "gaps": list(self.gaps),
            "apery_set": list(self.apery_set(self.multiplicity).elements),
        }


def _membership_table(generators: tuple[int, ...]) -> tuple[np.ndarray, int]:
    """Return the membership table up to c + max(gens), and the conductor c."""
    multiplicity = generators[0]
    member = [True]
    run = 1

    # A run of `multiplicity` consecutive members means every larger n is a member
    while run < multiplicity:
        n = len(member)
        is_member = any(g <= n and member[n - g] for g in generators)
        member.append(is_member)
        run = run + 1 if is_member else 0

    conductor = len(member) - multiplicity
    member.extend([True] * generators[-1])
    return np.array(member, dtype=bool), conductor


def sg_from_generators(generators: list[int] | tuple[int, ...]) -> NumericalSemigroup:
    """Build the numerical semigroup generated by the given positive integers."""
    gens = tuple(sorted(set(generators)))
    if not gens:
        raise ValidationError("no generators given", "gens nonempty")

    if gens[0] <= 0:
        message = f"generators must be positive, got {gens[0]}"
        raise ValidationError(message, "every generator > 0")

    if math.gcd(*gens) != 1:
        message = f"gcd{gens} = {math.gcd(*gens)}: not a numerical semigroup"
        raise ValidationError(message, "gcd(gens) = 1")

    return NumericalSemigroup(gens)


def curve_generators(params: CurveParams) -> tuple[int, int, int, int]:
    """Pole orders of x, y, v and w at the point at infinity."""
    q, q0, qbar, n1 = params.q, params.q0, params.qbar, params.n1
    return (q, q + q0, q + qbar, q * (n1 - 1) + qbar + 1)


@functools.lru_cache(maxsize=None)
def curve_semigroup(params: CurveParams) -> NumericalSemigroup:
    """Weierstrass semigroup <q, q+q0, q+qbar, q(n1-1)+qbar+1> at infinity."""
    return sg_from_generators(curve_generators(params))


def explicit_apery_set(params: CurveParams) -> frozenset[int]:
    """Closed-form Apéry set of the curve semigroup with respect to q.

    Every t1 (q+q0) + t2 (q+qbar) + t3 (q(n1-1)+qbar+1) with t1 < n1 and t2, t3 < q0.
    """
    _, y_pole, v_pole, w_pole = curve_generators(params)
    return frozenset(
        t1 * y_pole + t2 * v_pole + t3 * w_pole
        for t1 in range(params.n1)
        for t2 in range(params.q0)
        for t3 in range(params.q0)
    )
