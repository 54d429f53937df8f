"""One-point AG codes C(D, rP) on the generalized Suzuki curve.

The Riemann-Roch space L(rP) at the point at infinity is spanned by the monomials
x^a y^b v^c w^d with b < n1 and c, d < q0: their pole orders run through q N + Ap(H, q)
without repeats, so those at most r are exactly H ∩ [0, r]. Evaluating the basis at the
affine rational points (in canonical order) gives the generator matrix.

Matrices are `galois` field arrays, so ranks and products come from numpy's linear
algebra on finite fields.
"""

from __future__ import annotations

import functools
import json
import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING, NamedTuple

import numpy as np

from .config import (
    MATRIX_CELL_BUDGET,
    MAX_WORKERS,
    MESSAGE_CHUNK_SIZE,
    POINT_CHUNK_SIZE,
    default_distance_budget,
)
from .curve import (
    CurveParams,
    cached_points,
    count_points,
    params_make,
    pole_order,
    v_values,
    w_values,
)
from .exceptions import BudgetExceededError, ValidationError
from .file_utils import read_file, write_file
from .general_utils import run_in_parallel, split_range
from .gf2m import FieldElement, FieldSpec
from .semigroup import curve_semigroup

if TYPE_CHECKING:
    from collections.abc import Callable, Iterator

MATRIX_HEADER_PREFIX = "# "


class Monomial(NamedTuple):
    """Exponents of x^a y^b v^c w^d and its pole order at infinity."""

    a: int
    b: int
    c: int
    d: int
    pole: int

    @property
    def exponents(self) -> tuple[int, int, int, int]:
        """The exponent tuple (a, b, c, d)."""
        return self.a, self.b, self.c, self.d


@dataclass(frozen=True)
class MonomialBasis:
    """Basis of L(rP), sorted by pole order."""

    params: CurveParams
    r: int
    monomials: tuple[Monomial, ...]

    def __len__(self) -> int:
        """Dimension l(rP)."""
        return len(self.monomials)

    def __iter__(self) -> Iterator[Monomial]:
        """Iterate over the monomials by increasing pole order."""
        return iter(self.monomials)

    @property
    def pole_orders(self) -> tuple[int, ...]:
        """Pole orders, increasing."""
        return tuple(monomial.pole for monomial in self.monomials)

    def to_list(self) -> list[list[int]]:
        """Rows [a, b, c, d, pole] for serialization."""
        return [list(monomial) for monomial in self.monomials]


def basis_for(params: CurveParams, r: int) -> MonomialBasis:
    """Return the Apéry-bounded monomial basis of L(rP)."""
    if r < 0:
        message = f"pole-order cap {r} is negative"
        raise ValidationError(message, "r >= 0")

    monomials = []
    for b in range(params.n1):
        for c in range(params.q0):
            for d in range(params.q0):
                offset = pole_order(0, b, c, d, params)
                if offset > r:
                    continue
                monomials.extend(
                    Monomial(a, b, c, d, offset + a * params.q)
                    for a in range((r - offset) // params.q + 1)
                )

    monomials.sort(key=lambda monomial: monomial.pole)
    return MonomialBasis(params, r, tuple(monomials))


# ============================
# Codes and generator matrices
# ============================
@functools.lru_cache(maxsize=None)
def affine_point_count(params: CurveParams, ext_degree: int) -> int:
    """N, the number of affine F_{q^i}-rational points (the code length)."""
    return count_points(params, ext_degree) - 1


@dataclass(frozen=True)
class CodeSpec:
    """C(D, rP) with D the sum of all n affine points over F_{q^i}."""

    params: CurveParams
    r: int
    ext_degree: int
    n: int

    @property
    def field_spec(self) -> FieldSpec:
        """The evaluation field F_{q^i}."""
        return self.params.ext_field(self.ext_degree)

    def to_dict(self) -> dict:
        """JSON-ready spec."""
        return {
            "params": self.params.to_dict(),
            "r": self.r,
            "ext_degree": self.ext_degree,
            "n": self.n,
        }


def code_spec_make(params: CurveParams, r: int, ext_degree: int = 1) -> CodeSpec:
    """Validate 0 <= r < N, so that evaluation is an embedding of L(rP)."""
    n = affine_point_count(params, ext_degree)
    if not 0 <= r < n:
        message = f"r = {r} is outside [0, {n}) for N = {n}"
        raise ValidationError(message, "0 <= r < N")
    return CodeSpec(params, r, ext_degree, n)


@dataclass(frozen=True, eq=False)
class GeneratorMatrix:
    """Rows are the basis monomials, columns the affine points in canonical order."""

    spec: CodeSpec
    basis: MonomialBasis
    matrix: FieldElement
    effective_r: int

    @property
    def k(self) -> int:
        """Number of rows."""
        return self.matrix.shape[0]

    @property
    def n(self) -> int:
        """Number of columns."""
        return self.matrix.shape[1]

    @property
    def field(self) -> type[FieldElement]:
        """The galois class of the entries."""
        return type(self.matrix)

    def rank(self) -> int:
        """Rank over F_{q^i}."""
        return int(np.linalg.matrix_rank(self.matrix))

    def to_dict(self) -> dict:
        """JSON-ready summary, without the entries."""
        return {
            **self.spec.to_dict(),
            "effective_r": self.effective_r,
            "k": self.k,
            "rank": self.rank(),
            "designed_distance": designed_distance(self.spec),
            "dual_r": dual_r(self.spec),
            "basis": self.basis.to_list(),
        }


def evaluation_matrix(
    params: CurveParams,
    r: int,
    ext_degree: int = 1,
    max_workers: int = MAX_WORKERS,
) -> tuple[MonomialBasis, FieldElement]:
    """Evaluate the basis of L(rP) at every affine point; any r >= 0 is allowed."""
    basis = basis_for(params, r)
    point_set = cached_points(params, ext_degree)
    n = len(point_set)

    cells = len(basis) * n
    if cells > MATRIX_CELL_BUDGET:
        message = f"a {len(basis)} x {n} matrix has {cells} entries"
        hint = "lower r or the extension degree"
        raise BudgetExceededError(message, MATRIX_CELL_BUDGET, cells, hint)

    def evaluate_columns(bounds: tuple[int, int]) -> np.ndarray:
        lower, upper = bounds
        xs = point_set.xs[lower:upper]
        ys = point_set.ys[lower:upper]
        vs = v_values(params, xs, ys)
        ws = w_values(params, xs, ys)
        rows = [
            xs**monomial.a * ys**monomial.b * vs**monomial.c * ws**monomial.d
            for monomial in basis
        ]
        return np.vstack([row.view(np.ndarray) for row in rows])

    blocks = run_in_parallel(
        evaluate_columns, split_range(0, n, POINT_CHUNK_SIZE), max_workers,
    )
    field = params.ext_field(ext_degree).field
    return basis, field(np.hstack(blocks))


def gen_matrix(spec: CodeSpec, max_workers: int = MAX_WORKERS) -> GeneratorMatrix:
    """Generator matrix of C(D, rP), one row per basis monomial."""
    semigroup = curve_semigroup(spec.params)
    effective_r = semigroup.largest_nongap_at_most(spec.r)
    if effective_r != spec.r:
        logging.info("r = %d is a gap; L(rP) = L(%dP)", spec.r, effective_r)

    basis, matrix = evaluation_matrix(
        spec.params, spec.r, spec.ext_degree, max_workers,
    )
    return GeneratorMatrix(spec, basis, matrix, effective_r)


def dual_r(spec: CodeSpec) -> int:
    """r^⊥ = N + 2g - 2 - r."""
    return spec.n + 2 * spec.params.genus - 2 - spec.r


def designed_distance(spec: CodeSpec) -> int:
    """Goppa designed distance N - r."""
    return spec.n - spec.r


# ============================
# Duality
# ============================
@dataclass(frozen=True)
class DualityReport:
    """Outcome of comparing C(D, rP)^⊥ with C(D, r^⊥ P)."""

    r: int
    r_perp: int
    n: int
    k: int
    k_perp: int
    orthogonal: bool
    all_ones_in_dual: bool

    @property
    def dimensions_add_up(self) -> bool:
        """k(r) + k(r^⊥) = N."""
        return self.k + self.k_perp == self.n

    @property
    def holds(self) -> bool:
        """Both codes are orthogonal with complementary dimensions."""
        return self.orthogonal and self.dimensions_add_up

    def to_dict(self) -> dict:
        """JSON-ready report."""
        return {
            "r": self.r,
            "r_perp": self.r_perp,
            "n": self.n,
            "k": self.k,
            "k_perp": self.k_perp,
            "orthogonal": self.orthogonal,
            "dimensions_add_up": self.dimensions_add_up,
            "all_ones_in_dual": self.all_ones_in_dual,
            "duality_holds": self.holds,
        }


def check_duality(
    params: CurveParams, r: int, max_workers: int = MAX_WORKERS,
) -> DualityReport:
    """Verify G_r G_{r^⊥}^T = 0 and k(r) + k(r^⊥) = N over F_q.

    div(dx) = (2g - 2)P and D is the divisor of x^q + x plus N P, so the dual of
    C(D, rP) is C(D, r^⊥ P) whenever both caps lie in [0, N).
    """
    spec = code_spec_make(params, r)
    r_perp = dual_r(spec)
    if not 0 <= r_perp < spec.n:
        message = f"r^⊥ = {r_perp} is outside [0, {spec.n}) for r = {r}"
        raise ValidationError(message, "0 <= N + 2g - 2 - r < N")

    generator = gen_matrix(spec, max_workers)
    dual = gen_matrix(code_spec_make(params, r_perp), max_workers)
    product = generator.matrix @ dual.matrix.T

    # Constants lie in every L(r^⊥ P), so each row of G_r must sum to zero
    row_sums = generator.matrix.sum(axis=1)

    return DualityReport(
        r=r,
        r_perp=r_perp,
        n=spec.n,
        k=generator.rank(),
        k_perp=dual.rank(),
        orthogonal=not np.any(product.view(np.ndarray)),
        all_ones_in_dual=not np.any(row_sums.view(np.ndarray)),
    )


def code_dimension(params: CurveParams, r: int, ext_degree: int = 1) -> int:
    """dim C(D, rP) = l(r) - l(r - N), with l(m) = |H ∩ [0, m]|."""
    n = affine_point_count(params, ext_degree)
    if ext_degree > 1 and r >= n:
        message = f"over F_{{q^{ext_degree}}}, D is not equivalent to {n}P"
        raise ValidationError(message, "r < N when i > 1")

    semigroup = curve_semigroup(params)
    return semigroup.count_up_to(r) - semigroup.count_up_to(r - n)


def dimension_sequence(params: CurveParams) -> list[int]:
    """Return r_0, ..., r_N with r_i the least r whose code has dimension >= i.

    r_0 = -1 gives the zero code; r_N = N + 2g - 1 is the first cap reaching F_q^N.
    """
    n = affine_point_count(params, 1)
    sequence = [-1]
    r = -1
    for target in range(1, n + 1):
        while code_dimension(params, r, 1) < target:
            r += 1
        sequence.append(r)
    return sequence


def is_subcode(small: GeneratorMatrix, big: GeneratorMatrix) -> bool:
    """Tell whether the row space of `small` lies in the row space of `big`."""
    if small.field is not big.field or small.n != big.n:
        message = "codes differ in field or length"
        raise ValidationError(message, "same F_{q^i} and N")

    rows = [big.matrix.view(np.ndarray), small.matrix.view(np.ndarray)]
    stacked = big.field(np.vstack(rows))
    return int(np.linalg.matrix_rank(stacked)) == big.rank()


# ============================
# Exhaustive minimum distance
# ============================
def min_distance_exhaustive(
    generator: GeneratorMatrix,
    budget: int | None = None,
    max_workers: int = MAX_WORKERS,
    progress: Callable[[int, int], None] | None = None,
) -> int:
    """Minimum Hamming weight over all nonzero codewords, by full enumeration."""
    budget = default_distance_budget() if budget is None else budget
    field = generator.field
    order = field.order
    k = generator.k
    codewords = order**k

    if codewords > budget:
        spec = generator.spec
        message = f"{order}^{k} = {codewords} codewords to scan"
        hint = (
            f"compare against the dual code C(D, {dual_r(spec)}P) with check_duality, "
            "or raise the budget"
        )
        raise BudgetExceededError(message, budget, codewords, hint)

    place_values = order ** np.arange(k, dtype=np.int64)

    def chunk_weight(bounds: tuple[int, int]) -> int:
        indices = np.arange(*bounds, dtype=np.int64)
        messages = field((indices[:, np.newaxis] // place_values) % order)
        words = (messages @ generator.matrix).view(np.ndarray)
        weights = np.count_nonzero(words, axis=1)
        return int(weights.min())

    chunks = split_range(1, codewords, MESSAGE_CHUNK_SIZE)
    return min(run_in_parallel(chunk_weight, chunks, max_workers, progress))


# ============================
# Matrix export
# ============================
def matrix_to_text(generator: GeneratorMatrix) -> str:
    """Render a JSON header line followed by one CSV row of hex entries per row."""
    header = {
        **generator.spec.to_dict(),
        "field": generator.spec.field_spec.to_dict(),
        "effective_r": generator.effective_r,
        "basis": generator.basis.to_list(),
    }
    lines = [MATRIX_HEADER_PREFIX + json.dumps(header, sort_keys=True)]
    lines.extend(
        ",".join(f"{int(entry):x}" for entry in row)
        for row in generator.matrix.view(np.ndarray)
    )
    return "\n".join(lines) + "\n"


def matrix_from_lines(lines: list[str]) -> GeneratorMatrix:
    """Parse the output of `matrix_to_text`."""
    if not lines or not lines[0].startswith(MATRIX_HEADER_PREFIX):
        raise ValidationError("missing JSON header line", "first line is '# {...}'")

    try:
        header = json.loads(lines[0][len(MATRIX_HEADER_PREFIX):])
        params = params_make(header["params"]["s"], header["params"]["h"])
        field_spec = FieldSpec.from_dict(header["field"])
        entries = [[int(cell, 16) for cell in line.split(",")] for line in lines[1:]]
        spec = CodeSpec(params, header["r"], header["ext_degree"], header["n"])
        monomials = tuple(Monomial(*row) for row in header["basis"])
    except (KeyError, TypeError, ValueError) as exc:
        message = f"malformed matrix file: {exc}"
        raise ValidationError(message, "header and hex CSV rows") from exc

    if field_spec != spec.field_spec:
        message = f"field {field_spec} does not match F_{{q^{spec.ext_degree}}}"
        raise ValidationError(message, "field matches (s, ext_degree)")

    shape = (len(monomials), spec.n)
    if len(entries) != shape[0] or any(len(row) != shape[1] for row in entries):
        message = f"matrix body does not have shape {shape}"
        raise ValidationError(message, "one row per basis monomial, N columns")

    basis = MonomialBasis(params, spec.r, monomials)
    matrix = field_spec.field(np.array(entries, dtype=np.int64).reshape(shape))
    return GeneratorMatrix(spec, basis, matrix, header["effective_r"])


def export_matrix(generator: GeneratorMatrix, path: str) -> None:
    """Write the generator matrix to a file."""
    write_file(path, matrix_to_text(generator))


def load_matrix(path: str) -> GeneratorMatrix:
    """Read a generator matrix written by `export_matrix`."""
    return matrix_from_lines(read_file(path))
