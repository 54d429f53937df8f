"""Arithmetic in GF(2^m) and the relations between its subfields.

A `FieldSpec` pins a field down by its extension degree and an explicit irreducible
modulus, so that coordinates are reproducible across runs. Elements are `galois`
field arrays: a scalar element is a 0-d array, and the curve and code modules work on
whole arrays of elements at once.

Subfields are related through explicit maps: `embed` sends GF(2^k) into GF(2^m) by
mapping the class of x to a root of the subfield modulus, and `trace_to` sums the
Frobenius conjugates of an element over a subfield.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

import galois
import numpy as np

from .config import EMBED_MAX_SUBFIELD_DEGREE, FIELD_MAX_DEGREE
from .exceptions import FieldError

FieldElement = galois.FieldArray


@dataclass(frozen=True)
class FieldSpec:
    """GF(2^m) with an explicit degree-m irreducible modulus over GF(2).

    The modulus is encoded as an (m+1)-bit integer, bit j holding the coefficient of
    x^j. Element coordinates are m-bit integers in the polynomial basis.
    """

    m: int
    modulus: int

    @property
    def order(self) -> int:
        """Number of elements of the field."""
        return 1 << self.m

    @property
    def field(self) -> type[galois.FieldArray]:
        """The galois array class implementing this field."""
        return _galois_field(self.m, self.modulus)

    def element(self, coords: int) -> FieldElement:
        """Return the element with the given polynomial-basis coordinates."""
        if not 0 <= coords < self.order:
            message = f"coordinates {coords:#x} do not fit GF(2^{self.m})"
            raise FieldError(message, f"0 <= coords < 2^{self.m}")
        return self.field(coords)

    def elements(self) -> FieldElement:
        """Return every element of the field, ordered by coordinate integer."""
        return self.field.elements

    def to_dict(self) -> dict:
        """Serialize as (m, modulus-hex)."""
        return {"m": self.m, "modulus": f"{self.modulus:x}"}

    @classmethod
    def from_dict(cls, data: dict) -> FieldSpec:
        """Rebuild (and re-validate) a spec serialized by `to_dict`."""
        return field_make(int(data["m"]), modulus=int(data["modulus"], 16))


@functools.lru_cache(maxsize=None)
def _galois_field(m: int, modulus: int) -> type[galois.FieldArray]:
    if m == 1:
        return galois.GF(2)
    return galois.GF(2**m, irreducible_poly=modulus)


@functools.lru_cache(maxsize=None)
def smallest_irreducible(m: int) -> int:
    """Return the lexicographically smallest irreducible degree-m polynomial."""
    # x itself is excluded: the constant term must be nonzero
    if m == 1:
        return 0b11
    return int(galois.irreducible_poly(2, m, method="min"))


def is_irreducible(modulus: int) -> bool:
    """Tell whether the integer-encoded polynomial is irreducible over GF(2)."""
    if modulus < 2:
        return False
    return galois.Poly.Int(modulus).is_irreducible()


def field_make(m: int, modulus: int | None = None) -> FieldSpec:
    """Create the spec of GF(2^m).

    Without a modulus the smallest irreducible polynomial is used, so two calls with
    the same degree always agree. A supplied modulus is checked for degree and
    irreducibility.
    """
    if not 1 <= m <= FIELD_MAX_DEGREE:
        message = f"extension degree {m} is out of range"
        raise FieldError(message, f"1 <= m <= {FIELD_MAX_DEGREE}")

    if modulus is None:
        return FieldSpec(m, smallest_irreducible(m))

    if modulus.bit_length() - 1 != m:
        message = f"modulus {modulus:#x} does not have degree {m}"
        raise FieldError(message, "deg(modulus) = m")

    if not modulus & 1 or not is_irreducible(modulus):
        message = f"modulus {modulus:#x} is reducible over GF(2)"
        raise FieldError(message, "modulus is irreducible")

    return FieldSpec(m, modulus)


def spec_of(a: FieldElement) -> FieldSpec:
    """Return the spec of the field an element (or array of elements) belongs to."""
    field = type(a)
    if not issubclass(field, galois.FieldArray) or field.characteristic != 2:
        message = f"{field.__name__} is not a binary field"
        raise FieldError(message, "element of GF(2^m)")
    return FieldSpec(field.degree, int(field.irreducible_poly))


def _require_same_field(a: FieldElement, b: FieldElement) -> None:
    if type(a) is not type(b):
        message = f"operands belong to {type(a).__name__} and {type(b).__name__}"
        raise FieldError(message, "operands share a FieldSpec")


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    """Return a + b (also a - b in characteristic 2)."""
    _require_same_field(a, b)
    return a + b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    """Return a * b."""
    _require_same_field(a, b)
    return a * b


def inv(a: FieldElement) -> FieldElement:
    """Return the multiplicative inverse of a nonzero element."""
    if np.any(a == 0):
        raise FieldError("inversion of zero", "a != 0")
    return a**-1


def power(a: FieldElement, exponent: int) -> FieldElement:
    """Return a^exponent by square-and-multiply; negative exponents invert first."""
    if isinstance(exponent, galois.FieldArray):
        message = "exponents are integers, not field elements"
        raise FieldError(message, "exponent is an integer")

    if exponent < 0:
        return inv(a) ** -exponent
    return a**exponent


def frobenius(a: FieldElement, times: int = 1) -> FieldElement:
    """Apply the absolute Frobenius a -> a^2 the given number of times."""
    for _ in range(times):
        a = a**2
    return a


def _check_divides(sub: FieldSpec, sup: FieldSpec) -> None:
    if sup.m % sub.m:
        message = f"GF(2^{sub.m}) is not a subfield of GF(2^{sup.m})"
        raise FieldError(message, "sub.m divides sup.m")


def in_subfield(a: FieldElement, sub: FieldSpec) -> np.ndarray | bool:
    """Tell whether a lies in the copy of GF(2^{sub.m}) inside its own field."""
    _check_divides(sub, spec_of(a))
    return frobenius(a, sub.m) == a


def trace_to(a: FieldElement, sub: FieldSpec) -> FieldElement:
    """Return the trace of a down to GF(2^{sub.m}).

    The result is the sum of the conjugates a^{(2^{sub.m})^j}; it lies in the embedded
    subfield and is returned as an element of a's own field.
    """
    sup = spec_of(a)
    _check_divides(sub, sup)

    total = a
    conjugate = a
    for _ in range(sup.m // sub.m - 1):
        conjugate = frobenius(conjugate, sub.m)
        total = total + conjugate

    return total


def _coefficients_desc(modulus: int) -> list[int]:
    return [(modulus >> j) & 1 for j in range(modulus.bit_length() - 1, -1, -1)]


def _modulus_root(sub: FieldSpec, sup: FieldSpec) -> int:
    """Return the smallest root in GF(2^{sup.m}) of the subfield modulus."""
    field = sup.field
    if sub == sup:
        return 1 if sub.m == 1 else 0b10

    # Nonzero elements of the subfield are the powers of g = z^{(2^m-1)/(2^k-1)}
    exponent = (sup.order - 1) // (sub.order - 1)
    generator = field.primitive_element**exponent
    candidates = generator ** np.arange(sub.order - 1)

    modulus_poly = galois.Poly(_coefficients_desc(sub.modulus), field=field)
    roots = candidates[modulus_poly(candidates) == 0]
    return min(int(root) for root in roots)


class Embedding:
    """Injective ring homomorphism GF(2^{sub.m}) -> GF(2^{sup.m})."""

    def __init__(self, sub: FieldSpec, sup: FieldSpec) -> None:
        """Locate the image of the class of x and precompute its powers."""
        _check_divides(sub, sup)
        if sub.m > EMBED_MAX_SUBFIELD_DEGREE:
            message = f"subfield GF(2^{sub.m}) is too large to scan for a root"
            raise FieldError(message, f"sub.m <= {EMBED_MAX_SUBFIELD_DEGREE}")

        self.sub = sub
        self.sup = sup
        self.root = sup.field(_modulus_root(sub, sup))
        self._powers = self.root ** np.arange(sub.m)

    def __call__(self, a: FieldElement) -> FieldElement:
        """Map an element (or array of elements) of the subfield."""
        if type(a) is not self.sub.field:
            message = f"{type(a).__name__} is not GF(2^{self.sub.m})"
            raise FieldError(message, "element of the subfield")

        coords = np.asarray(a.view(np.ndarray), dtype=np.int64)
        bits = (coords[..., np.newaxis] >> np.arange(self.sub.m)) & 1
        return (self.sup.field(bits) * self._powers).sum(axis=-1)


@functools.lru_cache(maxsize=None)
def embedding(sub: FieldSpec, sup: FieldSpec) -> Embedding:
    """Return the (cached) embedding of sub into sup."""
    return Embedding(sub, sup)


def embed(a: FieldElement, sub: FieldSpec, sup: FieldSpec) -> FieldElement:
    """Embed an element of GF(2^{sub.m}) into GF(2^{sup.m})."""
    return embedding(sub, sup)(a)


def to_hex(a: FieldElement) -> str:
    """Serialize an element as the lowercase hex of its coordinate integer."""
    return f"{int(a):x}"


def from_hex(spec: FieldSpec, text: str) -> FieldElement:
    """Parse an element serialized by `to_hex`."""
    try:
        coords = int(text, 16)
    except ValueError as exc:
        message = f"{text!r} is not a hex field element"
        raise FieldError(message, "lowercase hex coordinates") from exc
    return spec.element(coords)
