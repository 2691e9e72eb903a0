"""Exact dyadic fixed-point values with floor truncation.

A value is stored as an integer mantissa ``m`` and a fractional-bit count
``f``; it represents ``m * 2**-f``.  Python integers are unbounded, so the
mantissa never wraps.  Every operation that can lose bits returns a
:class:`TruncationResult` carrying the discarded remainder as an exact
:class:`~fractions.Fraction`.

Truncation always floors toward minus infinity, so the remainder is
nonnegative.  This makes an arithmetic right shift and ``r mod 2**-f``
the same operation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from numbers import Rational, Real

from .errors import FracBitsMismatchError, InvalidInputError

__all__ = [
    "FxValue",
    "TruncationResult",
    "quantize",
    "right_shift",
    "mul_truncate",
    "to_fraction",
    "dyadic_mod",
]


def to_fraction(r) -> Fraction:
    """Convert an int, float, Decimal or Rational to an exact Fraction.

    Floats convert to the exact binary value they hold, not to the
    decimal literal they were written from.
    """
    if isinstance(r, Fraction):
        return r
    if isinstance(r, (int, Rational)):
        return Fraction(r)
    if isinstance(r, (float, Decimal)):
        if not math.isfinite(r):
            raise InvalidInputError(f"cannot quantize non-finite value {r!r}")
        return Fraction(r)
    if isinstance(r, Real):
        f = float(r)
        if not math.isfinite(f):
            raise InvalidInputError(f"cannot quantize non-finite value {r!r}")
        return Fraction(f)
    raise InvalidInputError(f"unsupported numeric type {type(r).__name__}")


def dyadic_mod(r, frac_bits: int) -> Fraction:
    """Return ``r mod 2**-frac_bits`` as an exact nonnegative Fraction."""
    return to_fraction(r) % Fraction(1, 1 << frac_bits)


@dataclass(frozen=True)
class FxValue:
    """A fixed-point number ``mantissa * 2**-frac_bits``.

    Addition, subtraction, negation and multiplication by an integer are
    exact and keep ``frac_bits``.  Mixing two different ``frac_bits``
    raises :class:`FracBitsMismatchError`.
    """

    mantissa: int
    frac_bits: int

    def __post_init__(self):
        if self.frac_bits < 0:
            raise InvalidInputError(f"frac_bits must be >= 0 (got {self.frac_bits})")

    @classmethod
    def zero(cls, frac_bits: int) -> "FxValue":
        return cls(0, frac_bits)

    @property
    def ulp(self) -> Fraction:
        return Fraction(1, 1 << self.frac_bits)

    def to_fraction(self) -> Fraction:
        return Fraction(self.mantissa, 1 << self.frac_bits)

    def __float__(self) -> float:
        return float(self.to_fraction())

    def bit_length(self) -> int:
        """Two's-complement width needed for the mantissa, sign bit included."""
        m = self.mantissa
        return (m if m >= 0 else ~m).bit_length() + 1

    def _check(self, other: "FxValue") -> None:
        if not isinstance(other, FxValue):
            raise TypeError(f"expected FxValue, got {type(other).__name__}")
        if other.frac_bits != self.frac_bits:
            raise FracBitsMismatchError(
                f"frac_bits mismatch: {self.frac_bits} vs {other.frac_bits}"
            )

    def __add__(self, other: "FxValue") -> "FxValue":
        self._check(other)
        return FxValue(self.mantissa + other.mantissa, self.frac_bits)

    def __sub__(self, other: "FxValue") -> "FxValue":
        self._check(other)
        return FxValue(self.mantissa - other.mantissa, self.frac_bits)

    def __neg__(self) -> "FxValue":
        return FxValue(-self.mantissa, self.frac_bits)

    def scale(self, c: int) -> "FxValue":
        """Exact multiplication by an integer constant."""
        return FxValue(self.mantissa * int(c), self.frac_bits)

    def __repr__(self) -> str:
        return f"FxValue({self.mantissa}*2^-{self.frac_bits})"


@dataclass(frozen=True)
class TruncationResult:
    """A truncated value and the exact remainder dropped to obtain it."""

    value: FxValue
    eps: Fraction

    def reconstruct(self) -> Fraction:
        return self.value.to_fraction() + self.eps


def quantize(r, f: int) -> TruncationResult:
    """Truncate a real number to ``f`` fractional bits.

    >>> quantize(0.625, 2).value.to_fraction(), quantize(0.625, 2).eps
    (Fraction(1, 2), Fraction(1, 8))
    """
    if f < 0:
        raise InvalidInputError(f"f must be >= 0 (got {f})")
    x = to_fraction(r) * (1 << f)
    m = math.floor(x)
    return TruncationResult(FxValue(m, f), (x - m) / (1 << f))


def right_shift(x: FxValue, a: int) -> TruncationResult:
    """Arithmetic right shift of the mantissa by ``a`` bits (multiply by ``2**-a``)."""
    if a < 0:
        raise InvalidInputError(f"shift count must be >= 0 (got {a})")
    m = x.mantissa >> a
    dropped = x.mantissa - (m << a)
    return TruncationResult(FxValue(m, x.frac_bits), Fraction(dropped, 1 << (a + x.frac_bits)))


def mul_truncate(x: FxValue, y: FxValue) -> TruncationResult:
    """Multiply two same-format values and truncate the product back to ``f`` bits.

    The exact product lives at ``2f`` fractional bits before truncation.
    """
    x._check(y)
    return right_shift(FxValue(x.mantissa * y.mantissa, x.frac_bits), x.frac_bits)
