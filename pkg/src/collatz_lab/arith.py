"""Exact integer/rational helpers and certified evaluation of base-2 logarithms.

Integers are plain Python ``int`` and rationals are :class:`fractions.Fraction`
(always in lowest terms, positive denominator).  Real quantities that cannot be
represented exactly, such as ``log2(3)``, are carried as :class:`CertifiedReal`
enclosures whose endpoints are exact rationals.
"""

from __future__ import annotations

import enum
import functools
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Union

DEFAULT_PRECISION_BITS = 128
MAX_PRECISION_BITS = 4096
PRECISION_ENV_VAR = "COLLATZ_LAB_PRECISION_BITS"

# extra fixed-point bits carried through series evaluation
_GUARD_BITS = 16

Number = Union[int, Fraction]


class PrecisionError(ArithmeticError):
    """Raised when a certified comparison stays undecided at the precision cap."""


def default_precision() -> int:
    value = os.environ.get(PRECISION_ENV_VAR)
    if value is None:
        return DEFAULT_PRECISION_BITS
    bits = int(value)
    if bits < 8:
        raise ValueError(f"{PRECISION_ENV_VAR} must be >= 8, got {bits}")
    return bits


def val2(n: int) -> int:
    """Exponent of the largest power of two dividing ``n`` (``n >= 1``)."""
    if n <= 0:
        raise ValueError(f"val2 requires a positive integer, got {n}")
    return (n & -n).bit_length() - 1


def val3(n: int) -> int:
    if n <= 0:
        raise ValueError(f"val3 requires a positive integer, got {n}")
    e = 0
    while n % 3 == 0:
        n //= 3
        e += 1
    return e


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def _floor_frac(q: Fraction) -> int:
    return q.numerator // q.denominator


def _ceil_frac(q: Fraction) -> int:
    return _ceil_div(q.numerator, q.denominator)


def _magnitude_bits(q: Fraction) -> int:
    """Rough floor(log2|q|); only used to size rounding grids."""
    if q == 0:
        return 0
    return abs(q.numerator).bit_length() - q.denominator.bit_length()


def _outward(lo: Fraction, hi: Fraction, bits: int) -> tuple[Fraction, Fraction]:
    """Round an enclosure outward onto a dyadic grid ~``bits`` below its magnitude."""
    scale = max(abs(lo), abs(hi))
    if scale == 0:
        return lo, hi
    g = bits + _GUARD_BITS - _magnitude_bits(scale)
    if g >= 0:
        den = 1 << g
        return Fraction(_floor_frac(lo * den), den), Fraction(_ceil_frac(hi * den), den)
    step = 1 << -g
    return Fraction(_floor_frac(lo / step) * step), Fraction(_ceil_frac(hi / step) * step)


class Ordering(enum.Enum):
    LESS = "less"
    GREATER = "greater"
    UNDECIDED = "undecided"


@dataclass(frozen=True)
class CertifiedReal:
    """A real number known to lie in ``[midpoint - radius, midpoint + radius]``."""

    midpoint: Fraction
    radius: Fraction
    precision_bits: int

    def __post_init__(self) -> None:
        if self.radius < 0:
            raise ValueError("radius must be non-negative")

    @classmethod
    def exact(cls, value: Number, precision_bits: int = DEFAULT_PRECISION_BITS) -> CertifiedReal:
        return cls(Fraction(value), Fraction(0), precision_bits)

    @classmethod
    def from_bounds(cls, lo: Fraction, hi: Fraction, precision_bits: int) -> CertifiedReal:
        if lo > hi:
            raise ValueError(f"empty enclosure [{lo}, {hi}]")
        if lo != hi:
            lo, hi = _outward(lo, hi, precision_bits)
        return cls((lo + hi) / 2, (hi - lo) / 2, precision_bits)

    @property
    def lo(self) -> Fraction:
        return self.midpoint - self.radius

    @property
    def hi(self) -> Fraction:
        return self.midpoint + self.radius

    def contains(self, value: Number) -> bool:
        return self.lo <= value <= self.hi

    def _coerce(self, other: object) -> CertifiedReal | None:
        if isinstance(other, CertifiedReal):
            return other
        if isinstance(other, (int, Fraction)):
            return CertifiedReal.exact(other, self.precision_bits)
        return None

    def _prec(self, other: CertifiedReal) -> int:
        return min(self.precision_bits, other.precision_bits)

    def __neg__(self) -> CertifiedReal:
        return CertifiedReal(-self.midpoint, self.radius, self.precision_bits)

    def __add__(self, other: object) -> CertifiedReal:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CertifiedReal.from_bounds(self.lo + o.lo, self.hi + o.hi, self._prec(o))

    __radd__ = __add__

    def __sub__(self, other: object) -> CertifiedReal:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> CertifiedReal:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: object) -> CertifiedReal:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        products = [self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi]
        return CertifiedReal.from_bounds(min(products), max(products), self._prec(o))

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> CertifiedReal:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.lo <= 0 <= o.hi:
            raise ZeroDivisionError("divisor enclosure contains zero")
        inv = CertifiedReal.from_bounds(1 / o.hi, 1 / o.lo, o.precision_bits)
        return self * inv

    def __rtruediv__(self, other: object) -> CertifiedReal:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __float__(self) -> float:
        return float(self.midpoint)

    def floor_if_decided(self) -> int | None:
        lo, hi = _floor_frac(self.lo), _floor_frac(self.hi)
        return lo if lo == hi else None

    def to_decimal(self, places: int = 4) -> str:
        return format_decimal(self.midpoint, places)

    def __str__(self) -> str:
        return f"{self.to_decimal(6)} ± {float(self.radius):.1e}"


def format_decimal(q: Number, places: int) -> str:
    """Round-half-even decimal rendering of an exact rational."""
    q = Fraction(q)
    scaled = round(q * 10**places)
    sign = "-" if scaled < 0 else ""
    digits = str(abs(scaled)).rjust(places + 1, "0")
    if places == 0:
        return sign + digits
    return f"{sign}{digits[:-places]}.{digits[-places:]}"


def _atanh_fixed(num: int, den: int, w: int) -> tuple[int, int]:
    """Integer bounds (lo, hi) on ``2**w * atanh(num/den)`` for ``0 <= num/den < 1``.

    Sums the odd power series with floor/ceil rounding and closes the tail with
    the geometric bound ``z**(2K+1) / (1 - z**2)``.
    """
    if num == 0:
        return 0, 0
    scale = 1 << w
    n2, d2 = num * num, den * den
    p_lo = scale * num // den
    p_hi = _ceil_div(scale * num, den)
    s_lo = s_hi = 0
    k = 1
    while p_hi > 1:
        s_lo += p_lo // k
        s_hi += _ceil_div(p_hi, k)
        p_lo = p_lo * n2 // d2
        p_hi = _ceil_div(p_hi * n2, d2)
        k += 2
    s_hi += _ceil_div(p_hi * d2, d2 - n2)
    return s_lo, s_hi


@functools.lru_cache(maxsize=64)
def _ln2_fixed(w: int) -> tuple[int, int]:
    lo, hi = _atanh_fixed(1, 3, w)
    return 2 * lo, 2 * hi


def log2_rational(q: Number, precision_bits: int = DEFAULT_PRECISION_BITS) -> CertifiedReal:
    """Certified enclosure of ``log2(q)`` with radius at most ``2**(2 - precision_bits)``."""
    q = Fraction(q)
    if q <= 0:
        raise ValueError(f"log2 undefined for non-positive argument {q}")
    p, d = q.numerator, q.denominator
    e = p.bit_length() - d.bit_length()
    # move r = q / 2**e into [2/3, 4/3) so that |z| <= 1/5
    while True:
        num, den = (p, d << e) if e >= 0 else (p << -e, d)
        if 3 * num >= 4 * den:
            e += 1
        elif 3 * num < 2 * den:
            e -= 1
        else:
            break
    if num == den:
        return CertifiedReal.exact(e, precision_bits)
    zn, zd = abs(num - den), num + den
    g = math.gcd(zn, zd)
    zn, zd = zn // g, zd // g
    # relative accuracy for arguments near one
    extra = max(0, zd.bit_length() - zn.bit_length())
    w = precision_bits + _GUARD_BITS + extra
    a_lo, a_hi = _atanh_fixed(zn, zd, w)
    l_lo, l_hi = _ln2_fixed(w)
    # log2(r) = 2 atanh(z) / ln 2, both scaled by 2**w
    if num > den:
        lo = Fraction(2 * a_lo, l_hi)
        hi = Fraction(2 * a_hi, l_lo)
    else:
        lo = Fraction(-2 * a_hi, l_lo)
        hi = Fraction(-2 * a_lo, l_hi)
    return CertifiedReal.from_bounds(lo + e, hi + e, precision_bits)


def log2_3(precision_bits: int = DEFAULT_PRECISION_BITS) -> CertifiedReal:
    return log2_rational(3, precision_bits)


def compare_certified(a: CertifiedReal, b: CertifiedReal) -> Ordering:
    if a.hi < b.lo:
        return Ordering.LESS
    if a.lo > b.hi:
        return Ordering.GREATER
    return Ordering.UNDECIDED


def decide(
    compute: Callable[[int], tuple[CertifiedReal, CertifiedReal]],
    precision_bits: int | None = None,
    max_bits: int = MAX_PRECISION_BITS,
) -> tuple[Ordering, int]:
    """Compare two lazily computed reals, doubling precision until decided.

    Returns the ordering and the precision at which it was decided.
    """
    bits = precision_bits or default_precision()
    while True:
        a, b = compute(bits)
        order = compare_certified(a, b)
        if order is not Ordering.UNDECIDED:
            return order, bits
        if bits >= max_bits:
            raise PrecisionError(
                f"comparison undecided at {bits} bits: "
                f"[{float(a.lo):.6g}, {float(a.hi):.6g}] vs [{float(b.lo):.6g}, {float(b.hi):.6g}]"
            )
        bits = min(2 * bits, max_bits)


def is_valid_root_factor(b: Fraction) -> bool:
    """True when ``b`` is a positive odd integer not divisible by 3."""
    return b.denominator == 1 and b > 0 and b.numerator % 2 == 1 and b.numerator % 3 != 0
