"""Extended-precision real scalar (double-double).

A :class:`Scalar` is an unevaluated sum ``hi + lo`` of two IEEE doubles with
``|lo| <= ulp(hi)/2``, giving ~32 significant decimal digits.  Arithmetic uses
the classical error-free transforms (Knuth two-sum, Dekker split) and is
bit-for-bit identical to the numba kernels in :mod:`renormalab._kernels`;
tests pin that agreement.

Decimal I/O targets the package-wide serialization contract: values are
written as 34-significant-digit decimal strings.  A raw correctly-rounded
34-digit string does not always parse back to the identical (hi, lo) pair
(a pair of doubles can carry information below the 34th digit), so
:meth:`Scalar.to_decimal` canonicalizes: it iterates print/parse to a fixed
point, guaranteeing that ``Scalar.from_decimal(x.to_decimal())`` round-trips
bit-identically for every value that has passed through serialization once.
The one-time quantization moves a value by less than 1 ulp of the 34th digit.
"""

from __future__ import annotations

import math
from decimal import Decimal, InvalidOperation
from fractions import Fraction

from . import _kernels


_SPLITTER = 134217729.0  # 2**27 + 1


def _two_sum(a: float, b: float):
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def _quick_two_sum(a: float, b: float):
    s = a + b
    return s, b - (s - a)


def _two_prod(a: float, b: float):
    p = a * b
    ca = _SPLITTER * a
    ahi = ca - (ca - a)
    alo = a - ahi
    cb = _SPLITTER * b
    bhi = cb - (cb - b)
    blo = b - bhi
    return p, ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo


class Scalar:
    """Immutable double-double real number."""

    __slots__ = ("hi", "lo")

    def __init__(self, value=0.0, lo=None):
        if lo is not None:
            hi, lo = _quick_two_sum(float(value), float(lo))
        elif isinstance(value, Scalar):
            hi, lo = value.hi, value.lo
        elif isinstance(value, float):
            hi, lo = value, 0.0
        elif isinstance(value, int):
            hi = float(value)
            lo = float(value - int(hi)) if abs(value) > 2**53 else 0.0
        elif isinstance(value, str):
            hi, lo = _parse_decimal(value)
        else:
            raise TypeError(f"cannot build Scalar from {type(value).__name__}")
        object.__setattr__(self, "hi", hi)
        object.__setattr__(self, "lo", lo)

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    # -- conversions -----------------------------------------------------

    def __float__(self) -> float:
        return self.hi + self.lo

    def __repr__(self) -> str:
        return f"Scalar({self.hi!r}, {self.lo!r})"

    def __str__(self) -> str:
        return self.to_decimal()

    def as_fraction(self) -> Fraction:
        return Fraction(self.hi) + Fraction(self.lo)

    def is_finite(self) -> bool:
        return math.isfinite(self.hi) and math.isfinite(self.lo)

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(x):
        if isinstance(x, Scalar):
            return x
        if isinstance(x, (int, float)):
            return Scalar(x)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        sh, se = _two_sum(self.hi, o.hi)
        th, te = _two_sum(self.lo, o.lo)
        se += th
        sh, se = _quick_two_sum(sh, se)
        se += te
        hi, lo = _quick_two_sum(sh, se)
        return _mk(hi, lo)

    __radd__ = __add__

    def __neg__(self):
        return _mk(-self.hi, -self.lo)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        ph, pe = _two_prod(self.hi, o.hi)
        pe += self.hi * o.lo + self.lo * o.hi
        hi, lo = _quick_two_sum(ph, pe)
        return _mk(hi, lo)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        q1 = self.hi / o.hi
        r = self - o._mul_float(q1)
        q2 = r.hi / o.hi
        r = r - o._mul_float(q2)
        q3 = r.hi / o.hi
        sh, sl = _quick_two_sum(q1, q2)
        sh, se = _two_sum(sh, q3)
        se += sl
        hi, lo = _quick_two_sum(sh, se)
        return _mk(hi, lo)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def _mul_float(self, b: float):
        ph, pe = _two_prod(self.hi, b)
        pe += self.lo * b
        hi, lo = _quick_two_sum(ph, pe)
        return _mk(hi, lo)

    def __abs__(self):
        return -self if self.hi < 0.0 or (self.hi == 0.0 and self.lo < 0.0) else self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return Scalar(1.0) / self.__pow__(-n)
        result = Scalar(1.0)
        base = self
        k = n
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale_pow2(self, k: int):
        """Exact multiplication by 2**k."""
        return _mk(math.ldexp(self.hi, k), math.ldexp(self.lo, k))

    # -- comparisons --------------------------------------------------------

    def _cmp(self, other):
        o = self._coerce(other)
        if o is None:
            return None
        if self.hi != o.hi:
            return -1 if self.hi < o.hi else 1
        if self.lo != o.lo:
            return -1 if self.lo < o.lo else 1
        return 0

    def __eq__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c == 0

    def __ne__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c != 0

    def __lt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c >= 0

    def __hash__(self):
        return hash((self.hi, self.lo))

    def __bool__(self):
        return self.hi != 0.0 or self.lo != 0.0

    # -- decimal serialization ------------------------------------------------

    @classmethod
    def from_decimal(cls, s: str) -> "Scalar":
        return _mk(*_parse_decimal(s))

    def to_decimal(self, digits: int = 34) -> str:
        """Correctly rounded decimal string, canonicalized so that
        print/parse is a bit-exact involution (see module docstring)."""
        if not self.is_finite():
            raise ValueError("cannot serialize a non-finite Scalar")
        s = _raw_decimal(self.as_fraction(), digits)
        seen = []
        for _ in range(16):
            y = _parse_decimal(s)
            s2 = _raw_decimal(Fraction(y[0]) + Fraction(y[1]), digits)
            if s2 == s:
                return s
            if s2 in seen:
                return min(seen[seen.index(s2):] + [s])
            seen.append(s)
            s = s2
        raise ArithmeticError(f"decimal canonicalization did not settle: {self!r}")

    def quantized(self, digits: int = 34) -> "Scalar":
        """Nearest value on the canonical decimal grid (< 1e-33 relative away)."""
        return Scalar.from_decimal(self.to_decimal(digits))


def _mk(hi: float, lo: float) -> Scalar:
    s = Scalar.__new__(Scalar)
    object.__setattr__(s, "hi", float(hi))
    object.__setattr__(s, "lo", float(lo))
    return s


def _parse_decimal(s: str):
    try:
        d = Decimal(s.strip())
    except InvalidOperation as exc:
        raise ValueError(f"bad decimal literal: {s!r}") from exc
    f = Fraction(d)
    hi = float(f)
    lo = float(f - Fraction(hi))
    return _quick_two_sum(hi, lo)


def _pow10(e: int) -> Fraction:
    return Fraction(10**e) if e >= 0 else Fraction(1, 10**(-e))


def _raw_decimal(f: Fraction, digits: int) -> str:
    """Exact half-even rounding of a rational to `digits` significant digits."""
    if f == 0:
        return "0"
    sign = "-" if f < 0 else ""
    a = -f if f < 0 else f
    fl = float(a)
    e = math.floor(math.log10(fl)) if 0.0 < fl < math.inf else 0
    while a >= _pow10(e + 1):
        e += 1
    while a < _pow10(e):
        e -= 1
    scale = digits - 1 - e
    num, den = a.numerator, a.denominator
    if scale >= 0:
        num *= 10**scale
    else:
        den *= 10**(-scale)
    q, r = divmod(num, den)
    twice = 2 * r
    if twice > den or (twice == den and q & 1):
        q += 1
    if q == 10**digits:
        q //= 10
        e += 1
    ds = str(q)
    return f"{sign}{ds[0]}.{ds[1:]}e{e:+03d}"


# -- elementary functions ------------------------------------------------------

def sqrt(x: Scalar) -> Scalar:
    x = Scalar(x)
    if not x:
        return Scalar(0.0)
    if x.hi < 0.0:
        raise ValueError("sqrt of negative Scalar")
    y = Scalar(math.sqrt(x.hi + x.lo))
    y = (y + x / y).scale_pow2(-1)
    y = (y + x / y).scale_pow2(-1)
    return y


def exp(x: Scalar) -> Scalar:
    x = Scalar(x)
    return _mk(*_kernels.dd_exp(x.hi, x.lo))


def log(x: Scalar) -> Scalar:
    x = Scalar(x)
    if x.hi <= 0.0:
        raise ValueError("log of non-positive Scalar")
    return _mk(*_kernels.dd_log(x.hi, x.lo))


def sin(x: Scalar) -> Scalar:
    x = Scalar(x)
    return _mk(*_kernels.dd_sin(x.hi, x.lo))


def cos(x: Scalar) -> Scalar:
    x = Scalar(x)
    return _mk(*_kernels.dd_cos(x.hi, x.lo))


def sincos(x: Scalar):
    x = Scalar(x)
    sh, sl, ch, cl = _kernels.dd_sincos(x.hi, x.lo)
    return _mk(sh, sl), _mk(ch, cl)


PI = Scalar("3.14159265358979323846264338327950288419716939937510582097")
TWO_PI = PI.scale_pow2(1)
HALF_PI = PI.scale_pow2(-1)
LN2 = Scalar("0.693147180559945309417232121458176568075500134360255254120680")

ZERO = Scalar(0.0)
ONE = Scalar(1.0)

# spacing of the double-double grid at 1.0 (~4.93e-32)
EPS = Scalar(math.ldexp(1.0, -104))
