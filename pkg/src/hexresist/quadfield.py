"""Exact arithmetic in the quadratic field Q(sqrt 2).

Every closed-form resistance in this package is a number ``a + b*sqrt(2)``
with rational ``a`` and ``b``.  :class:`QuadNum` stores such a number as three
Python integers ``(a_num + b_num*sqrt2) / den`` in lowest terms, so structural
equality is mathematical equality and coefficients never overflow.

The textual form used by the CLI, the trace files and the JSON reports is::

    <a_num>/<a_den> + <b_num>/<b_den>*sqrt2      e.g.  -1/1 + 2/1*sqrt2
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache, total_ordering
from numbers import Rational

__all__ = [
    "QuadNum",
    "ZERO",
    "ONE",
    "SQRT2",
    "ALPHA",
    "alpha_pow",
    "to_decimal",
    "parse_quad",
]

_TEXT_RE = re.compile(
    r"^\s*(?P<an>[+-]?\d+)(?:/(?P<ad>\d+))?"
    r"(?:\s*\+\s*(?P<bn>[+-]?\d+)(?:/(?P<bd>\d+))?\s*\*\s*sqrt2)?\s*$"
)


@total_ordering
class QuadNum:
    """Immutable element ``a + b*sqrt(2)`` of Q(sqrt 2) with rational ``a``, ``b``."""

    __slots__ = ("_an", "_bn", "_d")

    def __init__(self, a: int | Rational = 0, b: int | Rational = 0) -> None:
        a = Fraction(a)
        b = Fraction(b)
        d = a.denominator * b.denominator // math.gcd(a.denominator, b.denominator)
        self._set(a.numerator * (d // a.denominator), b.numerator * (d // b.denominator), d)

    def _set(self, an: int, bn: int, d: int) -> None:
        if d == 0:
            raise ZeroDivisionError("QuadNum with zero denominator")
        if d < 0:
            an, bn, d = -an, -bn, -d
        g = math.gcd(math.gcd(an, bn), d)
        if g > 1:
            an //= g
            bn //= g
            d //= g
        self._an = an
        self._bn = bn
        self._d = d

    @classmethod
    def _raw(cls, an: int, bn: int, d: int) -> QuadNum:
        obj = cls.__new__(cls)
        obj._set(an, bn, d)
        return obj

    @classmethod
    def coerce(cls, value: QuadNum | int | Rational) -> QuadNum:
        if isinstance(value, QuadNum):
            return value
        if isinstance(value, (int, Rational)):
            f = Fraction(value)
            return cls._raw(f.numerator, 0, f.denominator)
        raise TypeError(f"cannot convert {type(value).__name__} to QuadNum exactly")

    # -- components -------------------------------------------------------

    @property
    def a(self) -> Fraction:
        """Rational part."""
        return Fraction(self._an, self._d)

    @property
    def b(self) -> Fraction:
        """Coefficient of sqrt(2)."""
        return Fraction(self._bn, self._d)

    @property
    def is_rational(self) -> bool:
        return self._bn == 0

    def as_fraction(self) -> Fraction:
        if self._bn:
            raise ValueError(f"{self} is irrational")
        return Fraction(self._an, self._d)

    def conjugate(self) -> QuadNum:
        return QuadNum._raw(self._an, -self._bn, self._d)

    def norm(self) -> Fraction:
        """Field norm ``a**2 - 2*b**2`` (product with the conjugate)."""
        return Fraction(self._an * self._an - 2 * self._bn * self._bn, self._d * self._d)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        try:
            o = QuadNum.coerce(other)
        except TypeError:
            return NotImplemented
        return QuadNum._raw(self._an * o._d + o._an * self._d, self._bn * o._d + o._bn * self._d, self._d * o._d)

    __radd__ = __add__

    def __neg__(self) -> QuadNum:
        return QuadNum._raw(-self._an, -self._bn, self._d)

    def __pos__(self) -> QuadNum:
        return self

    def __sub__(self, other):
        try:
            o = QuadNum.coerce(other)
        except TypeError:
            return NotImplemented
        return QuadNum._raw(self._an * o._d - o._an * self._d, self._bn * o._d - o._bn * self._d, self._d * o._d)

    def __rsub__(self, other):
        try:
            return QuadNum.coerce(other) - self
        except TypeError:
            return NotImplemented

    def __mul__(self, other):
        try:
            o = QuadNum.coerce(other)
        except TypeError:
            return NotImplemented
        return QuadNum._raw(
            self._an * o._an + 2 * self._bn * o._bn,
            self._an * o._bn + self._bn * o._an,
            self._d * o._d,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            o = QuadNum.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        try:
            return QuadNum.coerce(other) * self.inverse()
        except TypeError:
            return NotImplemented

    def inverse(self) -> QuadNum:
        # (a + b r)/d inverted is d (a - b r) / (a^2 - 2 b^2)
        nrm = self._an * self._an - 2 * self._bn * self._bn
        if nrm == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt2)")
        return QuadNum._raw(self._d * self._an, -self._d * self._bn, nrm)

    def __pow__(self, k: int) -> QuadNum:
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if not self:
                raise ZeroDivisionError("zero raised to a negative power")
            return self.inverse() ** (-k)
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- comparison -------------------------------------------------------

    def sign(self) -> int:
        """Exact sign of ``a + b*sqrt2`` in {-1, 0, 1}; no floating point involved."""
        sa = (self._an > 0) - (self._an < 0)
        sb = (self._bn > 0) - (self._bn < 0)
        if sa == sb or sb == 0:
            return sa
        if sa == 0:
            return sb
        # mixed signs: compare a^2 with 2 b^2
        lhs = self._an * self._an
        rhs = 2 * self._bn * self._bn
        return sa if lhs > rhs else sb

    def __bool__(self) -> bool:
        return self._an != 0 or self._bn != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, QuadNum):
            return self._an == other._an and self._bn == other._bn and self._d == other._d
        if isinstance(other, (int, Rational)):
            return self._bn == 0 and Fraction(self._an, self._d) == other
        return NotImplemented

    def __lt__(self, other) -> bool:
        try:
            return (self - other).sign() < 0
        except TypeError:
            return NotImplemented

    def __hash__(self) -> int:
        if self._bn == 0:
            return hash(Fraction(self._an, self._d))
        return hash((self._an, self._bn, self._d))

    def __abs__(self) -> QuadNum:
        return -self if self.sign() < 0 else self

    # -- conversion -------------------------------------------------------

    def _floor_scaled(self, m: int) -> int:
        """Exact ``floor(self * 10**m)``; ``m`` may be negative."""
        num_scale = 10**m if m >= 0 else 1
        den = self._d * (10 ** (-m) if m < 0 else 1)
        a = self._an * num_scale
        b = self._bn * num_scale
        # floor(b*sqrt2) exactly; 2*b^2 is never a nonzero perfect square
        root = math.isqrt(2 * b * b)
        fb = root if b >= 0 else -root - 1
        return (a + fb) // den

    def to_decimal(self, digits: int = 12) -> str:
        """Decimal string correctly rounded (half up) to ``digits`` significant digits."""
        if digits < 1:
            raise ValueError("digits must be >= 1")
        s = self.sign()
        if s == 0:
            return "0"
        x = self if s > 0 else -self
        # decimal exponent e with 10**e <= x < 10**(e+1)
        approx = abs(float(self.a) + float(self.b) * math.sqrt(2.0))
        e = math.floor(math.log10(approx)) if math.isfinite(approx) and approx > 0 else 0
        while x._floor_scaled(-e) < 1:
            e -= 1
        while x._floor_scaled(-(e + 1)) >= 1:
            e += 1
        while True:
            m = digits - 1 - e
            twice = (x * 2)._floor_scaled(m)
            rounded = (twice + 1) // 2
            if rounded >= 10**digits:
                e += 1
                continue
            break
        text = str(rounded)
        if m <= 0:
            body = text + "0" * (-m)
        elif len(text) > m:
            body = text[:-m] + "." + text[-m:]
        else:
            body = "0." + "0" * (m - len(text)) + text
        return ("-" if s < 0 else "") + body

    def __float__(self) -> float:
        if self._bn == 0:
            return self._an / self._d
        return float(self.to_decimal(20))

    def to_text(self) -> str:
        a, b = self.a, self.b
        return f"{a.numerator}/{a.denominator} + {b.numerator}/{b.denominator}*sqrt2"

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"QuadNum({self.to_text()!r})"

    def __reduce__(self):
        return (parse_quad, (self.to_text(),))


def parse_quad(text: str) -> QuadNum:
    """Parse the exact textual form (a plain rational such as ``5/6`` is accepted too)."""
    m = _TEXT_RE.match(text)
    if m is None:
        raise ValueError(f"not a Q(sqrt2) literal: {text!r}")
    a = Fraction(int(m["an"]), int(m["ad"] or 1))
    b = Fraction(int(m["bn"] or 0), int(m["bd"] or 1))
    return QuadNum(a, b)


def to_decimal(x: QuadNum | int | Rational, digits: int) -> tuple[str, float]:
    """Return the correctly rounded decimal string and the nearest float."""
    q = QuadNum.coerce(x)
    return q.to_decimal(digits), float(q)


ZERO = QuadNum(0)
ONE = QuadNum(1)
SQRT2 = QuadNum(0, 1)
ALPHA = QuadNum(3, -2)


@lru_cache(maxsize=None)
def alpha_pow(k: int) -> QuadNum:
    """``ALPHA**k`` for any integer ``k`` (negative powers are conjugates)."""
    if k < 0:
        return alpha_pow(-k).conjugate()
    return ALPHA**k
