"""Exact scalars of an ordered field.

Two kinds of value are supported: arbitrary-precision rationals
(``fractions.Fraction``) and elements a + b*sqrt(d) of a single quadratic
extension of the rationals.  Every computation works over one field at a
time; quadratic-extension values with different radicands never mix.

Positivity of a + b*sqrt(d) is decided exactly by a five-case rule that
only compares rational quantities, so no numeric square roots are ever
taken.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

Rational = Fraction

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class FieldTagMismatch(TypeError):
    """Raised when values from different field contexts are combined."""


def _is_square_free(d: int) -> bool:
    if d <= 0:
        return False
    for p in _SMALL_PRIMES:
        if d % (p * p) == 0:
            return False
    p = _SMALL_PRIMES[-1] + 2
    while p * p <= d:
        if d % (p * p) == 0:
            return False
        p += 2
    return True


class QuadExt:
    """a + b*sqrt(d) with rational a, b and square-free positive integer d."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d: int):
        d = int(d)
        if d <= 1 or not _is_square_free(d):
            raise ValueError(f"radicand must be a square-free integer > 1, got {d}")
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("QuadExt values are immutable")

    def _coerce(self, other) -> "QuadExt":
        if isinstance(other, QuadExt):
            if other.d != self.d:
                raise FieldTagMismatch(
                    f"cannot mix sqrt({self.d}) and sqrt({other.d}) values"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExt(other, 0, self.d)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadExt(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadExt(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadExt(
            self.a * o.a + self.b * o.b * self.d,
            self.a * o.b + self.b * o.a,
            self.d,
        )

    __rmul__ = __mul__

    def inverse(self) -> "QuadExt":
        # (a + b√d)(a − b√d) = a² − b²d, nonzero when the value is nonzero
        # because d is not a rational square.
        norm = self.a * self.a - self.b * self.b * self.d
        if norm == 0:
            raise ZeroDivisionError("division by zero")
        return QuadExt(self.a / norm, -self.b / norm, self.d)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if isinstance(other, QuadExt):
            return self.d == other.d and self.a == other.a and self.b == other.b
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __lt__(self, other):
        return cmp_values(self, other) < 0

    def __le__(self, other):
        return cmp_values(self, other) <= 0

    def __gt__(self, other):
        return cmp_values(self, other) > 0

    def __ge__(self, other):
        return cmp_values(self, other) >= 0

    def __abs__(self):
        return -self if sign(self) < 0 else self

    def __float__(self):
        return float(self.a) + float(self.b) * self.d ** 0.5

    def __repr__(self):
        return f"QuadExt({self.a!r}, {self.b!r}, {self.d})"

    def __str__(self):
        return format_value(self)


FieldValue = Union[Fraction, int, QuadExt]


def sign(x: FieldValue) -> int:
    """Exact sign in {-1, 0, +1}."""
    if isinstance(x, (int, Fraction)):
        return (x > 0) - (x < 0)
    if not isinstance(x, QuadExt):
        raise TypeError(f"not a field value: {x!r}")
    a, b, d = x.a, x.b, x.d
    if a == 0 and b == 0:
        return 0
    # a + b√d > 0 in exactly these five cases.
    if a > 0 and b > 0:
        return 1
    if a > 0 and b < 0 and a * a > b * b * d:
        return 1
    if a < 0 and b > 0 and b * b * d > a * a:
        return 1
    if a == 0 and b > 0:
        return 1
    if a > 0 and b == 0:
        return 1
    return -1


def cmp_values(x: FieldValue, y: FieldValue) -> int:
    """sign(x - y): -1, 0 or +1."""
    return sign(_sub(x, y))


def _sub(x, y):
    if isinstance(x, QuadExt) or isinstance(y, QuadExt):
        if isinstance(x, QuadExt):
            return x - y
        return -(y - x)
    return x - y


def add(x: FieldValue, y: FieldValue) -> FieldValue:
    return x + y


def sub(x: FieldValue, y: FieldValue) -> FieldValue:
    return _sub(x, y)


def mul(x: FieldValue, y: FieldValue) -> FieldValue:
    return x * y


def div(x: FieldValue, y: FieldValue) -> FieldValue:
    if isinstance(y, QuadExt):
        return x / y if isinstance(x, QuadExt) else QuadExt(x, 0, y.d) / y
    if y == 0:
        raise ZeroDivisionError("division by zero")
    if isinstance(x, QuadExt):
        return x / y
    return Fraction(x) / y


_QUAD_RE = re.compile(
    r"^\s*(?P<a>[+-]?\d+(?:/\d+)?)?\s*"
    r"(?P<bterm>(?P<b>[+-]?\d+(?:/\d+)?)\s*\*\s*sqrt\(\s*(?P<d>\d+)\s*\))?\s*$"
)


def parse_value(text: str) -> FieldValue:
    """Parse "p/q", "p", or "p/q+r/s*sqrt(d)" exactly."""
    text = text.strip()
    if "sqrt" not in text:
        return Fraction(text)
    m = _QUAD_RE.match(text)
    if not m or not m.group("bterm"):
        raise ValueError(f"malformed field value: {text!r}")
    a = Fraction(m.group("a")) if m.group("a") else Fraction(0)
    b = Fraction(m.group("b"))
    return QuadExt(a, b, int(m.group("d")))


def format_value(x: FieldValue) -> str:
    """Canonical text form; parse_value(format_value(x)) == x."""
    if isinstance(x, QuadExt):
        b = str(x.b) if x.b < 0 else f"+{x.b}"
        return f"{x.a}{b}*sqrt({x.d})"
    return str(Fraction(x))
