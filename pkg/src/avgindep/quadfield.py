"""Exact arithmetic in Q(sqrt5).

Rationals are plain :class:`fractions.Fraction` values.  A :class:`QuadNumber`
is ``rat + coef5*sqrt5`` with both parts rational; since sqrt5 is irrational the
pair is a unique normal form, and the sign of any element can be decided with
rational arithmetic alone.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Union

Rational = Fraction
_Coercible = Union["QuadNumber", Fraction, int]


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``.  Raises ValueError on anything else."""
    m = re.fullmatch(r"\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*", text)
    if m is None:
        raise ValueError(f"malformed rational: {text!r}")
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Fraction(int(m.group(1)), den)


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def decimal_string(x: Union["QuadNumber", Fraction, int], digits: int = 30) -> str:
    """Decimal rendering with ``digits`` places after the point, truncated toward zero.

    Integer scaling only; meant for human-readable output.
    """
    q = QuadNumber.coerce(x)
    neg = q.sign() < 0
    if neg:
        q = -q
    scale = 10**digits
    y = q * scale
    p, c = y.rat, y.coef5
    # rough floor, then exact correction
    root = isqrt(5 * c.numerator**2 // c.denominator**2) if c else 0
    m = p.numerator // p.denominator + (root if c >= 0 else -root - 1)
    while y.cmp(m + 1) >= 0:
        m += 1
    while y.cmp(m) < 0:
        m -= 1
    whole, frac = divmod(m, scale)
    s = f"{whole}.{frac:0{digits}d}" if digits > 0 else str(whole)
    return "-" + s if neg and m else s


@dataclass(frozen=True)
class QuadNumber:
    """The real number ``rat + coef5 * sqrt(5)``."""

    rat: Fraction = Fraction(0)
    coef5: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "rat", Fraction(self.rat))
        object.__setattr__(self, "coef5", Fraction(self.coef5))

    @classmethod
    def coerce(cls, x: _Coercible) -> "QuadNumber":
        if isinstance(x, QuadNumber):
            return x
        if isinstance(x, (int, Fraction)):
            return cls(Fraction(x))
        raise TypeError(f"cannot coerce {type(x).__name__} to QuadNumber")

    # field operations

    def __add__(self, other: _Coercible) -> "QuadNumber":
        try:
            o = QuadNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return QuadNumber(self.rat + o.rat, self.coef5 + o.coef5)

    __radd__ = __add__

    def __neg__(self) -> "QuadNumber":
        return QuadNumber(-self.rat, -self.coef5)

    def __sub__(self, other: _Coercible) -> "QuadNumber":
        try:
            o = QuadNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return QuadNumber(self.rat - o.rat, self.coef5 - o.coef5)

    def __rsub__(self, other: _Coercible) -> "QuadNumber":
        return QuadNumber.coerce(other) - self

    def __mul__(self, other: _Coercible) -> "QuadNumber":
        try:
            o = QuadNumber.coerce(other)
        except TypeError:
            return NotImplemented
        p, q, r, s = self.rat, self.coef5, o.rat, o.coef5
        return QuadNumber(p * r + 5 * q * s, p * s + q * r)

    __rmul__ = __mul__

    def conjugate(self) -> "QuadNumber":
        return QuadNumber(self.rat, -self.coef5)

    def norm(self) -> Fraction:
        """Field norm ``rat**2 - 5*coef5**2``; zero only for zero."""
        return self.rat**2 - 5 * self.coef5**2

    def inverse(self) -> "QuadNumber":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt5)")
        c = self.conjugate()
        return QuadNumber(c.rat / n, c.coef5 / n)

    def __truediv__(self, other: _Coercible) -> "QuadNumber":
        try:
            o = QuadNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: _Coercible) -> "QuadNumber":
        return QuadNumber.coerce(other) * self.inverse()

    def __pow__(self, k: int) -> "QuadNumber":
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = ONE
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # ordering

    def sign(self) -> int:
        """Exact sign in {-1, 0, 1}."""
        sp, sq = _sign(self.rat), _sign(self.coef5)
        if sq == 0:
            return sp
        if sp == 0 or sp == sq:
            return sq
        # opposite signs: the larger magnitude wins
        return sp if self.rat**2 > 5 * self.coef5**2 else sq

    def cmp(self, other: _Coercible) -> int:
        return (self - QuadNumber.coerce(other)).sign()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = QuadNumber(Fraction(other))
        if not isinstance(other, QuadNumber):
            return NotImplemented
        return self.rat == other.rat and self.coef5 == other.coef5

    def __hash__(self) -> int:
        if self.coef5 == 0:
            return hash(self.rat)
        return hash((self.rat, self.coef5))

    def __lt__(self, other: _Coercible) -> bool:
        return self.cmp(other) < 0

    def __le__(self, other: _Coercible) -> bool:
        return self.cmp(other) <= 0

    def __gt__(self, other: _Coercible) -> bool:
        return self.cmp(other) > 0

    def __ge__(self, other: _Coercible) -> bool:
        return self.cmp(other) >= 0

    def __abs__(self) -> "QuadNumber":
        return -self if self.sign() < 0 else self

    def __bool__(self) -> bool:
        return bool(self.rat) or bool(self.coef5)

    # conversions

    def is_rational(self) -> bool:
        return self.coef5 == 0

    def __float__(self) -> float:
        return float(decimal_string(self, 20))

    def __str__(self) -> str:
        return f"{format_rational(self.rat)} + {format_rational(self.coef5)}*sqrt5"

    def __repr__(self) -> str:
        return f"QuadNumber({self})"

    @classmethod
    def parse(cls, text: str) -> "QuadNumber":
        """Inverse of ``str``; also accepts ``-`` between the parts and either part alone."""
        t = text.replace(" ", "")
        num = r"[+-]?\d+(?:/\d+)?"
        m = re.fullmatch(rf"(?P<rat>{num})(?:(?P<op>[+-])(?P<c5>{num})\*sqrt5)?", t)
        if m is not None:
            rat = parse_rational(m.group("rat"))
            c5 = parse_rational(m.group("c5")) if m.group("c5") else Fraction(0)
            return cls(rat, -c5 if m.group("op") == "-" else c5)
        m = re.fullmatch(rf"(?P<c5>{num})\*sqrt5", t)
        if m is not None:
            return cls(Fraction(0), parse_rational(m.group("c5")))
        raise ValueError(f"malformed Q(sqrt5) literal: {text!r}")


ZERO = QuadNumber()
ONE = QuadNumber(Fraction(1))
SQRT5 = QuadNumber(Fraction(0), Fraction(1))
PHI = QuadNumber(Fraction(1, 2), Fraction(1, 2))


def quad(rat: Union[int, Fraction, str] = 0, coef5: Union[int, Fraction, str] = 0) -> QuadNumber:
    """Convenience constructor; string parts go through :func:`parse_rational`."""
    if isinstance(rat, str):
        rat = parse_rational(rat)
    if isinstance(coef5, str):
        coef5 = parse_rational(coef5)
    return QuadNumber(Fraction(rat), Fraction(coef5))


def quad_add(x: QuadNumber, y: QuadNumber) -> QuadNumber:
    return x + y


def quad_sub(x: QuadNumber, y: QuadNumber) -> QuadNumber:
    return x - y


def quad_mul(x: QuadNumber, y: QuadNumber) -> QuadNumber:
    return x * y


def quad_div(x: QuadNumber, y: QuadNumber) -> QuadNumber:
    return x / y


def quad_cmp(x: QuadNumber, y: QuadNumber) -> int:
    """-1, 0 or 1 according to the real values of ``x`` and ``y``."""
    return QuadNumber.coerce(x).cmp(y)


def golden_power(k: int) -> QuadNumber:
    """phi**k for any integer k (phi is a unit, phi**-1 = phi - 1)."""
    return PHI**k


def as_rational(x: QuadNumber) -> Fraction:
    if x.coef5 != 0:
        raise ValueError(f"irrational residue: {x}")
    return x.rat
