"""Exact scalar arithmetic: the rationals Q and the Gaussian rationals Q(i).

Every scalar is exact; floating point is rejected everywhere.  Rationals are
plain ``fractions.Fraction`` values (already normalized: lowest terms,
positive denominator).  Gaussian rationals are pairs of Fractions.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ParseError


class GaussianRational:
    """A Gaussian rational ``re + im*i`` with exact Fraction components."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, float) or isinstance(im, float):
            raise TypeError("floating point is not allowed in exact scalars")
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @staticmethod
    def _coerce(other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = o.re * o.re + o.im * o.im
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussianRational(
            (self.re * o.re + self.im * o.im) / n,
            (self.im * o.re - self.re * o.im) / n,
        )

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self):
        return format_gaussian(self)


def _format_fraction(x: Fraction) -> str:
    return str(x)


def format_gaussian(x: GaussianRational) -> str:
    """Canonical text form ``a/b+c/d*i`` (sign folded into the parts)."""
    if x.im == 0:
        return _format_fraction(x.re)
    sign = "+" if x.im >= 0 else "-"
    return f"{_format_fraction(x.re)}{sign}{_format_fraction(abs(x.im))}*i"


def _parse_fraction(text: str) -> Fraction:
    text = text.strip()
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"invalid rational literal {text!r}: {exc}") from None
    return value


def _parse_gaussian(text: str) -> GaussianRational:
    s = text.strip().replace(" ", "")
    if "i" not in s:
        return GaussianRational(_parse_fraction(s))
    if not s.endswith("i"):
        raise ParseError(f"invalid Gaussian rational literal {text!r}")
    body = s[:-1]
    if body.endswith("*"):
        body = body[:-1]
    # Split off the imaginary coefficient at the last top-level sign; rational
    # literals contain no interior signs, so any '+'/'-' past index 0 is it.
    split = -1
    for pos in range(len(body) - 1, 0, -1):
        if body[pos] in "+-":
            split = pos
            break
    if split == -1:
        re_part, im_part = "0", body
    else:
        re_part, im_part = body[:split], body[split:]
    if im_part in ("", "+"):
        im = Fraction(1)
    elif im_part == "-":
        im = Fraction(-1)
    else:
        im = _parse_fraction(im_part)
    return GaussianRational(_parse_fraction(re_part) if re_part else 0, im)


class RationalField:
    """The field Q, with Fraction scalars."""

    name = "Q"

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def coerce(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, str):
            return _parse_fraction(value)
        raise TypeError(f"cannot coerce {type(value).__name__} into Q")

    def parse(self, text: str):
        return _parse_fraction(text)

    def format(self, value):
        value = self.coerce(value)
        if value.denominator == 1:
            return int(value)
        return str(value)

    def __repr__(self):
        return "QQ"


class GaussianRationalField:
    """The field Q(i), with GaussianRational scalars."""

    name = "Q(i)"

    def zero(self):
        return GaussianRational(0)

    def one(self):
        return GaussianRational(1)

    def coerce(self, value):
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)):
            return GaussianRational(value)
        if isinstance(value, str):
            return _parse_gaussian(value)
        raise TypeError(f"cannot coerce {type(value).__name__} into Q(i)")

    def parse(self, text: str):
        return _parse_gaussian(text)

    def format(self, value):
        value = self.coerce(value)
        if value.im == 0 and value.re.denominator == 1:
            return int(value.re)
        return format_gaussian(value)

    def __repr__(self):
        return "QQI"


QQ = RationalField()
QQI = GaussianRationalField()

_FIELDS_BY_NAME = {QQ.name: QQ, QQI.name: QQI}


def field_by_name(name: str):
    try:
        return _FIELDS_BY_NAME[name]
    except KeyError:
        raise ParseError(
            f"unknown field {name!r}; expected one of {sorted(_FIELDS_BY_NAME)}"
        ) from None
