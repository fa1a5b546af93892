"""Exact arithmetic in the golden field Q(tau), tau = (1 + sqrt 5) / 2.

Every coordinate, Cartan entry and scalar product handled by the package is
a :class:`QTau`.  Values are immutable, hashable and totally ordered by their
real embedding; no floating point is involved except in :meth:`QTau.__float__`.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from typing import Union

__all__ = ["QTau", "TAU", "ZERO", "ONE", "ScalarParseError", "as_qtau", "parse_qtau"]

_SQRT5 = math.sqrt(5.0)


class ScalarParseError(ValueError):
    """Malformed scalar literal; ``pos`` is the 0-based offending offset."""

    def __init__(self, message: str, text: str, pos: int) -> None:
        super().__init__(f"{message} at position {pos} in {text!r}")
        self.text = text
        self.pos = pos


def _frac(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot use {type(value).__name__} as a rational component")


class QTau:
    """The number ``rat + tau_coef * tau`` with rational components.

    The identity ``tau**2 == tau + 1`` is applied on every product, so a value
    never carries a ``tau**2`` part.  Components are :class:`fractions.Fraction`
    objects and therefore always in lowest terms with positive denominator.

    >>> t = QTau(0, 1)
    >>> (1 + t) * t
    QTau(1, 2)
    >>> QTau(3, -1).inverse() == QTau(Fraction(2, 5), Fraction(1, 5))
    True
    """

    __slots__ = ("rat", "tau_coef", "_hash")

    def __init__(self, rat=0, tau_coef=0) -> None:
        self.rat = _frac(rat)
        self.tau_coef = _frac(tau_coef)
        self._hash = None

    @classmethod
    def _raw(cls, rat: Fraction, tau_coef: Fraction) -> "QTau":
        obj = object.__new__(cls)
        obj.rat = rat
        obj.tau_coef = tau_coef
        obj._hash = None
        return obj

    # -- conversions -------------------------------------------------------

    def is_rational(self) -> bool:
        return self.tau_coef == 0

    def is_zero(self) -> bool:
        return not self.rat and not self.tau_coef

    def is_integral(self) -> bool:
        """True when both components are integers, i.e. the value is in Z[tau]."""
        return self.rat.denominator == 1 and self.tau_coef.denominator == 1

    def __float__(self) -> float:
        return float(self.rat) + float(self.tau_coef) * (1.0 + _SQRT5) / 2.0

    def conjugate(self) -> "QTau":
        """Galois conjugate, sending tau to 1 - tau."""
        return QTau._raw(self.rat + self.tau_coef, -self.tau_coef)

    def norm(self) -> Fraction:
        """Field norm ``a**2 + a*b - b**2``; zero only for the zero element."""
        a, b = self.rat, self.tau_coef
        return a * a + a * b - b * b

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other) -> "QTau":
        if isinstance(other, QTau):
            return QTau._raw(self.rat + other.rat, self.tau_coef + other.tau_coef)
        if isinstance(other, (int, Fraction)):
            return QTau._raw(self.rat + other, self.tau_coef)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> "QTau":
        return QTau._raw(-self.rat, -self.tau_coef)

    def __pos__(self) -> "QTau":
        return self

    def __sub__(self, other) -> "QTau":
        if isinstance(other, QTau):
            return QTau._raw(self.rat - other.rat, self.tau_coef - other.tau_coef)
        if isinstance(other, (int, Fraction)):
            return QTau._raw(self.rat - other, self.tau_coef)
        return NotImplemented

    def __rsub__(self, other) -> "QTau":
        if isinstance(other, (int, Fraction)):
            return QTau._raw(other - self.rat, -self.tau_coef)
        return NotImplemented

    def __mul__(self, other) -> "QTau":
        if isinstance(other, QTau):
            a, b = self.rat, self.tau_coef
            c, d = other.rat, other.tau_coef
            if not b and not d:
                return QTau._raw(a * c, b)
            bd = b * d
            return QTau._raw(a * c + bd, a * d + b * c + bd)
        if isinstance(other, (int, Fraction)):
            return QTau._raw(self.rat * other, self.tau_coef * other)
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self) -> "QTau":
        """Multiplicative inverse via the field norm.

        Raises
        ------
        ZeroDivisionError
            If the value is zero.
        """
        n = self.norm()
        if not n:
            raise ZeroDivisionError("QTau division by zero")
        # (a + b tau)(a + b - b tau) = a^2 + ab - b^2
        return QTau._raw((self.rat + self.tau_coef) / n, -self.tau_coef / n)

    def __truediv__(self, other) -> "QTau":
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("QTau division by zero")
            return QTau._raw(self.rat / other, self.tau_coef / other)
        if isinstance(other, QTau):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other) -> "QTau":
        if isinstance(other, (int, Fraction)):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, k: int) -> "QTau":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- ordering ----------------------------------------------------------

    def sign(self) -> int:
        """Exact sign (-1, 0 or 1) of the real number ``rat + tau_coef * tau``.

        Writing the value as ``(p + q*sqrt5)/2`` with ``p = 2*rat + tau_coef``
        and ``q = tau_coef``, the sign is decided by comparing ``p**2`` with
        ``5*q**2`` when ``p`` and ``q`` disagree in sign.
        """
        b = self.tau_coef
        if not b:
            return (self.rat > 0) - (self.rat < 0)
        p = 2 * self.rat + b
        sp = (p > 0) - (p < 0)
        sq = 1 if b > 0 else -1
        if sp == 0 or sp == sq:
            return sq
        d = p * p - 5 * b * b
        return sp if d > 0 else -sp

    def __lt__(self, other) -> bool:
        return (self - as_qtau(other)).sign() < 0

    def __le__(self, other) -> bool:
        return (self - as_qtau(other)).sign() <= 0

    def __gt__(self, other) -> bool:
        return (self - as_qtau(other)).sign() > 0

    def __ge__(self, other) -> bool:
        return (self - as_qtau(other)).sign() >= 0

    def __abs__(self) -> "QTau":
        return -self if self.sign() < 0 else self

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- identity ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, QTau):
            return self.rat == other.rat and self.tau_coef == other.tau_coef
        if isinstance(other, (int, Fraction)):
            return not self.tau_coef and self.rat == other
        return NotImplemented

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            if not self.tau_coef:
                # equal rationals must hash alike
                h = hash(self.rat)
            else:
                h = hash((self.rat.numerator, self.rat.denominator,
                          self.tau_coef.numerator, self.tau_coef.denominator))
            self._hash = h
        return h

    def sort_key(self) -> tuple[Fraction, Fraction]:
        """Lexicographic key on the canonical components (not the real order)."""
        return (self.rat, self.tau_coef)

    def __repr__(self) -> str:
        def f(x: Fraction) -> str:
            return str(x.numerator) if x.denominator == 1 else f"Fraction({x.numerator}, {x.denominator})"
        return f"QTau({f(self.rat)}, {f(self.tau_coef)})"

    def __str__(self) -> str:
        a, b = self.rat, self.tau_coef
        if not b:
            return str(a)
        if b == 1:
            tpart = "t"
        elif b == -1:
            tpart = "-t"
        else:
            tpart = f"{b}*t"
        if not a:
            return tpart
        return f"{a}{tpart}" if tpart.startswith("-") else f"{a}+{tpart}"

    def __reduce__(self):
        return (QTau, (self.rat, self.tau_coef))


ZERO = QTau(0, 0)
ONE = QTau(1, 0)
TAU = QTau(0, 1)


def as_qtau(value: Union[QTau, int, Fraction, str]) -> QTau:
    """Coerce ints, fractions and scalar-grammar strings to :class:`QTau`."""
    if isinstance(value, QTau):
        return value
    if isinstance(value, str):
        return parse_qtau(value)
    if isinstance(value, (int, Fraction)):
        return QTau(value, 0)
    if isinstance(value, Rational):
        return QTau(Fraction(value), 0)
    raise TypeError(f"cannot convert {type(value).__name__} to QTau")


# -- parsing ---------------------------------------------------------------
#
# expr     := [sign] term (sign term)*
# term     := rational ['*'] 't' | rational | 't' ['/' rational]
# rational := int ['/' int]
# 't' may also be written 'tau' or the Greek letter.  Whitespace is ignored.


class _Reader:
    def __init__(self, text: str) -> None:
        self.text = text
        self.src = text
        self.i = 0
        self._skip()

    def _skip(self) -> None:
        while self.i < len(self.src) and self.src[self.i].isspace():
            self.i += 1

    def peek(self) -> str:
        return self.src[self.i] if self.i < len(self.src) else ""

    def advance(self, n: int = 1) -> None:
        self.i += n
        self._skip()

    def fail(self, message: str):
        raise ScalarParseError(message, self.text, self.i)

    def integer(self) -> int:
        start = self.i
        while self.i < len(self.src) and self.src[self.i].isdigit():
            self.i += 1
        if start == self.i:
            self.fail("expected digits")
        value = int(self.src[start:self.i])
        self._skip()
        return value

    def rational(self) -> Fraction:
        num = self.integer()
        if self.peek() == "/":
            save = self.i
            self.advance()
            if not self.peek().isdigit():
                self.i = save
                return Fraction(num)
            den_pos = self.i
            den = self.integer()
            if den == 0:
                raise ScalarParseError("division by zero in rational literal", self.text, den_pos)
            return Fraction(num, den)
        return Fraction(num)

    def tau_symbol(self) -> bool:
        if self.src.startswith("tau", self.i):
            self.advance(3)
            return True
        if self.peek() in ("t", "τ"):
            self.advance()
            return True
        return False

    def term(self) -> QTau:
        if self.peek().isdigit():
            coef = self.rational()
            if self.peek() == "*":
                self.advance()
                if not self.tau_symbol():
                    self.fail("expected 't' after '*'")
                return QTau(0, coef)
            if self.tau_symbol():
                return QTau(0, coef)
            return QTau(coef, 0)
        if self.tau_symbol():
            if self.peek() == "/":
                self.advance()
                den_pos = self.i
                den = self.rational()
                if den == 0:
                    raise ScalarParseError("division by zero in rational literal", self.text, den_pos)
                return QTau(0, 1 / den)
            return QTau(0, 1)
        self.fail("expected a number or 't'")


def parse_qtau(text: str) -> QTau:
    """Parse the scalar grammar, e.g. ``"2t-1"``, ``"3/2"``, ``"1/2+3/4*t"``.

    Raises
    ------
    ScalarParseError
        With the offending position on malformed input.
    """
    r = _Reader(text)
    if not r.peek():
        r.fail("empty scalar")
    total = ZERO
    first = True
    while r.peek():
        sign = 1
        if r.peek() in ("+", "-"):
            if r.peek() == "-":
                sign = -1
            r.advance()
        elif not first:
            r.fail("expected '+' or '-'")
        total = total + r.term() * sign
        first = False
    return total
