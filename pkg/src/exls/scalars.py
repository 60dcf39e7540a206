"""Exact arithmetic in the field Q(i, sqrt 2).

A :class:`Scalar` is ``a0 + a1*r2 + a2*i + a3*i*r2`` with rational ``a_k``.
Internally the four numerators share one positive denominator, reduced
so that the gcd of all five integers is 1; this makes equality and
hashing structural.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd
from numbers import Rational
from typing import Union

__all__ = ["Scalar", "ZERO", "ONE", "R2", "I", "as_scalar", "parse_scalar"]

Number = Union[int, Fraction, "Scalar"]

_BASIS_NAMES = ("", "r2", "i", "i*r2")


def _normalize(n0: int, n1: int, n2: int, n3: int, den: int):
    if den < 0:
        n0, n1, n2, n3, den = -n0, -n1, -n2, -n3, -den
    g = gcd(gcd(gcd(n0, n1), gcd(n2, n3)), den)
    if g > 1:
        return n0 // g, n1 // g, n2 // g, n3 // g, den // g
    return n0, n1, n2, n3, den


class Scalar:
    """Immutable element of Q(i, sqrt 2)."""

    __slots__ = ("_n", "_d", "_hash")

    def __init__(self, a0=0, a1=0, a2=0, a3=0):
        f = [Fraction(a) for a in (a0, a1, a2, a3)]
        den = 1
        for x in f:
            den = den * x.denominator // gcd(den, x.denominator)
        nums = [x.numerator * (den // x.denominator) for x in f]
        n0, n1, n2, n3, den = _normalize(*nums, den)
        self._n = (n0, n1, n2, n3)
        self._d = den
        self._hash = None

    @classmethod
    def _raw(cls, n0: int, n1: int, n2: int, n3: int, den: int) -> "Scalar":
        obj = object.__new__(cls)
        n0, n1, n2, n3, den = _normalize(n0, n1, n2, n3, den)
        obj._n = (n0, n1, n2, n3)
        obj._d = den
        obj._hash = None
        return obj

    # -- accessors -----------------------------------------------------
    @property
    def components(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        """The rational coordinates in the basis (1, r2, i, i*r2)."""
        return tuple(Fraction(n, self._d) for n in self._n)

    def is_rational(self) -> bool:
        return self._n[1] == self._n[2] == self._n[3] == 0

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self._n[0], self._d)

    # -- conjugations --------------------------------------------------
    def conj_i(self) -> "Scalar":
        n0, n1, n2, n3 = self._n
        return Scalar._raw(n0, n1, -n2, -n3, self._d)

    def conj_r2(self) -> "Scalar":
        n0, n1, n2, n3 = self._n
        return Scalar._raw(n0, -n1, n2, -n3, self._d)

    def conj_both(self) -> "Scalar":
        n0, n1, n2, n3 = self._n
        return Scalar._raw(n0, -n1, -n2, n3, self._d)

    def norm(self) -> Fraction:
        """Field norm down to Q: product of all four conjugates."""
        return (self * self.conj_i() * self.conj_r2() * self.conj_both()).to_fraction()

    # -- arithmetic ----------------------------------------------------
    def __add__(self, other):
        b = _coerce(other)
        if b is None:
            return NotImplemented
        a0, a1, a2, a3 = self._n
        b0, b1, b2, b3 = b._n
        da, db = self._d, b._d
        if da == db:
            return Scalar._raw(a0 + b0, a1 + b1, a2 + b2, a3 + b3, da)
        return Scalar._raw(a0 * db + b0 * da, a1 * db + b1 * da,
                           a2 * db + b2 * da, a3 * db + b3 * da, da * db)

    __radd__ = __add__

    def __neg__(self):
        n0, n1, n2, n3 = self._n
        obj = object.__new__(Scalar)
        obj._n = (-n0, -n1, -n2, -n3)
        obj._d = self._d
        obj._hash = None
        return obj

    def __pos__(self):
        return self

    def __sub__(self, other):
        b = _coerce(other)
        if b is None:
            return NotImplemented
        return self + (-b)

    def __rsub__(self, other):
        b = _coerce(other)
        if b is None:
            return NotImplemented
        return b + (-self)

    def __mul__(self, other):
        if type(other) is int:
            n0, n1, n2, n3 = self._n
            return Scalar._raw(n0 * other, n1 * other, n2 * other, n3 * other, self._d)
        b = _coerce(other)
        if b is None:
            return NotImplemented
        a0, a1, a2, a3 = self._n
        b0, b1, b2, b3 = b._n
        # r2^2 = 2, i^2 = -1, (i r2)^2 = -2
        c0 = a0 * b0 + 2 * a1 * b1 - a2 * b2 - 2 * a3 * b3
        c1 = a0 * b1 + a1 * b0 - a2 * b3 - a3 * b2
        c2 = a0 * b2 + a2 * b0 + 2 * a1 * b3 + 2 * a3 * b1
        c3 = a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1
        return Scalar._raw(c0, c1, c2, c3, self._d * b._d)

    __rmul__ = __mul__

    def inv(self) -> "Scalar":
        if not self:
            raise ZeroDivisionError("division by zero")
        b = self.conj_r2()
        u = self * b                      # lies in Q(i)
        v = u.conj_i()
        nrm = (u * v).to_fraction()       # lies in Q
        w = b * v
        n0, n1, n2, n3 = w._n
        return Scalar._raw(n0 * nrm.denominator, n1 * nrm.denominator,
                           n2 * nrm.denominator, n3 * nrm.denominator,
                           w._d * nrm.numerator)

    def __truediv__(self, other):
        b = _coerce(other)
        if b is None:
            return NotImplemented
        return self * b.inv()

    def __rtruediv__(self, other):
        b = _coerce(other)
        if b is None:
            return NotImplemented
        return b * self.inv()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inv() ** (-k)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison / hashing -----------------------------------------
    def __eq__(self, other):
        b = _coerce(other)
        if b is None:
            return NotImplemented
        return self._d == b._d and self._n == b._n

    def __hash__(self):
        h = self._hash
        if h is None:
            if self.is_rational():
                h = hash(Fraction(self._n[0], self._d))
            else:
                h = hash((self._n, self._d))
            self._hash = h
        return h

    def __bool__(self):
        return any(self._n)

    # -- text ----------------------------------------------------------
    def __str__(self):
        if not self:
            return "0"
        parts = []
        for k, name in enumerate(_BASIS_NAMES):
            c = Fraction(self._n[k], self._d)
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            c = abs(c)
            if not name:
                body = str(c)
            elif c == 1:
                body = name
            else:
                body = f"{c}*{name}"
            parts.append((sign, body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"Scalar({str(self)!r})"

    def is_single_term(self) -> bool:
        """True when at most one basis component is nonzero."""
        return sum(1 for n in self._n if n) <= 1


def _coerce(x) -> Scalar | None:
    if type(x) is Scalar:
        return x
    if isinstance(x, int):
        return Scalar._raw(int(x), 0, 0, 0, 1)
    if isinstance(x, Rational):
        return Scalar._raw(int(x.numerator), 0, 0, 0, int(x.denominator))
    return None


def as_scalar(x: Number) -> Scalar:
    s = _coerce(x)
    if s is None:
        raise TypeError(f"cannot interpret {x!r} as a Scalar")
    return s


ZERO = Scalar()
ONE = Scalar(1)
R2 = Scalar(0, 1)
I = Scalar(0, 0, 1)


# ---------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(r"\s*(?:(\d+)|(r2|i)|([-+*/()]))")


class _ScalarParser:
    def __init__(self, text: str):
        self.text = text
        self.toks: list[tuple[str, str, int]] = []
        pos = 0
        text = text.rstrip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise ValueError(f"unexpected character at position {pos}: {text[pos:]!r}")
            kind = "num" if m.group(1) else "sym" if m.group(2) else "op"
            val = m.group(1) or m.group(2) or m.group(3)
            self.toks.append((kind, val, m.start(0) + len(m.group(0)) - len(val)))
            pos = m.end()
        self.k = 0

    def peek(self):
        return self.toks[self.k] if self.k < len(self.toks) else (None, None, len(self.text))

    def take(self):
        tok = self.peek()
        self.k += 1
        return tok

    def parse(self) -> Scalar:
        val = self.expr()
        kind, v, pos = self.peek()
        if kind is not None:
            raise ValueError(f"unexpected token {v!r} at position {pos}")
        return val

    def expr(self) -> Scalar:
        kind, v, _ = self.peek()
        sign = 1
        if v in ("+", "-"):
            self.take()
            sign = -1 if v == "-" else 1
        val = self.term() * sign
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            t = self.term()
            val = val + t if op == "+" else val - t
        return val

    def term(self) -> Scalar:
        val = self.factor()
        while self.peek()[1] in ("*", "/"):
            op = self.take()[1]
            f = self.factor()
            val = val * f if op == "*" else val / f
        return val

    def factor(self) -> Scalar:
        kind, v, pos = self.take()
        if kind == "num":
            return Scalar(int(v))
        if kind == "sym":
            return R2 if v == "r2" else I
        if v == "(":
            val = self.expr()
            if self.take()[1] != ")":
                raise ValueError(f"missing ')' for '(' at position {pos}")
            return val
        if v == "-":
            return -self.factor()
        raise ValueError(f"unexpected token {v!r} at position {pos}")


def parse_scalar(text: str) -> Scalar:
    """Parse text such as ``"1/2*r2 - 3*i"``; inverse of ``str(Scalar)``."""
    return _ScalarParser(text).parse()
