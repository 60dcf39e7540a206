"""Sparse polynomials in even variables, truncated in one series variable.

The completed rings C[[x1]] or C[[t]] are modelled at desk scale: a
:class:`PolySeries` is a finite sum of monomials together with a
truncation order ``trunc`` in the distinguished series variable.  All
stored series exponents are ``< trunc``; the element is certified only
modulo ``series_var**trunc``.  ``trunc=None`` means an exact polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .scalars import ONE, ZERO, Scalar, as_scalar

__all__ = [
    "PolyRing", "PolySeries", "VariableMismatch", "min_trunc",
    "RING_T", "RING_X5", "RING_X4", "RING_X2345",
]


class VariableMismatch(ValueError):
    pass


def min_trunc(a: int | None, b: int | None) -> int | None:
    if a is None:
        return b
    if b is None:
        return a
    return a if a < b else b


@dataclass(frozen=True)
class PolyRing:
    """An ordered set of even variables, optionally with a series variable."""

    names: tuple[str, ...]
    series: str | None = None

    @property
    def nvars(self) -> int:
        return len(self.names)

    @property
    def series_index(self) -> int | None:
        return None if self.series is None else self.names.index(self.series)

    def index(self, var: str | int) -> int:
        if isinstance(var, int):
            if not 0 <= var < len(self.names):
                raise VariableMismatch(f"variable index {var} out of range for {self.names}")
            return var
        try:
            return self.names.index(var)
        except ValueError:
            raise VariableMismatch(f"variable {var!r} not in {self.names}") from None

    # -- constructors ----------------------------------------------------
    def zero(self, trunc: int | None = None) -> "PolySeries":
        return PolySeries(self, {}, trunc)

    def const(self, c, trunc: int | None = None) -> "PolySeries":
        c = as_scalar(c)
        return PolySeries(self, {(0,) * self.nvars: c} if c else {}, trunc)

    def one(self, trunc: int | None = None) -> "PolySeries":
        return self.const(ONE, trunc)

    def var(self, name: str | int, power: int = 1, trunc: int | None = None) -> "PolySeries":
        return self.monomial({name: power}, ONE, trunc)

    def monomial(self, exps: Mapping[str | int, int] | tuple[int, ...], coeff=ONE,
                 trunc: int | None = None) -> "PolySeries":
        if isinstance(exps, tuple):
            e = exps
            if len(e) != self.nvars:
                raise VariableMismatch(f"exponent length {len(e)} for ring {self.names}")
        else:
            lst = [0] * self.nvars
            for v, p in exps.items():
                lst[self.index(v)] += p
            e = tuple(lst)
        if any(p < 0 for p in e):
            raise ValueError("negative exponent")
        return PolySeries(self, {e: as_scalar(coeff)}, trunc)

    def from_dict(self, terms: Mapping[tuple[int, ...], object], trunc: int | None = None) -> "PolySeries":
        return PolySeries(self, {e: as_scalar(c) for e, c in terms.items()}, trunc)

    def univariate(self, coeffs: Iterable, var: str | int | None = None,
                   trunc: int | None = None) -> "PolySeries":
        """sum_k coeffs[k] * var**k (``var`` defaults to the series variable)."""
        k = self.index(var if var is not None else self.series)
        terms = {}
        for n, c in enumerate(coeffs):
            c = as_scalar(c)
            if c:
                e = [0] * self.nvars
                e[k] = n
                terms[tuple(e)] = c
        return PolySeries(self, terms, trunc)


RING_T = PolyRing(("t",), "t")
RING_X5 = PolyRing(("x1", "x2", "x3", "x4", "x5"), "x1")
RING_X4 = PolyRing(("x1", "x2", "x3", "x4"), "x1")
RING_X2345 = PolyRing(("x2", "x3", "x4", "x5"), None)


class PolySeries:
    """Finitely supported map from exponent tuples to :class:`Scalar`.

    Equality compares coefficients below the common certified order, so a
    truncated series equals any series agreeing with it up to that order.
    """

    __slots__ = ("ring", "terms", "trunc")

    def __init__(self, ring: PolyRing, terms: dict, trunc: int | None = None, *, _clean=False):
        self.ring = ring
        self.trunc = trunc
        if _clean:
            self.terms = terms
            return
        s = ring.series_index
        out = {}
        for e, c in terms.items():
            if not c:
                continue
            if trunc is not None and s is not None and e[s] >= trunc:
                continue
            out[e] = c
        self.terms = out

    # -- helpers ---------------------------------------------------------
    def _check(self, other: "PolySeries"):
        if self.ring != other.ring:
            raise VariableMismatch(f"variable-set mismatch: {self.ring.names} vs {other.ring.names}")

    def _lift(self, other) -> "PolySeries":
        if isinstance(other, PolySeries):
            self._check(other)
            return other
        return self.ring.const(other)

    def with_trunc(self, trunc: int | None) -> "PolySeries":
        return PolySeries(self.ring, self.terms, min_trunc(trunc, self.trunc))

    def is_zero(self) -> bool:
        return not self.terms

    __bool__ = lambda self: bool(self.terms)

    def items(self) -> Iterator[tuple[tuple[int, ...], Scalar]]:
        return iter(self.terms.items())

    def coeff(self, exps: tuple[int, ...]) -> Scalar:
        return self.terms.get(exps, ZERO)

    def degrees(self) -> set[int]:
        return {sum(e) for e in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def homogeneous_parts(self) -> dict[int, "PolySeries"]:
        parts: dict[int, dict] = {}
        for e, c in self.terms.items():
            parts.setdefault(sum(e), {})[e] = c
        return {m: PolySeries(self.ring, t, self.trunc, _clean=True) for m, t in parts.items()}

    def max_exponent(self, var: str | int) -> int:
        k = self.ring.index(var)
        return max((e[k] for e in self.terms), default=-1)

    def free_of(self, var: str | int) -> bool:
        k = self.ring.index(var)
        return all(e[k] == 0 for e in self.terms)

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other):
        other = self._lift(other)
        trunc = min_trunc(self.trunc, other.trunc)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v = v + c
                if v:
                    out[e] = v
                else:
                    del out[e]
        if trunc != self.trunc or trunc != other.trunc:
            return PolySeries(self.ring, out, trunc)
        return PolySeries(self.ring, out, trunc, _clean=True)

    __radd__ = __add__

    def __neg__(self):
        return PolySeries(self.ring, {e: -c for e, c in self.terms.items()}, self.trunc, _clean=True)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) + (-self)

    def scale(self, c) -> "PolySeries":
        c = as_scalar(c)
        if not c:
            return PolySeries(self.ring, {}, self.trunc, _clean=True)
        return PolySeries(self.ring, {e: v * c for e, v in self.terms.items()}, self.trunc, _clean=True)

    def __mul__(self, other):
        if not isinstance(other, PolySeries):
            return self.scale(other)
        return ps_mul(self, other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        out = self.ring.one(self.trunc)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, PolySeries):
            if self.ring != other.ring:
                return False
            diff = self - other
            return diff.is_zero()
        if isinstance(other, (int, Fraction, Scalar)):
            return self == self.ring.const(other)
        return NotImplemented

    __hash__ = None

    def partial(self, var: str | int) -> "PolySeries":
        return ps_partial(self, var)

    def int_t(self, max_trunc: int | None = None) -> "PolySeries":
        return ps_int_t(self, max_trunc)

    def substitute_var(self, ring: "PolyRing", mapping: dict[int, int]) -> "PolySeries":
        """Re-embed into ``ring`` sending variable index i to ``mapping[i]``."""
        out = {}
        for e, c in self.terms.items():
            ne = [0] * ring.nvars
            for i, p in enumerate(e):
                if p:
                    ne[mapping[i]] += p
            out[tuple(ne)] = c
        trunc = self.trunc
        if trunc is not None and ring.series_index != mapping.get(self.ring.series_index):
            raise VariableMismatch("truncated series must keep its series variable")
        return PolySeries(ring, out, trunc)

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for e in sorted(self.terms, key=lambda e: (e, sum(e))):
            pieces.append(format_term(self.terms[e], monomial_text(self.ring, e)))
        text = join_terms(pieces)
        if self.trunc is not None:
            text += f" + O({self.ring.series}^{self.trunc})"
        return text

    def __repr__(self):
        return f"PolySeries({str(self)!r})"


def ps_mul(p: PolySeries, q: PolySeries) -> PolySeries:
    """Product; series-variable terms at or beyond the joint truncation are dropped."""
    p._check(q)
    trunc = min_trunc(p.trunc, q.trunc)
    s = p.ring.series_index
    out: dict = {}
    qt = list(q.terms.items())
    for e1, c1 in p.terms.items():
        for e2, c2 in qt:
            e = tuple(a + b for a, b in zip(e1, e2))
            if trunc is not None and s is not None and e[s] >= trunc:
                continue
            v = out.get(e)
            c = c1 * c2
            out[e] = c if v is None else v + c
    return PolySeries(p.ring, out, trunc)


def ps_partial(p: PolySeries, var: str | int) -> PolySeries:
    """Formal partial derivative; the certified order drops by one in the series variable."""
    k = p.ring.index(var)
    out = {}
    for e, c in p.terms.items():
        n = e[k]
        if n:
            ne = list(e)
            ne[k] = n - 1
            out[tuple(ne)] = c * n
    trunc = p.trunc
    if trunc is not None and k == p.ring.series_index:
        trunc -= 1
    return PolySeries(p.ring, out, trunc, _clean=True)


def ps_int_t(p: PolySeries, max_trunc: int | None = None) -> PolySeries:
    """Homogeneous integration from 0 in the series variable: t^n -> t^(n+1)/(n+1)."""
    k = p.ring.series_index
    if k is None or p.ring.nvars != 1:
        raise VariableMismatch(f"ps_int_t needs a single series variable, got {p.ring.names}")
    out = {}
    for (n,), c in p.terms.items():
        out[(n + 1,)] = c * Fraction(1, n + 1)
    trunc = p.trunc
    if trunc is not None:
        trunc += 1
        if max_trunc is not None:
            trunc = min(trunc, max_trunc)
    return PolySeries(p.ring, out, trunc)


# ---------------------------------------------------------------------------
# text helpers shared by the other modules

def monomial_text(ring: PolyRing, e: tuple[int, ...]) -> str:
    parts = []
    for name, p in zip(ring.names, e):
        if p == 1:
            parts.append(name)
        elif p > 1:
            parts.append(f"{name}^{p}")
    return "*".join(parts)


def format_term(c: Scalar, body: str) -> str:
    """Render ``c*body`` with a leading sign character."""
    if not body:
        text = str(c)
        return text if text.startswith("-") else "+" + text
    if c == 1:
        return "+" + body
    if c == -1:
        return "-" + body
    if c.is_single_term():
        text = str(c)
        return (text if text.startswith("-") else "+" + text) + "*" + body
    return f"+({c})*{body}"


def join_terms(pieces: list[str]) -> str:
    if not pieces:
        return "0"
    first = pieces[0]
    out = first[1:] if first.startswith("+") else first
    for p in pieces[1:]:
        out += f" {p[0]} {p[1:]}"
    return out
