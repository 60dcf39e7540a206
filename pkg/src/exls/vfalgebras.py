"""The exceptional Lie superalgebras E(5,10) and E(4,4).

E(5,10): even part divergence-free vector fields in x1..x5, odd part
closed 2-forms.  E(4,4): even part all vector fields in x1..x4, odd part
1-forms with the twisted action at lambda = -1/2.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .formcalc import (DiffForm, VectorField, form_d, form_lie, form_wedge, lambda_action,
                       vf_bracket, vf_div, vf_from_form)
from .scalars import Scalar
from .series import RING_X4, RING_X5, PolyRing, min_trunc

__all__ = [
    "INHOMOGENEOUS", "SuperElt", "E510Elt", "E44Elt", "GradingType510", "InvariantViolation",
    "eps_quintuple", "bracket_e510", "degree_510", "bracket_e44", "degree_e44_principal",
    "join_parts",
]

INHOMOGENEOUS = "inhomogeneous"


class InvariantViolation(ValueError):
    pass


def join_parts(parts: Iterable[str]) -> str:
    parts = [p for p in parts if p != "0"]
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out


def _common(values) -> int | Fraction | str | None:
    vals = set(values)
    if not vals:
        return None
    if len(vals) > 1:
        return INHOMOGENEOUS
    (v,) = vals
    if isinstance(v, Fraction) and v.denominator == 1:
        return int(v)
    return v


class SuperElt:
    """Common plumbing for elements stored as an (even field, odd form) pair."""

    ring: PolyRing
    form_degree: int
    __slots__ = ("even", "odd")

    def __init__(self, even: VectorField | None = None, odd: DiffForm | None = None):
        self.even = even if even is not None else VectorField(self.ring)
        self.odd = odd if odd is not None else DiffForm(self.ring, self.form_degree)
        if self.even.ring != self.ring or self.odd.ring != self.ring:
            raise InvariantViolation(f"constituents must live over {self.ring.names}")
        if self.odd.comps and self.odd.k != self.form_degree:
            raise InvariantViolation(f"odd part must be a {self.form_degree}-form")
        if not self.odd.comps:
            self.odd = DiffForm(self.ring, self.form_degree)

    def _new(self, even, odd):
        return type(self)(even, odd)

    def is_zero(self) -> bool:
        return self.even.is_zero() and self.odd.is_zero()

    __bool__ = lambda self: not self.is_zero()

    def parity(self) -> int | None:
        """0 or 1 for homogeneous elements, None for zero or mixed ones."""
        if self.odd.is_zero():
            return None if self.even.is_zero() else 0
        return 1 if self.even.is_zero() else None

    @property
    def trunc(self) -> int | None:
        return min_trunc(self.even.trunc, self.odd.trunc)

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self._new(self.even + other.even, self.odd + other.odd)

    def __neg__(self):
        return self._new(-self.even, -self.odd)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        return self._new(self.even * c, self.odd * c)

    __rmul__ = __mul__

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.even == other.even and self.odd == other.odd

    __hash__ = None

    def to_vec(self) -> dict:
        out = {}
        for e, j, c in self.even.terms():
            out[("e", j, e)] = c
        for e, idx, c in self.odd.terms():
            out[("o", idx, e)] = c
        return out

    @classmethod
    def from_vec(cls, vec: dict):
        ring = cls.ring
        ev: dict = {}
        od: dict = {}
        for (kind, key, e), c in vec.items():
            target = ev if kind == "e" else od
            target.setdefault(key, {})[e] = c
        even = VectorField(ring, {j: ring.from_dict(t) for j, t in ev.items()})
        odd = DiffForm(ring, cls.form_degree, {idx: ring.from_dict(t) for idx, t in od.items()})
        return cls(even, odd)

    def __str__(self):
        return join_parts([str(self.even), str(self.odd)])

    def __repr__(self):
        return f"{type(self).__name__}({str(self)!r})"


# ---------------------------------------------------------------------------
# E(5,10)

class E510Elt(SuperElt):
    ring = RING_X5
    form_degree = 2
    __slots__ = ()

    def __init__(self, even: VectorField | None = None, odd: DiffForm | None = None,
                 check: bool = True):
        super().__init__(even, odd)
        if check:
            if not vf_div(self.even).is_zero():
                raise InvariantViolation(f"even part is not divergence-free: {self.even}")
            if not form_d(self.odd).is_zero():
                raise InvariantViolation(f"odd part is not closed: {self.odd}")

    def _new(self, even, odd):
        return E510Elt(even, odd, check=False)


def eps_quintuple(i: int, j: int, k: int, l: int) -> tuple[int, int | None]:
    """Sign of the permutation (i, j, k, l, hole) of 1..5, and the hole index."""
    idx = (i, j, k, l)
    if any(not 1 <= v <= 5 for v in idx):
        raise ValueError(f"indices must lie in 1..5, got {idx}")
    if len(set(idx)) < 4:
        return 0, None
    (hole,) = {1, 2, 3, 4, 5} - set(idx)
    seq = idx + (hole,)
    inv = sum(1 for a in range(5) for b in range(a + 1, 5) if seq[a] > seq[b])
    return (-1 if inv & 1 else 1), hole


def _odd_odd_510(w1: DiffForm, w2: DiffForm) -> VectorField:
    ring = w1.ring
    out: dict = {}
    for (i, j), f in w1.comps.items():
        for (h, k), g in w2.comps.items():
            s, hole = eps_quintuple(i + 1, j + 1, h + 1, k + 1)
            if not s:
                continue
            fg = f * g
            cur = out.get(hole - 1)
            val = fg if s > 0 else -fg
            out[hole - 1] = val if cur is None else cur + val
    return VectorField(ring, out)


def bracket_e510(a: E510Elt, b: E510Elt) -> E510Elt:
    even = vf_bracket(a.even, b.even) + _odd_odd_510(a.odd, b.odd)
    odd = form_lie(a.even, b.odd) - form_lie(b.even, a.odd)
    return E510Elt(even, odd, check=False)


class GradingType510:
    """Grading of E(5,10) with deg x_i = a_i, deg dx_i = a_i - (a_1+...+a_5)/4."""

    __slots__ = ("a",)

    def __init__(self, *a: int):
        if len(a) == 1 and not isinstance(a[0], int):
            a = tuple(a[0])
        if len(a) != 5:
            raise ValueError("a grading type has five entries")
        if sum(a) % 2:
            raise ValueError(f"grading type {a} has odd sum")
        self.a = tuple(int(v) for v in a)

    @property
    def delta(self) -> Fraction:
        return Fraction(-sum(self.a), 4)

    def mono(self, e: tuple[int, ...]) -> int:
        return sum(x * y for x, y in zip(self.a, e))

    def field_term(self, e, j) -> Fraction:
        return Fraction(self.mono(e) - self.a[j])

    def form_term(self, e, idx) -> Fraction:
        return self.mono(e) + sum(self.a[i] + self.delta for i in idx)

    def __repr__(self):
        return f"GradingType510{self.a}"


def degree_510(elt: E510Elt, g: GradingType510):
    vals = [g.field_term(e, j) for e, j, _ in elt.even.terms()]
    vals += [g.form_term(e, idx) for e, idx, _ in elt.odd.terms()]
    return _common(vals)


# ---------------------------------------------------------------------------
# E(4,4)

class E44Elt(SuperElt):
    ring = RING_X4
    form_degree = 1
    __slots__ = ()

    def __init__(self, even: VectorField | None = None, odd: DiffForm | None = None):
        super().__init__(even, odd)


_HALF = Scalar(Fraction(-1, 2))


def _odd_odd_44(w1: DiffForm, w2: DiffForm) -> VectorField:
    if w1.is_zero() or w2.is_zero():
        return VectorField(w1.ring)
    three = form_wedge(form_d(w1), w2) + form_wedge(w1, form_d(w2))
    return vf_from_form(three)


def bracket_e44(a: E44Elt, b: E44Elt) -> E44Elt:
    even = vf_bracket(a.even, b.even) + _odd_odd_44(a.odd, b.odd)
    odd = lambda_action(a.even, b.odd, _HALF) - lambda_action(b.even, a.odd, _HALF)
    return E44Elt(even, odd)


def degree_e44_principal(elt: E44Elt):
    vals = [sum(e) - 1 for e, _, _ in elt.even.terms()]
    vals += [sum(e) - 1 for e, _, _ in elt.odd.terms()]
    return _common(vals)
