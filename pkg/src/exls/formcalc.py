"""Cartan calculus on formal vector fields and differential forms.

Coefficients are :class:`~exls.series.PolySeries` over a common
:class:`~exls.series.PolyRing`.  A k-form is stored as a map from
strictly ascending index tuples to coefficients; the volume form of a
ring is always the ascending wedge of all its variables.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Mapping

from .scalars import Scalar, as_scalar
from .series import (PolyRing, PolySeries, VariableMismatch, format_term, join_terms,
                     min_trunc, monomial_text)

__all__ = [
    "VectorField", "DiffForm", "EulerWeightZero",
    "vf_bracket", "vf_apply", "vf_div", "form_d", "form_wedge", "form_contract",
    "form_lie", "lambda_action", "int_op", "vf_from_form", "form_from_vf",
    "euler_field", "subset_sign",
]


class EulerWeightZero(ValueError):
    pass


def _suffix(name: str) -> str:
    return name[1:] if name.startswith("x") else name


def subset_sign(seq) -> tuple[int, tuple[int, ...]]:
    """Sort an index sequence: (sign of the permutation, sorted tuple); sign 0 on repeats."""
    seq = list(seq)
    if len(set(seq)) != len(seq):
        return 0, ()
    inv = 0
    for a in range(len(seq)):
        for b in range(a + 1, len(seq)):
            if seq[a] > seq[b]:
                inv += 1
    return (-1 if inv & 1 else 1), tuple(sorted(seq))


def _acc(out: dict, key, p: PolySeries):
    cur = out.get(key)
    out[key] = p if cur is None else cur + p


def _prune(d: dict) -> dict:
    return {k: v for k, v in d.items() if not v.is_zero()}


class VectorField:
    """sum_j P_j d/dx_j with PolySeries components."""

    __slots__ = ("ring", "comps")

    def __init__(self, ring: PolyRing, comps: Mapping[int | str, PolySeries] | None = None):
        self.ring = ring
        out = {}
        for j, p in (comps or {}).items():
            j = ring.index(j)
            if p.ring != ring:
                raise VariableMismatch(f"component ring {p.ring.names} != {ring.names}")
            if not p.is_zero():
                out[j] = out[j] + p if j in out else p
        self.comps = _prune(out)

    @classmethod
    def partial(cls, ring: PolyRing, var, coeff: PolySeries | None = None) -> "VectorField":
        return cls(ring, {var: coeff if coeff is not None else ring.one()})

    def component(self, var) -> PolySeries:
        j = self.ring.index(var)
        return self.comps.get(j, self.ring.zero())

    @property
    def trunc(self) -> int | None:
        t = None
        for p in self.comps.values():
            t = min_trunc(t, p.trunc)
        return t

    def is_zero(self) -> bool:
        return not self.comps

    __bool__ = lambda self: bool(self.comps)

    def _check(self, other):
        if self.ring != other.ring:
            raise VariableMismatch(f"variable-set mismatch: {self.ring.names} vs {other.ring.names}")

    def __add__(self, other: "VectorField") -> "VectorField":
        self._check(other)
        out = dict(self.comps)
        for j, p in other.comps.items():
            _acc(out, j, p)
        return VectorField(self.ring, out)

    def __neg__(self):
        return VectorField(self.ring, {j: -p for j, p in self.comps.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c) -> "VectorField":
        """Multiply by a scalar or by a function (PolySeries)."""
        return VectorField(self.ring, {j: p * c for j, p in self.comps.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, VectorField):
            return NotImplemented
        return self.ring == other.ring and (self - other).is_zero()

    __hash__ = None

    def terms(self) -> Iterator[tuple[tuple[int, ...], int, Scalar]]:
        """(monomial exponents, component index, coefficient) triples."""
        for j, p in self.comps.items():
            for e, c in p.items():
                yield e, j, c

    def __str__(self):
        pieces = []
        for j in sorted(self.comps):
            token = "D" + _suffix(self.ring.names[j])
            p = self.comps[j]
            for e in sorted(p.terms, key=lambda e: (e, sum(e))):
                mono = monomial_text(self.ring, e)
                pieces.append(format_term(p.terms[e], f"{mono}*{token}" if mono else token))
        return join_terms(pieces)

    __repr__ = lambda self: f"VectorField({str(self)!r})"


class DiffForm:
    """A differential k-form sum_I f_I dx_I with ascending index tuples I."""

    __slots__ = ("ring", "k", "comps")

    def __init__(self, ring: PolyRing, k: int, comps: Mapping[tuple, PolySeries] | None = None):
        self.ring = ring
        self.k = k
        out: dict = {}
        for idx, p in (comps or {}).items():
            idx = tuple(ring.index(v) for v in idx)
            if len(idx) != k:
                raise ValueError(f"index tuple {idx} does not have length {k}")
            if p.ring != ring:
                raise VariableMismatch(f"coefficient ring {p.ring.names} != {ring.names}")
            s, srt = subset_sign(idx)
            if s == 0 or p.is_zero():
                continue
            _acc(out, srt, p if s > 0 else -p)
        self.comps = _prune(out)

    @classmethod
    def _raw(cls, ring: PolyRing, k: int, comps: dict) -> "DiffForm":
        """Trusted constructor: ascending index tuples, zero entries allowed."""
        self = cls.__new__(cls)
        self.ring, self.k, self.comps = ring, k, _prune(comps)
        return self

    @classmethod
    def basis(cls, ring: PolyRing, indices, coeff: PolySeries | None = None) -> "DiffForm":
        indices = tuple(indices)
        return cls(ring, len(indices), {indices: coeff if coeff is not None else ring.one()})

    @classmethod
    def function(cls, f: PolySeries) -> "DiffForm":
        return cls(f.ring, 0, {(): f})

    @classmethod
    def zero(cls, ring: PolyRing, k: int) -> "DiffForm":
        return cls(ring, k, {})

    def coefficient(self, indices) -> PolySeries:
        s, srt = subset_sign(self.ring.index(v) for v in indices)
        p = self.comps.get(srt)
        if p is None or s == 0:
            return self.ring.zero()
        return p if s > 0 else -p

    @property
    def trunc(self) -> int | None:
        t = None
        for p in self.comps.values():
            t = min_trunc(t, p.trunc)
        return t

    def is_zero(self) -> bool:
        return not self.comps

    __bool__ = lambda self: bool(self.comps)

    def _check(self, other: "DiffForm"):
        if self.ring != other.ring:
            raise VariableMismatch(f"variable-set mismatch: {self.ring.names} vs {other.ring.names}")
        if self.k != other.k and self.comps and other.comps:
            raise ValueError(f"cannot add a {self.k}-form and a {other.k}-form")

    def __add__(self, other: "DiffForm") -> "DiffForm":
        self._check(other)
        k = self.k if self.comps else other.k
        out = dict(self.comps)
        for idx, p in other.comps.items():
            _acc(out, idx, p)
        return DiffForm._raw(self.ring, k, out)

    def __neg__(self):
        return DiffForm._raw(self.ring, self.k, {i: -p for i, p in self.comps.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c) -> "DiffForm":
        """Multiply by a scalar or a function (PolySeries)."""
        return DiffForm._raw(self.ring, self.k, {i: p * c for i, p in self.comps.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, DiffForm):
            return NotImplemented
        if self.ring != other.ring:
            return False
        if self.k != other.k:
            return self.is_zero() and other.is_zero()
        return (self - other).is_zero()

    __hash__ = None

    def wedge(self, other: "DiffForm") -> "DiffForm":
        return form_wedge(self, other)

    def d(self) -> "DiffForm":
        return form_d(self)

    def is_closed(self) -> bool:
        return form_d(self).is_zero()

    def terms(self) -> Iterator[tuple[tuple[int, ...], tuple[int, ...], Scalar]]:
        """(monomial exponents, ascending index subset, coefficient) triples."""
        for idx, p in self.comps.items():
            for e, c in p.items():
                yield e, idx, c

    def homogeneous_parts(self) -> dict[int, "DiffForm"]:
        """Split by polynomial degree m of the coefficients."""
        parts: dict[int, dict] = {}
        for idx, p in self.comps.items():
            for m, q in p.homogeneous_parts().items():
                parts.setdefault(m, {})[idx] = q
        return {m: DiffForm(self.ring, self.k, c) for m, c in parts.items()}

    def form_token(self, idx: tuple[int, ...]) -> str:
        names = [_suffix(self.ring.names[j]) for j in idx]
        if len(idx) == 1:
            return "d" + (names[0] if names[0] == "t" else "x" + names[0])
        return "d" + "".join(names)

    def __str__(self):
        pieces = []
        for idx in sorted(self.comps):
            token = self.form_token(idx) if idx else ""
            p = self.comps[idx]
            for e in sorted(p.terms, key=lambda e: (e, sum(e))):
                mono = monomial_text(self.ring, e)
                body = "*".join(x for x in (mono, token) if x)
                pieces.append(format_term(p.terms[e], body))
        return join_terms(pieces)

    __repr__ = lambda self: f"DiffForm({str(self)!r}, k={self.k})"


# ---------------------------------------------------------------------------
# vector fields

def vf_apply(X: VectorField, f: PolySeries) -> PolySeries:
    """X(f) = sum_j X_j d_j f."""
    out = f.ring.zero()
    for j, p in X.comps.items():
        out = out + p * f.partial(j)
    return out


def vf_bracket(X: VectorField, Y: VectorField) -> VectorField:
    X._check(Y)
    out: dict = {}
    for j in set(X.comps) | set(Y.comps):
        val = vf_apply(X, Y.component(j)) - vf_apply(Y, X.component(j))
        if not val.is_zero():
            out[j] = val
    return VectorField(X.ring, out)


def vf_div(X: VectorField) -> PolySeries:
    out = X.ring.zero()
    for j, p in X.comps.items():
        out = out + p.partial(j)
    return out


def euler_field(ring: PolyRing, variables=None) -> VectorField:
    """E = sum_j x_j d_j over ``variables`` (all by default)."""
    idx = [ring.index(v) for v in (variables if variables is not None else ring.names)]
    return VectorField(ring, {j: ring.var(j) for j in idx})


# ---------------------------------------------------------------------------
# forms

def form_d(w: DiffForm) -> DiffForm:
    out: dict = {}
    for idx, p in w.comps.items():
        for j in range(w.ring.nvars):
            if j in idx:
                continue
            dp = p.partial(j)
            if dp.is_zero():
                continue
            pos = sum(1 for i in idx if i < j)
            key = tuple(sorted(idx + (j,)))
            _acc(out, key, dp if pos % 2 == 0 else -dp)
    return DiffForm._raw(w.ring, w.k + 1, out)


def form_wedge(a: DiffForm, b: DiffForm) -> DiffForm:
    if a.ring != b.ring:
        raise VariableMismatch(f"variable-set mismatch: {a.ring.names} vs {b.ring.names}")
    k = a.k + b.k
    if k > a.ring.nvars:
        return DiffForm(a.ring, k, {})
    out: dict = {}
    for i1, p1 in a.comps.items():
        for i2, p2 in b.comps.items():
            s, key = subset_sign(i1 + i2)
            if s == 0:
                continue
            prod = p1 * p2
            _acc(out, key, prod if s > 0 else -prod)
    return DiffForm._raw(a.ring, k, out)


def form_contract(X: VectorField, w: DiffForm) -> DiffForm:
    """Interior product i_X w (degree k-1)."""
    if X.ring != w.ring:
        raise VariableMismatch(f"variable-set mismatch: {X.ring.names} vs {w.ring.names}")
    if w.k == 0:
        raise ValueError("contraction of a 0-form")
    out: dict = {}
    for idx, p in w.comps.items():
        for pos, j in enumerate(idx):
            xj = X.comps.get(j)
            if xj is None:
                continue
            val = xj * p
            _acc(out, idx[:pos] + idx[pos + 1:], val if pos % 2 == 0 else -val)
    return DiffForm._raw(w.ring, w.k - 1, out)


def form_lie(X: VectorField, w: DiffForm) -> DiffForm:
    """Lie derivative via Cartan's formula L_X = d i_X + i_X d."""
    if w.k == 0:
        f = w.comps.get((), w.ring.zero())
        return DiffForm(w.ring, 0, {(): vf_apply(X, f)})
    out = form_d(form_contract(X, w))
    if w.k < w.ring.nvars:
        out = out + form_contract(X, form_d(w))
    return out


def lambda_action(X: VectorField, w: DiffForm, lam) -> DiffForm:
    """X(w) = L_X w + lam * div(X) * w."""
    lam = as_scalar(lam)
    out = form_lie(X, w)
    if lam:
        div = vf_div(X)
        if not div.is_zero():
            out = out + w * (div * lam)
    return out


def int_op(w: DiffForm) -> DiffForm:
    """The homotopy operator: (1/(k+m)) i_E on each piece with degree-m coefficients."""
    if w.k == 0:
        # i_E kills functions; only the constant piece has no valid weight
        if any(m == 0 for m in w.homogeneous_parts()):
            raise EulerWeightZero("Euler weight zero")
        return DiffForm(w.ring, 0, {})
    E = euler_field(w.ring)
    out = DiffForm(w.ring, w.k - 1, {})
    for m, piece in w.homogeneous_parts().items():
        weight = w.k + m
        if weight == 0:
            raise EulerWeightZero("Euler weight zero")
        out = out + form_contract(E, piece) * Scalar(Fraction(1, weight))
    return out


def form_from_vf(X: VectorField) -> DiffForm:
    """i_X(vol) with vol the ascending wedge of all ring variables."""
    n = X.ring.nvars
    out = {}
    for j, p in X.comps.items():
        idx = tuple(i for i in range(n) if i != j)
        out[idx] = p if j % 2 == 0 else -p
    return DiffForm(X.ring, n - 1, out)


def vf_from_form(w: DiffForm) -> VectorField:
    """The unique X with i_X(vol) = w, for an (n-1)-form w."""
    n = w.ring.nvars
    if w.is_zero():
        return VectorField(w.ring, {})
    if w.k != n - 1:
        raise ValueError(f"vf_from_form needs an {n - 1}-form, got degree {w.k}")
    out = {}
    for idx, p in w.comps.items():
        (j,) = set(range(n)) - set(idx)
        out[j] = p if j % 2 == 0 else -p
    return VectorField(w.ring, out)
