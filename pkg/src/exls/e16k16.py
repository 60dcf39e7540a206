"""E(1,6) in its tensor presentation, and the contact superalgebra K(1,6).

E(1,6) elements are kept as four separate summands, each a finite sum of
(basis tensor) x (series in t):

* ``w1``   f(t) d/dt
* ``sl4``  x_i d/dx_j (x) f(t), i, j in 2..5, traceless in total
* ``s2``   x_i x_j (x) f(t) dt, i <= j
* ``lam2`` d_ij (x) f(t) dt, i < j

K(1,6) elements are sums of t^n * (Grassmann monomial) in either the
xi/eta or the rho coordinates.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator, Mapping

from .formcalc import (DiffForm, VectorField, form_contract, form_d, form_lie, form_wedge,
                       int_op, vf_from_form)
from .grassmann import (FULL, GEN_NAMES, RHO, XIETA, CoordinateMismatch, GrassElt,
                        generator_index, gr_change_coords, left_partial_mono, mul_sign,
                        popcount, sharp_mono, star_mono)
from .scalars import I, ONE, Scalar, as_scalar
from .series import RING_T, RING_X2345, PolySeries, format_term, join_terms, min_trunc
from .vfalgebras import INHOMOGENEOUS, InvariantViolation

__all__ = [
    "E16Elt", "K16Elt", "HeadroomError", "ClosureViolation", "MIXED",
    "bracket_e16", "degree_e16_principal", "bracket_k16", "filtration_level",
    "op_A", "op_iota", "is_exceptional_pair", "bracket_iota_image",
    "degree_k16_type", "degree_k16_principal", "gl_bracket",
]

MIXED = "mixed"
IDX = (2, 3, 4, 5)
_HALF = Scalar(Fraction(1, 2))


class HeadroomError(ValueError):
    pass


class ClosureViolation(AssertionError):
    pass


# ---------------------------------------------------------------------------
# helpers for the finite-dimensional tensor factors (indices 2..5)

def _x(i: int) -> PolySeries:
    return RING_X2345.var(i - 2)


def gl_field(i: int, j: int) -> VectorField:
    """x_i d/dx_j over x2..x5."""
    return VectorField(RING_X2345, {j - 2: _x(i)})


def _field_to_gl(X: VectorField) -> dict:
    out = {}
    for e, j, c in X.terms():
        if sum(e) != 1:
            raise InvariantViolation(f"not a linear vector field: {X}")
        out[(e.index(1) + 2, j + 2)] = c
    return out


def _poly_to_s2(p: PolySeries) -> dict:
    out = {}
    for e, c in p.items():
        if sum(e) != 2:
            raise InvariantViolation(f"not a quadratic form: {p}")
        idx = [k + 2 for k, v in enumerate(e) for _ in range(v)]
        out[tuple(idx)] = c
    return out


def _form_to_lam2(w: DiffForm) -> dict:
    out = {}
    for e, idx, c in w.terms():
        if sum(e) or len(idx) != 2:
            raise InvariantViolation(f"not a constant 2-form: {w}")
        out[(idx[0] + 2, idx[1] + 2)] = c
    return out


def _s2_poly(key) -> PolySeries:
    i, j = key
    return _x(i) * _x(j)


def _lam2_form(key) -> DiffForm:
    i, j = key
    return DiffForm.basis(RING_X2345, (i - 2, j - 2))


def gl_bracket(a: tuple[int, int], b: tuple[int, int]) -> dict:
    """[x_i d_j, x_k d_l] = delta_jk x_i d_l - delta_li x_k d_j."""
    (i, j), (k, l) = a, b
    out: dict = {}
    if j == k:
        out[(i, l)] = out.get((i, l), 0) + 1
    if l == i:
        out[(k, j)] = out.get((k, j), 0) - 1
    return {key: Scalar(v) for key, v in out.items() if v}


@lru_cache(maxsize=None)
def _gl_on_s2(a, s) -> tuple:
    X = gl_field(*a)
    p = _s2_poly(s)
    val = sum((X.comps[j] * p.partial(j) for j in X.comps), RING_X2345.zero())
    return tuple(_poly_to_s2(val).items())


@lru_cache(maxsize=None)
def _gl_on_lam2(a, l) -> tuple[tuple, tuple]:
    X = gl_field(*a)
    w = _lam2_form(l)
    one = form_contract(X, w)
    s2 = _poly_to_s2(int_op(one).comps.get((), RING_X2345.zero())) if not one.is_zero() else {}
    lam = _form_to_lam2(form_lie(X, w))
    return tuple(s2.items()), tuple(lam.items())


@lru_cache(maxsize=None)
def _s2_lam2(s, l) -> tuple:
    p = _s2_poly(s)
    three = form_wedge(form_d(DiffForm.function(p)), _lam2_form(l))
    return tuple(_field_to_gl(-vf_from_form(three)).items())


@lru_cache(maxsize=None)
def _lam2_lam2(l1, l2) -> tuple[Scalar, tuple]:
    s, w = _lam2_form(l1), _lam2_form(l2)
    top = form_wedge(s, w)
    c = top.comps.get((0, 1, 2, 3), RING_X2345.zero()).coeff((0, 0, 0, 0))
    a = vf_from_form(form_wedge(int_op(s), w))
    b = vf_from_form(form_wedge(s, int_op(w)))
    return c, tuple(_field_to_gl((a - b) * _HALF).items())


# ---------------------------------------------------------------------------
# E(1,6)

def _acc(out: dict, key, val: PolySeries):
    if val.is_zero() and val.trunc is None:
        return
    cur = out.get(key)
    out[key] = val if cur is None else cur + val


def _dt(f: PolySeries) -> PolySeries:
    return f.partial(0)


class E16Elt:
    __slots__ = ("w1", "sl4", "s2", "lam2")

    def __init__(self, w1: PolySeries | None = None, sl4: Mapping | None = None,
                 s2: Mapping | None = None, lam2: Mapping | None = None, check: bool = True):
        self.w1 = w1 if w1 is not None else RING_T.zero()
        if self.w1.ring != RING_T:
            raise InvariantViolation("coefficients must be series in t")
        self.sl4 = self._norm(sl4, "sl4")
        self.s2 = self._norm(s2, "s2")
        self.lam2 = self._norm(lam2, "lam2")
        if check and self.sl4:
            tr = RING_T.zero()
            for (i, j), f in self.sl4.items():
                if i == j:
                    tr = tr + f
            if not tr.is_zero():
                raise InvariantViolation(f"sl4 part is not traceless (trace {tr})")

    @staticmethod
    def _norm(parts: Mapping | None, kind: str) -> dict:
        out: dict = {}
        for key, f in (parts or {}).items():
            i, j = key
            if i not in IDX or j not in IDX:
                raise InvariantViolation(f"{kind} index {key} outside 2..5")
            if not isinstance(f, PolySeries):
                f = RING_T.const(f)
            if f.ring != RING_T:
                raise InvariantViolation("coefficients must be series in t")
            if kind == "s2" and i > j:
                i, j = j, i
            elif kind == "lam2":
                if i == j:
                    continue
                if i > j:
                    i, j, f = j, i, -f
            _acc(out, (i, j), f)
        return {k: v for k, v in out.items() if not v.is_zero()}

    # -- constructors ----------------------------------------------------
    @classmethod
    def dt(cls, f) -> "E16Elt":
        return cls(w1=f if isinstance(f, PolySeries) else RING_T.const(f))

    @classmethod
    def sl(cls, X: VectorField | Mapping, f=None) -> "E16Elt":
        f = RING_T.one() if f is None else f
        gl = _field_to_gl(X) if isinstance(X, VectorField) else dict(X)
        return cls(sl4={k: f * c for k, c in gl.items()})

    @classmethod
    def quad(cls, i: int, j: int, f=None) -> "E16Elt":
        return cls(s2={(i, j): RING_T.one() if f is None else f})

    @classmethod
    def form(cls, i: int, j: int, f=None) -> "E16Elt":
        return cls(lam2={(i, j): RING_T.one() if f is None else f})

    # -- structure -------------------------------------------------------
    def parts(self):
        return self.w1, self.sl4, self.s2, self.lam2

    def is_zero(self) -> bool:
        return self.w1.is_zero() and not self.sl4 and not self.s2 and not self.lam2

    __bool__ = lambda self: not self.is_zero()

    def parity(self) -> int | None:
        even = not self.w1.is_zero() or bool(self.sl4)
        odd = bool(self.s2) or bool(self.lam2)
        if even and not odd:
            return 0
        if odd and not even:
            return 1
        return None

    def even_part(self) -> "E16Elt":
        return E16Elt(self.w1, self.sl4, check=False)

    def odd_part(self) -> "E16Elt":
        return E16Elt(None, None, self.s2, self.lam2, check=False)

    @property
    def trunc(self) -> int | None:
        t = self.w1.trunc
        for d in (self.sl4, self.s2, self.lam2):
            for f in d.values():
                t = min_trunc(t, f.trunc)
        return t

    def _combine(self, other: "E16Elt", sign: int) -> "E16Elt":
        def merge(a, b):
            out = dict(a)
            for k, v in b.items():
                _acc(out, k, v if sign > 0 else -v)
            return out
        w = self.w1 + other.w1 if sign > 0 else self.w1 - other.w1
        return E16Elt(w, merge(self.sl4, other.sl4), merge(self.s2, other.s2),
                      merge(self.lam2, other.lam2), check=False)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return self * -1

    def __mul__(self, c):
        return E16Elt(self.w1 * c, {k: v * c for k, v in self.sl4.items()},
                      {k: v * c for k, v in self.s2.items()},
                      {k: v * c for k, v in self.lam2.items()}, check=False)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, E16Elt):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def terms(self) -> Iterator[tuple[str, tuple, int, Scalar]]:
        """(summand, basis key, t-exponent, coefficient) quadruples."""
        for (n,), c in self.w1.items():
            yield "w1", (), n, c
        for kind, d in (("sl4", self.sl4), ("s2", self.s2), ("lam2", self.lam2)):
            for key, f in d.items():
                for (n,), c in f.items():
                    yield kind, key, n, c

    def to_vec(self) -> dict:
        return {(kind, key, n): c for kind, key, n, c in self.terms()}

    @classmethod
    def from_vec(cls, vec: Mapping) -> "E16Elt":
        parts: dict = {"w1": {}, "sl4": {}, "s2": {}, "lam2": {}}
        for (kind, key, n), c in vec.items():
            parts[kind].setdefault(key, {})[(n,)] = c
        w1 = RING_T.from_dict(parts["w1"].get((), {}))
        conv = {kind: {k: RING_T.from_dict(t) for k, t in parts[kind].items()}
                for kind in ("sl4", "s2", "lam2")}
        return cls(w1, conv["sl4"], conv["s2"], conv["lam2"])

    def __str__(self):
        pieces = []
        order = {"w1": 0, "sl4": 1, "s2": 2, "lam2": 3}
        for kind, key, n, c in sorted(self.terms(), key=lambda x: (order[x[0]], x[1], x[2])):
            tpart = "" if n == 0 else ("t" if n == 1 else f"t^{n}")
            if kind == "w1":
                body = "Dt"
            elif kind == "sl4":
                body = f"x{key[0]}*D{key[1]}"
            elif kind == "s2":
                body = (f"x{key[0]}^2" if key[0] == key[1] else f"x{key[0]}*x{key[1]}") + "*dt"
            else:
                body = f"d{key[0]}{key[1]}*dt"
            pieces.append(format_term(c, "*".join(p for p in (tpart, body) if p)))
        text = join_terms(pieces)
        if self.trunc is not None:
            text += f" + O(t^{self.trunc})"
        return text

    __repr__ = lambda self: f"E16Elt({str(self)!r})"


def _even_on_odd(fw: PolySeries, fsl: dict, s2: dict, lam2: dict):
    """[even, odd] for even = fw*Dt + sum X (x) f, returned as (s2, lam2) dicts."""
    out_s2: dict = {}
    out_l2: dict = {}
    if not fw.is_zero() or fw.trunc is not None:
        dfw = _dt(fw)
        for k, g in s2.items():
            _acc(out_s2, k, fw * _dt(g) + dfw * g * _HALF)
        for k, g in lam2.items():
            _acc(out_l2, k, fw * _dt(g) - dfw * g * _HALF)
    for a, f in fsl.items():
        df = _dt(f)
        for s, g in s2.items():
            fg = f * g
            for key, c in _gl_on_s2(a, s):
                _acc(out_s2, key, fg * c)
        for l, g in lam2.items():
            fg = f * g
            dfg = df * g
            s2img, lamimg = _gl_on_lam2(a, l)
            for key, c in s2img:
                _acc(out_s2, key, dfg * c)
            for key, c in lamimg:
                _acc(out_l2, key, fg * c)
    return out_s2, out_l2


def bracket_e16(a: E16Elt, b: E16Elt) -> E16Elt:
    w = a.w1 * _dt(b.w1) - _dt(a.w1) * b.w1
    sl: dict = {}
    for ka, f in a.sl4.items():
        for kb, g in b.sl4.items():
            fg = None
            for key, c in gl_bracket(ka, kb).items():
                fg = f * g if fg is None else fg
                _acc(sl, key, fg * c)
    if not a.w1.is_zero():
        for k, g in b.sl4.items():
            _acc(sl, k, a.w1 * _dt(g))
    if not b.w1.is_zero():
        for k, f in a.sl4.items():
            _acc(sl, k, -(b.w1 * _dt(f)))

    s2a, l2a = _even_on_odd(a.w1, a.sl4, b.s2, b.lam2)
    s2b, l2b = _even_on_odd(b.w1, b.sl4, a.s2, a.lam2)
    s2 = dict(s2a)
    lam2 = dict(l2a)
    for k, v in s2b.items():
        _acc(s2, k, -v)
    for k, v in l2b.items():
        _acc(lam2, k, -v)

    # odd x odd
    for (pa, la), (pb, lb) in (((a.s2, a.lam2), (b.s2, b.lam2)),):
        for s, f in pa.items():
            for l, g in lb.items():
                for key, c in _s2_lam2(s, l):
                    _acc(sl, key, f * g * c)
        for l, f in la.items():
            for s, g in pb.items():
                for key, c in _s2_lam2(s, l):
                    _acc(sl, key, f * g * c)
        for l1, f in la.items():
            for l2, g in lb.items():
                c, gl = _lam2_lam2(l1, l2)
                if c:
                    w = w + f * g * c
                if gl:
                    wr = f * _dt(g) - _dt(f) * g
                    for key, cc in gl:
                        _acc(sl, key, wr * cc)
    return E16Elt(w, sl, s2, lam2, check=False)


def degree_e16_principal(a: E16Elt):
    """Eigenvalue of ad(2t d/dt): t^n Dt -> 2n-2, X t^n -> 2n, quadratic -> 2n+1, 2-form -> 2n-1."""
    shift = {"w1": -2, "sl4": 0, "s2": 1, "lam2": -1}
    vals = {2 * n + shift[kind] for kind, _, n, _ in a.terms()}
    if not vals:
        return None
    return vals.pop() if len(vals) == 1 else INHOMOGENEOUS


# ---------------------------------------------------------------------------
# K(1,6)

class K16Elt:
    """sum c * t^n * m over (n, mask) keys, in one coordinate system."""

    __slots__ = ("terms", "coord", "trunc")

    def __init__(self, terms: Mapping | None = None, coord: str = XIETA, trunc: int | None = None):
        if coord not in GEN_NAMES:
            raise ValueError(f"unknown coordinate system {coord!r}")
        self.coord = coord
        self.trunc = trunc
        out = {}
        for (n, m), c in (terms or {}).items():
            if n < 0 or not 0 <= m <= FULL:
                raise ValueError(f"bad K(1,6) monomial key {(n, m)}")
            c = as_scalar(c)
            if c and (trunc is None or n < trunc):
                out[(n, m)] = c
        self.terms = out

    @classmethod
    def mono(cls, n: int = 0, names: Iterable[str] = (), coeff=ONE, coord: str | None = None,
             trunc: int | None = None) -> "K16Elt":
        names = list(names)
        if coord is None:
            coord = generator_index(names[0])[0] if names else XIETA
        g = GrassElt.mono(names, coeff, coord) if names else GrassElt({0: as_scalar(coeff)}, coord)
        return cls.from_grass(g, n, trunc)

    @classmethod
    def from_grass(cls, g: GrassElt, n: int = 0, trunc: int | None = None) -> "K16Elt":
        return cls({(n, m): c for m, c in g.items()}, g.coord, trunc)

    @classmethod
    def one(cls, coord: str = XIETA) -> "K16Elt":
        return cls({(0, 0): ONE}, coord)

    def _check(self, other: "K16Elt"):
        if self.coord != other.coord:
            raise CoordinateMismatch(f"coordinate mismatch: {self.coord} vs {other.coord}")

    def is_zero(self) -> bool:
        return not self.terms

    __bool__ = lambda self: bool(self.terms)

    def items(self):
        return iter(self.terms.items())

    def parity(self) -> int | None:
        ps = {popcount(m) & 1 for (_, m) in self.terms}
        return ps.pop() if len(ps) == 1 else None

    def __add__(self, other: "K16Elt"):
        if not isinstance(other, K16Elt):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return K16Elt(out, self.coord, min_trunc(self.trunc, other.trunc))

    def __neg__(self):
        return K16Elt({k: -c for k, c in self.terms.items()}, self.coord, self.trunc)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        c = as_scalar(c)
        return K16Elt({k: v * c for k, v in self.terms.items()}, self.coord, self.trunc)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, K16Elt):
            return NotImplemented
        if other.coord != self.coord:
            other = other.to(self.coord)
        return (self - other).is_zero()

    __hash__ = None

    def to(self, coord: str) -> "K16Elt":
        if coord == self.coord:
            return self
        by_n: dict[int, dict] = {}
        for (n, m), c in self.terms.items():
            by_n.setdefault(n, {})[m] = c
        out = {}
        for n, g in by_n.items():
            for m, c in gr_change_coords(GrassElt(g, self.coord), coord).items():
                out[(n, m)] = c
        return K16Elt(out, coord, self.trunc)

    def t_times(self, k: int = 1) -> "K16Elt":
        trunc = None if self.trunc is None else self.trunc + k
        return K16Elt({(n + k, m): c for (n, m), c in self.terms.items()}, self.coord, trunc)

    def to_vec(self) -> dict:
        return dict(self.terms)

    def max_t(self) -> int:
        return max((n for n, _ in self.terms), default=-1)

    def __str__(self):
        names = GEN_NAMES[self.coord]
        pieces = []
        for (n, m) in sorted(self.terms, key=lambda k: (k[0], popcount(k[1]),
                                                        [b for b in range(6) if k[1] >> b & 1])):
            body = []
            if n:
                body.append("t" if n == 1 else f"t^{n}")
            body += [names[b] for b in range(6) if m >> b & 1]
            pieces.append(format_term(self.terms[(n, m)], "*".join(body)))
        text = join_terms(pieces)
        if self.trunc is not None:
            text += f" + O(t^{self.trunc})"
        return text

    __repr__ = lambda self: f"K16Elt({str(self)!r}, {self.coord})"


_PAIRS_XIETA = ((0, 3), (3, 0), (1, 4), (4, 1), (2, 5), (5, 2))
_PAIRS_RHO = tuple((k, k) for k in range(6))


@lru_cache(maxsize=1 << 18)
def _k16_mono_bracket(n: int, a: int, m: int, b: int, coord: str) -> tuple:
    """[t^n m_a, t^m m_b] as a tuple of ((exp, mask), Scalar)."""
    out: dict = {}
    da, db = popcount(a), popcount(b)
    s = mul_sign(a, b)
    if s:
        c = (2 - da) * m - n * (2 - db)
        if c and n + m >= 1:
            key = (n + m - 1, a | b)
            out[key] = out.get(key, 0) + s * c
    pairs = _PAIRS_XIETA if coord == XIETA else _PAIRS_RHO
    par = -1 if da & 1 else 1
    for p, q in pairs:
        s1, ra = left_partial_mono(a, p)
        if not s1:
            continue
        s2, rb = left_partial_mono(b, q)
        if not s2:
            continue
        s3 = mul_sign(ra, rb)
        if not s3:
            continue
        key = (n + m, ra | rb)
        out[key] = out.get(key, 0) + par * s1 * s2 * s3
    return tuple((k, Scalar(v)) for k, v in out.items() if v)


def bracket_k16(f: K16Elt, g: K16Elt, coords: str | None = None) -> K16Elt:
    """Contact bracket, evaluated natively in ``coords`` (default: the inputs' system)."""
    coords = coords or f.coord
    src = f.coord
    if g.coord != src:
        g = g.to(src)
    ff, gg = f.to(coords), g.to(coords)
    out: dict = {}
    for (n, a), c1 in ff.terms.items():
        for (m, b), c2 in gg.terms.items():
            res = _k16_mono_bracket(n, a, m, b, coords)
            if not res:
                continue
            c = c1 * c2
            for key, v in res:
                w = out.get(key)
                out[key] = v * c if w is None else w + v * c
    trunc = min_trunc(f.trunc, g.trunc)
    if trunc is not None:
        trunc -= 1
    return K16Elt(out, coords, trunc).to(src)


def filtration_level(f: K16Elt):
    vals = {n + popcount(m) for (n, m) in f.terms}
    if not vals:
        return None
    return vals.pop() if len(vals) == 1 else MIXED


def degree_k16_type(f: K16Elt, t_deg: int = 1, gen_degs=(1, 1, 1, 0, 0, 0)):
    """Degree under a grading type (xi/eta coordinates): sum of factor degrees minus one."""
    if f.coord != XIETA:
        f = f.to(XIETA)
    vals = {t_deg * n + sum(gen_degs[b] for b in range(6) if m >> b & 1) - 1 for (n, m) in f.terms}
    if not vals:
        return None
    return vals.pop() if len(vals) == 1 else INHOMOGENEOUS


def degree_k16_principal(f: K16Elt):
    """Principal grading of type (2|1,1,1,1,1,1)."""
    vals = {2 * n + popcount(m) - 2 for (n, m) in f.terms}
    if not vals:
        return None
    return vals.pop() if len(vals) == 1 else INHOMOGENEOUS


def _t_power_op(n: int, k: int) -> tuple[int, Fraction]:
    """d_t^k t^n, with negative k meaning homogeneous integration from 0."""
    if k >= 0:
        if n < k:
            return -1, Fraction(0)
        return n - k, Fraction(factorial(n), factorial(n - k))
    return n - k, Fraction(factorial(n), factorial(n - k))


_MINUS_I = -I


@lru_cache(maxsize=None)
def _A_mono(n: int, mask: int, coord: str) -> tuple:
    d = popcount(mask)
    e, coef = _t_power_op(n, 3 - d)
    if not coef:
        return ()
    sign = -1 if (d * (d + 1) // 2) & 1 else 1
    if coord == XIETA:
        s, r = sharp_mono(mask)
        return (((e, r), Scalar(coef * sign * s)),)
    s, r = star_mono(mask)
    return (((e, r), _MINUS_I * Scalar(coef * sign * s)),)


def op_A(f: K16Elt, window: int | None = None) -> K16Elt:
    """A(t^n xi_I) = (-1)^(|I|(|I|+1)/2) d_t^(3-|I|) t^n xi_I^#, computed in f's coordinates."""
    trunc = f.trunc
    if trunc is not None:
        trunc -= 3
        if trunc <= 0:
            raise HeadroomError(f"A needs truncation order at least 4, got {f.trunc}")
    out: dict = {}
    for (n, m), c in f.terms.items():
        for key, v in _A_mono(n, m, f.coord):
            if window is not None and key[0] > window:
                raise HeadroomError(
                    f"A(t^{n} ...) reaches t^{key[0]}; required t-window >= {key[0]}, have {window}")
            w = out.get(key)
            out[key] = v * c if w is None else w + v * c
    return K16Elt(out, f.coord, trunc)


def op_iota(f: K16Elt, window: int | None = None) -> K16Elt:
    return f + op_A(f, window)


def _single_rho_mono(f) -> tuple[int, int]:
    if isinstance(f, tuple):
        return f
    if f.coord != RHO or len(f.terms) != 1:
        raise ValueError("exceptional pairs are defined for single rho monomials")
    return next(iter(f.terms))


def is_exceptional_pair(f, g) -> bool:
    """f, g: single-term rho-coordinate K16Elt or (n, mask) tuples."""
    n, a = _single_rho_mono(f)
    m, b = _single_rho_mono(g)
    da, db = popcount(a), popcount(b)
    return n == 0 and m == 0 and da + db >= 4 and (da <= 1 or db <= 1) and not (a & b)


def bracket_iota_image(f: K16Elt, g: K16Elt) -> tuple[K16Elt, K16Elt]:
    """Return (h, [iota f, iota g]) with iota(h) equal to the bracket.

    Over each pair of rho monomials, h is chosen by the dichotomy
    h = [f,g] + [Af,Ag] when that is nonzero, else [Af,g] + [f,Ag].
    Raises ClosureViolation if iota(h) disagrees with the direct bracket.
    """
    src = f.coord
    fr, gr = f.to(RHO), g.to(RHO)
    h = K16Elt({}, RHO)
    for ka, ca in fr.terms.items():
        fm = K16Elt({ka: ca}, RHO)
        Af = op_A(fm)
        for kb, cb in gr.terms.items():
            gm = K16Elt({kb: cb}, RHO)
            Ag = op_A(gm)
            h1 = bracket_k16(fm, gm) + bracket_k16(Af, Ag)
            h2 = bracket_k16(Af, gm) + bracket_k16(fm, Ag)
            hp = h1 if h1 else h2
            if op_iota(hp) != h1 + h2:
                raise ClosureViolation(f"closure violation at ({fm}, {gm})")
            h = h + hp
    direct = bracket_k16(op_iota(f), op_iota(g))
    if op_iota(h).to(src) != direct:
        raise ClosureViolation(f"closure violation for ({f}, {g})")
    return h.to(src), direct
