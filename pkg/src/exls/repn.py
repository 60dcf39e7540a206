"""E(5,10) in the (0,1,1,1,1) grading, as a sequence of E(1,6)-modules g_r.

Each g_r is split further by the (2,2,2,2,2) grading into finite slices
g_{r,k}, k >= 2r-2.  Everything here is exact linear algebra on those slices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .e16k16 import IDX, E16Elt
from .embeddings import e16_basis, psi
from .formcalc import DiffForm, VectorField, form_d, vf_div
from .linalg import RowReducer
from .report import VerifyReport
from .scalars import Scalar
from .series import RING_T, RING_X5, PolySeries
from .vfalgebras import E510Elt, GradingType510, bracket_e510, degree_510

__all__ = [
    "GrSlice", "WeightVec", "SliceWindowError", "NotAnEigenvector", "DEFAULT_X1MAX",
    "enumerate_slice", "weight_of", "annihilated_by_negative", "generation_check",
    "singular_absence", "negative_basis", "local_basis", "cartan_elements", "v_r",
    "generation_displays", "slice_dimension_check", "decompose", "TYPE_MODULE", "TYPE_FINE",
]

TYPE_MODULE = GradingType510(0, 1, 1, 1, 1)
TYPE_FINE = GradingType510(2, 2, 2, 2, 2)
DEFAULT_X1MAX = 6
ITERATION_CAP = 50


class SliceWindowError(ValueError):
    pass


class NotAnEigenvector(ValueError):
    pass


@dataclass
class GrSlice:
    r: int
    k: int
    basis: list[E510Elt]

    @property
    def dim(self) -> int:
        return len(self.basis)


@dataclass(frozen=True)
class WeightVec:
    a: int
    b: int
    c: int
    d: Fraction

    def __str__(self):
        return f"({self.a},{self.b},{self.c}; {self.d})"


def _compositions(total: int, parts: int):
    if total < 0:
        return
    for cut in itertools.combinations(range(total + parts - 1), parts - 1):
        prev, out = -1, []
        for c in cut:
            out.append(c - prev - 1)
            prev = c
        out.append(total + parts - 2 - prev)
        yield tuple(out)


def _half(v: int) -> int | None:
    return v // 2 if v >= 0 and v % 2 == 0 else None


def _mono(e1: int, rest: tuple[int, ...]) -> PolySeries:
    return RING_X5.monomial((e1,) + rest)


def _slice_monomials(r: int, k: int):
    """Monomial fields (if k even) or monomial 2-forms (if k odd) in g_{r,k}."""
    if k % 2 == 0:
        out = []
        e1 = _half(k - 2 * r + 2)
        if e1 is not None:
            out += [VectorField(RING_X5, {0: _mono(e1, e)}) for e in _compositions(r, 4)]
        e1 = _half(k - 2 * r)
        if e1 is not None:
            out += [VectorField(RING_X5, {j: _mono(e1, e)})
                    for j in range(1, 5) for e in _compositions(r + 1, 4)]
        return 0, out
    out = []
    e1 = _half(k - 2 * r - 1)
    if e1 is not None:
        out += [DiffForm(RING_X5, 2, {(0, j): _mono(e1, e)})
                for j in range(1, 5) for e in _compositions(r + 1, 4)]
    e1 = _half(k - 2 * r + 1)
    if e1 is not None:
        out += [DiffForm(RING_X5, 2, {(i, j): _mono(e1, e)})
                for i in range(1, 5) for j in range(i + 1, 5) for e in _compositions(r, 4)]
    return 1, out


def _to_vec(p):
    if isinstance(p, PolySeries):
        return dict(p.items())
    return {(idx, e): c for e, idx, c in p.terms()}


@lru_cache(maxsize=256)
def _slice_cached(r: int, k: int) -> tuple:
    parity, monos = _slice_monomials(r, k)
    op = vf_div if parity == 0 else form_d
    rr = RowReducer()
    for m in monos:
        rr.add(_to_vec(op(m)))
    basis = []
    for rel in rr.kernel:
        if parity == 0:
            v = VectorField(RING_X5)
            for i, c in rel.items():
                v = v + monos[i] * c
            basis.append(E510Elt(v, check=False))
        else:
            w = DiffForm(RING_X5, 2)
            for i, c in rel.items():
                w = w + monos[i] * c
            basis.append(E510Elt(odd=w, check=False))
    return tuple(basis)


def enumerate_slice(r: int, k: int, x1max: int = DEFAULT_X1MAX) -> GrSlice:
    """Basis of g_{r,k}: kernel of div (k even) or d (k odd) on the monomial span."""
    if r < -1:
        raise ValueError("r must be at least -1")
    if k < 2 * r - 2:
        raise ValueError(f"k = {k} is below the lowest slice 2r-2 = {2 * r - 2}")
    if k > 2 * r - 1 + 2 * x1max:
        raise SliceWindowError(f"slice ({r}, {k}) needs x1-degree above the window {x1max}")
    return GrSlice(r, k, list(_slice_cached(r, k)))


# ---------------------------------------------------------------------------
# distinguished elements

def _field(comps) -> E510Elt:
    return E510Elt(VectorField(RING_X5, comps), check=False)


def cartan_elements() -> list[tuple[str, E510Elt]]:
    x = RING_X5.var
    out = []
    for i in (2, 3, 4):
        out.append((f"x{i}*D{i} - x{i + 1}*D{i + 1}", _field({i - 1: x(i - 1), i: -x(i)})))
    out.append(("z", psi(E16Elt.dt(RING_T.var("t") * 2))))
    return out


def negative_basis() -> list[tuple[str, E510Elt]]:
    out = [("D1", _field({0: RING_X5.one()}))]
    for i in IDX:
        for j in IDX:
            if i < j:
                out.append((f"d{i}{j}", E510Elt(odd=DiffForm(RING_X5, 2, {(i - 1, j - 1): RING_X5.one()}),
                                                check=False)))
    return out


@lru_cache(maxsize=1)
def local_basis() -> tuple[tuple[int, E510Elt], ...]:
    """psi-images of the E(1,6) basis in principal degrees -2..1, with their fine degree."""
    out = []
    for b in e16_basis(1):
        pb = psi(b)
        k = degree_510(pb, TYPE_FINE)
        if isinstance(k, int) and k <= 1:
            out.append((k, pb))
    return tuple(out)


def v_r(r: int) -> E510Elt:
    if r == -1:
        return _field({4: RING_X5.one()})
    if r < -1:
        raise ValueError("r must be at least -1")
    return _field({0: RING_X5.var(1, r)})


# ---------------------------------------------------------------------------
# weights

def _eigenvalue(h: E510Elt, v: E510Elt, name: str) -> Scalar:
    hv = bracket_e510(h, v)
    vv = v.to_vec()
    key, c = next(iter(vv.items()))
    lam = hv.to_vec().get(key, Scalar()) * c.inv()
    if hv != v * lam:
        raise NotAnEigenvector(f"not an eigenvector of ad({name})")
    return lam


def weight_of(v: E510Elt) -> WeightVec:
    if v.is_zero():
        raise NotAnEigenvector("the zero vector has no weight")
    vals = []
    for name, h in cartan_elements():
        lam = _eigenvalue(h, v, name)
        if not lam.is_rational():
            raise NotAnEigenvector(f"non-rational eigenvalue of ad({name})")
        vals.append(lam.to_fraction())
    a, b, c = (int(x) if x.denominator == 1 else x for x in vals[:3])
    return WeightVec(a, b, c, vals[3])


def annihilated_by_negative(v: E510Elt) -> bool:
    return all(bracket_e510(x, v).is_zero() for _, x in negative_basis())


def expected_weight(r: int) -> WeightVec:
    if r == -1:
        return WeightVec(0, 0, 1, Fraction(1, 2))
    return WeightVec(r, 0, 0, Fraction(-r, 2) - 2)


# ---------------------------------------------------------------------------
# generation

def generation_displays(r: int, kmax: int = 3) -> list[tuple[str, E510Elt, E510Elt]]:
    """(label, computed, expected) for the three ad-computations on v_r, k = 1..kmax."""
    x = RING_X5.var
    v = v_r(r)
    out = []
    for k in range(1, kmax + 1):
        a = _field({3: x(0, k) * x(2)})
        exp = _field({3: x(0, k - 1) * x(1, r) * x(2) * -k})
        out.append((f"[x1^{k}*x3*D4, v_{r}]", bracket_e510(a, v), exp))
        a = _field({1: x(0, k) * x(2)})
        comps = {1: x(0, k - 1) * x(1, r) * x(2) * -k}
        if r >= 1:
            comps[0] = x(0, k) * x(1, r - 1) * x(2) * r
        out.append((f"[x1^{k}*x3*D2, v_{r}]", bracket_e510(a, v), _field(comps)))
    w = E510Elt(odd=DiffForm(RING_X5, 2, {(1, 2): x(0), (0, 2): x(1)}), check=False)
    exp = E510Elt(odd=DiffForm(RING_X5, 2, {(1, 2): x(1, r) * -(r + 1)}), check=False)
    out.append((f"[x1*d23 + x2*d13, v_{r}]", bracket_e510(w, v), exp))
    return out


def _fine_degree(e: E510Elt) -> int:
    k = degree_510(e, TYPE_FINE)
    if not isinstance(k, int):
        raise ValueError(f"element is not homogeneous in the fine grading: {e}")
    return k


def generation_check(r: int, x1max: int = 3, kmax: int | None = None) -> VerifyReport:
    """Breadth-first closure of v_r under the local part of psi(E(1,6)).

    Slices up to kmax are compared with enumerate_slice; intermediate
    vectors are allowed up to kmax + 2, since ad(D1) lowers k by 2.
    """
    if r < -1:
        raise ValueError("r must be at least -1")
    if kmax is None:
        kmax = 2 * r - 1 + 2 * x1max
    kcap = kmax + 2
    rep = VerifyReport("generation", {"r": r, "x1max": x1max, "kmax": kmax})
    if r >= 0:
        for label, got, exp in generation_displays(r):
            rep.record(label, str(got) == str(exp), str(exp), str(got))
    local = local_basis()
    reducers: dict[int, RowReducer] = {}

    def absorb(v: E510Elt) -> bool:
        k = _fine_degree(v)
        rr = reducers.setdefault(k, RowReducer(track=False))
        before = rr.rank
        rr.add(v.to_vec())
        return rr.rank > before

    start = v_r(r)
    absorb(start)
    frontier = [start]
    rounds = 0
    while frontier and rounds < ITERATION_CAP:
        rounds += 1
        nxt = []
        for v in frontier:
            kv = _fine_degree(v)
            for kx, x in local:
                if kv + kx > kcap:
                    continue
                w = bracket_e510(x, v)
                if not w.is_zero() and absorb(w):
                    nxt.append(w)
        frontier = nxt
    if frontier:
        rep.inconclusive = True
        rep.note(f"span did not stabilize within {ITERATION_CAP} rounds")
    rep.note(f"stabilized after {rounds} rounds")
    for k in range(2 * r - 2, kmax + 1):
        sl = enumerate_slice(r, k, x1max=max(x1max, (k - 2 * r + 3) // 2))
        got = reducers.get(k).rank if k in reducers else 0
        rep.record(f"slice g_({r},{k}) generated", got == sl.dim, f"dim {sl.dim}", f"rank {got}")
    return rep.finish()


# ---------------------------------------------------------------------------
# singular vectors

def singular_absence(r: int) -> VerifyReport:
    """No nonzero v in g_{r,2r-1} with [L_<0, v] = 0."""
    if r < 1:
        raise ValueError("r must be at least 1")
    k = 2 * r - 1
    sl = enumerate_slice(r, k)
    rep = VerifyReport("singular-absence", {"r": r, "k": k, "slice_dim": sl.dim})
    negs = negative_basis()
    rr = RowReducer()
    for b in sl.basis:
        vec = {}
        for n, (_, x) in enumerate(negs):
            for key, c in bracket_e510(x, b).to_vec().items():
                vec[(n, key)] = c
        rr.add(vec)
    rep.record(f"annihilated subspace of g_({r},{k})", not rr.kernel, "dimension 0",
               f"dimension {len(rr.kernel)}")
    # the d_kt pairing alone already forces P_ij = 0
    rr2 = RowReducer()
    for b in sl.basis:
        vec = {}
        for n, (name, x) in enumerate(negs):
            if name == "D1":
                continue
            for key, c in bracket_e510(x, b).to_vec().items():
                vec[(n, key)] = c
        rr2.add(vec)
    rep.record(f"d_kt pairing on g_({r},{k})", not rr2.kernel, "dimension 0",
               f"dimension {len(rr2.kernel)}")
    return rep.finish()


# ---------------------------------------------------------------------------
# dimension cross-checks

def _binom(n: int, k: int) -> int:
    from math import comb
    return comb(n, k) if n >= 0 and 0 <= k <= n else 0


def closed_two_forms_dim(r: int) -> int:
    """rank of d on 1-forms of degree r+1 in x2..x5 (closed 2-forms = exact ones)."""
    rr = RowReducer(track=False)
    for e in _compositions(r + 1, 4):
        for j in range(1, 5):
            w = DiffForm(RING_X5, 1, {(j,): _mono(0, e)})
            rr.add(_to_vec(form_d(w)))
    return rr.rank


def slice_dimension_check(rmax: int = 3) -> VerifyReport:
    rep = VerifyReport("slice-dimensions", {"rmax": rmax})
    for r in range(1, rmax + 1):
        low = enumerate_slice(r, 2 * r - 2).dim
        rep.record(f"dim g_({r},{2 * r - 2}) = C(r+3,3)", low == _binom(r + 3, 3),
                   str(_binom(r + 3, 3)), str(low))
        odd = enumerate_slice(r, 2 * r - 1).dim
        exact = closed_two_forms_dim(r)
        rep.record(f"dim g_({r},{2 * r - 1}) = rank d on 1-forms", odd == exact, str(exact), str(odd))
    for r in range(-1, rmax + 1):
        for k in range(2 * r - 2, 2 * r + 5):
            for b in enumerate_slice(r, k).basis:
                ok = (degree_510(b, TYPE_MODULE) == r and degree_510(b, TYPE_FINE) == k
                      and vf_div(b.even).is_zero() and form_d(b.odd).is_zero())
                rep.record(f"slice element {b} in g_({r},{k})", ok, f"degrees ({r},{k})",
                           f"({degree_510(b, TYPE_MODULE)},{degree_510(b, TYPE_FINE)})")
    return rep.finish()


def grading_additivity_check(rmax: int = 3, extra: int = 4) -> VerifyReport:
    """ad of local psi-images maps g_{r,k} into g_{r,k+deg}."""
    rep = VerifyReport("grading-additivity", {"rmax": rmax})
    local = local_basis()
    for r in range(-1, rmax + 1):
        for k in range(2 * r - 2, 2 * r + extra + 1):
            for b in enumerate_slice(r, k).basis:
                for kx, x in local:
                    w = bracket_e510(x, b)
                    if w.is_zero():
                        continue
                    ok = degree_510(w, TYPE_MODULE) == r and degree_510(w, TYPE_FINE) == k + kx
                    rep.record(f"[{x}, {b}]", ok, f"({r},{k + kx})",
                               f"({degree_510(w, TYPE_MODULE)},{degree_510(w, TYPE_FINE)})")
    return rep.finish()


def decompose(r: int, kmax: int, x1max: int = 3) -> list[GrSlice]:
    return [enumerate_slice(r, k, x1max) for k in range(2 * r - 2, kmax + 1)]
