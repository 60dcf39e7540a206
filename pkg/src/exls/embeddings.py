"""The embeddings psi: E(1,6) -> E(5,10) and Psi: im(iota) -> E(4,4)."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .e16k16 import (IDX, E16Elt, K16Elt, bracket_e16, bracket_k16, degree_e16_principal, degree_k16_principal, degree_k16_type,
                     op_A, op_iota)
from .formcalc import DiffForm, VectorField
from .grassmann import XIETA, popcount
from .linalg import RowReducer
from .report import VerifyReport
from .scalars import ONE, R2, Scalar
from .series import RING_T, RING_X4, RING_X5, PolySeries
from .vfalgebras import (E44Elt, E510Elt, GradingType510, InvariantViolation, bracket_e44,
                         bracket_e510, degree_510, degree_e44_principal)

__all__ = [
    "psi", "psi_inverse", "PsiImage", "psi_with_provenance", "e16_basis", "grading_element_check",
    "IotaBasis", "build_iota_basis", "Psi", "psi_table_assignments", "verify_hom",
    "corollary_subalgebra_check", "corollary_basis", "CYCLIC", "NotInG0", "NotInImage",
    "TYPE_0_1111", "TYPE_2_1111",
]

TYPE_0_1111 = GradingType510(0, 1, 1, 1, 1)
TYPE_2_1111 = GradingType510(2, 1, 1, 1, 1)
CYCLIC = ((2, 3, 4), (3, 4, 2), (4, 2, 3))
_HALF = Scalar(Fraction(1, 2))
_QUARTER = Scalar(Fraction(1, 4))


class NotInG0(ValueError):
    pass


class NotInImage(ValueError):
    pass


# ---------------------------------------------------------------------------
# psi

def _lift(f: PolySeries) -> PolySeries:
    """f(t) -> f(x1)."""
    return f.substitute_var(RING_X5, {0: 0})


def _x5(i: int) -> PolySeries:
    return RING_X5.var(i - 1)


def _d(i: int, j: int, coeff: PolySeries) -> DiffForm:
    return DiffForm(RING_X5, 2, {(i - 1, j - 1): coeff})


def psi(a: E16Elt) -> E510Elt:
    even: dict = {}
    odd = DiffForm(RING_X5, 2)

    def add(j, p):
        even[j] = even[j] + p if j in even else p

    if not a.w1.is_zero():
        f = _lift(a.w1)
        df = f.partial(0) * -_QUARTER
        add(0, f)
        for k in IDX:
            add(k - 1, df * _x5(k))
    for (i, j), f in a.sl4.items():
        add(j - 1, _lift(f) * _x5(i))
    for (i, j), f in a.s2.items():
        f = _lift(f)
        odd = odd + _d(1, j, f * _x5(i)) + _d(1, i, f * _x5(j))
    for (i, j), f in a.lam2.items():
        f = _lift(f)
        hf = f.partial(0) * _HALF
        odd = odd + _d(i, j, f) + _d(1, j, hf * _x5(i)) - _d(1, i, hf * _x5(j))
    return E510Elt(VectorField(RING_X5, even), odd, check=False)


@dataclass
class PsiImage:
    elt: E510Elt
    summands: tuple[str, ...]


def psi_with_provenance(a: E16Elt) -> PsiImage:
    kinds = tuple(k for k, present in (("w1", not a.w1.is_zero()), ("sl4", bool(a.sl4)),
                                       ("s2", bool(a.s2)), ("lam2", bool(a.lam2))) if present)
    return PsiImage(psi(a), kinds)


def _t_series(p: PolySeries, what: str) -> PolySeries:
    """x1-only coefficient -> series in t."""
    out = {}
    for e, c in p.items():
        if any(e[1:]):
            raise NotInG0(f"{what} has a coefficient depending on x2..x5: {p}")
        out[(e[0],)] = c
    return RING_T.from_dict(out, p.trunc)


def psi_inverse(b: E510Elt) -> E16Elt:
    """Split a g0 element into E(1,6) summands, using the d/dx1 coefficient for W1."""
    for e, j, c in b.even.terms():
        if TYPE_0_1111.field_term(e, j) != 0:
            raise NotInG0(f"monomial {c}*{_mono_text(e)}*D{j + 1} has nonzero degree")
    for e, idx, c in b.odd.terms():
        if TYPE_0_1111.form_term(e, idx) != 0:
            raise NotInG0(f"monomial {c}*{_mono_text(e)}*d{idx[0] + 1}{idx[1] + 1} has nonzero degree")
    w1 = _t_series(b.even.component(0), "the D1 component")
    rest = b.even - psi(E16Elt(w1)).even
    sl4: dict = {}
    for e, j, c in rest.terms():
        others = e[1:]
        if j == 0 or sum(others) != 1:
            raise NotInG0(f"unexpected even monomial {c}*{_mono_text(e)}*D{j + 1}")
        i = others.index(1) + 2
        key = (i, j + 1)
        sl4.setdefault(key, {})[(e[0],)] = c
    sl4 = {k: RING_T.from_dict(v, rest.trunc) for k, v in sl4.items()}

    lam2: dict = {}
    for e, idx, c in b.odd.terms():
        if idx[0] != 0:
            if any(e[1:]):
                raise NotInG0(f"unexpected odd monomial {c}*{_mono_text(e)}*d{idx[0] + 1}{idx[1] + 1}")
            lam2.setdefault((idx[0] + 1, idx[1] + 1), {})[(e[0],)] = c
    lam2 = {k: RING_T.from_dict(v, b.odd.trunc) for k, v in lam2.items()}
    rem = b.odd - psi(E16Elt(lam2=lam2)).odd
    h: dict = {}
    for e, idx, c in rem.terms():
        others = e[1:]
        if idx[0] != 0 or sum(others) != 1:
            raise NotInG0(f"unexpected odd monomial {c}*{_mono_text(e)}*d{idx[0] + 1}{idx[1] + 1}")
        k = others.index(1) + 2
        h.setdefault((k, idx[1] + 1), {})[(e[0],)] = c
    s2: dict = {}
    for (k, j), coeffs in h.items():
        if k < j:
            s2[(k, j)] = RING_T.from_dict(coeffs, rem.trunc)
        elif k == j:
            s2[(k, k)] = RING_T.from_dict(coeffs, rem.trunc) * _HALF
    try:
        out = E16Elt(w1, sl4, s2, lam2)
    except InvariantViolation as exc:
        raise NotInG0(str(exc)) from None
    if psi(out) != b:
        diff = b - psi(out)
        raise NotInG0(f"element is not in g0; residual {diff}")
    return out


def _mono_text(e) -> str:
    from .series import monomial_text
    return monomial_text(RING_X5, e) or "1"


def sl4_basis() -> list[dict]:
    out = [{(i, j): ONE} for i in IDX for j in IDX if i != j]
    for a, b in zip(IDX, IDX[1:]):
        out.append({(a, a): ONE, (b, b): -ONE})
    return out


def e16_basis(window: int, degrees=None) -> list[E16Elt]:
    """Monomial basis with t-degree <= window (optionally filtered by principal degree)."""
    out = []
    for n in range(window + 1):
        tn = RING_T.var("t", n)
        out.append(E16Elt.dt(tn))
        out.extend(E16Elt(sl4={k: tn * c for k, c in g.items()}) for g in sl4_basis())
        out.extend(E16Elt.quad(i, j, tn) for i in IDX for j in IDX if i <= j)
        out.extend(E16Elt.form(i, j, tn) for i in IDX for j in IDX if i < j)
    if degrees is not None:
        out = [b for b in out if degree_e16_principal(b) in degrees]
    return out


def grading_element_check(window: int = 3) -> VerifyReport:
    rep = VerifyReport("grading-element", {"window": window})
    z = E16Elt.dt(RING_T.var("t") * 2)
    expected_field = {0: _x5(1) * 2}
    for k in IDX:
        expected_field[k - 1] = _x5(k) * -_HALF
    expected = E510Elt(VectorField(RING_X5, expected_field))
    pz = psi(z)
    rep.record("psi(2t*Dt)", pz == expected, str(expected), str(pz))
    negatives = []
    for b in e16_basis(window):
        pb = psi(b)
        deg = degree_e16_principal(b)
        lhs = bracket_e510(pz, pb)
        ok = lhs == pb * deg and degree_510(pb, TYPE_2_1111) == deg
        rep.record(f"ad psi(z) on psi({b})", ok, f"{deg} * ({pb})", str(lhs))
        if deg < 0:
            negatives.append(pb)
    expected_neg = [E510Elt(VectorField(RING_X5, {0: RING_X5.one()}))]
    expected_neg += [E510Elt(odd=_d(i, j, RING_X5.one())) for i in IDX for j in IDX if i < j]
    rr = RowReducer(track=False)
    for v in expected_neg:
        rr.add(v.to_vec())
    same = rr.rank == len(expected_neg) and all(rr.contains(v.to_vec()) for v in negatives)
    rr2 = RowReducer(track=False)
    for v in negatives:
        rr2.add(v.to_vec())
    same = same and rr2.rank == rr.rank
    rep.record("negative part spanned by D1, d_ij", same,
               f"rank {len(expected_neg)}", f"rank {rr2.rank}")
    return rep.finish()


# ---------------------------------------------------------------------------
# iota basis and Psi

def _xieta(n: int, names, coeff=ONE) -> K16Elt:
    return K16Elt.mono(n, names, coeff, XIETA)


def _x4(i: int) -> PolySeries:
    return RING_X4.var(i - 1)


def _f44(comps) -> E44Elt:
    return E44Elt(even=VectorField(RING_X4, {j - 1: p for j, p in comps.items()}))


def _w44(comps) -> E44Elt:
    return E44Elt(odd=DiffForm(RING_X4, 1, {(j - 1,): p for j, p in comps.items()}))


_S2H = R2 * _HALF


def _euler234() -> dict:
    return {k: _x4(k) for k in (2, 3, 4)}


@dataclass(frozen=True)
class TableRow:
    family: str
    f: tuple[str, ...]
    iota: tuple[tuple[int, tuple[str, ...]], ...]
    image: str | None = None


def _xi(i):
    return f"xi{i}"


def _eta(i):
    return f"eta{i}"


def table1_rows() -> list[TableRow]:
    rows = []
    for i, j, k in CYCLIC:
        rows += [
            TableRow("eta_i eta_j eta_k", (_eta(i), _eta(j), _eta(k)),
                     ((2, (_eta(i), _eta(j), _eta(k))),)),
            TableRow("xi_j eta_j eta_i", (_xi(j), _eta(j), _eta(i)),
                     ((1, (_xi(j), _eta(j), _eta(i))), (1, (_xi(k), _eta(k), _eta(i))))),
            TableRow("xi_i eta_j eta_k", (_xi(i), _eta(j), _eta(k)), ()),
            TableRow("xi_j xi_i eta_i", (_xi(j), _xi(i), _eta(i)),
                     ((1, (_xi(j), _xi(i), _eta(i))), (-1, (_xi(j), _xi(k), _eta(k))))),
            TableRow("xi_i xi_j eta_k", (_xi(i), _xi(j), _eta(k)),
                     ((2, (_xi(i), _xi(j), _eta(k))),)),
            TableRow("xi_i xi_j xi_k", (_xi(i), _xi(j), _xi(k)), ()),
        ]
    return rows


def _psi_rows() -> list[tuple[TableRow, E44Elt]]:
    """Table rows of Psi on iota(xi_I), for every cyclic (i, j, k)."""
    out = []
    for i, j, k in CYCLIC:
        E = _euler234()
        out += [
            (TableRow("1", (), ((1, ()),)), _f44({1: RING_X4.one()})),
            (TableRow("eta_i eta_j", (_eta(i), _eta(j)), ((1, (_eta(i), _eta(j))),)),
             _f44({k: RING_X4.one()})),
            (TableRow("eta_i", (_eta(i),), ((1, (_eta(i),)),)),
             _w44({i: RING_X4.const(_S2H)})),
            (TableRow("eta_i eta_j eta_k", (_eta(i), _eta(j), _eta(k)),
                      ((2, (_eta(i), _eta(j), _eta(k))),)),
             _w44({1: RING_X4.const(-R2)})),
            (TableRow("xi_i eta_j", (_xi(i), _eta(j)), ((1, (_xi(i), _eta(j))),)),
             _f44({i: _x4(j)})),
            (TableRow("xi_i eta_i", (_xi(i), _eta(i)), ((1, (_xi(i), _eta(i))),)),
             _f44({j: -_x4(j), k: -_x4(k)})),
            (TableRow("xi_i", (_xi(i),), ((1, (_xi(i),)),)),
             _w44({k: _x4(j) * -_S2H, j: _x4(k) * _S2H})),
            (TableRow("xi_j eta_j eta_i", (_xi(j), _eta(j), _eta(i)),
                      ((1, (_xi(j), _eta(j), _eta(i))), (1, (_xi(k), _eta(k), _eta(i))))),
             _w44({1: _x4(i) * R2})),
            (TableRow("xi_i xi_j", (_xi(i), _xi(j)), ((1, (_xi(i), _xi(j))),)),
             _f44({m: p * _x4(k) for m, p in E.items()})),
            (TableRow("xi_j xi_i eta_i", (_xi(j), _xi(i), _eta(i)),
                      ((1, (_xi(j), _xi(i), _eta(i))), (-1, (_xi(j), _xi(k), _eta(k))))),
             _w44({1: _x4(i) * _x4(k) * R2})),
            (TableRow("xi_i xi_j eta_k", (_xi(i), _xi(j), _eta(k)),
                      ((2, (_xi(i), _xi(j), _eta(k))),)),
             _w44({1: _x4(k) * _x4(k) * -R2})),
        ]
    return out


def table2_rows() -> list[tuple[TableRow, E44Elt]]:
    return _psi_rows()


def _row_iota(row: TableRow) -> K16Elt:
    out = K16Elt({}, XIETA)
    for c, names in row.iota:
        out = out + _xieta(0, names, c)
    return out


@lru_cache(maxsize=None)
def psi_table_assignments() -> tuple[tuple[int, E44Elt], ...]:
    """(mask, Psi(iota(xi_mask))) pairs: the table rows, plus x_j d_i for every xi_i eta_j."""
    assigned: dict[int, E44Elt] = {}

    def put(names, img):
        f = _xieta(0, names)
        ((_, m), c), = f.terms.items()
        img = img * c.inv() if c != 1 else img
        if m in assigned and assigned[m] != img:
            raise InvariantViolation(f"conflicting table entries for {f}")
        assigned[m] = img

    for row, img in _psi_rows():
        put(row.f, img)
    for i in (2, 3, 4):
        for j in (2, 3, 4):
            if i != j:
                put((_xi(i), _eta(j)), _f44({i: _x4(j)}))
    return tuple(sorted(assigned.items()))


def _masks_upto3():
    return [m for m in range(64) if popcount(m) <= 3]


def _scale_x1(elt: E44Elt, n: int) -> E44Elt:
    if n == 0:
        return elt
    return elt * (RING_X4.var(0, n) * (2 ** n))


class IotaBasis:
    """Spanning set {iota(t^n xi_I): |I| <= 3, n <= window} reduced to a basis."""

    def __init__(self, window: int):
        if window < 0:
            raise ValueError("window must be nonnegative")
        self.window = window
        self.labels: list[tuple[int, int]] = []
        self.vectors: list[K16Elt] = []
        self.reducer = RowReducer()
        for n in range(window + 1):
            for m in _masks_upto3():
                v = op_iota(K16Elt({(n, m): ONE}, XIETA))
                self.labels.append((n, m))
                self.vectors.append(v)
                self.reducer.add(v.to_vec())
        self.kernel = self.reducer.kernel
        self._image_reducer = None
        self._images: list[E44Elt] | None = None

    @property
    def rank(self) -> int:
        return self.reducer.rank

    def index(self, n: int, mask: int) -> int:
        return self.labels.index((n, mask))

    def contains(self, F: K16Elt) -> bool:
        return self.reducer.contains(F.to(XIETA).to_vec())

    def coordinates(self, F: K16Elt) -> dict[int, Scalar]:
        F = F.to(XIETA)
        if F.max_t() > self.window:
            raise NotInImage(f"t-degree {F.max_t()} exceeds the basis window {self.window}")
        c = self.reducer.coordinates(F.to_vec())
        if c is None:
            raise NotInImage(f"element is not in the iota-image span: {F}")
        return c

    def vanishing_relations_ok(self) -> bool:
        """iota(t^n xi_I) = 0 for the four families, and iota(x) = iota(A x) for |I| = 3."""
        kr = RowReducer(track=False)
        for rel in self.kernel:
            kr.add(rel)
        fams = [("xi2", "xi3", "xi4"), ("xi3", "eta2", "eta4"), ("xi2", "eta3", "eta4"),
                ("xi4", "eta2", "eta3")]
        for n in range(self.window + 1):
            for names in fams:
                (key, _), = _xieta(n, names).terms.items()
                if not kr.contains({self.labels.index(key): ONE}):
                    return False
            for m in _masks_upto3():
                if popcount(m) != 3:
                    continue
                Ax = op_A(K16Elt({(n, m): ONE}, XIETA))
                rel = {self.labels.index((n, m)): ONE}
                for key, c in Ax.terms.items():
                    idx = self.labels.index(key)
                    rel[idx] = rel.get(idx, 0) - c
                rel = {k: v for k, v in rel.items() if v}
                if rel and not kr.contains(rel):
                    return False
        return True

    # -- Psi -------------------------------------------------------------
    def _setup_psi(self):
        if self._images is not None:
            return
        table = dict(psi_table_assignments())
        rr = RowReducer()
        images: list[E44Elt] = []
        for n in range(self.window + 1):
            for m, img in table.items():
                v = op_iota(K16Elt({(n, m): ONE}, XIETA))
                rr.add(v.to_vec())
                images.append(_scale_x1(img, n))
        for rel in rr.kernel:
            total = E44Elt()
            for idx, c in rel.items():
                total = total + images[idx] * c
            if not total.is_zero():
                raise InvariantViolation(f"Psi is not well defined: kernel relation maps to {total}")
        for v in self.vectors:
            if not rr.contains(v.to_vec()):
                raise InvariantViolation(f"table does not determine Psi on {v}")
        self._image_reducer = rr
        self._images = images

    def Psi(self, F: K16Elt) -> E44Elt:
        self._setup_psi()
        F = F.to(XIETA)
        if F.max_t() > self.window:
            raise NotInImage(f"t-degree {F.max_t()} exceeds the basis window {self.window}")
        c = self._image_reducer.coordinates(F.to_vec())
        if c is None:
            raise NotInImage(f"element is not in the iota-image span: {F}")
        out = E44Elt()
        for idx, v in c.items():
            out = out + self._images[idx] * v
        return out


@lru_cache(maxsize=8)
def build_iota_basis(window: int) -> IotaBasis:
    if window < 1:
        raise ValueError("window must be at least 1")
    return IotaBasis(window)


def Psi(F: K16Elt, window: int | None = None) -> E44Elt:
    w = max(1, F.max_t() if window is None else window)
    return build_iota_basis(w).Psi(F)


# ---------------------------------------------------------------------------
# homomorphism sweeps

def _psi_sweep(rep: VerifyReport, window: int):
    basis = e16_basis(window)
    images = [psi(b) for b in basis]
    for a in range(len(basis)):
        for b in range(a, len(basis)):
            lhs = bracket_e510(images[a], images[b])
            rhs = psi(bracket_e16(basis[a], basis[b]))
            rep.record(f"[psi({basis[a]}), psi({basis[b]})]", lhs == rhs, str(rhs), str(lhs))


def _t(n):
    return RING_T.var("t", n)


def psi_regressions() -> list[tuple[str, E16Elt, E16Elt, E16Elt]]:
    """Named worked cases: (name, alpha, beta, expected bracket) with f = 1 + t^2, g = t + t^3."""
    f = RING_T.from_dict({(0,): 1, (2,): 1})
    g = RING_T.from_dict({(1,): 1, (3,): 1})
    df, dg = f.partial(0), g.partial(0)
    q = Scalar(Fraction(1, 4))
    cases = []
    cases.append(("W1 on S2", E16Elt.dt(f), E16Elt.quad(2, 3, g),
                  E16Elt.quad(2, 3, f * dg + df * g * _HALF)))
    cases.append(("W1 on L2", E16Elt.dt(f), E16Elt.form(2, 3, g),
                  E16Elt.form(2, 3, f * dg - df * g * _HALF)))
    cases.append(("sl4 on S2", E16Elt.sl({(4, 2): ONE}, f), E16Elt.quad(2, 3, g),
                  E16Elt.quad(4, 3, f * g)))
    cases.append(("sl4 on L2", E16Elt.sl({(4, 2): ONE}, f), E16Elt.form(2, 3, g),
                  E16Elt.form(4, 3, f * g) + E16Elt.quad(4, 3, df * g * _HALF)))
    cases.append(("S2 x S2", E16Elt.quad(2, 3, f), E16Elt.quad(4, 5, g), E16Elt()))
    cases.append(("S2 x L2", E16Elt.quad(4, 5, f), E16Elt.form(2, 3, g),
                  E16Elt(sl4={(4, 4): -(f * g), (5, 5): f * g})))
    cases.append(("L2 x L2", E16Elt.form(2, 3, f), E16Elt.form(4, 5, g),
                  E16Elt.dt(f * g) + E16Elt(sl4={(2, 2): (f * dg - df * g) * q,
                                                 (3, 3): (f * dg - df * g) * q,
                                                 (4, 4): (f * dg - df * g) * -q,
                                                 (5, 5): (f * dg - df * g) * -q})))
    return cases


def _psi_regression_check(rep: VerifyReport):
    for name, a, b, expected in psi_regressions():
        got = bracket_e16(a, b)
        rep.record(f"E(1,6) {name}", got == expected, str(expected), str(got))
        lhs = bracket_e510(psi(a), psi(b))
        rep.record(f"psi {name}", lhs == psi(expected), str(psi(expected)), str(lhs))


def _eta_J_list() -> list[tuple[str, ...]]:
    out = []
    for r in range(4):
        out += [tuple(_eta(j) for j in J) for J in itertools.combinations((2, 3, 4), r)]
    return out


def _Psi_base_sweep(rep: VerifyReport, ns, basis: IotaBasis):
    gs = [_xieta(0, J) for J in _eta_J_list()]
    for n in ns:
        for m in _masks_upto3():
            f = K16Elt({(n, m): ONE}, XIETA)
            iF = op_iota(f)
            pf = basis.Psi(iF)
            for g in gs:
                iG = op_iota(g)
                try:
                    rhs = basis.Psi(bracket_k16(iF, iG))
                except NotInImage as exc:
                    rep.record(f"[Psi(iota({f})), Psi(iota({g}))]", False, "in image", str(exc))
                    continue
                lhs = bracket_e44(pf, basis.Psi(iG))
                rep.record(f"[Psi(iota({f})), Psi(iota({g}))]", lhs == rhs, str(rhs), str(lhs))


def _exceptional_displays(rep: VerifyReport, nmax: int, basis: IotaBasis):
    g = _xieta(0, ("eta2", "eta3", "eta4"))
    ig = op_iota(g)
    for n in range(nmax + 1):
        f = _xieta(n, ("xi2", "xi3", "eta3"))
        br = bracket_k16(op_iota(f), ig)
        rep.record(f"[iota(t^{n} xi2 xi3 eta3), iota(eta2 eta3 eta4)] = 0", br.is_zero(), "0", str(br))
        lhs = bracket_e44(basis.Psi(op_iota(f)), basis.Psi(ig))
        rep.record(f"[Psi(iota(t^{n} xi2 xi3 eta3)), Psi(iota(eta2 eta3 eta4))] = 0", lhs.is_zero(),
                   "0", str(lhs))
        f = _xieta(n, ("xi3", "xi4"))
        br = bracket_k16(op_iota(f), ig)
        expected = op_iota(_xieta(n, ("xi4", "eta2", "eta4"))) * -2
        rep.record(f"[iota(t^{n} xi3 xi4), iota(eta2 eta3 eta4)] = -2 iota(t^{n} xi4 eta2 eta4)",
                   br == expected, str(expected), str(br))
        img = basis.Psi(br)
        exp_img = _w44({1: RING_X4.var(0, n) * _x4(2) * (R2 * 2 ** (n + 1))})
        rep.record(f"Psi of that bracket = 2^{n + 1} r2 x1^{n} x2 dx1", img == exp_img,
                   str(exp_img), str(img))
        lhs = bracket_e44(basis.Psi(op_iota(f)), basis.Psi(ig))
        rep.record(f"[Psi(iota(t^{n} xi3 xi4)), Psi(iota(eta2 eta3 eta4))]", lhs == exp_img,
                   str(exp_img), str(lhs))


def _shift_homo(rep: VerifyReport, nmax: int, basis: IotaBasis, full_J: bool):
    """Brackets at t^n follow from n = 0: Psi turns t^n into 2^n x1^n on both sides."""
    x1 = RING_X4.var(0)
    Js = _masks_upto3() if full_J else [next(iter(_xieta(0, J).terms))[1] for J in _eta_J_list()]
    for mi in _masks_upto3():
        pI = basis.Psi(op_iota(K16Elt({(0, mi): ONE}, XIETA)))
        x1pI = pI * x1
        for mj in Js:
            pJ = basis.Psi(op_iota(K16Elt({(0, mj): ONE}, XIETA)))
            alpha = bracket_e44(pI, pJ)
            beta1 = bracket_e44(x1pI, pJ)
            for n in range(2, nmax + 1):
                lhs = bracket_e44(pI * RING_X4.var(0, n), pJ)
                rhs = alpha * (RING_X4.var(0, n) * (1 - n)) + beta1 * (RING_X4.var(0, n - 1) * n)
                rep.record(f"homogeneity in x1: I={mi} J={mj} n={n}", lhs == rhs, str(rhs), str(lhs))
    for mi in _masks_upto3():
        for mj in Js:
            xJ = K16Elt({(0, mj): ONE}, XIETA)
            for n in range(1, nmax + 1):
                tI = K16Elt({(n, mi): ONE}, XIETA)
                xI = K16Elt({(0, mi): ONE}, XIETA)
                t1I = K16Elt({(1, mi): ONE}, XIETA)
                formula = (bracket_k16(xI, xJ).t_times(n) * (1 - n)
                           + (bracket_k16(t1I, xJ).t_times(n - 1) * n))
                direct = bracket_k16(tI, xJ)
                rep.record(f"K(1,6) t-power rule: I={mi} J={mj} n={n}", direct == formula,
                           str(formula), str(direct))
                if bracket_k16(op_A(tI), op_A(xJ)).is_zero():
                    lhs = bracket_k16(op_iota(tI), op_iota(xJ))
                    rhs = op_iota(formula)
                    rep.record(f"iota t-power rule: I={mi} J={mj} n={n}", lhs == rhs, str(rhs), str(lhs))


def verify_hom(which: str, window: int = 5, ns=(0, 1), shift_n: int = 3,
               shift_full: bool = False) -> VerifyReport:
    """Homomorphism sweep for ``psi`` (t-degree <= window) or ``Psi`` (f = t^n xi_I, g = eta_J)."""
    if which == "psi":
        rep = VerifyReport("psi-hom", {"twindow": window})
        _psi_regression_check(rep)
        _psi_sweep(rep, window)
        return rep.finish()
    if which != "Psi":
        raise ValueError(f"unknown map {which!r}")
    ns = tuple(ns)
    nmax = max(max(ns), shift_n, 3)
    rep = VerifyReport("Psi-hom", {"n": list(ns), "shift_n": shift_n, "shift_full_J": shift_full})
    basis = build_iota_basis(max(nmax, 1))
    rep.record("Psi well defined (kernel relations map to 0)", _well_defined(basis), "True", "False")
    _Psi_base_sweep(rep, ns, basis)
    _exceptional_displays(rep, 3, basis)
    if shift_n >= 1:
        _shift_homo(rep, shift_n, basis, shift_full)
    return rep.finish()


def _well_defined(basis: IotaBasis) -> bool:
    try:
        basis._setup_psi()
    except InvariantViolation:
        return False
    return True


# ---------------------------------------------------------------------------
# corollary

def corollary_basis() -> tuple[list[E44Elt], list[E44Elt]]:
    one = RING_X4.one()
    E = _euler234()
    V0 = [_f44({1: one})] + [_f44({i: one}) for i in (2, 3, 4)]
    V0 += [_f44({j: _x4(i)}) for i in (2, 3, 4) for j in (2, 3, 4)]
    V0 += [_f44({m: p * _x4(i) for m, p in E.items()}) for i in (2, 3, 4)]
    V1 = [_w44({1: one})] + [_w44({i: one}) for i in (2, 3, 4)]
    V1 += [_w44({j: _x4(i), i: -_x4(j)}) for i, j in ((2, 3), (2, 4), (3, 4))]
    V1 += [_w44({1: _x4(i)}) for i in (2, 3, 4)]
    V1 += [_w44({1: _x4(i) * _x4(j)}) for i in (2, 3, 4) for j in (2, 3, 4) if i <= j]
    return V0, V1


def corollary_subalgebra_check(window: int = 4) -> VerifyReport:
    rep = VerifyReport("corollary", {"window": window})
    V0, V1 = corollary_basis()
    base = V0 + V1
    elems = []
    for n in range(window + 1):
        xn = RING_X4.var(0, n)
        elems += [(n, k, v * xn) for k, v in enumerate(base)]
    rr = RowReducer(track=False)
    for _, _, v in elems:
        rr.add(v.to_vec())
    rep.record("C[x1](V0+V1) basis independent", rr.rank == len(elems), str(len(elems)), str(rr.rank))
    for a in range(len(elems)):
        na, ka, u = elems[a]
        for b in range(a, len(elems)):
            nb, kb, v = elems[b]
            if na + nb > window:
                continue
            br = bracket_e44(u, v)
            rep.record(f"[x1^{na}*v{ka}, x1^{nb}*v{kb}]", rr.contains(br.to_vec()), "in span", str(br))
    basis = build_iota_basis(window)
    for (n, m), vec in zip(basis.labels, basis.vectors):
        img = basis.Psi(vec)
        rep.record(f"Psi(iota(t^{n} mask {m})) in span", rr.contains(img.to_vec()), "in span", str(img))
    dims = principal_dimensions(basis, range(-2, 2))
    rep.record("principal dimensions in degrees -2..1", dims == [1, 6, 16, 16], "[1, 6, 16, 16]",
               str(dims))
    for (n, m), vec in zip(basis.labels, basis.vectors):
        if vec.is_zero():
            continue
        dk = degree_k16_type(vec)
        d44 = degree_e44_principal(basis.Psi(vec))
        rep.record(f"grading of iota(t^{n} mask {m})", d44 is None or dk == d44, str(dk), str(d44))
    return rep.finish()


def principal_dimensions(basis: IotaBasis, degrees) -> list[int]:
    out = []
    for d in degrees:
        rr = RowReducer(track=False)
        for v in basis.vectors:
            if v and degree_k16_principal(v) == d:
                rr.add(v.to_vec())
        out.append(rr.rank)
    return out
