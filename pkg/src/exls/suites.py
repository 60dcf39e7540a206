"""Named verification suites.  Each returns a :class:`VerifyReport`."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from . import embeddings as emb
from . import repn
from .e16k16 import (ClosureViolation, K16Elt, bracket_e16, bracket_iota_image, bracket_k16,
                     degree_k16_principal, is_exceptional_pair, op_A, op_iota)
from .formcalc import DiffForm, form_d, int_op, vf_div
from .grassmann import RHO, XIETA, GrassElt, gr_sharp, gr_star, popcount
from .linalg import RowReducer
from .report import VerifyReport, merge_reports
from .sampling import SAMPLERS
from .scalars import I, ONE
from .series import RING_X4, RING_X5
from .tables import table_check
from .vfalgebras import bracket_e44, bracket_e510

__all__ = ["SuiteOptions", "SUITES", "ALIASES", "run_suite", "resolve_suite", "suite_names"]


@dataclass
class SuiteOptions:
    seed: int = 0
    trials: int | None = None
    twindow: int | None = None
    n_range: tuple[int, int] | None = None
    quick: bool = False
    extra: dict = field(default_factory=dict)


# ---------------------------------------------------------------------------
# homotopy operator identities

def _monomial_forms(ring, n: int, k: int, m: int):
    for idx in itertools.combinations(range(n), k):
        for e in repn._compositions(m, n):
            yield DiffForm(ring, k, {idx: ring.monomial(e)})


def _form_vec(w: DiffForm) -> dict:
    return {(idx, e): c for e, idx, c in w.terms()}


def suite_dint(opts: SuiteOptions) -> VerifyReport:
    mmax = 2 if opts.quick else 4
    rep = VerifyReport("dint", {"n": [4, 5], "m": [1, mmax]})
    for n, ring in ((4, RING_X4), (5, RING_X5)):
        d_rank: dict = {}

        def rank_of_d(k, m):
            if (k, m) not in d_rank:
                rr = RowReducer(track=False)
                for w in _monomial_forms(ring, n, k, m):
                    rr.add(_form_vec(form_d(w)))
                d_rank[(k, m)] = rr.rank
            return d_rank[(k, m)]

        for k in range(1, n):
            for m in range(1, mmax + 1):
                basis = list(_monomial_forms(ring, n, k, m))
                dws = [form_d(w) for w in basis]
                iws = [int_op(w) for w in basis]
                for w, dw, iw in zip(basis, dws, iws):
                    ddw, iiw = form_d(dw), int_op(iw)
                    rep.record(f"d d ({w})", ddw.is_zero(), "0", str(ddw))
                    rep.record(f"int int ({w})", iiw.is_zero(), "0", str(iiw))
                    homot = form_d(iw) + (int_op(dw) if dw else DiffForm(ring, k))
                    rep.record(f"(d int + int d)({w})", homot == w, str(w), str(homot))
                # implications, on bases of ker d and ker int
                for name, images, other in (("d", dws, int_op), ("int", iws, form_d)):
                    rr = RowReducer()
                    for img in images:
                        rr.add(_form_vec(img))
                    for rel in rr.kernel:
                        w = DiffForm(ring, k)
                        for i, c in rel.items():
                            w = w + basis[i] * c
                        back = form_d(other(w)) if name == "d" else int_op(other(w))
                        rep.record(f"{name} w = 0 implies {name}({'int' if name == 'd' else 'd'} w) = w "
                                   f"for w = {w}", back == w, str(w), str(back))
                # exactness: ker d on (k, m) equals d of (k-1, m+1)
                ker = len(basis) - rank_of_d(k, m)
                img = rank_of_d(k - 1, m + 1)
                rep.record(f"dim ker d = dim im d on Omega^{k}({n})_{m}", ker == img, str(ker), str(img))
    return rep.finish()


def suite_diesis(opts: SuiteOptions) -> VerifyReport:
    rep = VerifyReport("diesis")
    for m in range(64):
        X = GrassElt({m: ONE}, XIETA)
        lhs = gr_star(X)
        rhs = gr_sharp(X) * I
        rep.record(f"star vs sharp on {X}", lhs == rhs, str(rhs), str(lhs))
    return rep.finish()


# ---------------------------------------------------------------------------
# the operator A and the iota image

def _nmax(opts: SuiteOptions, default: int) -> int:
    if opts.n_range is not None:
        return opts.n_range[1]
    return 1 if opts.quick else default


def _rho_monos(nmax: int):
    return [(n, m) for n in range(nmax + 1) for m in range(64)]


def suite_properties_of_A(opts: SuiteOptions) -> VerifyReport:
    nmax = _nmax(opts, 3)
    rep = VerifyReport("propertiesofA", {"nmax": nmax})
    monos = _rho_monos(nmax)
    exceptional = 0
    for a in monos:
        f = K16Elt({a: ONE}, RHO)
        Af = op_A(f)
        if Af:
            AAf = op_A(Af)
            rep.record(f"A(A({f})) = {f}", AAf == f, str(f), str(AAf))
        if a[0] + popcount(a[1]) <= 2:
            rep.record(f"A vanishes on {f}", Af.is_zero(), "0", str(Af))
        for b in monos:
            g = K16Elt({b: ONE}, RHO)
            Ag = op_A(g)
            h1 = bracket_k16(f, g) + bracket_k16(Af, Ag)
            h2 = bracket_k16(Af, g) + bracket_k16(f, Ag)
            if is_exceptional_pair(a, b):
                exceptional += 1
                ok = h1.is_zero() and op_A(h2).is_zero()
                rep.record(f"exceptional ({f}, {g})", ok, "[f,g]+[Af,Ag] = 0 and A(...) = 0",
                           f"{h1} ; {op_A(h2)}")
            else:
                lhs = op_A(h1)
                rep.record(f"A([f,g]+[Af,Ag]) = [Af,g]+[f,Ag] for ({f}, {g})", lhs == h2,
                           str(h2), str(lhs))
    rep.note(f"{exceptional} exceptional pairs")
    # injectivity of A on L_k, k >= 3, inside the window
    for k in range(3, nmax + 7):
        keys = [(n, m) for n in range(nmax + 1) for m in range(64) if n + popcount(m) == k]
        rr = RowReducer(track=False)
        for key in keys:
            rr.add(op_A(K16Elt({key: ONE}, RHO)).to_vec())
        rep.record(f"A injective on L_{k} (t-degree <= {nmax})", rr.rank == len(keys),
                   str(len(keys)), str(rr.rank))
    return rep.finish()


def suite_commutator(opts: SuiteOptions) -> VerifyReport:
    nmax = _nmax(opts, 3)
    rep = VerifyReport("commutator", {"nmax": nmax})
    monos = _rho_monos(nmax)
    for a in monos:
        f = K16Elt({a: ONE}, RHO)
        If, Af = op_iota(f), op_A(f)
        for b in monos:
            g = K16Elt({b: ONE}, RHO)
            Ag = op_A(g)
            direct = bracket_k16(If, op_iota(g))
            if is_exceptional_pair(a, b):
                h = bracket_k16(Af, g) + bracket_k16(f, Ag)
            else:
                h = bracket_k16(f, g) + bracket_k16(Af, Ag)
            got = op_iota(h)
            rep.record(f"[iota({f}), iota({g})]", got == direct, str(direct), str(got))
    return rep.finish()


def suite_iota_closure(opts: SuiteOptions) -> VerifyReport:
    nmax = _nmax(opts, 3)
    rep = VerifyReport("iota-closure", {"nmax": nmax})
    basis = emb.build_iota_basis(2 * nmax + 1)
    monos = [(n, m) for n in range(nmax + 1) for m in range(64) if popcount(m) <= 3]
    for ia, a in enumerate(monos):
        f = K16Elt({a: ONE}, XIETA)
        for b in monos[ia:]:
            g = K16Elt({b: ONE}, XIETA)
            label = f"[iota({f}), iota({g})]"
            try:
                h, direct = bracket_iota_image(f, g)
            except ClosureViolation as exc:
                rep.record(label, False, "iota(h)", str(exc))
                continue
            rep.record(label, basis.contains(direct), "in span of iota(t^n xi_I)", str(direct))
    # iota preserves the principal grading
    for (n, m) in monos:
        f = K16Elt({(n, m): ONE}, XIETA)
        img = op_iota(f)
        if img:
            rep.record(f"principal degree of iota({f})", degree_k16_principal(img) == degree_k16_principal(f),
                       str(degree_k16_principal(f)), str(degree_k16_principal(img)))
    dims = emb.principal_dimensions(basis, range(-2, 2))
    rep.record("principal dimensions -2..1", dims == [1, 6, 16, 16], "[1, 6, 16, 16]", str(dims))
    rep.record("vanishing families and iota(x) = iota(Ax) in the kernel", basis.vanishing_relations_ok(),
               "True", "False")
    return rep.finish()


# ---------------------------------------------------------------------------
# embeddings and modules

def suite_psi(opts: SuiteOptions) -> VerifyReport:
    w = opts.twindow if opts.twindow is not None else (3 if opts.quick else 5)
    parts = [emb.verify_hom("psi", window=w), emb.grading_element_check(min(w, 3))]
    rep = VerifyReport("psi-roundtrip", {"twindow": w})
    basis = emb.e16_basis(w)
    rr = RowReducer(track=False)
    for b in basis:
        pb = emb.psi(b)
        rr.add(pb.to_vec())
        try:
            back = emb.psi_inverse(pb)
        except emb.NotInG0 as exc:
            rep.record(f"psi_inverse(psi({b}))", False, str(b), str(exc))
            continue
        rep.record(f"psi_inverse(psi({b}))", back == b, str(b), str(back))
    rep.record(f"psi injective on t-degree <= {w}", rr.rank == len(basis), str(len(basis)), str(rr.rank))
    parts.append(rep.finish())
    return merge_reports("psi-hom", parts, {"twindow": w})


def suite_Psi(opts: SuiteOptions) -> VerifyReport:
    lo, hi = opts.n_range if opts.n_range is not None else (0, 1 if opts.quick else 2)
    ns = tuple(range(lo, hi + 1))
    shift_n = 2 if opts.quick else 3
    parts = [table_check("Psi"), emb.verify_hom("Psi", ns=ns, shift_n=shift_n)]
    return merge_reports("Psi-hom", parts, {"n": [lo, hi], "shift_n": shift_n})


def suite_corollary(opts: SuiteOptions) -> VerifyReport:
    w = opts.twindow if opts.twindow is not None else (2 if opts.quick else 4)
    return emb.corollary_subalgebra_check(w)


def suite_generated(opts: SuiteOptions) -> VerifyReport:
    rs = (-1, 0, 1) if opts.quick else (-1, 0, 1, 2)
    return merge_reports("generation", [repn.generation_check(r, 3) for r in rs], {"r": list(rs),
                                                                                      "x1max": 3})


def suite_singular(opts: SuiteOptions) -> VerifyReport:
    rmax = 2 if opts.quick else 3
    rep = VerifyReport("highest-weights", {"rmax": rmax})
    for r in range(-1, rmax + 1):
        v = repn.v_r(r)
        w = repn.weight_of(v)
        exp = repn.expected_weight(r)
        rep.record(f"weight of v_{r} = {v}", w == exp, str(exp), str(w))
        rep.record(f"v_{r} annihilated by L_<0", repn.annihilated_by_negative(v), "True", "False")
    parts = [rep.finish()]
    parts += [repn.singular_absence(r) for r in range(1, rmax + 1)]
    parts.append(repn.slice_dimension_check(rmax))
    return merge_reports("singular-vectors", parts, {"rmax": rmax})


def suite_tables(opts: SuiteOptions) -> VerifyReport:
    return merge_reports("tables", [table_check("iota"), table_check("Psi")])


# ---------------------------------------------------------------------------
# super Jacobi identity

_BRACKETS = {"e510": bracket_e510, "e44": bracket_e44, "e16": bracket_e16, "k16": bracket_k16}


def _jacobi(alg: str):
    def run(opts: SuiteOptions) -> VerifyReport:
        trials = opts.trials if opts.trials is not None else (100 if opts.quick else 500)
        rng = random.Random(f"{alg}:{opts.seed}")
        br = _BRACKETS[alg]
        sample = SAMPLERS[alg]
        rep = VerifyReport(f"jacobi-{alg}", {"seed": opts.seed, "trials": trials})
        for t in range(trials):
            pa, pb, pc = (rng.randint(0, 1) for _ in range(3))
            a, b, c = sample(rng, pa), sample(rng, pb), sample(rng, pc)
            s_ab = -1 if pa and pb else 1
            lhs = br(a, br(b, c))
            rhs = br(br(a, b), c) + br(b, br(a, c)) * s_ab
            rep.record(f"Jacobi #{t} a={a} ; b={b} ; c={c}", lhs == rhs, str(rhs), str(lhs))
            ab, ba = br(a, b), br(b, a)
            rep.record(f"anticommutativity #{t} a={a} ; b={b}", ab == ba * -s_ab, str(ba * -s_ab), str(ab))
            if alg == "e510":
                ok = vf_div(lhs.even).is_zero() and form_d(lhs.odd).is_zero()
                rep.record(f"closure of E(5,10) bracket #{t}", ok, "div 0 and closed", str(lhs))
        return rep.finish()
    return run


SUITES = {
    "dint": suite_dint,
    "diesis": suite_diesis,
    "propertiesofA": suite_properties_of_A,
    "commutator": suite_commutator,
    "iota-closure": suite_iota_closure,
    "psi-hom": suite_psi,
    "Psi-hom": suite_Psi,
    "corollary": suite_corollary,
    "generation": suite_generated,
    "singular-vectors": suite_singular,
    "tables": suite_tables,
    "jacobi-e510": _jacobi("e510"),
    "jacobi-e44": _jacobi("e44"),
    "jacobi-e16": _jacobi("e16"),
    "jacobi-k16": _jacobi("k16"),
}

# names used on the command line by the result each suite checks
ALIASES = {
    "psi": "psi-hom",
    "Psi": "Psi-hom",
    "thm-g00": "psi-hom",
    "thm-4-6": "iota-closure",
    "thm-4-7": "Psi-hom",
    "prop-generated": "generation",
    "thm-3-5-linear": "singular-vectors",
}


def suite_names() -> list[str]:
    return list(SUITES) + list(ALIASES)


def resolve_suite(name: str) -> str:
    name = ALIASES.get(name, name)
    if name not in SUITES:
        raise KeyError(name)
    return name


def run_suite(name: str, opts: SuiteOptions | None = None) -> VerifyReport:
    opts = opts or SuiteOptions()
    if name == "all":
        return merge_reports("all", [SUITES[n](opts) for n in SUITES], {"quick": opts.quick,
                                                                           "seed": opts.seed})
    return SUITES[resolve_suite(name)](opts)
