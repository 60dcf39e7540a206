"""Text grammar for elements of the four algebras.

A term is a product of factors joined by ``*``: scalar atoms (``3``, ``1/2``,
``r2``, ``i``, a parenthesized scalar), even variables with optional powers
(``x2^3``, ``t``), and at most one basis token per algebra:

* e510: ``D1``..``D5`` or 2-form tokens ``d12``..``d45``
* e44:  ``D1``..``D4`` or 1-form tokens ``dx1``..``dx4``
* e16:  ``Dt``; ``x2*D3``; ``x2*x3*dt``; ``d23*dt`` (variables x2..x5 only)
* k16:  odd generators ``xi2``..``xi4``, ``eta2``..``eta4`` (or ``xi1``, ``eta1``), ``rho1``..``rho6``

A trailing ``O(t^N)`` (or ``O(x1^N)``) sets the truncation order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .e16k16 import E16Elt, K16Elt
from .formcalc import DiffForm, VectorField
from .grassmann import XIETA, CoordinateMismatch, GrassElt, generator_index
from .scalars import ONE, Scalar, parse_scalar
from .series import RING_T, RING_X4, RING_X5, PolyRing
from .vfalgebras import E44Elt, E510Elt, InvariantViolation

__all__ = ["ParseError", "parse_element", "ALGEBRAS"]

ALGEBRAS = ("e510", "e44", "e16", "k16")


class ParseError(ValueError):
    def __init__(self, msg: str, pos: int):
        super().__init__(f"{msg} at position {pos}")
        self.pos = pos


_VAR = re.compile(r"(x[1-9]|t)(?:\^(\d+))?$")
_DTOK = re.compile(r"D(t|[1-9])$")
_FORM = re.compile(r"d([1-9]{2,})$")
_DX = re.compile(r"dx([1-9])$")
_GEN = re.compile(r"(xi[1-4]|eta[1-4]|rho[1-6])$")
_SCALAR = re.compile(r"(\d+(/\d+)?|r2|i)$")
_BIG_O = re.compile(r"O\((x1|t)\^(\d+)\)$")


def _split(text: str, seps: str, base: int) -> list[tuple[str, str, int]]:
    """Split at depth-0 separators; returns (separator before, piece, offset)."""
    out = []
    depth, start, sep = 0, 0, ""
    for k, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError("unbalanced ')'", base + k)
        elif depth == 0 and ch in seps:
            if seps == "+-" and not text[start:k].strip():
                # unary sign: fold it into the pending separator
                if ch == "-":
                    sep = "+" if sep == "-" else "-"
                elif not sep:
                    sep = "+"
                start = k + 1
                continue
            out.append((sep, text[start:k], base + start))
            sep, start = ch, k + 1
    if depth:
        raise ParseError("unbalanced '('", base + len(text))
    out.append((sep, text[start:], base + start))
    return out


@dataclass
class _Term:
    coeff: Scalar
    exps: dict = field(default_factory=dict)      # variable name -> power
    tokens: list = field(default_factory=list)    # (kind, value, pos)
    pos: int = 0


def _parse_term(piece: str, pos: int) -> _Term:
    term = _Term(ONE, pos=pos)
    for _, fac, fpos in _split(piece, "*", pos):
        raw = fac
        fac = fac.strip()
        fpos += len(raw) - len(raw.lstrip())
        if not fac:
            raise ParseError("empty factor", fpos)
        if fac.startswith("(") or _SCALAR.match(fac):
            try:
                term.coeff = term.coeff * parse_scalar(fac)
            except (ValueError, ZeroDivisionError) as exc:
                raise ParseError(f"bad scalar {fac!r} ({exc})", fpos) from None
            continue
        if fac.startswith("-"):
            sub = _parse_term(fac[1:], fpos + 1)
            sub.coeff = -sub.coeff
            term.coeff = term.coeff * sub.coeff
            for v, p in sub.exps.items():
                term.exps[v] = term.exps.get(v, 0) + p
            term.tokens += sub.tokens
            continue
        m = _VAR.match(fac)
        if m:
            term.exps[m.group(1)] = term.exps.get(m.group(1), 0) + int(m.group(2) or 1)
            continue
        for kind, rx in (("D", _DTOK), ("dx", _DX), ("form", _FORM), ("gen", _GEN)):
            m = rx.match(fac)
            if m:
                term.tokens.append((kind, m.group(1), fpos))
                break
        else:
            if fac == "dt":
                term.tokens.append(("dt", "t", fpos))
            else:
                raise ParseError(f"unknown factor {fac!r}", fpos)
    return term


def _terms(text: str):
    """Yield parsed terms and the truncation order (or None)."""
    trunc = None
    trunc_var = None
    terms = []
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty expression", 0)
    for sign, piece, pos in _split(text, "+-", 0):
        raw = piece
        piece = piece.strip()
        pos += len(raw) - len(raw.lstrip())
        if not piece:
            raise ParseError("missing term", pos)
        m = _BIG_O.match(piece)
        if m:
            trunc_var, trunc = m.group(1), int(m.group(2))
            continue
        t = _parse_term(piece, pos)
        if sign == "-":
            t.coeff = -t.coeff
        terms.append(t)
    return terms, trunc, trunc_var


def _exps(ring: PolyRing, term: _Term, allowed=None) -> tuple[int, ...]:
    e = [0] * ring.nvars
    for v, p in term.exps.items():
        if v not in ring.names or (allowed is not None and v not in allowed):
            raise ParseError(f"variable {v} not allowed here", term.pos)
        e[ring.names.index(v)] += p
    return tuple(e)


def _acc(d: dict, key, e, c):
    inner = d.setdefault(key, {})
    inner[e] = inner.get(e, Scalar()) + c


def _single(term: _Term, what: str):
    if len(term.tokens) != 1:
        raise ParseError(f"each {what} term needs exactly one basis token", term.pos)
    return term.tokens[0]


def _parse_fields_forms(text: str, ring: PolyRing, form_kind: str):
    terms, trunc, tv = _terms(text)
    if tv not in (None, ring.series):
        raise ParseError(f"truncation variable must be {ring.series}", 0)
    n = ring.nvars
    even: dict = {}
    odd: dict = {}
    for t in terms:
        if len(t.tokens) == 0 and t.coeff == 0:
            continue
        kind, val, pos = _single(t, "field/form")
        e = _exps(ring, t)
        if kind == "D":
            j = int(val) if val.isdigit() else 0
            if not 1 <= j <= n:
                raise ParseError(f"D{val} outside x1..x{n}", pos)
            _acc(even, j - 1, e, t.coeff)
        elif kind == form_kind:
            idx = [int(ch) - 1 for ch in val]
            if any(not 0 <= i < n for i in idx):
                raise ParseError(f"form index outside 1..{n}", pos)
            if form_kind == "form" and len(idx) != 2:
                raise ParseError("odd elements are 2-forms d_ij", pos)
            if len(set(idx)) < len(idx):
                continue
            sign = 1
            for a in range(len(idx)):
                for b in range(a + 1, len(idx)):
                    if idx[a] > idx[b]:
                        sign = -sign
            _acc(odd, tuple(sorted(idx)), e, t.coeff * sign)
        else:
            raise ParseError("token not valid for this algebra", pos)
    ev = VectorField(ring, {j: ring.from_dict(p, trunc) for j, p in even.items()})
    k = 2 if form_kind == "form" else 1
    od = DiffForm(ring, k, {i: ring.from_dict(p, trunc) for i, p in odd.items()})
    return ev, od


def _parse_e16(text: str) -> E16Elt:
    terms, trunc, tv = _terms(text)
    if tv not in (None, "t"):
        raise ParseError("truncation variable must be t", 0)
    parts = {"w1": {}, "sl4": {}, "s2": {}, "lam2": {}}
    for t in terms:
        if not t.tokens and t.coeff == 0:
            continue
        n = t.exps.get("t", 0)
        xs = []
        for v, p in t.exps.items():
            if v == "t":
                continue
            k = int(v[1:])
            if not 2 <= k <= 5:
                raise ParseError(f"variable {v} not in x2..x5", t.pos)
            xs += [k] * p
        xs.sort()
        kinds = [k for k, _, _ in t.tokens]
        e = (n,)
        if kinds == ["D"] and t.tokens[0][1] == "t" and not xs:
            _acc(parts["w1"], (), e, t.coeff)
        elif kinds == ["D"] and len(xs) == 1 and t.tokens[0][1] != "t":
            j = int(t.tokens[0][1])
            if not 2 <= j <= 5:
                raise ParseError(f"D{j} not in D2..D5", t.tokens[0][2])
            _acc(parts["sl4"], (xs[0], j), e, t.coeff)
        elif kinds == ["dt"] and len(xs) == 2:
            _acc(parts["s2"], tuple(xs), e, t.coeff)
        elif sorted(kinds) == ["dt", "form"] and not xs:
            val = next(v for k, v, _ in t.tokens if k == "form")
            if len(val) != 2:
                raise ParseError("lam2 terms use a 2-form token d_ij", t.pos)
            i, j = int(val[0]), int(val[1])
            if not (2 <= i <= 5 and 2 <= j <= 5):
                raise ParseError("form indices must lie in 2..5", t.pos)
            _acc(parts["lam2"], (i, j), e, t.coeff)
        else:
            raise ParseError("term is not of the form f*Dt, x_i*D_j, x_i*x_j*dt or d_ij*dt", t.pos)
    w1 = RING_T.from_dict(parts["w1"].get((), {}), trunc)
    conv = {k: {key: RING_T.from_dict(v, trunc) for key, v in parts[k].items()}
            for k in ("sl4", "s2", "lam2")}
    try:
        return E16Elt(w1, conv["sl4"], conv["s2"], conv["lam2"])
    except InvariantViolation as exc:
        raise ParseError(str(exc), 0) from None


def _parse_k16(text: str) -> K16Elt:
    terms, trunc, tv = _terms(text)
    if tv not in (None, "t"):
        raise ParseError("truncation variable must be t", 0)
    out = None
    for t in terms:
        for v in t.exps:
            if v != "t":
                raise ParseError(f"variable {v} not allowed in K(1,6)", t.pos)
        n = t.exps.get("t", 0)
        names = []
        for kind, val, pos in t.tokens:
            if kind != "gen":
                raise ParseError("only odd generators are allowed in K(1,6)", pos)
            names.append(val)
        coord = generator_index(names[0])[0] if names else (out.coord if out is not None else XIETA)
        try:
            g = GrassElt.mono(names, t.coeff, coord) if names else GrassElt({0: t.coeff}, coord)
        except CoordinateMismatch:
            raise ParseError("a term mixes xi/eta and rho generators", t.pos) from None
        elt = K16Elt.from_grass(g, n, trunc)
        if out is None:
            out = elt
        else:
            if out.coord != elt.coord:
                raise ParseError("terms mix xi/eta and rho coordinates", t.pos)
            out = out + elt
    return out if out is not None else K16Elt({}, XIETA, trunc)


def parse_element(algebra: str, text: str):
    if algebra == "e510":
        ev, od = _parse_fields_forms(text, RING_X5, "form")
        try:
            return E510Elt(ev, od)
        except InvariantViolation as exc:
            raise ParseError(str(exc), 0) from None
    if algebra == "e44":
        ev, od = _parse_fields_forms(text, RING_X4, "dx")
        return E44Elt(ev, od)
    if algebra == "e16":
        return _parse_e16(text)
    if algebra == "k16":
        return _parse_k16(text)
    raise ValueError(f"unknown algebra {algebra!r}; expected one of {', '.join(ALGEBRAS)}")
