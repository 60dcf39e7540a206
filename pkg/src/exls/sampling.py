"""Seeded random homogeneous elements, for property checks."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from .e16k16 import IDX, E16Elt, K16Elt
from .formcalc import DiffForm, VectorField, form_d, vf_from_form
from .grassmann import XIETA, popcount
from .scalars import Scalar
from .series import RING_T, RING_X4, RING_X5, PolyRing
from .vfalgebras import E44Elt, E510Elt

__all__ = ["rand_scalar", "rand_poly", "rand_e510", "rand_e44", "rand_e16", "rand_k16", "SAMPLERS"]


def rand_scalar(rng: random.Random, simple: bool = False) -> Scalar:
    def q():
        return Fraction(rng.randint(-4, 4), rng.randint(1, 3))
    if simple:
        c = q()
        return Scalar(c if c else 1)
    comps = [q() if rng.random() < 0.5 else 0 for _ in range(4)]
    if not any(comps):
        comps[0] = Fraction(1)
    return Scalar(*comps)


def _rand_exp(rng: random.Random, nvars: int, maxdeg: int) -> tuple[int, ...]:
    deg = rng.randint(0, maxdeg)
    e = [0] * nvars
    for _ in range(deg):
        e[rng.randrange(nvars)] += 1
    return tuple(e)


def rand_poly(rng: random.Random, ring: PolyRing, maxdeg: int = 2, nterms: int = 2):
    return ring.from_dict({_rand_exp(rng, ring.nvars, maxdeg): rand_scalar(rng) for _ in range(nterms)})


def _rand_form(rng, ring, k, maxdeg, nterms):
    idx = list(itertools.combinations(range(ring.nvars), k))
    comps = {}
    for _ in range(nterms):
        comps[rng.choice(idx)] = rand_poly(rng, ring, maxdeg, 1)
    return DiffForm(ring, k, comps)


def rand_e510(rng: random.Random, parity: int, maxdeg: int = 2) -> E510Elt:
    """Even: the field dual to d(random 3-form); odd: d(random 1-form)."""
    while True:
        if parity == 0:
            X = vf_from_form(form_d(_rand_form(rng, RING_X5, 3, maxdeg + 1, 2)))
            elt = E510Elt(X)
        else:
            elt = E510Elt(odd=form_d(_rand_form(rng, RING_X5, 1, maxdeg + 1, 2)))
        if not elt.is_zero():
            return elt


def rand_e44(rng: random.Random, parity: int, maxdeg: int = 2) -> E44Elt:
    while True:
        if parity == 0:
            comps = {rng.randrange(4): rand_poly(rng, RING_X4, maxdeg, 2) for _ in range(2)}
            elt = E44Elt(VectorField(RING_X4, comps))
        else:
            elt = E44Elt(odd=_rand_form(rng, RING_X4, 1, maxdeg, 2))
        if not elt.is_zero():
            return elt


def _rand_tpoly(rng, maxdeg):
    return RING_T.from_dict({(rng.randint(0, maxdeg),): rand_scalar(rng) for _ in range(2)})


def rand_e16(rng: random.Random, parity: int, maxdeg: int = 3) -> E16Elt:
    while True:
        out = E16Elt()
        for _ in range(2):
            f = _rand_tpoly(rng, maxdeg)
            if parity == 0:
                if rng.random() < 0.3:
                    out = out + E16Elt.dt(f)
                else:
                    i, j = rng.sample(IDX, 2)
                    if rng.random() < 0.3:
                        out = out + E16Elt(sl4={(i, i): f, (j, j): -f})
                    else:
                        out = out + E16Elt(sl4={(i, j): f})
            else:
                if rng.random() < 0.5:
                    out = out + E16Elt.quad(rng.choice(IDX), rng.choice(IDX), f)
                else:
                    i, j = rng.sample(IDX, 2)
                    out = out + E16Elt.form(i, j, f)
        if not out.is_zero():
            return out


def rand_k16(rng: random.Random, parity: int, maxdeg: int = 3, coord: str = XIETA) -> K16Elt:
    masks = [m for m in range(64) if popcount(m) % 2 == parity]
    while True:
        terms = {(rng.randint(0, maxdeg), rng.choice(masks)): rand_scalar(rng) for _ in range(2)}
        out = K16Elt(terms, coord)
        if not out.is_zero():
            return out


SAMPLERS = {"e510": rand_e510, "e44": rand_e44, "e16": rand_e16, "k16": rand_k16}
