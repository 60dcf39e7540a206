"""The exterior algebra on six odd generators, in two coordinate systems.

Monomials are 6-bit masks over a fixed generator order:

* ``XIETA``: xi2 < xi3 < xi4 < eta2 < eta3 < eta4 (bits 0..5).  The
  alternative names xi1 = eta4 and eta1 = xi4 are accepted on input.
* ``RHO``: rho1 < ... < rho6 (bits 0..5).

Signs of products come from inversion counts between masks; the bit
formula is cross-checked in the tests against literal list reordering.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, Mapping

from .scalars import ONE, ZERO, I, Scalar, as_scalar

__all__ = [
    "XIETA", "RHO", "GEN_NAMES", "GrassElt", "CoordinateMismatch",
    "popcount", "mul_sign", "reorder_sign", "left_partial_mono",
    "star_mono", "sharp_mono", "bar_mask", "generator_index",
    "gr_wedge", "gr_partial", "gr_star", "gr_sharp", "gr_change_coords",
]

XIETA = "xieta"
RHO = "rho"
FULL = 0b111111

GEN_NAMES = {
    XIETA: ("xi2", "xi3", "xi4", "eta2", "eta3", "eta4"),
    RHO: ("rho1", "rho2", "rho3", "rho4", "rho5", "rho6"),
}
_ALIASES = {"xi1": (XIETA, 5), "eta1": (XIETA, 2)}


class CoordinateMismatch(ValueError):
    pass


def generator_index(name: str) -> tuple[str, int]:
    """Map a generator name to (coord, bit)."""
    if name in _ALIASES:
        return _ALIASES[name]
    for coord, names in GEN_NAMES.items():
        if name in names:
            return coord, names.index(name)
    raise KeyError(f"unknown odd generator {name!r}")


def popcount(x: int) -> int:
    return bin(x).count("1")


def _bits(m: int) -> list[int]:
    return [k for k in range(6) if m >> k & 1]


@lru_cache(maxsize=None)
def mul_sign(a: int, b: int) -> int:
    """Sign s with m_a * m_b = s * m_(a|b); 0 when the masks overlap."""
    if a & b:
        return 0
    inv = 0
    for j in _bits(b):
        inv += popcount(a >> (j + 1))
    return -1 if inv & 1 else 1


def reorder_sign(seq: Iterable[int]) -> int:
    """Sign of the product of generators taken in the order ``seq``; 0 on repeats."""
    seq = list(seq)
    if len(set(seq)) != len(seq):
        return 0
    inv = sum(1 for x in range(len(seq)) for y in range(x + 1, len(seq)) if seq[x] > seq[y])
    return -1 if inv & 1 else 1


def left_partial_mono(m: int, k: int) -> tuple[int, int]:
    """Odd left derivative d/d(gen k) of monomial m -> (sign, mask)."""
    if not m >> k & 1:
        return 0, 0
    sign = -1 if popcount(m & ((1 << k) - 1)) & 1 else 1
    return sign, m ^ (1 << k)


@lru_cache(maxsize=None)
def star_mono(m: int) -> tuple[int, int]:
    """rho_m^* as (sign, mask): rho_m * rho_m^* = rho1...rho6."""
    comp = FULL ^ m
    return mul_sign(m, comp), comp


def bar_mask_seq(m: int) -> list[int]:
    return [(b + 3) % 6 for b in _bits(m)]


def bar_mask(m: int) -> int:
    return sum(1 << b for b in bar_mask_seq(m))


@lru_cache(maxsize=None)
def sharp_mono(m: int) -> tuple[int, int]:
    """xi_m^# as (sign, mask): xi_(bar m) * xi_m^# = xi2 xi3 xi4 eta2 eta3 eta4."""
    seq = bar_mask_seq(m)
    b = sum(1 << x for x in seq)
    sigma = reorder_sign(seq)
    comp = FULL ^ b
    return sigma * mul_sign(b, comp), comp


# ---------------------------------------------------------------------------

class GrassElt:
    """Element of the exterior algebra: {mask: Scalar} in one coordinate system."""

    __slots__ = ("coord", "terms")

    def __init__(self, terms: Mapping[int, object] | None = None, coord: str = XIETA):
        if coord not in GEN_NAMES:
            raise ValueError(f"unknown coordinate system {coord!r}")
        self.coord = coord
        self.terms = {}
        for m, c in (terms or {}).items():
            c = as_scalar(c)
            if c:
                self.terms[m] = c

    @classmethod
    def gen(cls, name: str) -> "GrassElt":
        coord, k = generator_index(name)
        return cls({1 << k: ONE}, coord)

    @classmethod
    def mono(cls, names: Iterable[str], coeff=ONE, coord: str | None = None) -> "GrassElt":
        """Product of the named generators in the given order."""
        names = list(names)
        out = cls({0: as_scalar(coeff)}, coord or (generator_index(names[0])[0] if names else XIETA))
        for n in names:
            out = out * cls.gen(n)
        return out

    @classmethod
    def one(cls, coord: str = XIETA) -> "GrassElt":
        return cls({0: ONE}, coord)

    def _check(self, other: "GrassElt"):
        if self.coord != other.coord:
            raise CoordinateMismatch(f"coordinate mismatch: {self.coord} vs {other.coord}")

    def __add__(self, other: "GrassElt"):
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, ZERO) + c
        return GrassElt(out, self.coord)

    def __neg__(self):
        return GrassElt({m: -c for m, c in self.terms.items()}, self.coord)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "GrassElt":
        c = as_scalar(c)
        return GrassElt({m: v * c for m, v in self.terms.items()}, self.coord)

    def __mul__(self, other):
        if isinstance(other, GrassElt):
            return gr_wedge(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, GrassElt):
            return NotImplemented
        if self.coord != other.coord:
            other = gr_change_coords(other, self.coord)
        return not (self - other).terms

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def items(self) -> Iterator[tuple[int, Scalar]]:
        return iter(self.terms.items())

    def degrees(self) -> set[int]:
        return {popcount(m) for m in self.terms}

    def partial(self, gen: str | int) -> "GrassElt":
        return gr_partial(self, gen)

    def star(self) -> "GrassElt":
        return gr_star(self)

    def sharp(self) -> "GrassElt":
        return gr_sharp(self)

    def to(self, coord: str) -> "GrassElt":
        return gr_change_coords(self, coord)

    def __str__(self):
        from .series import format_term, join_terms
        names = GEN_NAMES[self.coord]
        pieces = []
        for m in sorted(self.terms, key=lambda m: (popcount(m), _bits(m))):
            body = "*".join(names[k] for k in _bits(m))
            pieces.append(format_term(self.terms[m], body))
        return join_terms(pieces)

    def __repr__(self):
        return f"GrassElt({str(self)!r}, {self.coord})"


def gr_wedge(a: GrassElt, b: GrassElt) -> GrassElt:
    a._check(b)
    out: dict[int, Scalar] = {}
    for m1, c1 in a.terms.items():
        for m2, c2 in b.terms.items():
            s = mul_sign(m1, m2)
            if s:
                m = m1 | m2
                c = c1 * c2 if s > 0 else -(c1 * c2)
                out[m] = out[m] + c if m in out else c
    return GrassElt(out, a.coord)


def gr_partial(a: GrassElt, gen: str | int) -> GrassElt:
    if isinstance(gen, str):
        coord, k = generator_index(gen)
        if coord != a.coord:
            raise CoordinateMismatch(f"generator {gen} is not a {a.coord} coordinate")
    else:
        k = gen
    out = {}
    for m, c in a.terms.items():
        s, r = left_partial_mono(m, k)
        if s:
            out[r] = c if s > 0 else -c
    return GrassElt(out, a.coord)


def gr_star(a: GrassElt) -> GrassElt:
    if a.coord != RHO:
        return gr_change_coords(gr_star(gr_change_coords(a, RHO)), a.coord)
    out = {}
    for m, c in a.terms.items():
        s, r = star_mono(m)
        out[r] = c if s > 0 else -c
    return GrassElt(out, RHO)


def gr_sharp(a: GrassElt) -> GrassElt:
    if a.coord != XIETA:
        return gr_change_coords(gr_sharp(gr_change_coords(a, XIETA)), a.coord)
    out = {}
    for m, c in a.terms.items():
        s, r = sharp_mono(m)
        out[r] = c if s > 0 else -c
    return GrassElt(out, XIETA)


# -- coordinate change ------------------------------------------------------
# rho_j = (xi_j + eta_j)/sqrt2, rho_(j+3) = (xi_j - eta_j)/sqrt(-2), j = 1, 2, 3,
# with xi1 = eta4 and eta1 = xi4 in the renamed system.

_H = Scalar(0, "1/2")            # 1/sqrt2 = r2/2
_HI = _H * I                     # i/sqrt2
_ORIG_XI = {1: 5, 2: 0, 3: 1}    # original xi_j  -> XIETA bit
_ORIG_ETA = {1: 2, 2: 3, 3: 4}   # original eta_j -> XIETA bit


def _gen_images():
    to_rho = {}
    to_xieta = {}
    for j in (1, 2, 3):
        a, b = j - 1, j + 2                 # rho_j, rho_(j+3) bits
        to_rho[_ORIG_XI[j]] = {1 << a: _H, 1 << b: _HI}
        to_rho[_ORIG_ETA[j]] = {1 << a: _H, 1 << b: -_HI}
        x, e = _ORIG_XI[j], _ORIG_ETA[j]
        to_xieta[a] = {1 << x: _H, 1 << e: _H}
        to_xieta[b] = {1 << x: -_HI, 1 << e: _HI}   # 1/sqrt(-2) = -i/sqrt2
    return to_rho, to_xieta


_GEN_TO_RHO, _GEN_TO_XIETA = _gen_images()


@lru_cache(maxsize=None)
def _mono_image(m: int, target: str) -> tuple[tuple[int, Scalar], ...]:
    gens = _GEN_TO_RHO if target == RHO else _GEN_TO_XIETA
    img = GrassElt({0: ONE}, target)
    for k in _bits(m):
        img = gr_wedge(img, GrassElt(gens[k], target))
    return tuple(img.terms.items())


def gr_change_coords(a: GrassElt, to: str) -> GrassElt:
    if a.coord == to:
        return a
    if to not in GEN_NAMES:
        raise ValueError(f"unknown coordinate system {to!r}")
    out: dict[int, Scalar] = {}
    for m, c in a.terms.items():
        for r, v in _mono_image(m, to):
            out[r] = out.get(r, ZERO) + c * v
    return GrassElt(out, to)
