"""Exact sparse Gaussian elimination over :class:`~exls.scalars.Scalar`.

Vectors are plain dicts ``key -> Scalar`` with arbitrary hashable keys.
:class:`RowReducer` keeps a fully reduced echelon basis and, for every
basis row, the combination of input vectors it came from, so it can
answer rank, membership, coordinate and kernel questions exactly.
"""

from __future__ import annotations

from typing import Hashable, Iterable, Mapping

from .scalars import ONE, Scalar, as_scalar

__all__ = ["RowReducer", "rank", "nullspace", "solve_in_span", "vec_add", "vec_scale"]

Vec = dict


def vec_add(a: Mapping, b: Mapping, c=ONE) -> Vec:
    """a + c*b as a new dict."""
    out = dict(a)
    for k, v in b.items():
        w = out.get(k)
        w = v * c if w is None else w + v * c
        if w:
            out[k] = w
        else:
            out.pop(k, None)
    return out


def vec_scale(a: Mapping, c) -> Vec:
    c = as_scalar(c)
    if not c:
        return {}
    return {k: v * c for k, v in a.items()}


def _axpy(target: dict, src: Mapping, c: Scalar):
    """target += c*src in place."""
    for k, v in src.items():
        w = target.get(k)
        if w is None:
            target[k] = v * c
        else:
            w = w + v * c
            if w:
                target[k] = w
            else:
                del target[k]


class RowReducer:
    """Incremental reduced row echelon form with provenance tracking.

    ``add(v)`` returns the index assigned to ``v``.  Vectors that reduce to
    zero contribute a kernel relation among the inputs.
    """

    def __init__(self, track: bool = True):
        self.track = track
        self.rows: dict[Hashable, tuple[dict, dict]] = {}   # pivot -> (row, combo)
        self.kernel: list[dict[int, Scalar]] = []
        self.count = 0

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _reduce(self, v: Mapping, combo: dict | None):
        v = dict(v)
        for p in [k for k in v if k in self.rows]:
            c = v.get(p)
            if c is None:
                continue
            row, rcombo = self.rows[p]
            _axpy(v, row, -c)
            if combo is not None:
                _axpy(combo, rcombo, -c)
        return v

    def reduce(self, v: Mapping) -> dict:
        """Residual of v modulo the current span (zero dict iff v is in the span)."""
        return self._reduce(v, None)

    def contains(self, v: Mapping) -> bool:
        return not self._reduce(v, None)

    def add(self, v: Mapping) -> int:
        idx = self.count
        self.count += 1
        combo = {idx: ONE} if self.track else None
        r = self._reduce(v, combo)
        if not r:
            if combo is not None:
                self.kernel.append(combo)
            return idx
        p = next(iter(r))
        inv = r[p].inv()
        r = {k: c * inv for k, c in r.items()}
        if combo is not None:
            combo = {k: c * inv for k, c in combo.items()}
        for q, (row, rcombo) in self.rows.items():
            c = row.get(p)
            if c is not None:
                _axpy(row, r, -c)
                if combo is not None:
                    _axpy(rcombo, combo, -c)
        self.rows[p] = (r, combo if combo is not None else {})
        return idx

    def coordinates(self, v: Mapping) -> dict[int, Scalar] | None:
        """Coefficients c with v = sum c_i input_i, or None if v is not in the span."""
        if not self.track:
            raise ValueError("coordinates need a tracking reducer")
        v = dict(v)
        out: dict = {}
        for p in [k for k in v if k in self.rows]:
            c = v.get(p)
            if c is None:
                continue
            row, rcombo = self.rows[p]
            _axpy(v, row, -c)
            _axpy(out, rcombo, c)
        if v:
            return None
        return out


def rank(vectors: Iterable[Mapping]) -> int:
    rr = RowReducer(track=False)
    for v in vectors:
        rr.add(v)
    return rr.rank


def nullspace(vectors: Iterable[Mapping]) -> list[dict[int, Scalar]]:
    """Basis of {c : sum_i c_i v_i = 0}, as sparse index -> coefficient dicts."""
    rr = RowReducer()
    for v in vectors:
        rr.add(v)
    return rr.kernel


def solve_in_span(vectors: Iterable[Mapping], target: Mapping) -> dict[int, Scalar] | None:
    rr = RowReducer()
    for v in vectors:
        rr.add(v)
    return rr.coordinates(target)
