"""Exact sparse linear algebra over Q.

Vectors are plain dicts ``key -> coefficient`` with ``int`` or ``Fraction``
values and totally ordered keys. Zero entries are never stored.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping


def qnorm(c):
    """Return ``c`` as an int when it is integral, else as a Fraction."""
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, Rational):
        return qnorm(Fraction(c.numerator, c.denominator))
    raise TypeError(f"exact rational coefficient required, got {type(c).__name__}")


def qdiv(a, b):
    if isinstance(a, int) and isinstance(b, int) and a % b == 0:
        return a // b
    return qnorm(Fraction(a) / b)


def axpy(y: dict, a, x: Mapping) -> dict:
    """In-place ``y += a*x``; returns ``y``."""
    for k, v in x.items():
        c = y.get(k, 0) + a * v
        if c:
            y[k] = c
        else:
            y.pop(k, None)
    return y


class Echelon:
    """Echelon basis of a growing subspace of sparse vectors.

    Each stored row has a pivot equal to its smallest key, with coefficient 1.
    ``reduce`` eliminates every pivot coordinate, so its result is the
    canonical representative of ``v`` modulo the span.
    """

    def __init__(self, vectors: Iterable[Mapping] = ()):
        self.rows: dict = {}
        for v in vectors:
            self.add(v)

    def __len__(self) -> int:
        return len(self.rows)

    def _reduce(self, v: Mapping, track: dict | None = None, tracks: dict | None = None) -> dict:
        r = dict(v)
        heap = list(r)
        heapq.heapify(heap)
        seen = set()
        while heap:
            k = heapq.heappop(heap)
            if k in seen:
                continue
            seen.add(k)
            c = r.get(k)
            if not c or k not in self.rows:
                continue
            row = self.rows[k]
            for kk, vv in row.items():
                nc = r.get(kk, 0) - c * vv
                if nc:
                    if kk not in r:
                        heapq.heappush(heap, kk)
                    r[kk] = nc
                else:
                    r.pop(kk, None)
            if track is not None:
                axpy(track, -c, tracks[k])
        return {k: qnorm(c) for k, c in r.items()}

    def reduce(self, v: Mapping) -> dict:
        return self._reduce(v)

    def contains(self, v: Mapping) -> bool:
        return not self._reduce(v)

    def add(self, v: Mapping) -> bool:
        """Add ``v`` to the span; return True when the rank grew."""
        r = self._reduce(v)
        if not r:
            return False
        p = min(r)
        inv = r[p]
        self.rows[p] = {k: qdiv(c, inv) for k, c in r.items()}
        return True

    def basis(self) -> list[dict]:
        return [self.rows[k] for k in sorted(self.rows)]


def rank(vectors: Iterable[Mapping]) -> int:
    return len(Echelon(vectors))


def kernel(images: list[Mapping]) -> list[dict[int, object]]:
    """Kernel of the map sending basis vector ``i`` to ``images[i]``.

    Returns kernel vectors as ``{index: coefficient}`` dicts. Each returned
    vector has coefficient 1 at an index no earlier vector uses as its last
    entry, so the list is linearly independent.
    """
    rows: dict = {}
    tracks: dict = {}
    ech = Echelon()
    ech.rows = rows
    out = []
    for i, img in enumerate(images):
        track = {i: 1}
        r = ech._reduce(img, track, tracks)
        if not r:
            out.append({k: qnorm(c) for k, c in track.items() if c})
            continue
        p = min(r)
        inv = r[p]
        rows[p] = {k: qdiv(c, inv) for k, c in r.items()}
        tracks[p] = {k: qdiv(c, inv) for k, c in track.items() if c}
    return out


def solve_in_span(vectors: list[Mapping], target: Mapping) -> dict[int, object] | None:
    """Coefficients ``x`` with ``sum x[i]*vectors[i] == target``, or None."""
    rows: dict = {}
    tracks: dict = {}
    ech = Echelon()
    ech.rows = rows
    for i, v in enumerate(vectors):
        track = {i: 1}
        r = ech._reduce(v, track, tracks)
        if not r:
            continue
        p = min(r)
        inv = r[p]
        rows[p] = {k: qdiv(c, inv) for k, c in r.items()}
        tracks[p] = {k: qdiv(c, inv) for k, c in track.items() if c}
    track: dict = {}
    r = ech._reduce(target, track, tracks)
    if r:
        return None
    return {k: qnorm(-c) for k, c in track.items() if c}


def matrix_rank(rows: list[list]) -> int:
    """Rank of a small dense matrix given as a list of rows."""
    return rank({j: qnorm(Fraction(x)) for j, x in enumerate(row) if x} for row in rows)
