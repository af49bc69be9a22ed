"""Free Lie algebra on H in the Lyndon basis, and its quotient by the ideal of omega0."""

from __future__ import annotations

import heapq
from functools import lru_cache
from typing import Iterable, Mapping

from .linalg import Echelon, axpy, qnorm
from .tensor import (
    SpGenerator,
    Tensor,
    Weight,
    a,
    b,
    format_sum,
    letter_name,
    sp_apply,
    weight_of,
)

LWord = tuple[int, ...]


class NotLieError(ValueError):
    """A tensor was expected to lie in the image of the Lie algebra but does not."""


# --- Lyndon words ------------------------------------------------------------


def is_lyndon(w: LWord) -> bool:
    return len(w) > 0 and all(w < w[i:] for i in range(1, len(w)))


@lru_cache(maxsize=None)
def lyndon_words(k: int, n: int) -> tuple[LWord, ...]:
    """All Lyndon words of length ``k`` over ``0..n-1`` in increasing order (Duval)."""
    if k < 1:
        raise ValueError("degree must be >= 1")
    out = []
    w = [-1]
    while w:
        w[-1] += 1
        if len(w) == k:
            out.append(tuple(w))
        m = len(w)
        while len(w) < k:
            w.append(w[len(w) - m])
        while w and w[-1] == n - 1:
            w.pop()
    return tuple(out)


def lyndon_basis(k: int, g: int) -> tuple[LWord, ...]:
    return lyndon_words(k, 2 * g)


@lru_cache(maxsize=None)
def lyndon_by_weight(k: int, g: int) -> dict[Weight, tuple[LWord, ...]]:
    out: dict = {}
    for w in lyndon_basis(k, g):
        out.setdefault(weight_of(w, g), []).append(w)
    return {key: tuple(v) for key, v in out.items()}


def witt_dimension(k: int, g: int) -> int:
    """Necklace count (1/k) sum_{d|k} mobius(d) (2g)^{k/d}."""
    n = 2 * g
    return sum(mobius(d) * n ** (k // d) for d in range(1, k + 1) if k % d == 0) // k


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("mobius needs n >= 1")
    result, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    return -result if n > 1 else result


@lru_cache(maxsize=None)
def standard_factorization(w: LWord) -> tuple[LWord, LWord]:
    """Split a Lyndon word as u v with v its longest proper Lyndon suffix."""
    if len(w) < 2:
        raise ValueError("standard factorization needs length >= 2")
    for i in range(1, len(w)):
        if is_lyndon(w[i:]):
            return w[:i], w[i:]
    raise AssertionError("unreachable: the last letter is always Lyndon")


@lru_cache(maxsize=None)
def lyndon_iota(w: LWord) -> dict[LWord, int]:
    """Tensor expansion of the standard bracketing of a Lyndon word."""
    if len(w) == 1:
        return {w: 1}
    u, v = standard_factorization(w)
    return _commutator_terms(lyndon_iota(u), lyndon_iota(v))


def _commutator_terms(x: Mapping, y: Mapping) -> dict:
    d: dict = {}
    for w1, c1 in x.items():
        for w2, c2 in y.items():
            c = c1 * c2
            for key, s in ((w1 + w2, c), (w2 + w1, -c)):
                nc = d.get(key, 0) + s
                if nc:
                    d[key] = nc
                else:
                    del d[key]
    return d


def bracket_text(w: LWord) -> str:
    if len(w) == 1:
        return letter_name(w[0])
    u, v = standard_factorization(w)
    return f"[{bracket_text(u)},{bracket_text(v)}]"


def tensor_to_lyndon(terms: Mapping[LWord, object]) -> dict[LWord, object]:
    """Lyndon coordinates of a tensor in the image of iota.

    Uses triangularity: iota(P_w) = w + (lexicographically larger words).
    Raises NotLieError when the tensor is not a Lie element.
    """
    r = dict(terms)
    heap = list(r)
    heapq.heapify(heap)
    out: dict = {}
    while heap:
        w = heapq.heappop(heap)
        c = r.pop(w, 0)
        if not c:
            continue
        if not is_lyndon(w):
            raise NotLieError(f"tensor is not in the free Lie algebra (minimal word {w})")
        out[w] = qnorm(c)
        for kk, vv in lyndon_iota(w).items():
            if kk == w:
                continue
            nc = r.get(kk, 0) - c * vv
            if nc:
                if kk not in r:
                    heapq.heappush(heap, kk)
                r[kk] = nc
            else:
                r.pop(kk, None)
    return out


def lyndon_to_tensor(coords: Mapping[LWord, object]) -> dict[LWord, object]:
    d: dict = {}
    for w, c in coords.items():
        axpy(d, c, lyndon_iota(w))
    return d


# --- Lie elements ------------------------------------------------------------


class LieElement:
    """Homogeneous element of the free Lie algebra, in Lyndon coordinates."""

    __slots__ = ("degree", "terms", "_tensor")

    def __init__(self, terms: Mapping[LWord, object], degree: int):
        clean = {}
        for w, c in terms.items():
            c = qnorm(c)
            if not c:
                continue
            w = tuple(w)
            if len(w) != degree:
                raise ValueError("Lyndon word length does not match degree")
            if not is_lyndon(w):
                raise ValueError(f"{w} is not a Lyndon word")
            clean[w] = c
        self.degree = degree
        self.terms = clean
        self._tensor = None

    @classmethod
    def _raw(cls, terms: dict, degree: int) -> "LieElement":
        x = cls.__new__(cls)
        x.degree = degree
        x.terms = terms
        x._tensor = None
        return x

    @classmethod
    def letter(cls, x: int) -> "LieElement":
        return cls._raw({(x,): 1}, 1)

    @classmethod
    def zero(cls, degree: int) -> "LieElement":
        return cls._raw({}, degree)

    @classmethod
    def from_tensor(cls, t: Tensor) -> "LieElement":
        return cls._raw(tensor_to_lyndon(t.terms), t.degree)

    def to_tensor(self) -> Tensor:
        if self._tensor is None:
            self._tensor = Tensor._raw(
                {w: qnorm(c) for w, c in lyndon_to_tensor(self.terms).items()}, self.degree
            )
        return self._tensor

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, LieElement):
            if not self.terms and not other.terms:
                return True
            return self.degree == other.degree and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.degree, frozenset(self.terms.items())))

    def __add__(self, other: "LieElement") -> "LieElement":
        if isinstance(other, int) and other == 0:
            return self
        if not isinstance(other, LieElement):
            raise TypeError(f"cannot add LieElement and {type(other).__name__}")
        if self.degree != other.degree and self.terms and other.terms:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")
        d = axpy(dict(self.terms), 1, other.terms)
        return LieElement._raw(d, self.degree if self.terms else other.degree)

    __radd__ = __add__

    def __neg__(self) -> "LieElement":
        return LieElement._raw({w: -c for w, c in self.terms.items()}, self.degree)

    def __sub__(self, other) -> "LieElement":
        return self + (-other)

    def __mul__(self, c) -> "LieElement":
        c = qnorm(c)
        if not c:
            return LieElement.zero(self.degree)
        return LieElement._raw({w: qnorm(v * c) for w, v in self.terms.items()}, self.degree)

    __rmul__ = __mul__

    def weight_components(self, g: int) -> dict[Weight, "LieElement"]:
        out: dict = {}
        for w, c in self.terms.items():
            out.setdefault(weight_of(w, g), {})[w] = c
        return {k: LieElement._raw(v, self.degree) for k, v in out.items()}

    def __repr__(self) -> str:
        return f"LieElement({str(self)!r})"

    def __str__(self) -> str:
        return format_sum((bracket_text(w), self.terms[w]) for w in sorted(self.terms))


def lie_bracket(x: LieElement, y: LieElement) -> LieElement:
    t = _commutator_terms(x.to_tensor().terms, y.to_tensor().terms)
    return LieElement._raw(tensor_to_lyndon(t), x.degree + y.degree)


def lie_from_letters(*letters: int) -> LieElement:
    """Right-normed bracket [x1,[x2,[...,xk]]] of letters."""
    x = LieElement.letter(letters[-1])
    for y in reversed(letters[:-1]):
        x = lie_bracket(LieElement.letter(y), x)
    return x


def iota(x: LieElement) -> Tensor:
    return x.to_tensor()


def lie_sp_apply(gen: SpGenerator, x: LieElement) -> LieElement:
    return LieElement.from_tensor(sp_apply(gen, x.to_tensor()))


def omega0(g: int) -> LieElement:
    return LieElement._raw({(a(i), b(i)): 1 for i in range(1, g + 1)}, 2)


# --- the ideal generated by omega0 and the quotient ---------------------------


def _bracket_letter_coords(y: int, coords: Mapping[LWord, object]) -> dict:
    t = lyndon_to_tensor(coords)
    return tensor_to_lyndon(_commutator_terms({(y,): 1}, t))


@lru_cache(maxsize=None)
def _ideal_weights(g: int, k: int) -> frozenset:
    if k == 2:
        return frozenset({(0,) * g})
    out = set()
    for w in _ideal_weights(g, k - 1):
        for i in range(g):
            for s in (1, -1):
                nw = list(w)
                nw[i] += s
                out.add(tuple(nw))
    return frozenset(out)


@lru_cache(maxsize=None)
def _ideal_echelon(g: int, k: int, w: Weight) -> Echelon:
    """Echelon basis of the weight-w part of I(k), in Lyndon coordinates."""
    ech = Echelon()
    if w not in _ideal_weights(g, k):
        return ech
    if k == 2:
        ech.add(omega0(g).terms)
        return ech
    for y in range(2 * g):
        wy = weight_of((y,), g)
        prev = tuple(p - q for p, q in zip(w, wy))
        for row in _ideal_echelon(g, k - 1, prev).basis():
            ech.add(_bracket_letter_coords(y, row))
    return ech


def ideal_component(k: int, g: int) -> list[LieElement]:
    """A basis of I(k), the degree-k part of the ideal generated by omega0."""
    if k < 2:
        raise ValueError("the ideal starts in degree 2")
    out = []
    for w in sorted(_ideal_weights(g, k)):
        out.extend(LieElement._raw(dict(r), k) for r in _ideal_echelon(g, k, w).basis())
    return out


def ideal_dimension(k: int, g: int) -> int:
    if k < 2:
        return 0
    return sum(len(_ideal_echelon(g, k, w)) for w in _ideal_weights(g, k))


def quotient_dimension(k: int, g: int) -> int:
    return witt_dimension(k, g) - ideal_dimension(k, g)


class QuotientContext:
    """Reduction of degree-k Lie elements modulo I(k).

    The representative of a coset is the remainder after eliminating every
    pivot of the ideal's echelon basis, so it is canonical.
    """

    def __init__(self, k: int, g: int):
        if k < 1:
            raise ValueError("degree must be >= 1")
        self.k = k
        self.g = g

    def echelon(self, w: Weight) -> Echelon:
        if self.k < 2:
            return Echelon()
        return _ideal_echelon(self.g, self.k, w)

    def reduce_coords(self, coords: Mapping[LWord, object], w: Weight | None = None) -> dict:
        if w is not None:
            return self.echelon(w).reduce(coords)
        out: dict = {}
        by_w: dict = {}
        for word, c in coords.items():
            by_w.setdefault(weight_of(word, self.g), {})[word] = c
        for wt, part in by_w.items():
            out.update(self.echelon(wt).reduce(part))
        return out

    def project(self, x: LieElement) -> LieElement:
        if x.degree != self.k:
            raise ValueError(f"degree {x.degree} does not match quotient degree {self.k}")
        return LieElement._raw(self.reduce_coords(x.terms), self.k)

    def contains(self, x: LieElement) -> bool:
        return not self.project(x)

    @property
    def ideal_dim(self) -> int:
        return ideal_dimension(self.k, self.g)

    @property
    def dim(self) -> int:
        return quotient_dimension(self.k, self.g)


def quotient_project(x: LieElement, g: int) -> LieElement:
    return QuotientContext(x.degree, g).project(x)


def lie_span_rank(elements: Iterable[LieElement]) -> int:
    ech = Echelon()
    for x in elements:
        ech.add(x.terms)
    return len(ech)
