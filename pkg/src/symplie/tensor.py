"""Sparse exact tensors over the symplectic space H = <a_1..a_g, b_1..b_g>.

A letter is an ``int`` code: ``a_i -> 2(i-1)`` and ``b_i -> 2(i-1)+1``, so the
natural integer order is a1 < b1 < a2 < b2 < ... . A word is a tuple of
letter codes, and a :class:`Tensor` is a sparse map from words of one fixed
length to exact rationals.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Iterable, Mapping, Sequence

from .linalg import qnorm

Word = tuple[int, ...]
Weight = tuple[int, ...]


class GenusError(ValueError):
    """A letter index lies outside 1..g."""


def a(i: int) -> int:
    if i < 1:
        raise GenusError(f"letter index must be >= 1, got {i}")
    return 2 * (i - 1)


def b(i: int) -> int:
    if i < 1:
        raise GenusError(f"letter index must be >= 1, got {i}")
    return 2 * (i - 1) + 1


def index_of(x: int) -> int:
    return x // 2 + 1


def is_a(x: int) -> bool:
    return x % 2 == 0


def dual(x: int) -> int:
    """The letter pairing nontrivially with ``x`` (a_i <-> b_i)."""
    return x ^ 1


def letter_name(x: int) -> str:
    return ("a" if x % 2 == 0 else "b") + str(x // 2 + 1)


_LETTER_RE = re.compile(r"^([ab])(\d+)$")


def parse_letter(s: str, g: int | None = None) -> int:
    m = _LETTER_RE.match(s.strip())
    if not m:
        raise ValueError(f"not a letter: {s!r}")
    i = int(m.group(2))
    if g is not None and not 1 <= i <= g:
        raise GenusError(f"{s} has index {i} outside 1..{g}")
    return a(i) if m.group(1) == "a" else b(i)


def check_genus(x: int, g: int) -> None:
    if not 0 <= x < 2 * g:
        raise GenusError(f"{letter_name(x)} is not a letter of genus {g}")


def mu(x: int, y: int, g: int | None = None) -> int:
    """Intersection form: mu(a_i, b_j) = delta_ij, antisymmetric."""
    if g is not None:
        check_genus(x, g)
        check_genus(y, g)
    if x ^ 1 != y:
        return 0
    return 1 if x % 2 == 0 else -1


def weight_of(word: Iterable[int], g: int) -> Weight:
    w = [0] * g
    for x in word:
        i = x // 2
        if i >= g:
            raise GenusError(f"{letter_name(x)} is not a letter of genus {g}")
        w[i] += 1 if x % 2 == 0 else -1
    return tuple(w)


def word_name(word: Word) -> str:
    return "⊗".join(letter_name(x) for x in word)


def _coeff_str(c, first: bool) -> tuple[str, str]:
    """Sign and magnitude text for a coefficient in a printed sum."""
    sign = "-" if c < 0 else "+"
    mag = abs(c)
    if first:
        sign = "-" if c < 0 else ""
    return sign, ("" if mag == 1 else str(mag))


def format_sum(items: Iterable[tuple[str, object]], scalar_text: str | None = None) -> str:
    """Join ``(basis_text, coeff)`` pairs as ``c1 x1 + c2 x2 - ...``."""
    parts = []
    for text, c in items:
        sign, mag = _coeff_str(c, not parts)
        if not text:
            body = str(abs(c))
        elif mag:
            body = f"{mag} {text}"
        else:
            body = text
        if parts:
            parts.append(f" {sign} {body}")
        else:
            parts.append(f"{sign}{body}")
    return "".join(parts) if parts else "0"


class Tensor:
    """Element of the k-th tensor power of H with rational coefficients.

    Values are immutable by convention; every operation returns a new tensor.
    """

    __slots__ = ("degree", "terms")

    def __init__(self, terms: Mapping[Word, object] | None = None, degree: int | None = None):
        clean = {}
        for w, c in (terms or {}).items():
            c = qnorm(c)
            if c:
                w = tuple(w)
                clean[w] = clean.get(w, 0) + c
                if not clean[w]:
                    del clean[w]
        degrees = {len(w) for w in clean}
        if len(degrees) > 1:
            raise ValueError(f"mixed degrees {sorted(degrees)} in one tensor")
        if degree is None:
            if not degrees:
                raise ValueError("degree required for an empty tensor")
            degree = degrees.pop()
        elif degrees and degrees.pop() != degree:
            raise ValueError("word length does not match declared degree")
        self.degree = degree
        self.terms = clean

    @classmethod
    def _raw(cls, terms: dict, degree: int) -> "Tensor":
        t = cls.__new__(cls)
        t.degree = degree
        t.terms = terms
        return t

    @classmethod
    def zero(cls, degree: int) -> "Tensor":
        return cls._raw({}, degree)

    @classmethod
    def word(cls, *letters: int, coeff=1) -> "Tensor":
        return cls({tuple(letters): coeff}, len(letters))

    @classmethod
    def scalar(cls, c) -> "Tensor":
        return cls({(): c}, 0)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Tensor):
            if not self.terms and not other.terms:
                return True
            return self.degree == other.degree and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.degree, frozenset(self.terms.items())))

    def _check(self, other: "Tensor") -> None:
        if not isinstance(other, Tensor):
            raise TypeError(f"cannot combine Tensor with {type(other).__name__}")
        if self.degree != other.degree and self.terms and other.terms:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")

    def __add__(self, other: "Tensor") -> "Tensor":
        if isinstance(other, int) and other == 0:
            return self
        self._check(other)
        d = dict(self.terms)
        for w, c in other.terms.items():
            nc = d.get(w, 0) + c
            if nc:
                d[w] = nc
            else:
                d.pop(w, None)
        return Tensor._raw(d, self.degree if self.terms else other.degree)

    __radd__ = __add__

    def __neg__(self) -> "Tensor":
        return Tensor._raw({w: -c for w, c in self.terms.items()}, self.degree)

    def __sub__(self, other: "Tensor") -> "Tensor":
        return self + (-other)

    def __mul__(self, c) -> "Tensor":
        c = qnorm(c)
        if not c:
            return Tensor.zero(self.degree)
        return Tensor._raw({w: qnorm(v * c) for w, v in self.terms.items()}, self.degree)

    __rmul__ = __mul__

    def __truediv__(self, c) -> "Tensor":
        return self * (Fraction(1) / qnorm(c))

    def otimes(self, other: "Tensor") -> "Tensor":
        d = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                d[w1 + w2] = c1 * c2
        return Tensor._raw(d, self.degree + other.degree)

    __matmul__ = otimes

    def coeff(self, word: Sequence[int]):
        return self.terms.get(tuple(word), 0)

    def scalar_value(self):
        """The rational value of a degree-0 tensor."""
        if self.degree != 0:
            raise ValueError("scalar_value needs a degree-0 tensor")
        return self.terms.get((), 0)

    def weights(self, g: int) -> set[Weight]:
        return {weight_of(w, g) for w in self.terms}

    def weight_components(self, g: int) -> dict[Weight, "Tensor"]:
        out: dict = {}
        for w, c in self.terms.items():
            out.setdefault(weight_of(w, g), {})[w] = c
        return {k: Tensor._raw(v, self.degree) for k, v in out.items()}

    def max_index(self) -> int:
        return max((x // 2 + 1 for w in self.terms for x in w), default=0)

    def __repr__(self) -> str:
        return f"Tensor({str(self)!r})"

    def __str__(self) -> str:
        if self.degree == 0:
            return str(self.terms.get((), 0))
        return format_sum((word_name(w), self.terms[w]) for w in sorted(self.terms))


def commutator(x: Tensor, y: Tensor) -> Tensor:
    return x.otimes(y) - y.otimes(x)


def letter_tensor(x: int) -> Tensor:
    return Tensor._raw({(x,): 1}, 1)


def contract(t: Tensor, i: int, j: int) -> Tensor:
    """Contraction C_k^{(i,j)} with 1-based positions i < j.

    Pairs positions i and j through ``mu`` and deletes them; the remaining
    positions keep their relative order.
    """
    k = t.degree
    if not (1 <= i < j <= k):
        raise ValueError(f"contraction ({i},{j}) invalid for degree {k}")
    i -= 1
    j -= 1
    d: dict = {}
    for w, c in t.terms.items():
        x, y = w[i], w[j]
        if x ^ 1 != y:
            continue
        s = c if x % 2 == 0 else -c
        nw = w[:i] + w[i + 1:j] + w[j + 1:]
        nc = d.get(nw, 0) + s
        if nc:
            d[nw] = nc
        else:
            d.pop(nw, None)
    return Tensor._raw(d, k - 2)


def wedge_square_embed(u: Tensor, v: Tensor) -> Tensor:
    """Image of u ∧ v in H^{⊗2k}: u⊗v - v⊗u."""
    if u.degree != v.degree:
        raise ValueError(f"degree mismatch: {u.degree} vs {v.degree}")
    return commutator(u, v)


# --- wedge projections -------------------------------------------------------

_SHAPE_RE = re.compile(r"\(([^()]*)\)")


def parse_shape(text: str) -> tuple[tuple[int, ...], ...]:
    """Parse a projection symbol such as ``(1,2,5)(4,3)(6,7)(8)``."""
    text = text.replace(" ", "")
    blocks = _SHAPE_RE.findall(text)
    if not blocks or "".join(f"({b})" for b in blocks) != text:
        raise ValueError(f"bad projection symbol {text!r}")
    return tuple(tuple(int(p) for p in blk.split(",")) for blk in blocks)


def shape_str(shape: Sequence[Sequence[int]]) -> str:
    return "".join("(" + ",".join(map(str, blk)) + ")" for blk in shape)


def sort_with_sign(word: Sequence[int]) -> tuple[int, Word]:
    """Sort letters of a wedge; sign 0 when a letter repeats."""
    w = list(word)
    if len(set(w)) != len(w):
        return 0, ()
    sign = 1
    # insertion sort tracks the permutation parity
    for i in range(1, len(w)):
        j = i
        while j > 0 and w[j - 1] > w[j]:
            w[j - 1], w[j] = w[j], w[j - 1]
            sign = -sign
            j -= 1
    return sign, tuple(w)


class MultiWedge:
    """Element of (∧^{k1} H) ⊗ ... ⊗ (∧^{kl} H).

    Keys are tuples of strictly increasing words, one per block.
    """

    __slots__ = ("sizes", "terms")

    def __init__(self, sizes: Sequence[int], terms: Mapping | None = None):
        self.sizes = tuple(sizes)
        clean: dict = {}
        for key, c in (terms or {}).items():
            c = qnorm(c)
            if not c:
                continue
            key = tuple(tuple(blk) for blk in key)
            if tuple(len(blk) for blk in key) != self.sizes:
                raise ValueError("block sizes do not match the shape")
            sign = 1
            norm = []
            for blk in key:
                s, sb = sort_with_sign(blk)
                sign *= s
                norm.append(sb)
            if not sign:
                continue
            key = tuple(norm)
            nc = clean.get(key, 0) + sign * c
            if nc:
                clean[key] = nc
            else:
                clean.pop(key, None)
        self.terms = clean

    @classmethod
    def _raw(cls, sizes, terms) -> "MultiWedge":
        m = cls.__new__(cls)
        m.sizes = tuple(sizes)
        m.terms = terms
        return m

    @classmethod
    def basis(cls, *blocks: Sequence[int], coeff=1) -> "MultiWedge":
        return cls([len(b) for b in blocks], {tuple(tuple(b) for b in blocks): coeff})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiWedge):
            if not self.terms and not other.terms:
                return True
            return self.sizes == other.sizes and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.sizes, frozenset(self.terms.items())))

    def __add__(self, other: "MultiWedge") -> "MultiWedge":
        if isinstance(other, int) and other == 0:
            return self
        if not isinstance(other, MultiWedge):
            raise TypeError(f"cannot add MultiWedge and {type(other).__name__}")
        if self.sizes != other.sizes and self.terms and other.terms:
            raise ValueError(f"shape mismatch {self.sizes} vs {other.sizes}")
        d = dict(self.terms)
        for k, c in other.terms.items():
            nc = d.get(k, 0) + c
            if nc:
                d[k] = nc
            else:
                d.pop(k, None)
        return MultiWedge._raw(self.sizes if self.terms else other.sizes, d)

    __radd__ = __add__

    def __neg__(self) -> "MultiWedge":
        return MultiWedge._raw(self.sizes, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other) -> "MultiWedge":
        return self + (-other)

    def __mul__(self, c) -> "MultiWedge":
        c = qnorm(c)
        if not c:
            return MultiWedge._raw(self.sizes, {})
        return MultiWedge._raw(self.sizes, {k: qnorm(v * c) for k, v in self.terms.items()})

    __rmul__ = __mul__

    def otimes(self, other: "MultiWedge") -> "MultiWedge":
        d = {k1 + k2: c1 * c2 for k1, c1 in self.terms.items() for k2, c2 in other.terms.items()}
        return MultiWedge._raw(self.sizes + other.sizes, d)

    def ratio_to(self, other: "MultiWedge"):
        """The scalar c with self == c*other, or None when not proportional."""
        if not other:
            raise ValueError("ratio to the zero element")
        if not self:
            return 0
        if self.sizes != other.sizes or self.terms.keys() != other.terms.keys():
            return None
        k0 = next(iter(other.terms))
        c = qnorm(Fraction(self.terms[k0]) / other.terms[k0])
        return c if self == other * c else None

    def to_tensor(self) -> Tensor:
        """Equivariant embedding into H^{⊗k} by antisymmetrising each block."""
        d: dict = {}
        for key, c in self.terms.items():
            expansions = [[(1, ())]]
            for blk in key:
                perms = []
                for p in permutations(range(len(blk))):
                    s, _ = sort_with_sign(p)
                    perms.append((s, tuple(blk[q] for q in p)))
                expansions.append(perms)
            acc = [(c, ())]
            for perms in expansions[1:]:
                acc = [(s0 * s1, w0 + w1) for s0, w0 in acc for s1, w1 in perms]
            for s, w in acc:
                d[w] = d.get(w, 0) + s
        return Tensor({w: c for w, c in d.items() if c}, sum(self.sizes))

    def weights(self, g: int) -> set[Weight]:
        return {weight_of([x for blk in k for x in blk], g) for k in self.terms}

    def __repr__(self) -> str:
        return f"MultiWedge({str(self)!r})"

    def __str__(self) -> str:
        def block(blk):
            if len(blk) == 1:
                return letter_name(blk[0])
            inner = "∧".join(letter_name(x) for x in blk)
            return f"({inner})" if len(self.sizes) > 1 else inner

        items = ((("⊗".join(block(b) for b in k)) if k else "", self.terms[k]) for k in sorted(self.terms))
        return format_sum(items)


def project(t: Tensor, shape: Sequence[Sequence[int]] | str) -> MultiWedge:
    """Projection p_k^σ: route positions into blocks, wedge inside each block."""
    if isinstance(shape, str):
        shape = parse_shape(shape)
    flat = sorted(p for blk in shape for p in blk)
    if flat != list(range(1, t.degree + 1)):
        raise ValueError(f"projection {shape_str(shape)} does not cover positions 1..{t.degree}")
    sizes = tuple(len(blk) for blk in shape)
    idx = [tuple(p - 1 for p in blk) for blk in shape]
    d: dict = {}
    for w, c in t.terms.items():
        sign = 1
        key = []
        for blk in idx:
            s, sb = sort_with_sign([w[p] for p in blk])
            if not s:
                sign = 0
                break
            sign *= s
            key.append(sb)
        if not sign:
            continue
        key = tuple(key)
        nc = d.get(key, 0) + sign * c
        if nc:
            d[key] = nc
        else:
            d.pop(key, None)
    return MultiWedge._raw(sizes, d)


# --- sp(2g) action -----------------------------------------------------------


@dataclass(frozen=True)
class SpGenerator:
    """One of X(i,j) (i != j), Y(i,j), U(i), V(i) acting on H."""

    kind: str
    i: int
    j: int = 0

    def __post_init__(self):
        if self.kind not in "XYUV" or len(self.kind) != 1:
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.kind == "X" and self.i == self.j:
            raise ValueError("X(i,j) needs i != j")
        if self.i < 1 or (self.kind in "XY" and self.j < 1):
            raise GenusError("generator indices start at 1")

    def __str__(self) -> str:
        if self.kind in "XY":
            return f"{self.kind}{self.i},{self.j}"
        return f"{self.kind}{self.i}"

    def on_letter(self, x: int) -> tuple[tuple[int, int], ...]:
        """Image of a letter as ``((coeff, letter), ...)``."""
        k = x // 2 + 1
        if self.kind == "X":
            if x % 2 == 0:
                return ((1, a(self.i)),) if k == self.j else ()
            return ((-1, b(self.j)),) if k == self.i else ()
        if self.kind == "Y":
            if x % 2 == 0:
                return ()
            out = []
            if k == self.i:
                out.append((1, a(self.j)))
            if k == self.j:
                out.append((1, a(self.i)))
            if len(out) == 2 and out[0][1] == out[1][1]:
                return ((2, out[0][1]),)
            return tuple(out)
        if self.kind == "U":
            return ((1, a(self.i)),) if x % 2 == 1 and k == self.i else ()
        return ((1, b(self.i)),) if x % 2 == 0 and k == self.i else ()

    def root(self, g: int) -> Weight:
        """Weight shift produced by this generator."""
        w = [0] * g
        if self.kind == "X":
            w[self.i - 1] += 1
            w[self.j - 1] -= 1
        elif self.kind == "Y":
            w[self.i - 1] += 1
            w[self.j - 1] += 1
        elif self.kind == "U":
            w[self.i - 1] += 2
        else:
            w[self.i - 1] -= 2
        return tuple(w)


def X(i: int, j: int) -> SpGenerator:
    return SpGenerator("X", i, j)


def Y(i: int, j: int) -> SpGenerator:
    return SpGenerator("Y", i, j)


def U(i: int) -> SpGenerator:
    return SpGenerator("U", i)


def V(i: int) -> SpGenerator:
    return SpGenerator("V", i)


def raising_operators(g: int) -> list[SpGenerator]:
    """Simple raising operators X(i,i+1) and U(g)."""
    return [X(i, i + 1) for i in range(1, g)] + [U(g)]


def _letter_action(gen: SpGenerator, letters: Iterable[int]) -> dict:
    return {x: gen.on_letter(x) for x in set(letters)}


def sp_apply(gen: SpGenerator, t: Tensor) -> Tensor:
    """Derivation action of an sp(2g) generator on a tensor (Leibniz rule)."""
    act = _letter_action(gen, {x for w in t.terms for x in w})
    d: dict = {}
    for w, c in t.terms.items():
        for p, x in enumerate(w):
            for s, y in act[x]:
                nw = w[:p] + (y,) + w[p + 1:]
                nc = d.get(nw, 0) + s * c
                if nc:
                    d[nw] = nc
                else:
                    d.pop(nw, None)
    return Tensor._raw(d, t.degree)


def sp_apply_wedge(gen: SpGenerator, m: MultiWedge) -> MultiWedge:
    out: dict = {}
    for key, c in m.terms.items():
        for bi, blk in enumerate(key):
            for p, x in enumerate(blk):
                for s, y in gen.on_letter(x):
                    nb = blk[:p] + (y,) + blk[p + 1:]
                    nkey = key[:bi] + (nb,) + key[bi + 1:]
                    out[nkey] = out.get(nkey, 0) + s * c
    return MultiWedge(m.sizes, out)


def apply_word(word: Sequence[SpGenerator], t: Tensor) -> Tensor:
    """Apply an operator word written left to right as composition.

    ``apply_word([U(2), X(1,2)], t)`` is U_2(X_{1,2}(t)).
    """
    for gen in reversed(list(word)):
        t = sp_apply(gen, t)
    return t


def relabel(t: Tensor, perm: Mapping[int, int]) -> Tensor:
    """Apply a letter substitution (e.g. the Sp element swapping indices 2 and 3)."""
    d: dict = {}
    for w, c in t.terms.items():
        nw = tuple(perm.get(x, x) for x in w)
        d[nw] = d.get(nw, 0) + c
    return Tensor({k: v for k, v in d.items() if v}, t.degree)


def swap_indices(i: int, j: int) -> dict[int, int]:
    """Letter substitution a_i <-> a_j, b_i <-> b_j."""
    return {a(i): a(j), a(j): a(i), b(i): b(j), b(j): b(i)}
