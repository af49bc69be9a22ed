"""Labeled unitrivalent trees, the map eta to H ⊗ L, and the derivation algebra h."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping, Sequence, Union

from .freelie import (
    LieElement,
    QuotientContext,
    bracket_text,
    lyndon_by_weight,
    lyndon_iota,
    standard_factorization,
    tensor_to_lyndon,
)
from .linalg import Echelon, axpy, qnorm
from .tensor import (
    MultiWedge,
    Tensor,
    Weight,
    a,
    b,
    contract,
    format_sum,
    letter_name,
    mu,
    project,
    weight_of,
)

# A rooted planar binary tree: a letter (int) or a pair (left, right).
Rooted = Union[int, tuple]


class ContractError(ValueError):
    """An input violates an operation's precondition."""


def rooted_tensor(r: Rooted) -> dict:
    if isinstance(r, int):
        return {(r,): 1}
    left, right = rooted_tensor(r[0]), rooted_tensor(r[1])
    d: dict = {}
    for w1, c1 in left.items():
        for w2, c2 in right.items():
            axpy(d, c1 * c2, {w1 + w2: 1})
            axpy(d, -c1 * c2, {w2 + w1: 1})
    return d


def rooted_text(r: Rooted) -> str:
    if isinstance(r, int):
        return letter_name(r)
    return f"[{rooted_text(r[0])},{rooted_text(r[1])}]"


def rooted_leaves(r: Rooted) -> int:
    return 1 if isinstance(r, int) else rooted_leaves(r[0]) + rooted_leaves(r[1])


def lyndon_rooted(w: tuple[int, ...]) -> Rooted:
    """Standard bracketing of a Lyndon word as a rooted tree."""
    if len(w) == 1:
        return w[0]
    u, v = standard_factorization(w)
    return (lyndon_rooted(u), lyndon_rooted(v))


def _serialize(r: Rooted) -> tuple:
    if isinstance(r, int):
        return (r,)
    return (-1,) + _serialize(r[0]) + _serialize(r[1])


class LabeledTree:
    """Planar unitrivalent tree with letter-labeled leaves.

    ``adj[v]`` lists the neighbours of vertex ``v``; for a trivalent vertex
    the order is the counter-clockwise cyclic order. Entering a trivalent
    vertex from neighbour ``e`` whose cyclic order is ``(e, x, y)`` reads as
    the bracket ``[x, y]``.
    """

    __slots__ = ("adj", "labels", "_key", "_eta")

    def __init__(self, adj: Sequence[Sequence[int]], labels: Mapping[int, int]):
        self.adj = tuple(tuple(n) for n in adj)
        self.labels = dict(labels)
        self._key = None
        self._eta = None
        self._validate()

    def _validate(self) -> None:
        n = len(self.adj)
        edges = 0
        for v, nb in enumerate(self.adj):
            if len(nb) == 1:
                if v not in self.labels:
                    raise ValueError(f"leaf {v} has no label")
            elif len(nb) == 3:
                if v in self.labels:
                    raise ValueError(f"trivalent vertex {v} carries a label")
            else:
                raise ValueError(f"vertex {v} has valence {len(nb)}")
            for u in nb:
                if v not in self.adj[u]:
                    raise ValueError("adjacency is not symmetric")
            edges += len(nb)
        if edges != 2 * (n - 1):
            raise ValueError("not a tree")
        if self.degree < 1:
            raise ValueError("a tree needs at least three leaves")

    @property
    def leaves(self) -> list[int]:
        return sorted(self.labels)

    @property
    def degree(self) -> int:
        return len(self.labels) - 2

    def reading(self, v: int, parent: int) -> Rooted:
        nb = self.adj[v]
        if len(nb) == 1:
            return self.labels[v]
        i = nb.index(parent)
        x, y = nb[(i + 1) % 3], nb[(i + 2) % 3]
        return (self.reading(x, v), self.reading(y, v))

    def rooted_at(self, leaf: int) -> tuple[int, Rooted]:
        """(label, rooted subtree read from that leaf)."""
        nb = self.adj[leaf]
        return self.labels[leaf], self.reading(nb[0], leaf)

    def key(self) -> tuple:
        if self._key is None:
            self._key = min(
                (lab,) + _serialize(r) for lab, r in (self.rooted_at(v) for v in self.labels)
            )
        return self._key

    def __eq__(self, other) -> bool:
        return isinstance(other, LabeledTree) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def eta(self) -> "HLElement":
        if self._eta is None:
            d: dict = {}
            for v in self.labels:
                lab, r = self.rooted_at(v)
                for w, c in tensor_to_lyndon(rooted_tensor(r)).items():
                    axpy(d, c, {(lab, w): 1})
            self._eta = HLElement._raw(d, self.degree)
        return self._eta

    def __str__(self) -> str:
        v = min(self.labels, key=lambda u: self.labels[u])
        lab, r = self.rooted_at(v)
        return f"Tr[{letter_name(lab)},{rooted_text(r)}]"

    __repr__ = __str__


def from_rooted(root: int, r: Rooted) -> LabeledTree:
    """Tree with a leaf labeled ``root`` attached to the top of ``r``."""
    if isinstance(r, int):
        raise ValueError("a tree needs at least three leaves")
    adj: list[list[int]] = [[]]
    labels = {0: root}

    def build(node: Rooted, parent: int) -> int:
        v = len(adj)
        adj.append([parent])
        if isinstance(node, int):
            labels[v] = node
            return v
        left = build(node[0], v)
        right = build(node[1], v)
        adj[v].extend([left, right])
        return v

    top = build(r, 0)
    adj[0].append(top)
    return LabeledTree(adj, labels)


def weld(t1: LabeledTree, u: int, t2: LabeledTree, v: int) -> LabeledTree:
    """Glue t1 and t2 by deleting leaves u and v and joining their edges."""
    n1 = len(t1.adj)
    p = t1.adj[u][0]
    q = t2.adj[v][0] + n1
    adj = [list(nb) for nb in t1.adj] + [[x + n1 for x in nb] for nb in t2.adj]
    labels = dict(t1.labels)
    labels.update({x + n1: lab for x, lab in t2.labels.items()})
    adj[p][adj[p].index(u)] = q
    adj[q][adj[q].index(v + n1)] = p
    del labels[u], labels[v + n1]
    keep = [x for x in range(len(adj)) if x not in (u, v + n1)]
    ren = {x: i for i, x in enumerate(keep)}
    new_adj = [[ren[y] for y in adj[x]] for x in keep]
    return LabeledTree(new_adj, {ren[x]: lab for x, lab in labels.items()})


def tripod(x: int, y: int, z: int) -> LabeledTree:
    return from_rooted(x, (y, z))


def h_tree(x: int, y: int, z: int, w: int) -> LabeledTree:
    """The H-shaped tree T^H(x,y,z,w)."""
    return from_rooted(x, (y, (z, w)))


def caterpillar(p: int, q: int, r: int, s: int, t: int, u: int) -> LabeledTree:
    """The degree-4 tree T(p,q,r,s,t,u)."""
    return from_rooted(p, ((((u, t), s), r), q))


class TreeElement:
    """Formal rational combination of labeled trees (no AS/IHX rewriting)."""

    __slots__ = ("degree", "terms")

    def __init__(self, terms: Iterable[tuple[object, LabeledTree]] = (), degree: int | None = None):
        d: dict = {}
        for c, t in terms:
            c = qnorm(c)
            if not c:
                continue
            if degree is None:
                degree = t.degree
            elif t.degree != degree:
                raise ValueError("mixed tree degrees")
            key = t.key()
            if key in d:
                nc = d[key][0] + c
                if nc:
                    d[key] = (nc, t)
                else:
                    del d[key]
            else:
                d[key] = (c, t)
        if degree is None:
            raise ValueError("degree required for an empty tree element")
        self.degree = degree
        self.terms = d

    @classmethod
    def of(cls, t: LabeledTree, coeff=1) -> "TreeElement":
        return cls([(coeff, t)], t.degree)

    def items(self) -> list[tuple[object, LabeledTree]]:
        return [self.terms[k] for k in sorted(self.terms)]

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: "TreeElement") -> "TreeElement":
        if isinstance(other, int) and other == 0:
            return self
        if not isinstance(other, TreeElement):
            raise TypeError(f"cannot add TreeElement and {type(other).__name__}")
        if self.degree != other.degree and self.terms and other.terms:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")
        return TreeElement(self.items() + other.items(), self.degree if self.terms else other.degree)

    __radd__ = __add__

    def __neg__(self) -> "TreeElement":
        return TreeElement([(-c, t) for c, t in self.items()], self.degree)

    def __sub__(self, other) -> "TreeElement":
        return self + (-other)

    def __mul__(self, c) -> "TreeElement":
        return TreeElement([(qnorm(c) * x, t) for x, t in self.items()], self.degree)

    __rmul__ = __mul__

    def eta(self) -> "HLElement":
        return eta(self)

    def __str__(self) -> str:
        return format_sum((str(t), c) for c, t in self.items())

    def __repr__(self) -> str:
        return f"TreeElement({str(self)!r})"


def eta(t: Union[TreeElement, LabeledTree]) -> "HLElement":
    """eta(T) = sum over leaves v of label(v) ⊗ (Lie element read from v)."""
    if isinstance(t, LabeledTree):
        return t.eta()
    d: dict = {}
    for c, tree in t.items():
        axpy(d, c, tree.eta().terms)
    return HLElement._raw({k: qnorm(v) for k, v in d.items()}, t.degree)


def weld_bracket(t1: Union[TreeElement, LabeledTree], t2: Union[TreeElement, LabeledTree]) -> TreeElement:
    """Sum over leaf pairs of mu(labels) times the welded tree."""
    if isinstance(t1, LabeledTree):
        t1 = TreeElement.of(t1)
    if isinstance(t2, LabeledTree):
        t2 = TreeElement.of(t2)
    out = []
    for c1, s1 in t1.items():
        for c2, s2 in t2.items():
            for u, x in s1.labels.items():
                for v, y in s2.labels.items():
                    m = mu(x, y)
                    if m:
                        out.append((c1 * c2 * m, weld(s1, u, s2, v)))
    return TreeElement(out, t1.degree + t2.degree)


# --- H ⊗ L -----------------------------------------------------------------


class HLElement:
    """Element of H ⊗ L(k+1): sparse map (letter, Lyndon word) -> coefficient.

    ``degree`` is k, so the Lie factor has degree k+1.
    """

    __slots__ = ("degree", "terms", "_tensor")

    def __init__(self, terms: Mapping[tuple[int, tuple[int, ...]], object], degree: int):
        clean = {}
        for (x, w), c in terms.items():
            c = qnorm(c)
            if c:
                if len(w) != degree + 1:
                    raise ValueError("Lie factor has the wrong degree")
                clean[(x, tuple(w))] = c
        self.degree = degree
        self.terms = clean
        self._tensor = None

    @classmethod
    def _raw(cls, terms: dict, degree: int) -> "HLElement":
        h = cls.__new__(cls)
        h.degree = degree
        h.terms = terms
        h._tensor = None
        return h

    @classmethod
    def zero(cls, degree: int) -> "HLElement":
        return cls._raw({}, degree)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[object, int, LieElement]]) -> "HLElement":
        """Build from ``(coeff, letter, lie_element)`` triples."""
        d: dict = {}
        degree = None
        for c, x, u in pairs:
            degree = u.degree - 1
            for w, cw in u.terms.items():
                axpy(d, c * cw, {(x, w): 1})
        if degree is None:
            raise ValueError("empty pair list")
        return cls(d, degree)

    @classmethod
    def from_tensor(cls, t: Tensor) -> "HLElement":
        by_first: dict = {}
        for w, c in t.terms.items():
            by_first.setdefault(w[0], {})[w[1:]] = c
        d = {}
        for x, part in by_first.items():
            for w, c in tensor_to_lyndon(part).items():
                d[(x, w)] = c
        return cls._raw(d, t.degree - 2)

    def to_tensor(self) -> Tensor:
        if self._tensor is None:
            d: dict = {}
            for (x, w), c in self.terms.items():
                for ww, cc in lyndon_iota(w).items():
                    key = (x,) + ww
                    nc = d.get(key, 0) + c * cc
                    if nc:
                        d[key] = nc
                    else:
                        del d[key]
            self._tensor = Tensor._raw({k: qnorm(v) for k, v in d.items()}, self.degree + 2)
        return self._tensor

    def components(self) -> dict[int, LieElement]:
        """Lie factor attached to each letter."""
        out: dict = {}
        for (x, w), c in self.terms.items():
            out.setdefault(x, {})[w] = c
        return {x: LieElement._raw(v, self.degree + 1) for x, v in out.items()}

    def weight_components(self, g: int) -> dict[Weight, "HLElement"]:
        out: dict = {}
        for (x, w), c in self.terms.items():
            out.setdefault(weight_of((x,) + w, g), {})[(x, w)] = c
        return {k: HLElement._raw(v, self.degree) for k, v in out.items()}

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, HLElement):
            if not self.terms and not other.terms:
                return True
            return self.degree == other.degree and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.degree, frozenset(self.terms.items())))

    def __add__(self, other: "HLElement") -> "HLElement":
        if isinstance(other, int) and other == 0:
            return self
        if not isinstance(other, HLElement):
            raise TypeError(f"cannot add HLElement and {type(other).__name__}")
        if self.degree != other.degree and self.terms and other.terms:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")
        return HLElement._raw(axpy(dict(self.terms), 1, other.terms), self.degree if self.terms else other.degree)

    __radd__ = __add__

    def __neg__(self) -> "HLElement":
        return HLElement._raw({k: -c for k, c in self.terms.items()}, self.degree)

    def __sub__(self, other) -> "HLElement":
        return self + (-other)

    def __mul__(self, c) -> "HLElement":
        c = qnorm(c)
        if not c:
            return HLElement.zero(self.degree)
        return HLElement._raw({k: qnorm(v * c) for k, v in self.terms.items()}, self.degree)

    __rmul__ = __mul__

    def __truediv__(self, c) -> "HLElement":
        from fractions import Fraction

        return self * (Fraction(1) / c)

    def __repr__(self) -> str:
        return f"HLElement({str(self)!r})"

    def __str__(self) -> str:
        return format_sum(
            (f"{letter_name(x)}⊗{bracket_text(w)}", self.terms[(x, w)]) for x, w in sorted(self.terms)
        )


def is_in_h(h: HLElement) -> bool:
    """True iff sum [x_i, u_i] vanishes for h = sum x_i ⊗ u_i."""
    t = h.to_tensor()
    d = dict(t.terms)
    for w, c in t.terms.items():
        axpy(d, -c, {w[1:] + w[:1]: 1})
    return not d


def _derivation_images(h: HLElement, g: int) -> dict[int, dict]:
    """Tensor image of each letter under D_h: y -> sum mu(x_i, y) u_i."""
    comps = {x: u.to_tensor().terms for x, u in h.components().items()}
    out = {}
    for y in range(2 * g):
        x = y ^ 1
        if x in comps:
            out[y] = {w: mu(x, y) * c for w, c in comps[x].items()}
    return out


def _apply_derivation(images: Mapping[int, dict], t: Mapping) -> dict:
    d: dict = {}
    for w, c in t.items():
        for p, y in enumerate(w):
            img = images.get(y)
            if not img:
                continue
            pre, post = w[:p], w[p + 1:]
            for ww, cc in img.items():
                key = pre + ww + post
                nc = d.get(key, 0) + c * cc
                if nc:
                    d[key] = nc
                else:
                    del d[key]
    return d


def _genus_of(*hs: HLElement) -> int:
    return max((max(x for k in h.terms for x in (k[0],) + k[1]) // 2 + 1 for h in hs if h.terms), default=1)


def derivation_bracket(h1: HLElement, h2: HLElement, g: int | None = None, check: bool = True) -> HLElement:
    """Bracket of h as derivations, signed to agree with eta of the welding bracket."""
    if check and not (is_in_h(h1) and is_in_h(h2)):
        raise ContractError("derivation_bracket needs elements of h")
    if g is None:
        g = _genus_of(h1, h2)
    d1 = _derivation_images(h1, g)
    d2 = _derivation_images(h2, g)
    comm = {}
    for y in range(2 * g):
        r = _apply_derivation(d1, d2.get(y, {}))
        axpy(r, -1, _apply_derivation(d2, d1.get(y, {})))
        comm[y] = r
    # h = sum_j a_j ⊗ D(b_j) - b_j ⊗ D(a_j)
    d: dict = {}
    for j in range(1, g + 1):
        for w, c in comm[b(j)].items():
            axpy(d, c, {(a(j),) + w: 1})
        for w, c in comm[a(j)].items():
            axpy(d, -c, {(b(j),) + w: 1})
    deg = h1.degree + h2.degree
    return HLElement.from_tensor(Tensor._raw({k: qnorm(v) for k, v in d.items()}, deg + 2))


def phi(x: LieElement, g: int) -> TreeElement:
    """Glue the rooted tree of each basis monomial of x to the tripods of omega0."""
    out = []
    for w, c in x.terms.items():
        r = lyndon_rooted(w)
        for i in range(1, g + 1):
            out.append((c, from_rooted(b(i), (r, a(i)))))
    return TreeElement(out, x.degree)


def phi_formula(x: LieElement, g: int) -> HLElement:
    """sum_i a_i ⊗ [b_i, x] - b_i ⊗ [a_i, x]; agrees with eta∘phi modulo H ⊗ I."""
    from .freelie import lie_bracket

    pairs = []
    for i in range(1, g + 1):
        pairs.append((1, a(i), lie_bracket(LieElement.letter(b(i)), x)))
        pairs.append((-1, b(i), lie_bracket(LieElement.letter(a(i)), x)))
    return HLElement.from_pairs(pairs)


# --- detectors on h(2) ---------------------------------------------------------


def _as_hl(h) -> HLElement:
    if isinstance(h, (TreeElement, LabeledTree)):
        return eta(h)
    return h


def q_12(h) -> MultiWedge:
    """p_2^{(1,2)} ∘ C_4^{(1,2)} ∘ (1 ⊗ iota_3)."""
    h = _as_hl(h)
    if h.degree != 2:
        raise ValueError(f"q_12 needs degree 2, got {h.degree}")
    return project(contract(h.to_tensor(), 1, 2), "(1,2)")


def q_0(h):
    """C_2^{(1,2)} ∘ C_4^{(1,2)} ∘ (1 ⊗ iota_3)."""
    h = _as_hl(h)
    if h.degree != 2:
        raise ValueError(f"q_0 needs degree 2, got {h.degree}")
    return contract(contract(h.to_tensor(), 1, 2), 1, 2).scalar_value()


# --- closed surface ------------------------------------------------------------


def closed_project(h: HLElement, g: int) -> HLElement:
    """Reduce the Lie factor modulo the ideal generated by omega0."""
    h = _as_hl(h)
    q = QuotientContext(h.degree + 1, g)
    d: dict = {}
    for x, u in h.components().items():
        for w, c in q.reduce_coords(u.terms).items():
            d[(x, w)] = c
    return HLElement._raw(d, h.degree)


@lru_cache(maxsize=None)
def _psi_image(g: int, k: int, weight: Weight) -> Echelon:
    """Span of closed_project(eta(phi(m))) over Lyndon m of the given weight."""
    ech = Echelon()
    for m in lyndon_by_weight(k, g).get(weight, ()):
        v = closed_project(eta(phi(LieElement._raw({m: 1}, k), g)), g)
        ech.add(v.terms)
    return ech


def is_in_closed_kernel(h, g: int) -> bool:
    """True iff h maps to zero in h_g(k), i.e. lies in the image of Psi_k modulo H ⊗ I."""
    h = _as_hl(h)
    if not is_in_h(h):
        raise ContractError("is_in_closed_kernel needs an element of h")
    for wt, part in closed_project(h, g).weight_components(g).items():
        if not _psi_image(g, h.degree, wt).contains(part.terms):
            return False
    return True
