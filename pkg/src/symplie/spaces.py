"""Explicit weight tables of the degree-2 modules and their second exterior powers.

Everything here is computed by exact linear algebra on weight spaces, with
no character formulas, so it serves as the independent side of the
decomposition checks.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache

from .freelie import (
    QuotientContext,
    _bracket_letter_coords,
    lyndon_by_weight,
    omega0,
    LieElement,
)
from .linalg import Echelon, kernel
from .sprep import YoungDiagram, decompose, freudenthal, pad_weights
from .tensor import Weight, weight_of
from .trees import HLElement, eta, phi, q_0, q_12

COLUMNS = ("wedge2[2^2]", "[2^2]x[1^2]", "wedge2[1^2]", "[2^2]x[0]", "[1^2]x[0]")


def _shift(w: Weight, x: int, g: int, s: int = -1) -> Weight:
    return tuple(p + s * q for p, q in zip(w, weight_of((x,), g)))


def _domain(g: int, k: int) -> dict[Weight, list[tuple[int, tuple]]]:
    """Basis pairs (letter, Lyndon word of length k+1) of H ⊗ L(k+1), by weight."""
    lw = lyndon_by_weight(k + 1, g)
    out: dict = {}
    for x in range(2 * g):
        wx = weight_of((x,), g)
        for wu, words in lw.items():
            w = tuple(p + q for p, q in zip(wx, wu))
            out.setdefault(w, []).extend((x, u) for u in words)
    return out


def _bracket_image(x: int, u: tuple) -> dict:
    return _bracket_letter_coords(x, {u: 1})


@lru_cache(maxsize=None)
def h2_weight_basis(g: int) -> dict[Weight, tuple[HLElement, ...]]:
    """Kernel of H ⊗ L(3) -> L(4), one basis per weight."""
    out = {}
    for w, pairs in _domain(g, 2).items():
        vecs = kernel([_bracket_image(x, u) for x, u in pairs])
        if vecs:
            out[w] = tuple(HLElement({pairs[i]: c for i, c in v.items()}, 2) for v in vecs)
    return out


def h2_basis(g: int) -> list[HLElement]:
    return [v for w in sorted(h2_weight_basis(g)) for v in h2_weight_basis(g)[w]]


def h2_weights(g: int) -> Counter:
    return Counter({w: len(v) for w, v in h2_weight_basis(g).items()})


@lru_cache(maxsize=None)
def _component_22(g: int) -> Counter:
    """Common kernel of the bracket and both detectors."""
    table: Counter = Counter()
    for w, pairs in _domain(g, 2).items():
        images = []
        for x, u in pairs:
            h = HLElement({(x, u): 1}, 2)
            img = {("L", k): c for k, c in _bracket_image(x, u).items()}
            for key, c in q_12(h).terms.items():
                img[("q12", key)] = c
            c0 = q_0(h)
            if c0:
                img[("q0",)] = c0
            images.append(img)
        n = len(kernel(images))
        if n:
            table[w] = n
    return table


def component_weights(g: int, name: str) -> Counter:
    """Weights of the [2^2], [1^2] or [0] summand of h(2)."""
    if name == "[2^2]":
        return Counter(_component_22(g))
    if name == "[1^2]":
        table: Counter = Counter()
        for w, words in lyndon_by_weight(2, g).items():
            lies = [LieElement({u: 1}, 2) for u in words]
            ker = kernel([{0: q_0(eta(phi(x, g)))} if q_0(eta(phi(x, g))) else {} for x in lies])
            ech = Echelon()
            for v in ker:
                x = sum((lies[i] * c for i, c in v.items()), LieElement.zero(2))
                ech.add(eta(phi(x, g)).to_tensor().terms)
            if len(ech):
                table[w] = len(ech)
        return table
    if name == "[0]":
        v = eta(phi(omega0(g), g))
        return Counter({(0,) * g: 1}) if v else Counter()
    raise ValueError(f"unknown component {name!r}")


def wedge2_table(table: Counter) -> Counter:
    """Weights of ∧²V from the weight table of V."""
    out: Counter = Counter()
    items = sorted(table.items())
    for i, (w1, m1) in enumerate(items):
        if m1 > 1:
            out[tuple(2 * p for p in w1)] += m1 * (m1 - 1) // 2
        for w2, m2 in items[i + 1:]:
            out[tuple(p + q for p, q in zip(w1, w2))] += m1 * m2
    return +out


def tensor_table(t1: Counter, t2: Counter) -> Counter:
    out: Counter = Counter()
    for w1, m1 in t1.items():
        for w2, m2 in t2.items():
            out[tuple(p + q for p, q in zip(w1, w2))] += m1 * m2
    return out


def column_weights(g: int) -> dict[str, Counter]:
    """The five summands of ∧²([2^2]+[1^2]+[0]), from explicit components."""
    c22 = component_weights(g, "[2^2]")
    c12 = component_weights(g, "[1^2]")
    c0 = component_weights(g, "[0]")
    return {
        "wedge2[2^2]": wedge2_table(c22),
        "[2^2]x[1^2]": tensor_table(c22, c12),
        "wedge2[1^2]": wedge2_table(c12),
        "[2^2]x[0]": tensor_table(c22, c0),
        "[1^2]x[0]": tensor_table(c12, c0),
    }


@lru_cache(maxsize=None)
def hstar2_weights_cached(g: int) -> tuple:
    q4 = QuotientContext(4, g)
    q3 = QuotientContext(3, g)
    table: Counter = Counter()
    for w, pairs in _domain(g, 2).items():
        ech = q4.echelon(w)
        images = [ech.reduce(_bracket_image(x, u)) for x, u in pairs]
        n = len(kernel(images))
        # H ⊗ I(3) sits inside that kernel; divide it out
        for x in range(2 * g):
            n -= len(q3.echelon(_shift(w, x, g)))
        if n:
            table[w] = n
    return tuple(sorted(table.items()))


def hstar2_weights(g: int) -> Counter:
    """Weights of the pointed-surface module: ker(H ⊗ L_g(3) -> L_g(4))."""
    return Counter(dict(hstar2_weights_cached(g)))


def hg2_weights(g: int) -> Counter:
    """Weights of the closed-surface module: the pointed one modulo L_g(2)."""
    table = hstar2_weights(g)
    q2 = QuotientContext(2, g)
    for w, words in lyndon_by_weight(2, g).items():
        table[w] -= len(words) - len(q2.echelon(w))
    return +table


def wedge2_h2_weights(g: int) -> Counter:
    return wedge2_table(h2_weights(g))


def restriction_kernel_wedge2(g: int) -> Counter:
    """Weights of ker(∧²h(2) -> ∧²h_g(2)) for the surjective restriction."""
    out = wedge2_table(h2_weights(g))
    out.subtract(wedge2_table(hg2_weights(g)))
    if any(m < 0 for m in out.values()):
        raise ValueError("restriction is not surjective on weights")
    return +out


def decompose_space(name: str, g: int) -> dict[YoungDiagram, int]:
    """Decompose one of the named explicit spaces."""
    tables = {
        "h2": h2_weights,
        "wedge2-h2": wedge2_h2_weights,
        "hstar2": hstar2_weights,
        "hg2": hg2_weights,
    }
    if name in tables:
        return decompose(tables[name](g), g)
    cols = column_weights(g)
    if name in cols:
        return decompose(cols[name], g)
    raise ValueError(f"unknown space {name!r}; choose from {sorted(tables) + list(COLUMNS)}")


def irrep_weights(lam, g: int) -> Counter:
    return pad_weights(freudenthal(lam, g), g)
