"""Sp(2g, Q) representation theory: Young diagrams, Weyl dimensions, weight
multiplicities, characters and decompositions of explicit spaces."""

from __future__ import annotations

import re
from collections import Counter
from fractions import Fraction
from functools import lru_cache, total_ordering
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .linalg import Echelon, qnorm
from .tensor import (
    MultiWedge,
    Tensor,
    Weight,
    raising_operators,
    sp_apply,
    sp_apply_wedge,
)


class NotACharacterError(ValueError):
    """Peeling a weight table produced a negative multiplicity."""


# --- Young diagrams -------------------------------------------------------------


@total_ordering
class YoungDiagram:
    """Irreducible Sp(2g) label: weakly decreasing positive rows; [0] is trivial."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[int] = ()):
        rows = tuple(int(r) for r in rows if int(r) != 0)
        if any(r < 0 for r in rows):
            raise ValueError("rows must be nonnegative")
        if any(rows[i] < rows[i + 1] for i in range(len(rows) - 1)):
            raise ValueError(f"rows must be weakly decreasing: {rows}")
        self.rows = rows

    _TOKEN = re.compile(r"(\d+)(?:\^(\d+))?")

    @classmethod
    def parse(cls, text: str) -> "YoungDiagram":
        """Parse ``[2 2]``, ``[2,2]``, ``[22]``, ``[31^3]``, ``[2^21^2]`` or ``[0]``.

        Without separators every row and every exponent is a single digit.
        """
        s = text.strip()
        if s.startswith("[") and s.endswith("]"):
            s = s[1:-1]
        s = s.strip()
        if not s:
            return cls(())
        rows: list[int] = []
        if re.search(r"[\s,]", s):
            for chunk in re.split(r"[\s,]+", s):
                m = cls._TOKEN.fullmatch(chunk)
                if not m:
                    raise ValueError(f"bad Young diagram {text!r}")
                rows += [int(m.group(1))] * int(m.group(2) or 1)
        else:
            for r, e in re.findall(r"(\d)(?:\^(\d))?", s):
                rows += [int(r)] * int(e or 1)
            if not re.fullmatch(r"(\d(\^\d)?)+", s):
                raise ValueError(f"bad Young diagram {text!r}")
        return cls(rows)

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def size(self) -> int:
        return sum(self.rows)

    def highest_weight(self, g: int) -> Weight:
        if len(self.rows) > g:
            raise ValueError(f"{self} has more than {g} rows")
        return self.rows + (0,) * (g - len(self.rows))

    @classmethod
    def from_weight(cls, w: Sequence[int]) -> "YoungDiagram":
        return cls(w)

    def __eq__(self, other) -> bool:
        return isinstance(other, YoungDiagram) and self.rows == other.rows

    def __lt__(self, other: "YoungDiagram") -> bool:
        return (self.size, self.rows) < (other.size, other.rows)

    def __hash__(self):
        return hash(self.rows)

    def __str__(self) -> str:
        if not self.rows:
            return "[0]"
        groups = []
        for r in self.rows:
            if groups and groups[-1][0] == r:
                groups[-1][1] += 1
            else:
                groups.append([r, 1])
        sep = "" if all(r < 10 and e < 10 for r, e in groups) else " "
        return "[" + sep.join(f"{r}" if e == 1 else f"{r}^{e}" for r, e in groups) + "]"

    def __repr__(self) -> str:
        return f"YoungDiagram({str(self)!r})"


def diagram(text: str | Sequence[int] | YoungDiagram) -> YoungDiagram:
    if isinstance(text, YoungDiagram):
        return text
    if isinstance(text, str):
        return YoungDiagram.parse(text)
    return YoungDiagram(text)


# --- dimensions and weight multiplicities -------------------------------------


def weyl_dim(lam, g: int) -> int:
    """Type C Weyl dimension formula."""
    lam = diagram(lam)
    l = [x + g - i for i, x in enumerate(lam.highest_weight(g))]
    r = [g - i for i in range(g)]
    num = den = 1
    for i in range(g):
        num *= l[i]
        den *= r[i]
        for j in range(i + 1, g):
            num *= (l[i] - l[j]) * (l[i] + l[j])
            den *= (r[i] - r[j]) * (r[i] + r[j])
    q, rem = divmod(num, den)
    assert rem == 0
    return q


def positive_roots(g: int) -> list[Weight]:
    out = []
    for i in range(g):
        for j in range(i + 1, g):
            e = [0] * g
            e[i], e[j] = 1, -1
            out.append(tuple(e))
            e = [0] * g
            e[i], e[j] = 1, 1
            out.append(tuple(e))
        e = [0] * g
        e[i] = 2
        out.append(tuple(e))
    return out


def dominant_rep(w: Sequence[int]) -> Weight:
    return tuple(sorted((abs(x) for x in w), reverse=True))


def is_dominant(w: Sequence[int]) -> bool:
    return all(w[i] >= w[i + 1] for i in range(len(w) - 1)) and (not w or w[-1] >= 0)


def dominates(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """True when lam - mu is a nonnegative combination of simple roots."""
    diff = [x - y for x, y in zip(lam, mu)]
    s = 0
    for d in diff[:-1]:
        s += d
        if s < 0:
            return False
    total = sum(diff)
    return total >= 0 and total % 2 == 0


def _partitions(n: int, parts: int, cap: int | None = None) -> Iterable[tuple[int, ...]]:
    if cap is None:
        cap = n
    if n == 0:
        yield ()
        return
    if parts == 0:
        return
    for first in range(min(n, cap), 0, -1):
        for rest in _partitions(n - first, parts - 1, first):
            yield (first,) + rest


def dominant_weights_below(lam: Sequence[int], g: int) -> list[Weight]:
    n = sum(lam)
    out = []
    for m in range(n, -1, -2):
        for p in _partitions(m, g):
            mu = p + (0,) * (g - len(p))
            if dominates(lam, mu):
                out.append(mu)
    return out


def _dot(x: Sequence[int], y: Sequence[int]) -> int:
    return sum(p * q for p, q in zip(x, y))


@lru_cache(maxsize=None)
def dominant_multiplicities(lam: Weight, g: int) -> dict[Weight, int]:
    """Freudenthal's recursion on dominant weights only."""
    rho = tuple(g - i for i in range(g))
    roots = positive_roots(g)
    lr = tuple(x + y for x, y in zip(lam, rho))
    c_lam = _dot(lr, lr)
    norm_bound = _dot(lam, lam)
    doms = sorted(dominant_weights_below(lam, g), key=lambda m: -_dot(m, rho))
    mult: dict[Weight, int] = {}
    for mu in doms:
        if mu == tuple(lam):
            mult[mu] = 1
            continue
        total = 0
        for alpha in roots:
            k = 1
            while True:
                nu = tuple(x + k * y for x, y in zip(mu, alpha))
                if _dot(nu, nu) > norm_bound:
                    break
                m = mult.get(dominant_rep(nu), 0)
                if m:
                    total += m * _dot(nu, alpha)
                k += 1
        mr = tuple(x + y for x, y in zip(mu, rho))
        den = c_lam - _dot(mr, mr)
        val = Fraction(2 * total, den)
        assert val.denominator == 1
        if val:
            mult[mu] = int(val)
    return mult


def weyl_orbit(mu: Sequence[int]) -> set[Weight]:
    """All signed permutations of mu."""
    from itertools import permutations, product

    out = set()
    nz = [i for i, x in enumerate(mu) if x]
    for p in set(permutations(mu)):
        idx = [i for i, x in enumerate(p) if x]
        for signs in product((1, -1), repeat=len(idx)):
            q = list(p)
            for i, s in zip(idx, signs):
                q[i] *= s
            out.add(tuple(q))
    del nz
    return out


def freudenthal(lam, g: int) -> Counter:
    """Full weight multiplicity table of the irreducible module [lam]."""
    lam = diagram(lam)
    table: Counter = Counter()
    for mu, m in dominant_multiplicities(lam.highest_weight(g), g).items():
        for w in weyl_orbit(mu):
            table[w] = m
    return table


WeightTable = Counter


def dominant_part(table: Mapping[Weight, int]) -> dict[Weight, int]:
    return {w: m for w, m in table.items() if m and is_dominant(w)}


def is_weyl_symmetric(table: Mapping[Weight, int]) -> bool:
    for w, m in table.items():
        if m and table.get(dominant_rep(w), 0) != m:
            return False
    return True


def decompose(table: Mapping[Weight, object], g: int) -> dict[YoungDiagram, int]:
    """Peel off the lexicographically largest dominant weight until nothing is left."""
    dom = {w: m for w, m in dominant_part(table).items() if m}
    for w, m in dom.items():
        if len(w) != g:
            raise ValueError(f"weight {w} does not have {g} coordinates")
        if m < 0:
            raise NotACharacterError(f"negative multiplicity {m} at {w}")
    out: dict[YoungDiagram, int] = {}
    while dom:
        top = max(dom)
        m = dom[top]
        lam = YoungDiagram(top)
        out[lam] = out.get(lam, 0) + m
        for mu, k in dominant_multiplicities(top, g).items():
            nv = dom.get(mu, 0) - m * k
            if nv < 0:
                raise NotACharacterError(f"weight {mu} went negative while removing {lam}")
            if nv:
                dom[mu] = nv
            else:
                dom.pop(mu, None)
    return dict(sorted(out.items(), key=lambda kv: kv[0], reverse=True))


def total_dimension(dec: Mapping[YoungDiagram, int], g: int) -> int:
    return sum(m * weyl_dim(lam, g) for lam, m in dec.items())


def format_decomposition(dec: Mapping[YoungDiagram, int]) -> str:
    if not dec:
        return "0"
    parts = []
    for lam in sorted(dec, reverse=True):
        m = dec[lam]
        if m:
            parts.append(f"{m}{lam}" if m != 1 else str(lam))
    return "+".join(parts) if parts else "0"


def parse_decomposition(text: str) -> dict[YoungDiagram, int]:
    """Parse ``[42]+[31^3]+2[31]``."""
    out: dict[YoungDiagram, int] = {}
    text = text.replace(" ", "")
    if text in ("", "0"):
        return out
    for term in re.findall(r"(\d*)(\[[^\]]*\])", text):
        m = int(term[0]) if term[0] else 1
        lam = YoungDiagram.parse(term[1])
        out[lam] = out.get(lam, 0) + m
    return out


# --- characters ------------------------------------------------------------------


def char_mul(x: Mapping, y: Mapping) -> dict:
    out: dict = {}
    for w1, c1 in x.items():
        for w2, c2 in y.items():
            w = tuple(p + q for p, q in zip(w1, w2))
            out[w] = out.get(w, 0) + c1 * c2
    return {w: c for w, c in out.items() if c}


def char_add(x: Mapping, y: Mapping, s=1) -> dict:
    out = dict(x)
    for w, c in y.items():
        nc = out.get(w, 0) + s * c
        if nc:
            out[w] = nc
        else:
            out.pop(w, None)
    return out


def char_scale(x: Mapping, c) -> dict:
    return {w: v * c for w, v in x.items() if v * c}


def adams(x: Mapping, d: int) -> dict:
    """Adams operation: scale every weight by d."""
    out: dict = {}
    for w, c in x.items():
        nw = tuple(d * p for p in w)
        out[nw] = out.get(nw, 0) + c
    return out


def char_normalize(x: Mapping) -> Counter:
    out = Counter()
    for w, c in x.items():
        c = qnorm(c)
        if c:
            if not isinstance(c, int):
                raise NotACharacterError(f"non-integral multiplicity {c} at {w}")
            out[w] = c
    return out


def char_H(g: int) -> dict:
    out = {}
    for i in range(g):
        for s in (1, -1):
            w = [0] * g
            w[i] = s
            out[tuple(w)] = 1
    return out


def char_trivial(g: int) -> dict:
    return {(0,) * g: 1}


def char_power(x: Mapping, n: int, g: int) -> dict:
    out = char_trivial(g)
    for _ in range(n):
        out = char_mul(out, x)
    return out


def _mobius(n: int) -> int:
    from .freelie import mobius

    return mobius(n)


@lru_cache(maxsize=None)
def char_free_lie(k: int, g: int) -> Counter:
    """Character of L_{g,1}(k) by the necklace formula."""
    chi = char_H(g)
    acc: dict = {}
    for d in range(1, k + 1):
        if k % d:
            continue
        m = _mobius(d)
        if m:
            acc = char_add(acc, char_power(adams(chi, d), k // d, g), m)
    return char_normalize(char_scale(acc, Fraction(1, k)))


@lru_cache(maxsize=None)
def _log_closed_coeffs(n: int, g: int) -> tuple[dict, ...]:
    """Coefficients A_1..A_n of -log(1 - chi t + t^2) as characters."""
    chi = char_H(g)
    one = char_trivial(g)
    # (chi t - t^2)^m, stored as a list of characters indexed by t-degree
    base = {1: chi, 2: char_scale(one, -1)}
    coeffs = [dict() for _ in range(n + 1)]
    power = {0: one}
    for m in range(1, n + 1):
        nxt: dict = {}
        for deg, c in power.items():
            for bd, bc in base.items():
                if deg + bd <= n:
                    nxt[deg + bd] = char_add(nxt.get(deg + bd, {}), char_mul(c, bc))
        power = nxt
        for deg, c in power.items():
            coeffs[deg] = char_add(coeffs[deg], char_scale(c, Fraction(1, m)))
    return tuple(coeffs)


@lru_cache(maxsize=None)
def char_closed_lie(k: int, g: int) -> Counter:
    """Character of L_g(k) = L_{g,1}(k)/I(k) from Labute's presentation."""
    A = _log_closed_coeffs(k, g)
    acc: dict = {}
    for d in range(1, k + 1):
        if k % d:
            continue
        m = _mobius(d)
        if m:
            acc = char_add(acc, char_scale(adams(A[k // d], d), Fraction(m, d)))
    return char_normalize(acc)


def char_wedge2(x: Mapping) -> Counter:
    sq = char_mul(x, x)
    return char_normalize(char_scale(char_add(sq, adams(x, 2), -1), Fraction(1, 2)))


def char_h_boundary(k: int, g: int) -> Counter:
    """h_{g,1}(k) = H ⊗ L(k+1) - L(k+2) (the bracket map is onto)."""
    return char_normalize(char_add(char_mul(char_H(g), char_free_lie(k + 1, g)), char_free_lie(k + 2, g), -1))


def char_h_point(k: int, g: int) -> Counter:
    return char_normalize(
        char_add(char_mul(char_H(g), char_closed_lie(k + 1, g)), char_closed_lie(k + 2, g), -1)
    )


def char_h_closed(k: int, g: int) -> Counter:
    return char_normalize(char_add(char_h_point(k, g), char_closed_lie(k, g), -1))


def char_restriction_kernel(k: int, g: int) -> Counter:
    """Character of Ker(h_{g,1}(k) -> h_g(k))."""
    return char_normalize(char_add(char_h_boundary(k, g), char_h_closed(k, g), -1))


# --- explicit weight tables ---------------------------------------------------------


def weights_of_subspace(basis: Sequence) -> Counter:
    """Weights of a basis of span(basis), splitting each vector by word weight."""
    table: Counter = Counter()
    if not basis:
        return table
    degrees = {_degree(v) for v in basis}
    if len(degrees) > 1:
        raise ValueError(f"inconsistent degrees {sorted(degrees)}")
    g = max(_max_index(v) for v in basis) or 1
    per: dict[Weight, Echelon] = {}
    for v in basis:
        for w, part in _tensor_of(v).weight_components(g).items():
            per.setdefault(w, Echelon()).add(part.terms)
    for w, ech in per.items():
        if len(ech):
            table[w] = len(ech)
    return table


def _tensor_of(v) -> Tensor:
    if isinstance(v, Tensor):
        return v
    if isinstance(v, MultiWedge):
        return v.to_tensor()
    return v.to_tensor()


def _degree(v) -> int:
    return _tensor_of(v).degree


def _max_index(v) -> int:
    return _tensor_of(v).max_index()


def pad_weights(table: Mapping[Weight, int], g: int) -> Counter:
    out = Counter()
    for w, m in table.items():
        if len(w) > g and any(w[g:]):
            raise ValueError("weight outside genus")
        out[tuple(w[:g]) + (0,) * (g - len(w))] += m
    return out


def wedge2_weights(weights: Sequence[Weight]) -> Counter:
    """Weights of ∧²V from the weight list of a weight basis of V."""
    out: Counter = Counter()
    for w1, w2 in combinations(weights, 2):
        out[tuple(p + q for p, q in zip(w1, w2))] += 1
    return out


def tensor_weights(w1: Sequence[Weight], w2: Sequence[Weight]) -> Counter:
    out: Counter = Counter()
    c1, c2 = Counter(w1), Counter(w2)
    for x, m in c1.items():
        for y, n in c2.items():
            out[tuple(p + q for p, q in zip(x, y))] += m * n
    return out


def expand(table: Mapping[Weight, int]) -> list[Weight]:
    return [w for w in sorted(table) for _ in range(table[w])]


# --- highest weight vectors ----------------------------------------------------------


def is_highest_weight_vector(v, lam, g: int) -> bool:
    """Weight-homogeneous of weight lam and killed by every simple raising operator."""
    lam = diagram(lam)
    if isinstance(v, MultiWedge):
        if not v:
            raise ValueError("the zero vector is not a highest weight vector")
        if v.weights(g) != {lam.highest_weight(g)}:
            return False
        return all(not sp_apply_wedge(op, v) for op in raising_operators(g))
    t = _tensor_of(v)
    if not t:
        raise ValueError("the zero vector is not a highest weight vector")
    if len(lam) > g or t.weights(g) != {lam.highest_weight(g)}:
        return False
    return all(not sp_apply(op, t) for op in raising_operators(g))


def span_closure(vectors: Sequence[Tensor], g: int, limit: int = 20000) -> list[Tensor]:
    """Basis of the sp(2g)-submodule generated by the given tensors."""
    from .tensor import U, V, X, Y

    gens = [X(i, j) for i in range(1, g + 1) for j in range(1, g + 1) if i != j]
    gens += [Y(i, j) for i in range(1, g + 1) for j in range(i, g + 1)]
    gens += [U(i) for i in range(1, g + 1)] + [V(i) for i in range(1, g + 1)]
    per: dict[Weight, Echelon] = {}
    basis: list[Tensor] = []
    queue: list[Tensor] = []
    degree = None

    def push(t: Tensor) -> None:
        for w, part in t.weight_components(g).items():
            ech = per.setdefault(w, Echelon())
            if ech.add(part.terms):
                basis.append(part)
                queue.append(part)
                if len(basis) > limit:
                    raise ValueError(f"generated module exceeds {limit} dimensions")

    for t in vectors:
        degree = t.degree
        push(t)
    while queue:
        t = queue.pop()
        for op in gens:
            r = sp_apply(op, t)
            if r:
                push(r)
    del degree
    return basis
