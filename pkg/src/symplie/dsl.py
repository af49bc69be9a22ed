"""A small expression language for building and evaluating elements.

The vocabulary follows the usual notation for these objects::

    4 brac[Ht[a1,a2,a1,a2], Ht[a3,b3,a3,b3]]
    p[(1,2)(3,4)](C[1,2](C[1,2](xi)))
    q0(Ht[a1,b1,a1,b1])
    sum(i, 1, g, Ht[a1,b1,a[i],b[i]])
    (4g+4) a1∧b1 + 4 omega0
    -144/(g+1) (a1∧a2∧a3)⊗a1

Values are Rational, Tensor, LieElement, TreeElement, HLElement or MultiWedge.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct
from typing import Any, Mapping

from .freelie import LieElement, lie_bracket, lie_sp_apply, omega0
from .linalg import qnorm
from .tensor import (
    GenusError,
    MultiWedge,
    SpGenerator,
    Tensor,
    a,
    b,
    contract,
    parse_shape,
    project,
    relabel,
    sp_apply,
    sp_apply_wedge,
    swap_indices,
    wedge_square_embed,
)
from .trees import (
    HLElement,
    LabeledTree,
    TreeElement,
    caterpillar,
    derivation_bracket,
    eta,
    from_rooted,
    h_tree,
    phi,
    q_0,
    q_12,
    weld_bracket,
)


class DSLError(ValueError):
    def __init__(self, message: str, pos: int | None = None, source: str | None = None):
        self.message = message
        self.pos = pos
        self.source = source
        super().__init__(self._render())

    def _render(self) -> str:
        if self.pos is None or self.source is None:
            return self.message
        return f"{self.message} at position {self.pos}\n  {self.source}\n  {' ' * self.pos}^"


class ParseError(DSLError):
    pass


class EvalError(DSLError):
    pass


# --- tokens ----------------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<ident>[^\W\d]\w*)|(?P<sym>[-+*/()\[\],⊗@∧^<>]))",
    re.UNICODE,
)


@dataclass
class Tok:
    kind: str
    text: str
    pos: int


def tokenize(src: str) -> list[Tok]:
    out = []
    i = 0
    n = len(src)
    while i < n:
        if src[i].isspace():
            i += 1
            continue
        m = _TOKEN_RE.match(src, i)
        if not m or m.end() == i:
            raise ParseError(f"unexpected character {src[i]!r}", i, src)
        kind = m.lastgroup
        text = m.group(kind)
        out.append(Tok(kind, text, m.start(kind)))
        i = m.end()
    out.append(Tok("end", "", n))
    return out


# --- AST -------------------------------------------------------------------------


@dataclass
class Node:
    pos: int


@dataclass
class Num(Node):
    value: int


@dataclass
class Name(Node):
    name: str


@dataclass
class LetterNode(Node):
    kind: str
    index: Node


@dataclass
class BinOp(Node):
    op: str
    left: Node
    right: Node


@dataclass
class Neg(Node):
    arg: Node


@dataclass
class BracketNode(Node):
    left: Node
    right: Node


@dataclass
class Call(Node):
    name: str
    sub: list  # bracket arguments, e.g. the indices of X[i,j] or the args of Ht[...]
    args: list  # parenthesised arguments
    raw: str | None = None  # raw text for projection shapes


@dataclass
class SumNode(Node):
    var: str
    lo: Node
    hi: Node
    body: Node


@dataclass
class TreeLit(Node):
    root: Node
    shape: Any  # nested tuples of Nodes


# Names called with square brackets and whose bracket contents are element arguments.
_BRACKET_FUNCS = {"tens", "brac", "Ht", "T", "weld"}
# Names taking square-bracket integer indices followed by one parenthesised argument.
_INDEXED_OPS = {"X": 2, "Y": 2, "U": 1, "V": 1, "C": 2, "swap": 2}
# Names taking parenthesised arguments only.
_PAREN_FUNCS = {"wedge": 2, "q12": 1, "q0": 1, "eta": 1, "iota": 1}


class Parser:
    def __init__(self, src: str, g: int | None = None):
        self.src = src
        self.toks = tokenize(src)
        self.i = 0
        self.g = g
        self.bound: list[str] = []

    # helpers
    @property
    def tok(self) -> Tok:
        return self.toks[self.i]

    def peek(self, k: int = 1) -> Tok:
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def error(self, msg: str, pos: int | None = None) -> ParseError:
        return ParseError(msg, self.tok.pos if pos is None else pos, self.src)

    def accept(self, text: str) -> bool:
        if self.tok.kind == "sym" and self.tok.text == text:
            self.i += 1
            return True
        return False

    def expect(self, text: str) -> Tok:
        if not (self.tok.kind == "sym" and self.tok.text == text):
            got = self.tok.text or "end of input"
            raise self.error(f"expected {text!r}, got {got!r}")
        t = self.tok
        self.i += 1
        return t

    def parse(self) -> Node:
        node = self.sum_expr()
        if self.tok.kind != "end":
            raise self.error(f"unexpected {self.tok.text!r}")
        return node

    # grammar
    def sum_expr(self) -> Node:
        pos = self.tok.pos
        if self.accept("-"):
            node: Node = Neg(pos, self.product())
        else:
            self.accept("+")
            node = self.product()
        while self.tok.kind == "sym" and self.tok.text in "+-":
            op = self.tok.text
            p = self.tok.pos
            self.i += 1
            node = BinOp(p, op, node, self.product())
        return node

    def _starts_primary(self) -> bool:
        t = self.tok
        return t.kind in ("num", "ident") or (t.kind == "sym" and t.text in "([")

    def product(self) -> Node:
        node = self.tensorial()
        while True:
            t = self.tok
            if t.kind == "sym" and t.text in "*/":
                self.i += 1
                node = BinOp(t.pos, t.text, node, self.tensorial())
            elif self._starts_primary():
                node = BinOp(t.pos, "*", node, self.tensorial())
            else:
                return node

    def tensorial(self) -> Node:
        node = self.wedge_expr()
        while self.tok.kind == "sym" and self.tok.text in ("⊗", "@"):
            p = self.tok.pos
            self.i += 1
            node = BinOp(p, "⊗", node, self.wedge_expr())
        return node

    def wedge_expr(self) -> Node:
        node = self.primary()
        while self.tok.kind == "sym" and self.tok.text in ("∧", "^"):
            p = self.tok.pos
            self.i += 1
            node = BinOp(p, "∧", node, self.primary())
        return node

    def primary(self) -> Node:
        t = self.tok
        if t.kind == "num":
            self.i += 1
            return Num(t.pos, int(t.text))
        if t.kind == "sym" and t.text == "(":
            self.i += 1
            node = self.sum_expr()
            self.expect(")")
            return node
        if t.kind == "sym" and t.text == "[":
            self.i += 1
            left = self.sum_expr()
            self.expect(",")
            right = self.sum_expr()
            self.expect("]")
            return BracketNode(t.pos, left, right)
        if t.kind == "ident":
            return self.ident()
        raise self.error(f"unexpected {t.text or 'end of input'!r}")

    def _letter_index_check(self, idx: int, pos: int) -> None:
        if idx < 1:
            raise ParseError(f"letter index {idx} must be at least 1", pos, self.src)
        if self.g is not None and idx > self.g:
            raise ParseError(f"letter index {idx} exceeds genus {self.g}", pos, self.src)

    def ident(self) -> Node:
        t = self.tok
        name = t.text
        self.i += 1
        m = re.fullmatch(r"([ab])(\d+)", name)
        if m:
            idx = int(m.group(2))
            self._letter_index_check(idx, t.pos)
            return LetterNode(t.pos, m.group(1), Num(t.pos, idx))
        if name in ("a", "b") and self.tok.text == "[":
            self.expect("[")
            idx = self.sum_expr()
            self.expect("]")
            return LetterNode(t.pos, name, idx)
        if name in ("omega0", "ω0", "g"):
            return Name(t.pos, name)
        if name in self.bound:
            return Name(t.pos, name)
        if name == "sum":
            self.expect("(")
            var = self.tok
            if var.kind != "ident":
                raise self.error("expected a summation variable")
            self.i += 1
            self.expect(",")
            lo = self.sum_expr()
            self.expect(",")
            hi = self.sum_expr()
            self.expect(",")
            self.bound.append(var.text)
            try:
                body = self.sum_expr()
            finally:
                self.bound.pop()
            self.expect(")")
            return SumNode(t.pos, var.text, lo, hi, body)
        if name == "Tr":
            self.expect("[")
            root = self.sum_expr()
            self.expect(",")
            shape = self.tree_shape()
            self.expect("]")
            return TreeLit(t.pos, root, shape)
        if name in ("p", "act"):
            open_tok = self.expect("[")
            depth = 1
            start = open_tok.pos + 1
            while depth:
                if self.tok.kind == "end":
                    raise self.error("unterminated projection shape")
                if self.tok.text == "[":
                    depth += 1
                elif self.tok.text == "]":
                    depth -= 1
                self.i += 1
            raw = self.src[start:self.toks[self.i - 1].pos]
            try:
                if name == "p":
                    parse_shape(raw)
                else:
                    for gen in parse_operator_word(raw):
                        for idx in ((gen.i, gen.j) if gen.kind in "XY" else (gen.i,)):
                            self._letter_index_check(idx, start)
            except ValueError as e:
                if isinstance(e, ParseError):
                    raise
                raise ParseError(str(e), start, self.src) from None
            self.expect("(")
            arg = self.sum_expr()
            self.expect(")")
            return Call(t.pos, name, [], [arg], raw)
        if name in _BRACKET_FUNCS:
            self.expect("[")
            sub = []
            if not (self.tok.kind == "sym" and self.tok.text == "]"):
                sub.append(self.sum_expr())
                while self.accept(","):
                    sub.append(self.sum_expr())
            self.expect("]")
            arity = {"brac": 2, "Ht": 4, "T": 6, "weld": 2}.get(name)
            if arity is not None and len(sub) != arity:
                raise ParseError(f"{name} takes {arity} arguments, got {len(sub)}", t.pos, self.src)
            return Call(t.pos, name, sub, [])
        if name in _INDEXED_OPS:
            self.expect("[")
            sub = [self.sum_expr()]
            while self.accept(","):
                sub.append(self.sum_expr())
            self.expect("]")
            if len(sub) != _INDEXED_OPS[name]:
                raise ParseError(f"{name} takes {_INDEXED_OPS[name]} indices", t.pos, self.src)
            self.expect("(")
            arg = self.sum_expr()
            self.expect(")")
            return Call(t.pos, name, sub, [arg])
        m = re.fullmatch(r"phi(\d*)", name)
        if m or name in _PAREN_FUNCS:
            self.expect("(")
            args = [self.sum_expr()]
            while self.accept(","):
                args.append(self.sum_expr())
            self.expect(")")
            want = 1 if m else _PAREN_FUNCS[name]
            if len(args) != want:
                raise ParseError(f"{name} takes {want} argument(s)", t.pos, self.src)
            return Call(t.pos, name, [], args)
        raise ParseError(f"unknown identifier {name!r}", t.pos, self.src)

    def tree_shape(self):
        if self.accept("["):
            left = self.tree_shape()
            self.expect(",")
            right = self.tree_shape()
            self.expect("]")
            return (left, right)
        t = self.tok
        if t.kind != "ident":
            raise self.error("expected a letter in a tree shape")
        return self.ident()


def parse(src: str, g: int | None = None) -> Node:
    return Parser(src, g).parse()


# --- evaluation ------------------------------------------------------------------------


def _is_scalar(v) -> bool:
    return isinstance(v, (int, Fraction))


def is_zero(v) -> bool:
    if _is_scalar(v):
        return v == 0
    return not v


def to_tensor(v) -> Tensor:
    if isinstance(v, Tensor):
        return v
    if isinstance(v, (LieElement, HLElement, MultiWedge)):
        return v.to_tensor()
    if isinstance(v, TreeElement):
        return eta(v).to_tensor()
    if _is_scalar(v):
        return Tensor.scalar(v)
    raise TypeError(f"cannot view {type(v).__name__} as a tensor")


def to_lie(v) -> LieElement:
    if isinstance(v, LieElement):
        return v
    if isinstance(v, Tensor):
        return LieElement.from_tensor(v)
    if isinstance(v, MultiWedge) and v.sizes == (2,):
        d = {}
        for (blk,), c in v.terms.items():
            d[blk] = c
        return LieElement(d, 2)
    raise TypeError(f"cannot view {type(v).__name__} as a Lie element")


def to_hl(v) -> HLElement:
    if isinstance(v, HLElement):
        return v
    if isinstance(v, TreeElement):
        return eta(v)
    if isinstance(v, Tensor):
        return HLElement.from_tensor(v)
    raise TypeError(f"cannot view {type(v).__name__} as an element of H⊗L")


def to_wedge(v) -> MultiWedge:
    if isinstance(v, MultiWedge):
        return v
    if isinstance(v, LieElement) and v.degree == 2:
        return MultiWedge((2,), {(w,): c for w, c in v.terms.items()})
    t = to_tensor(v)
    return MultiWedge((1,) * t.degree, {tuple((x,) for x in w): c for w, c in t.terms.items()})


def _coerce_pair(x, y):
    """Bring two values into a common type for addition and comparison."""
    if type(x) is type(y):
        return x, y
    kinds = {type(x), type(y)}
    if kinds <= {TreeElement, HLElement}:
        return to_hl(x), to_hl(y)
    if MultiWedge in kinds:
        return to_wedge(x), to_wedge(y)
    return to_tensor(x), to_tensor(y)


def add(x, y):
    if _is_scalar(x) and _is_scalar(y):
        return qnorm(x + y)
    if _is_scalar(x) and x == 0:
        return y
    if _is_scalar(y) and y == 0:
        return x
    if is_zero(x):
        return y
    if is_zero(y):
        return x
    x, y = _coerce_pair(x, y)
    return x + y


def scale(c, v):
    if _is_scalar(v):
        return qnorm(c * v)
    return v * c


def values_equal(x, y) -> bool:
    if is_zero(x) and is_zero(y):
        return True
    if is_zero(x) or is_zero(y):
        return False
    if _is_scalar(x) or _is_scalar(y):
        if _is_scalar(x) and _is_scalar(y):
            return x == y
        other = y if _is_scalar(x) else x
        s = x if _is_scalar(x) else y
        return isinstance(other, Tensor) and other.degree == 0 and other.scalar_value() == s
    # trees are compared through eta, which identifies AS/IHX-equivalent sums
    if isinstance(x, TreeElement):
        x = eta(x)
    if isinstance(y, TreeElement):
        y = eta(y)
    try:
        x, y = _coerce_pair(x, y)
    except TypeError:
        return False
    if isinstance(x, MultiWedge) and x.sizes != y.sizes:
        return False
    return x == y


def otimes(x, y):
    if _is_scalar(x) or _is_scalar(y):
        return scale(x, y) if _is_scalar(x) else scale(y, x)
    if isinstance(x, MultiWedge) or isinstance(y, MultiWedge):
        return to_wedge(x).otimes(to_wedge(y))
    if isinstance(y, LieElement) and isinstance(x, Tensor) and x.degree == 1:
        return HLElement.from_pairs([(c, w[0], y) for w, c in x.terms.items()]) if x else HLElement.zero(y.degree - 1)
    return to_tensor(x).otimes(to_tensor(y))


def _linear_block(v) -> MultiWedge | None:
    if isinstance(v, MultiWedge) and len(v.sizes) == 1:
        return v
    if isinstance(v, Tensor) and v.degree == 1:
        return to_wedge(v)
    return None


def wedge(x, y):
    bx, by = _linear_block(x), _linear_block(y)
    if bx is not None and by is not None:
        d: dict = {}
        for (u,), c1 in bx.terms.items():
            for (v,), c2 in by.terms.items():
                key = (u + v,)
                d[key] = d.get(key, 0) + c1 * c2
        return MultiWedge((bx.sizes[0] + by.sizes[0],), d)
    tx, ty = to_tensor(x), to_tensor(y)
    return wedge_square_embed(tx, ty)


def bracket(x, y, g: int):
    if isinstance(x, (TreeElement,)) and isinstance(y, TreeElement):
        return weld_bracket(x, y)
    if isinstance(x, (TreeElement, HLElement)) or isinstance(y, (TreeElement, HLElement)):
        return derivation_bracket(to_hl(x), to_hl(y), g=g)
    try:
        return lie_bracket(to_lie(x), to_lie(y))
    except Exception:
        tx, ty = to_tensor(x), to_tensor(y)
        return tx.otimes(ty) - ty.otimes(tx)


def _letters_of(v, pos, src) -> list[tuple[object, int]]:
    """Linear combination of single letters as (coeff, letter) pairs."""
    if isinstance(v, Tensor) and v.degree == 1:
        return [(c, w[0]) for w, c in sorted(v.terms.items())]
    raise EvalError("expected a letter or a combination of letters", pos, src)


def sp_act(gen: SpGenerator, v):
    if _is_scalar(v):
        return 0
    if isinstance(v, Tensor):
        return sp_apply(gen, v)
    if isinstance(v, MultiWedge):
        return sp_apply_wedge(gen, v)
    if isinstance(v, LieElement):
        return lie_sp_apply(gen, v)
    if isinstance(v, (TreeElement, HLElement)):
        return HLElement.from_tensor(sp_apply(gen, to_tensor(v)))
    raise TypeError(f"cannot act on {type(v).__name__}")


_GEN_RE = re.compile(r"([XY])(?:\[(\d+),(\d+)\]|(\d)(\d))|([UV])(?:\[(\d+)\]|(\d+))")


def parse_operator_word(text: str) -> list[SpGenerator]:
    """Parse words like ``U3 U2^3 X12^4 X23``; the rightmost factor acts first.

    Two-index generators take single digits (``X12``) or brackets (``X[1,12]``).
    """
    out: list[SpGenerator] = []
    for piece in text.split():
        base, _, power = piece.partition("^")
        m = _GEN_RE.fullmatch(base)
        if not m or (power and not power.isdigit()):
            raise ValueError(f"bad operator {piece!r}")
        if m.group(1):
            i = int(m.group(2) or m.group(4))
            j = int(m.group(3) or m.group(5))
            gen = SpGenerator(m.group(1), i, j)
        else:
            gen = SpGenerator(m.group(6), int(m.group(7) or m.group(8)))
        out.extend([gen] * int(power or 1))
    return out


class Evaluator:
    def __init__(self, g: int, src: str = "", env: Mapping[str, Any] | None = None):
        if g < 1:
            raise GenusError("genus must be at least 1")
        self.g = g
        self.src = src
        self.env = dict(env or {})
        self.vars: dict[str, int] = {}

    def err(self, node: Node, msg: str) -> EvalError:
        return EvalError(msg, node.pos, self.src)

    def index(self, node: Node) -> int:
        v = self.eval(node)
        if not (isinstance(v, int) or (isinstance(v, Fraction) and v.denominator == 1)):
            raise self.err(node, "expected an integer index")
        return int(v)

    def letter(self, node: LetterNode) -> int:
        i = self.index(node.index)
        if not 1 <= i <= self.g:
            raise self.err(node, f"letter index {i} outside 1..{self.g}")
        return a(i) if node.kind == "a" else b(i)

    def eval(self, node: Node):
        try:
            return self._eval(node)
        except DSLError:
            raise
        except (TypeError, ValueError, ZeroDivisionError) as e:
            raise self.err(node, str(e)) from None

    def _eval(self, node: Node):
        if isinstance(node, Num):
            return node.value
        if isinstance(node, Name):
            if node.name == "g":
                return self.g
            if node.name in ("omega0", "ω0"):
                return omega0(self.g)
            if node.name in self.vars:
                return self.vars[node.name]
            if node.name in self.env:
                return self.env[node.name]
            raise self.err(node, f"unbound name {node.name!r}")
        if isinstance(node, LetterNode):
            return Tensor.word(self.letter(node))
        if isinstance(node, Neg):
            return scale(-1, self.eval(node.arg))
        if isinstance(node, BinOp):
            return self.binop(node)
        if isinstance(node, BracketNode):
            return bracket(self.eval(node.left), self.eval(node.right), self.g)
        if isinstance(node, SumNode):
            lo, hi = self.index(node.lo), self.index(node.hi)
            acc: Any = 0
            saved = self.vars.get(node.var)
            for i in range(lo, hi + 1):
                self.vars[node.var] = i
                acc = add(acc, self.eval(node.body))
            if saved is None:
                self.vars.pop(node.var, None)
            else:
                self.vars[node.var] = saved
            return acc
        if isinstance(node, TreeLit):
            return self.tree_literal(node)
        if isinstance(node, Call):
            return self.call(node)
        raise self.err(node, "unsupported expression")

    def binop(self, node: BinOp):
        x = self.eval(node.left)
        y = self.eval(node.right)
        if node.op == "+":
            return add(x, y)
        if node.op == "-":
            return add(x, scale(-1, y))
        if node.op == "*":
            if _is_scalar(x):
                return scale(x, y)
            if _is_scalar(y):
                return scale(y, x)
            raise self.err(node, "product of two non-scalars; use ⊗ or ∧")
        if node.op == "/":
            if not _is_scalar(y):
                raise self.err(node, "division by a non-scalar")
            if y == 0:
                raise self.err(node, "division by zero")
            return scale(Fraction(1) / y, x)
        if node.op == "⊗":
            return otimes(x, y)
        if node.op == "∧":
            return wedge(x, y)
        raise self.err(node, f"unknown operator {node.op}")

    def tree_literal(self, node: TreeLit):
        roots = _letters_of(self.eval(node.root), node.root.pos, self.src)

        def expand(shape):
            if isinstance(shape, tuple):
                out = []
                for c1, s1 in expand(shape[0]):
                    for c2, s2 in expand(shape[1]):
                        out.append((c1 * c2, (s1, s2)))
                return out
            return _letters_of(self.eval(shape), shape.pos, self.src)

        terms = []
        for c0, r in roots:
            for c, s in expand(node.shape):
                if isinstance(s, int):
                    raise self.err(node, "a tree needs at least three leaves")
                terms.append((c0 * c, from_rooted(r, s)))
        if not terms:
            return 0
        return TreeElement(terms)

    def _multilinear_trees(self, node: Call, build) -> TreeElement:
        lists = [_letters_of(self.eval(arg), arg.pos, self.src) for arg in node.sub]
        terms = []
        for combo in iproduct(*lists):
            c = 1
            for ci, _ in combo:
                c *= ci
            terms.append((c, build(*[x for _, x in combo])))
        if not terms:
            return 0
        return TreeElement(terms)

    def call(self, node: Call):
        name = node.name
        if name == "Ht":
            return self._multilinear_trees(node, h_tree)
        if name == "T":
            return self._multilinear_trees(node, caterpillar)
        if name == "tens":
            acc: Any = None
            for arg in node.sub:
                v = self.eval(arg)
                acc = v if acc is None else otimes(acc, v)
            return 1 if acc is None else acc
        if name == "brac":
            x, y = self.eval(node.sub[0]), self.eval(node.sub[1])
            if isinstance(x, LieElement) and isinstance(y, LieElement):
                return lie_bracket(x, y)
            tx, ty = to_tensor(x), to_tensor(y)
            return tx.otimes(ty) - ty.otimes(tx)
        if name == "weld":
            x, y = self.eval(node.sub[0]), self.eval(node.sub[1])
            if not (isinstance(x, TreeElement) and isinstance(y, TreeElement)):
                raise self.err(node, "weld needs two tree elements")
            return weld_bracket(x, y)
        if name == "wedge":
            return wedge(self.eval(node.args[0]), self.eval(node.args[1]))
        if name in ("X", "Y", "U", "V"):
            idx = [self.index(s) for s in node.sub]
            for i in idx:
                if not 1 <= i <= self.g:
                    raise self.err(node, f"generator index {i} outside 1..{self.g}")
            gen = SpGenerator(name, *idx) if name in "XY" else SpGenerator(name, idx[0])
            return sp_act(gen, self.eval(node.args[0]))
        if name == "swap":
            i, j = (self.index(s) for s in node.sub)
            v = self.eval(node.args[0])
            perm = swap_indices(i, j)
            if isinstance(v, MultiWedge):
                return MultiWedge(v.sizes, {tuple(tuple(perm.get(x, x) for x in blk) for blk in k): c for k, c in v.terms.items()})
            out = relabel(to_tensor(v), perm)
            if isinstance(v, (TreeElement, HLElement)):
                return HLElement.from_tensor(out)
            if isinstance(v, LieElement):
                return LieElement.from_tensor(out)
            return out
        if name == "C":
            i, j = (self.index(s) for s in node.sub)
            return contract(to_tensor(self.eval(node.args[0])), i, j)
        if name == "act":
            v = self.eval(node.args[0])
            for gen in reversed(parse_operator_word(node.raw)):
                v = sp_act(gen, v)
            return v
        if name == "p":
            return project(to_tensor(self.eval(node.args[0])), node.raw)
        if name == "q12":
            return q_12(to_hl(self.eval(node.args[0])))
        if name == "q0":
            return q_0(to_hl(self.eval(node.args[0])))
        if name == "eta":
            return to_hl(self.eval(node.args[0]))
        if name == "iota":
            return to_tensor(self.eval(node.args[0]))
        m = re.fullmatch(r"phi(\d*)", name)
        if m:
            x = to_lie(self.eval(node.args[0]))
            if m.group(1) and int(m.group(1)) != x.degree:
                raise self.err(node, f"{name} needs degree {m.group(1)}, got {x.degree}")
            return phi(x, self.g)
        raise self.err(node, f"unknown function {name!r}")


def evaluate(src: str | Node, g: int, env: Mapping[str, Any] | None = None):
    """Parse (if needed) and evaluate an expression at genus g."""
    if isinstance(src, Node):
        return Evaluator(g, "", env).eval(src)
    node = Parser(src, g).parse() if not env else _parse_with_env(src, g, env)
    return Evaluator(g, src, env).eval(node)


def _parse_with_env(src: str, g: int, env: Mapping[str, Any]) -> Node:
    p = Parser(src, g)
    p.bound.extend(env.keys())
    return p.parse()


def format_value(v) -> str:
    """Canonical printed form; the output parses back to an equal value."""
    if _is_scalar(v):
        return str(qnorm(v))
    if isinstance(v, LabeledTree):
        return str(v)
    return str(v)


def value_kind(v) -> str:
    if _is_scalar(v):
        return "rational"
    return {
        Tensor: "tensor",
        LieElement: "lie",
        TreeElement: "tree",
        HLElement: "h-element",
        MultiWedge: "wedge",
    }.get(type(v), type(v).__name__)
