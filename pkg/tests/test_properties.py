from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from symplie.dsl import evaluate, format_value, values_equal
from symplie.freelie import LieElement, lie_bracket, lie_sp_apply, lyndon_basis, mobius, witt_dimension
from symplie.sprep import YoungDiagram, decompose, freudenthal, pad_weights, weyl_dim
from symplie.tensor import SpGenerator, Tensor, U, V, X, Y, contract, mu, sp_apply
from symplie.trees import (
    TreeElement,
    derivation_bracket,
    eta,
    from_rooted,
    is_in_h,
    weld_bracket,
)

genus = st.integers(min_value=2, max_value=4)


@st.composite
def rooted(draw, g: int, leaves: int):
    if leaves == 1:
        return draw(st.integers(0, 2 * g - 1))
    left = draw(st.integers(1, leaves - 1))
    return (draw(rooted(g, left)), draw(rooted(g, leaves - left)))


@st.composite
def trees(draw, g: int | None = None, degree: int | None = None):
    g = draw(genus) if g is None else g
    k = draw(st.integers(1, 4)) if degree is None else degree
    return g, from_rooted(draw(st.integers(0, 2 * g - 1)), draw(rooted(g, k + 1)))


@st.composite
def tree_pairs(draw):
    g = draw(st.integers(2, 3))
    _, s = draw(trees(g, draw(st.integers(1, 2))))
    _, t = draw(trees(g, draw(st.integers(1, 2))))
    return g, s, t


@st.composite
def lie_elements(draw, g: int, k: int):
    basis = lyndon_basis(k, g)
    picks = draw(st.lists(st.sampled_from(basis), min_size=1, max_size=3))
    coeffs = draw(st.lists(st.integers(-3, 3), min_size=len(picks), max_size=len(picks)))
    return LieElement({w: c for w, c in zip(picks, coeffs) if c}, k)


@st.composite
def generators(draw, g: int) -> SpGenerator:
    kind = draw(st.sampled_from("XYUV" if g > 1 else "YUV"))
    i = draw(st.integers(1, g))
    if kind in "UV":
        return U(i) if kind == "U" else V(i)
    j = draw(st.integers(1, g))
    if kind == "X":
        if i == j:
            j = i % g + 1
        return X(i, j)
    return Y(min(i, j), max(i, j))


@settings(max_examples=100, deadline=None)
@given(trees())
def test_eta_lands_in_h(gt):
    _, t = gt
    assert is_in_h(eta(t))


@settings(max_examples=20, deadline=None)
@given(tree_pairs())
def test_weld_agrees_with_derivation_bracket(gst):
    g, s, t = gst
    assert eta(weld_bracket(s, t)) == derivation_bracket(eta(s), eta(t), g)


@settings(max_examples=50, deadline=None)
@given(st.data())
def test_antisymmetry_relation(data):
    g = data.draw(genus)
    root = data.draw(st.integers(0, 2 * g - 1))
    x = data.draw(rooted(g, data.draw(st.integers(1, 2))))
    y = data.draw(rooted(g, data.draw(st.integers(1, 2))))
    assert not (eta(from_rooted(root, (x, y))) + eta(from_rooted(root, (y, x))))


@settings(max_examples=50, deadline=None)
@given(st.data())
def test_ihx_relation(data):
    g = data.draw(genus)
    root = data.draw(st.integers(0, 2 * g - 1))
    x, y, z = (data.draw(rooted(g, data.draw(st.integers(1, 2)))) for _ in range(3))
    terms = [((x, y), z), ((y, z), x), ((z, x), y)]
    total = sum((eta(from_rooted(root, r)) for r in terms[1:]), eta(from_rooted(root, terms[0])))
    assert not total


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_jacobi(data):
    g = data.draw(st.integers(1, 3))
    x, y, z = (data.draw(lie_elements(g, data.draw(st.integers(1, 2)))) for _ in range(3))
    jac = lie_bracket(x, lie_bracket(y, z)) + lie_bracket(y, lie_bracket(z, x)) + lie_bracket(z, lie_bracket(x, y))
    assert not jac


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_bracket_antisymmetric(data):
    g = data.draw(st.integers(1, 3))
    x = data.draw(lie_elements(g, data.draw(st.integers(1, 3))))
    y = data.draw(lie_elements(g, data.draw(st.integers(1, 3))))
    assert lie_bracket(x, y) == -lie_bracket(y, x)


def necklace(k: int, n: int) -> int:
    return sum(mobius(d) * n ** (k // d) for d in range(1, k + 1) if k % d == 0) // k


@given(st.integers(1, 5), st.integers(1, 4))
def test_witt_dimensions(k, g):
    assert witt_dimension(k, g) == len(lyndon_basis(k, g)) == necklace(k, 2 * g)


diagrams = st.lists(st.integers(1, 4), min_size=1, max_size=4).map(lambda r: sorted(r, reverse=True)).filter(
    lambda r: sum(r) <= 4
)


@settings(max_examples=60, deadline=None)
@given(diagrams, st.integers(1, 4))
def test_freudenthal_decompose_round_trip(rows, g):
    if len(rows) > g:
        return
    lam = YoungDiagram(rows)
    table = pad_weights(freudenthal(lam, g), g)
    assert sum(table.values()) == weyl_dim(lam, g)
    assert decompose(table, g) == {lam: 1}


@settings(max_examples=30, deadline=None)
@given(diagrams, diagrams, st.integers(2, 4))
def test_decompose_of_sum(r1, r2, g):
    if len(r1) > g or len(r2) > g:
        return
    table = pad_weights(freudenthal(r1, g), g) + pad_weights(freudenthal(r2, g), g)
    expect: dict = {}
    for r in (r1, r2):
        expect[YoungDiagram(r)] = expect.get(YoungDiagram(r), 0) + 1
    assert decompose(table, g) == expect


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_action_preserves_pairing(data):
    g = data.draw(st.integers(1, 3))
    gen = data.draw(generators(g))
    x, y = data.draw(st.integers(0, 2 * g - 1)), data.draw(st.integers(0, 2 * g - 1))
    assert mu(x, y) == contract(Tensor.word(x, y), 1, 2).scalar_value()
    t = sp_apply(gen, Tensor.word(x, y))
    if t:
        assert contract(t, 1, 2).scalar_value() == 0


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_action_is_derivation_on_brackets(data):
    g = data.draw(st.integers(1, 3))
    gen = data.draw(generators(g))
    x = data.draw(lie_elements(g, 1))
    y = data.draw(lie_elements(g, 2))
    lhs = lie_sp_apply(gen, lie_bracket(x, y))
    rhs = lie_bracket(lie_sp_apply(gen, x), y) + lie_bracket(x, lie_sp_apply(gen, y))
    assert lhs == rhs


@settings(max_examples=60, deadline=None)
@given(trees(), st.integers(-5, 5), st.integers(1, 4))
def test_print_parse_idempotent(gt, p, q):
    g, t = gt
    for v in (TreeElement.of(t, Fraction(p, q)), eta(t) * Fraction(p, q), eta(t).to_tensor()):
        text = format_value(v)
        again = evaluate(text, g)
        assert values_equal(again, v)
        assert format_value(evaluate(format_value(again), g)) == format_value(again)
