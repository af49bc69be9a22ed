import pytest

from symplie.tensor import (
    GenusError,
    MultiWedge,
    Tensor,
    U,
    V,
    X,
    a,
    apply_word,
    b,
    contract,
    mu,
    parse_letter,
    project,
    sp_apply,
    weight_of,
    wedge_square_embed,
)


def test_letter_codes_and_order():
    assert [a(1), b(1), a(2), b(2)] == [0, 1, 2, 3]
    assert parse_letter("b12") == b(12)
    with pytest.raises(GenusError):
        parse_letter("a5", 4)


def test_intersection_form():
    assert mu(a(1), b(1)) == 1 and mu(b(1), a(1)) == -1
    assert mu(a(1), b(2)) == 0 and mu(a(1), a(1)) == 0


def test_contract_deletes_positions():
    t = Tensor.word(a(1), a(2), b(1), a(3))
    assert contract(t, 1, 3) == Tensor.word(a(2), a(3))
    assert contract(Tensor.word(b(1), a(2), a(1), a(3)), 1, 3) == Tensor.word(a(2), a(3)) * -1
    with pytest.raises(ValueError):
        contract(t, 3, 1)


def test_project_orders_blocks_with_sign():
    t = Tensor.word(a(2), a(1), a(1))
    m = project(t, "(1,2)(3)")
    assert m == MultiWedge.basis((a(1), a(2)), (a(1),), coeff=-1)
    assert not project(Tensor.word(a(1), a(1)), "(1,2)")


def test_project_rejects_bad_shape():
    with pytest.raises(ValueError):
        project(Tensor.word(a(1), a(2)), "(1,2)(3)")


def test_wedge_square_embed_is_commutator():
    u, v = Tensor.word(a(1)), Tensor.word(b(1))
    assert wedge_square_embed(u, v) == Tensor.word(a(1), b(1)) - Tensor.word(b(1), a(1))


def test_generators_on_letters():
    assert sp_apply(X(1, 2), Tensor.word(a(2))) == Tensor.word(a(1))
    assert sp_apply(U(1), Tensor.word(b(1))) == Tensor.word(a(1))
    assert not sp_apply(U(1), Tensor.word(a(1)))
    assert sp_apply(V(1), Tensor.word(a(1))) == Tensor.word(b(1))


def test_apply_word_rightmost_first():
    t = Tensor.word(b(2))
    assert apply_word([X(1, 2), U(2)], t) == sp_apply(X(1, 2), sp_apply(U(2), t))


def test_raising_shifts_weight():
    t = Tensor.word(a(2), b(1))
    out = sp_apply(X(1, 2), t)
    for word in out.terms:
        w = weight_of(word, 2)
        assert w[0] == weight_of((a(2), b(1)), 2)[0] + 1


def test_printing():
    assert str(Tensor.word(a(1), b(2)) * 3 - Tensor.word(a(2), a(1))) == "3 a1⊗b2 - a2⊗a1"
    assert str(MultiWedge.basis((a(1), a(2)), (a(1),))) == "(a1∧a2)⊗a1"
