from symplie.freelie import (
    LieElement,
    QuotientContext,
    lie_bracket,
    lie_from_letters,
    lyndon_basis,
    lyndon_words,
    omega0,
    quotient_dimension,
    witt_dimension,
)
from symplie.tensor import a, b


def test_lyndon_words_small():
    assert lyndon_words(3, 2) == ((0, 0, 1), (0, 1, 1))


def test_witt_dimensions():
    # free Lie algebra on 2g generators
    assert [witt_dimension(k, 2) for k in range(1, 5)] == [4, 6, 20, 60]
    assert witt_dimension(2, 4) == 28


def test_bracket_antisymmetry():
    x, y = lie_from_letters(a(1), b(2)), LieElement.letter(a(3))
    assert lie_bracket(x, y) == -lie_bracket(y, x)


def test_tensor_round_trip():
    x = lie_bracket(lie_from_letters(a(1), b(1)), lie_from_letters(a(2), b(1)))
    assert LieElement.from_tensor(x.to_tensor()) == x


def test_omega0_and_quotient():
    w = omega0(3)
    assert str(omega0(2)) == "[a1,b1] + [a2,b2]"
    assert QuotientContext(2, 3).contains(w)
    # L_g(k) dimensions for the closed surface group at g=2
    assert quotient_dimension(2, 2) == witt_dimension(2, 2) - 1
    assert quotient_dimension(3, 2) == witt_dimension(3, 2) - 4


def test_lyndon_basis_is_sorted_and_unique():
    basis = lyndon_basis(3, 2)
    assert len(basis) == len(set(basis)) == 20
