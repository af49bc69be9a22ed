import pytest

from symplie.sprep import (
    YoungDiagram,
    char_free_lie,
    char_h_boundary,
    char_h_closed,
    char_h_point,
    char_restriction_kernel,
    decompose,
    diagram,
    format_decomposition,
    freudenthal,
    is_highest_weight_vector,
    parse_decomposition,
    weyl_dim,
)
from symplie.tensor import Tensor, a, b


@pytest.mark.parametrize(
    "lam,g,dim",
    [([1], 3, 6), ([1, 1], 3, 14), ([2], 2, 10), ([2, 2], 4, 308), ([4, 2], 2, 81)],
)
def test_weyl_dimensions(lam, g, dim):
    assert weyl_dim(lam, g) == dim


def test_weyl_dim_rejects_long_diagrams():
    with pytest.raises(ValueError):
        weyl_dim([1, 1, 1], 2)


def test_diagram_text_round_trip():
    for text in ["[431]", "[32^21]", "[2^21^2]", "[0]", "[31^3]"]:
        assert str(YoungDiagram.parse(text)) == text
    assert diagram([3, 2, 2, 1]) == diagram("[32^21]")


def test_decomposition_text_round_trip():
    text = "[42]+[31^3]+2[31]+[2^3]+[21^2]+2[2]"
    dec = parse_decomposition(text)
    assert parse_decomposition(format_decomposition(dec)) == dec
    assert format_decomposition(dec) == "[42]+[31^3]+[2^3]+2[31]+[21^2]+2[2]"


def test_freudenthal_total_matches_weyl():
    for lam, g in [([2, 1], 3), ([2, 2], 3), ([3, 1], 2)]:
        assert sum(freudenthal(lam, g).values()) == weyl_dim(lam, g)


def test_character_oracle_degree_two():
    for g in (2, 3, 4):
        assert format_decomposition(decompose(char_h_boundary(2, g), g)) == "[2^2]+[1^2]+[0]"
        assert format_decomposition(decompose(char_h_point(2, g), g)) == "[2^2]+[1^2]"
        assert format_decomposition(decompose(char_h_closed(2, g), g)) == "[2^2]"


def test_free_lie_degree_two():
    assert decompose(char_free_lie(2, 3), 3) == parse_decomposition("[1^2]+[0]")


def test_restriction_kernel_degree_four():
    assert format_decomposition(decompose(char_restriction_kernel(4, 4), 4)) == "[31]+[21^2]+2[2]"
    assert format_decomposition(decompose(char_restriction_kernel(4, 2), 2)) == "[31]+2[2]"


def test_highest_weight_vectors():
    assert is_highest_weight_vector(Tensor.word(a(1), a(1)), "[2]", 2)
    v = Tensor.word(a(1), a(2)) - Tensor.word(a(2), a(1))
    assert is_highest_weight_vector(v, "[1^2]", 2)
    assert not is_highest_weight_vector(Tensor.word(a(1), a(2)), "[1^2]", 2)
    assert not is_highest_weight_vector(Tensor.word(b(1), b(1)), "[2]", 2)
