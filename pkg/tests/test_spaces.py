import pytest

from symplie.checks import expected_table
from symplie.sprep import char_h_boundary, decompose, weyl_dim
from symplie.spaces import (
    COLUMNS,
    column_weights,
    decompose_space,
    h2_basis,
    h2_weights,
    restriction_kernel_wedge2,
    wedge2_table,
)
from symplie.trees import is_in_h


@pytest.mark.parametrize("g,dim", [(2, 20), (3, 105), (4, 336)])
def test_h2_dimension(g, dim):
    assert sum(h2_weights(g).values()) == dim


def test_h2_basis_lies_in_h():
    assert all(is_in_h(v) for v in h2_basis(2))


@pytest.mark.parametrize("g", [2, 3, 4])
def test_explicit_weights_match_characters(g):
    assert decompose(h2_weights(g), g) == decompose(char_h_boundary(2, g), g)


@pytest.mark.parametrize("g", [2, 3, 4])
def test_columns(g):
    cols = column_weights(g)
    for name in COLUMNS:
        assert decompose(cols[name], g) == expected_table(g)[name], name


def test_wedge2_table_counts():
    from collections import Counter

    t = wedge2_table(Counter({(1,): 2, (0,): 1, (-1,): 2}))
    assert sum(t.values()) == 10
    assert t[(2,)] == 1 and t[(0,)] == 4


def test_wedge2_dimension_genus_four():
    total = sum(m * weyl_dim(lam, 4) for lam, m in decompose_space("wedge2-h2", 4).items())
    assert total == 56280 == 336 * 335 // 2


def test_restriction_kernel_wedge2_genus_three():
    exp = expected_table(3)
    total: dict = {}
    for c in COLUMNS[1:]:
        for lam, m in exp[c].items():
            total[lam] = total.get(lam, 0) + m
    assert decompose(restriction_kernel_wedge2(3), 3) == total


def test_unknown_space():
    with pytest.raises(ValueError):
        decompose_space("nope", 2)
