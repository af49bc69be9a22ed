import pytest

from symplie.freelie import lie_from_letters, omega0
from symplie.tensor import a, b
from symplie.trees import (
    ContractError,
    HLElement,
    TreeElement,
    caterpillar,
    derivation_bracket,
    eta,
    from_rooted,
    h_tree,
    is_in_closed_kernel,
    is_in_h,
    phi,
    q_0,
    q_12,
    tripod,
    weld_bracket,
)


def test_eta_of_tripod():
    h = eta(tripod(a(1), a(2), a(3)))
    assert str(h) == "a1⊗[a2,a3] - a2⊗[a1,a3] + a3⊗[a1,a2]"
    assert is_in_h(h)


def test_h_tree_symmetries():
    t = eta(h_tree(a(1), a(2), a(1), a(2)))
    assert t == eta(h_tree(a(2), a(1), a(2), a(1)))
    assert t == -eta(h_tree(a(2), a(1), a(1), a(2)))


def test_detectors_on_h_tree():
    t = h_tree(a(1), b(1), a(1), b(1))
    assert q_0(t) == 12
    assert str(q_12(t)) == "12 a1∧b1"


def test_weld_matches_derivation_bracket():
    s, t = h_tree(a(1), a(2), a(1), a(2)), h_tree(a(1), b(2), a(1), a(2))
    assert eta(weld_bracket(s, t)) == derivation_bracket(eta(s), eta(t), 2)
    assert eta(weld_bracket(s, t)) == eta(TreeElement.of(caterpillar(a(1), a(2), a(1), a(1), a(2), a(1)), 2))


def test_derivation_bracket_requires_h():
    x = HLElement.from_pairs([(1, a(1), lie_from_letters(a(1), a(2)))])
    with pytest.raises(ContractError):
        derivation_bracket(x, x, 2)


def test_phi_of_omega0_is_closed_kernel_free():
    v = phi(omega0(3), 3)
    assert is_in_h(eta(v))
    assert q_0(v) == 8 * 9 + 12
    # the image of phi is killed by the closed restriction
    assert is_in_closed_kernel(v, 3)
    assert not is_in_closed_kernel(h_tree(a(1), a(2), a(1), a(2)), 3)


def test_from_rooted_needs_three_leaves():
    with pytest.raises(ValueError):
        from_rooted(a(1), a(2))
