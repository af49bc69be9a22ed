"""Exact symplectic tensor, free Lie and tree algebra engine for the degree-2
and degree-4 pieces of the Johnson image, with a verification registry."""

__version__ = "0.1.0"

from .dsl import evaluate, format_value, parse
from .freelie import LieElement, lie_bracket, lyndon_basis, omega0, witt_dimension
from .sprep import YoungDiagram, decompose, format_decomposition, freudenthal, weyl_dim
from .tensor import MultiWedge, Tensor, a, b, contract, project
from .trees import HLElement, LabeledTree, TreeElement, eta, phi

__all__ = [
    "HLElement",
    "LabeledTree",
    "LieElement",
    "MultiWedge",
    "Tensor",
    "TreeElement",
    "YoungDiagram",
    "a",
    "b",
    "contract",
    "decompose",
    "eta",
    "evaluate",
    "format_decomposition",
    "format_value",
    "freudenthal",
    "lie_bracket",
    "lyndon_basis",
    "omega0",
    "parse",
    "phi",
    "project",
    "weyl_dim",
    "witt_dimension",
]
