"""Decompose the degree-2 modules and the five columns of their second exterior power."""

import sys

from symplie.sprep import format_decomposition
from symplie.spaces import COLUMNS, decompose_space

g = int(sys.argv[1]) if len(sys.argv) > 1 else 3
for name in ("h2", "hstar2", "hg2") + COLUMNS:
    print(f"{name:14} {format_decomposition(decompose_space(name, g))}")
