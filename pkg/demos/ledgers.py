"""Print the multiplicity bookkeeping for every surface type."""

import sys

from symplie.checks import SCOPES, multiplicity_ledger

genera = [int(x) for x in sys.argv[1:]] or [2, 3, 4]
for g in genera:
    for scope in SCOPES:
        print(multiplicity_ledger(g, scope).format())
        print()
