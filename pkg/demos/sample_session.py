"""Rebuild the bracket of two H-trees and run the composite detector on it."""

import sys

from symplie import evaluate, format_value

g = int(sys.argv[1]) if len(sys.argv) > 1 else 4

xsi1 = evaluate("4brac[Ht[a1,a2,a1,a2],Ht[a3,b3,a3,b3]]", g)
print("xsi1 has", len(xsi1), "tensor terms")
for step in ["C[1,2](X)", "C[1,2](C[1,2](X))", "p[(1,2)(3,4)](C[1,2](C[1,2](X)))"]:
    print(f"{step:34} -> {format_value(evaluate(step, g, {'X': xsi1}))[:90]}")
