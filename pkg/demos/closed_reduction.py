"""Split the projected wedge of the closed [21^2] argument into its three
pieces and show what the operator word and detector make of each."""

import sys

from symplie import evaluate, format_value

g = int(sys.argv[1]) if len(sys.argv) > 1 else 4
DET = "p[(1,2,3)(4)](C[3,5](C[1,7](act[U2 U3 X12 X13](X))))"
pieces = {
    "leading": "Ht[a1,b1,a1,b1]∧Ht[a2,b2,a2,b2]",
    "cross": "-3/(g+1) (Ht[a1,b1,a1,b1]∧phi2([a2,b2]) + phi2([a1,b1])∧Ht[a2,b2,a2,b2])",
    "product": "9/((g+1)(g+1)) phi2([a1,b1])∧phi2([a2,b2])",
}
for name, expr in pieces.items():
    print(f"{name:8} {format_value(evaluate(DET, g, {'X': evaluate(expr, g)}))}")

proj = "Ht[a{i},b{i},a{i},b{i}] - 3/(g+1) phi2([a{i},b{i}]) + 3/((2g+1)(g+1)) phi2(omega0)"
v = evaluate(f"({proj.format(i=1)}) ∧ ({proj.format(i=2)})", g)
print(f"{'total':8} {format_value(evaluate(DET, g, {'X': v}))}")
