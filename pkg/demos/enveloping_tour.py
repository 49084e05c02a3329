"""Straightening, supercentral extraction and chains in U(H3).

Run:  python3 demos/enveloping_tour.py
"""
from liediamond import (
    EnvelopingAlgebra,
    extract_supercentral,
    heisenberg,
    heisenberg_to_weyl,
    supercentralizing_chain,
)

A = EnvelopingAlgebra(heisenberg(1))
x, y, h = (A.parse(s) for s in ("x1", "y1", "h"))
print("PBW order:", ", ".join(A.names))
print("y*x      =", y * x)
print("(x*y)^2  =", (x * y) * (x * y))

for u in (y, h, x * y, x * x * y + y):
    print(f"extract({u}) = {extract_supercentral(u)}")

chain = supercentralizing_chain([x], 4)
print("chain for {x1}:", [str(e) for e in chain.elements], "complete" if chain.complete else "partial")

# Sending h to 1 lands in the first Weyl algebra.
print("image of y*x in A_1:", heisenberg_to_weyl(y * x))
