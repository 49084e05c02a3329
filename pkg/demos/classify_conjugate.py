"""Hide h6 x C behind a random base change, then recover it.

Run:  python3 demos/classify_conjugate.py
"""
import random

from liediamond import abelian, classify, direct_product, fileformat, h6, verify_witness
from liediamond.liealg import change_basis, conjugate

g0 = direct_product(h6(), abelian(1))
g, _ = conjugate(g0, random.Random(2024), 3)
nonzero = sum(1 for v in g.brackets.values() if any(v))
print(f"disguised table: {nonzero} nonzero brackets, digest {fileformat.digest(g)[:12]}")

r = classify(g)
print("kind:", r.kind, " abelian dims:", r.abelian_dims, " stage:", r.stage)
print("witness verified:", verify_witness(g, r))

# The witness matrix takes the disguised basis to h6 x C in its standard form.
print("normal form recovered:", change_basis(g, r.matrix) == g0)
