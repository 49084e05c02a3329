"""Index and diamond verdicts across the catalog.

Run:  python3 demos/diamond_table.py
"""
from liediamond import compute_index, even_part, from_spec, has_diamond

SPECS = [
    "abelian:4", "h5", "h6", "filiform:4", "filiform:7",
    "heis:1", "heis:2", "heis:3", "h5*abelian:2",
    "heis_super:odd,2", "heis_super:even,0,2", "heis_super:even,2,1",
]

print(f"{'algebra':22} {'dim g0':>6} {'index':>5} {'p':>3}  diamond")
for spec in SPECS:
    g0 = even_part(from_spec(spec))
    r = compute_index(g0)
    print(f"{spec:22} {g0.dim:6d} {r.index:5d} {r.weyl_order:3d}  {has_diamond(from_spec(spec))}")

# The Heisenberg family has index 1 in every dimension, so from H5 on the
# Weyl order exceeds one and the property fails.
