"""The matroid of linear forms, and how fast dope matrices can grow.

Run: python demos/05_matroid_and_bounds.py
"""

from dopekit import MatroidView, NodeTuple, count_dope, generic_nodes
from dopekit.counting import bound_fixed_tuple, bound_pairwise, bound_zero_patterns, erc_lower_bound_construction

M = MatroidView(NodeTuple([0, 1]), 1)
print("independent {(0,0),(1,0)}:", M.is_independent({(0, 0), (1, 0)}))
print("all flats:", [sorted(F) for F in M.all_flats()])
print("flats missing the last column:", [sorted(F) for F in M.dope_flats()])
print("flats of the contraction by (0,1):", [sorted(F) for F in M.all_flats(contract_top=True)])

print("\n n  generic   pairwise  zero-patterns  fixed-tuple")
for n in range(2, 7):
    print(f"{n:2d} {count_dope(generic_nodes(3), n):8d} {bound_pairwise(3, n):10d} "
          f"{bound_zero_patterns(3, n):14d} {bound_fixed_tuple(3, n):12d}")

for n in (4, 8, 12):
    e = erc_lower_bound_construction(n)
    print(f"checkerboard construction n={n}: {int(e)} matrices (log2 comparison value {e.approx_log2:.1f})")
