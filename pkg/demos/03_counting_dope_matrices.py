"""How many dope matrices does a fixed triple of nodes have?

The 1-positions of a dope matrix form a flat of the matroid of linear forms
L[i][j] (the functionals a -> P^(j)(lam_i)/j!) that avoids (0, ..., 0, 1).
Enumerating flats therefore counts dope matrices exactly.  Special triples
have fewer than the generic triple (0, 1, t), and the generic count follows
the tail condition.

Run: python demos/03_counting_dope_matrices.py [n_max]
"""

import sys
import time

from dopekit import NodeTuple, QuadraticField, count_condition_T, count_dope, generic_nodes
from dopekit.enumeration import check_conjecture_8_1, compare_to_generic

n_max = int(sys.argv[1]) if len(sys.argv) > 1 else 5
K = QuadraticField(2)
rows = {
    "(0,1,sqrt2)": NodeTuple([0, 1, K.sqrt], K),
    "(0,1,2)": NodeTuple([0, 1, 2]),
    "(0,1,3)": NodeTuple([0, 1, 3]),
    "(0,1,t)": generic_nodes(3),
    "(0,1,4)": NodeTuple([0, 1, 4]),
}
for name, nodes in rows.items():
    t = time.time()
    counts = [count_dope(nodes, n) for n in range(n_max + 1)]
    print(f"{name:12s}", " ".join(f"{c:6d}" for c in counts), f"  ({time.time() - t:.1f}s)")
print(f"{'tail cond.':12s}", " ".join(f"{count_condition_T(3, n):6d}" for n in range(n_max + 1)))

print("\ngeneric set equals tail-condition set:",
      all(r["equal"] for r in check_conjecture_8_1(3, min(n_max, 5))))
print("(0,1,4) at n=3 versus generic:", compare_to_generic(NodeTuple([0, 1, 4]), 3))
print("(0,1,2) at n=4 versus generic:", compare_to_generic(NodeTuple([0, 1, 2]), 4))
