"""Every 0/1 matrix is the start of some dope matrix.

Given D, solve P = sum_{j: D[i][j] = 0} (x - lam_i)^j  mod (x - lam_i)^(n+2)
for every row i with the Chinese remainder theorem.  The first n+1 columns
of the dope matrix of P are then exactly D, and deg P <= m(n+2).

Run: python demos/04_extension.py
"""

from dopekit import DopeMatrix, NodeTuple, QuadraticField, dope_matrix_of, extend
from dopekit.enumeration import generic_nodes

for D, nodes in [
    (DopeMatrix(["111", "010", "001"]), NodeTuple([0, 1, 2])),
    (DopeMatrix(["11", "11"]), NodeTuple([0, QuadraticField(2).sqrt], QuadraticField(2))),
    (DopeMatrix(["101", "011", "110"]), generic_nodes(3)),
]:
    P = extend(D, nodes)
    full = dope_matrix_of(P, nodes)
    print(f"D =\n{D}\nnodes {nodes}: degree {P.degree}")
    print(f"full dope matrix:\n{full}")
    print("prefix matches:", full.prefix(D.n + 1) == D, "\n")
