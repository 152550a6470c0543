"""Two nodes: the tail condition decides everything.

A 2 x (n+1) 0/1 matrix is a dope matrix exactly when every block of the last
k+1 columns holds at most k ones.  For each such matrix we can write down a
polynomial realising it, and the counts come out as binomial coefficients.

Run: python demos/02_two_rows.py
"""

from math import comb

from dopekit import DopeMatrix, NodeTuple, condition_T, dope_matrix_of, witness_two_row
from dopekit.counting import count_C, count_two_row_up_to_swap
from dopekit.dope import all_matrices, tail_violation

D = DopeMatrix(["01000", "10100"])
P = witness_two_row(D)
print(D, "\nrealised by", P)
print("check:", dope_matrix_of(P, NodeTuple([0, 1])) == D)

# Any other pair of nodes works as well; the witness is moved affinely.
nodes = NodeTuple([3, -7])
Q = witness_two_row(D, nodes)
print("at (3, -7):", Q, dope_matrix_of(Q, nodes) == D)

bad = DopeMatrix(["00010", "00010"])
print(f"\n{bad}\nfails the tail condition at k={tail_violation(bad)}\n")

print(" n  dope  binom(2n+1,n)  up-to-swap   by number of ones")
for n in range(1, 8):
    total = sum(1 for M in all_matrices(2, n) if condition_T(M))
    print(f"{n:2d} {total:5d} {comb(2 * n + 1, n):14d} {count_two_row_up_to_swap(n):11d}  ",
          [count_C(n, t) for t in range(n + 1)])
