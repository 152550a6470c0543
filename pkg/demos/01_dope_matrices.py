"""Which derivatives of a polynomial vanish at which points?

Run: python demos/01_dope_matrices.py
"""

from dopekit import DopeMatrix, NodeTuple, Poly, QuadraticField, check_conditions
from dopekit.dope import multiplicity_matrix_of, signed_dope_matrix_of, dope_matrix_of

x = Poly.x()

# P = x^2 - 1 at the nodes 0 and 1: P'(0) = 0 and P(1) = 0, nothing else.
P = x ** 2 - 1
nodes = NodeTuple([0, 1])
print("P =", P)
print(dope_matrix_of(P, nodes), end="\n\n")

# A triple root at 1 shows up as a run of ones; the multiplicity matrix
# records the run lengths, i.e. the order of vanishing of each derivative.
P = (x - 1) ** 3 * (x + 2)
nodes = NodeTuple([1, -2, 0])
print("P =", P)
print(dope_matrix_of(P, nodes))
print("multiplicities:")
print(multiplicity_matrix_of(P, nodes))
print("conditions:", check_conditions(multiplicity_matrix_of(P, nodes)), end="\n\n")

# Over Q(sqrt 2) arithmetic stays exact, and signs are decided exactly too.
K = QuadraticField(2)
P = Poly([K(-2), K(0), K(1)], K)  # x^2 - 2
nodes = NodeTuple([K.sqrt, -K.sqrt, K(1)], K)
print("P =", P, "at", nodes)
print(signed_dope_matrix_of(P, nodes))

# JSON form of a dope matrix
print(DopeMatrix(["0101", "0010"]).to_json())
