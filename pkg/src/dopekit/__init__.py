"""Exact computations with dope matrices of polynomials."""

from .dope import (
    DopeMatrix,
    MultiplicityMatrix,
    NotDopeError,
    SignedDopeMatrix,
    check_conditions,
    condition_T,
    dope_matrix_of,
    extend,
    gv_nonsingular,
    multiplicity_matrix_of,
    polya_poised,
    signed_dope_matrix_of,
    witness_general,
    witness_two_row,
)
from .enumeration import (
    brute_force_dope,
    check_conjecture_8_1,
    compare_to_generic,
    count_condition_T,
    count_dope,
    enumerate_dope,
    enumerate_generic,
    generic_nodes,
)
from .forms import NodeTuple, build_forms, closure
from .linalg import ExactMatrix, det, nullspace, rank, solve
from .matroid import MatroidView
from .poly import Poly
from .scalars import QQ, GenericField, QuadraticField

__all__ = [
    "DopeMatrix", "MultiplicityMatrix", "NotDopeError", "SignedDopeMatrix",
    "check_conditions", "condition_T", "dope_matrix_of", "extend", "gv_nonsingular",
    "multiplicity_matrix_of", "polya_poised", "signed_dope_matrix_of",
    "witness_general", "witness_two_row",
    "brute_force_dope", "check_conjecture_8_1", "compare_to_generic", "count_condition_T",
    "count_dope", "enumerate_dope", "enumerate_generic", "generic_nodes",
    "NodeTuple", "build_forms", "closure",
    "ExactMatrix", "det", "nullspace", "rank", "solve",
    "MatroidView", "Poly", "QQ", "GenericField", "QuadraticField",
]
