"""
coxorder: weak order, 2-closure and biclosed sets for Coxeter groups
in their geometric representation, computed exactly.
"""

from coxorder.scalars import Scalar
from coxorder.coxeter import CoxeterSystem, GroupElement, named, dihedral, parse_matrix_file
from coxorder.closures import closure, closure_set, is_closed, is_biclosed, is_coclosed
from coxorder.weak import join, meet, leq, NoJoin

__all__ = ["Scalar", "CoxeterSystem", "GroupElement", "named", "dihedral",
    "parse_matrix_file", "closure", "closure_set", "is_closed", "is_biclosed",
    "is_coclosed", "join", "meet", "leq", "NoJoin"]

__version__ = "0.1.0"
