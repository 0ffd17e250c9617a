"""Symbolic toolkit for complex orthogonal designs and balanced CODs."""

__version__ = "0.1.0"

from .atomic import adjacency_graph, atomic_components, is_atomic
from .axioms import is_bcod
from .core import Design, VarRef, parse_design, read_design, serialize_design, variable_occurrences
from .equivalence import (
    ColNeg,
    ColPerm,
    RowNeg,
    RowPerm,
    VarConj,
    VarNeg,
    apply_op,
    apply_ops,
    find_bj_rows,
    inverse,
    is_column_restricted,
)
from .generate import base_bcod, construct_bcod
from .gram import TwoByTwoClass, classify_2x2, gram, is_cod
from .patterns import (
    census,
    delta,
    find_complement,
    induce_step,
    left_pattern,
    max_rate_delay_bound,
    nu,
    verify_delay_bound,
    zero_pattern,
)
from .search import SearchConfig, search_min_delay
from .standard import is_standard_form, standardize, to_bj_form

__all__ = [
    "adjacency_graph",
    "apply_op",
    "apply_ops",
    "atomic_components",
    "base_bcod",
    "census",
    "classify_2x2",
    "ColNeg",
    "ColPerm",
    "construct_bcod",
    "delta",
    "Design",
    "find_bj_rows",
    "find_complement",
    "gram",
    "induce_step",
    "inverse",
    "is_atomic",
    "is_bcod",
    "is_cod",
    "is_column_restricted",
    "is_standard_form",
    "left_pattern",
    "max_rate_delay_bound",
    "nu",
    "parse_design",
    "read_design",
    "RowNeg",
    "RowPerm",
    "search_min_delay",
    "SearchConfig",
    "serialize_design",
    "standardize",
    "to_bj_form",
    "TwoByTwoClass",
    "VarConj",
    "variable_occurrences",
    "VarNeg",
    "VarRef",
    "verify_delay_bound",
    "zero_pattern",
]
