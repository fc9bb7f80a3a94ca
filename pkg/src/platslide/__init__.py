"""Meridian words of genus-2 crystallization codes."""

__version__ = "0.1.0"

from ._backend import BACKEND
from .colored_graph import ColoredGraph, build_graph, count_residues, heegaard_genus, is_admissible
from .diagram import CaseKind, RichDiagram, build_red_arcs, classify_case
from .curves import Curve, trace_curves
from .tuple_core import SixTuple, parse_tuple, validate_conditions
from .words import ConditionError, InadmissibleError, Word, chi_words, compute, free_reduce

__all__ = [
    "BACKEND",
    "CaseKind",
    "ColoredGraph",
    "ConditionError",
    "Curve",
    "InadmissibleError",
    "RichDiagram",
    "SixTuple",
    "Word",
    "__version__",
    "build_graph",
    "build_red_arcs",
    "chi_words",
    "classify_case",
    "compute",
    "count_residues",
    "free_reduce",
    "heegaard_genus",
    "is_admissible",
    "parse_tuple",
    "trace_curves",
    "validate_conditions",
]
