from .closure import ClosureSet, closure_set
from .gl import FragmentError, GLProof, gl_countermodel, gl_prove
from .saturate import saturate
from .search import SearchConfig, SearchOutcome, countermodel_search, gl_relations, search
from .verdict import NonTheorem, Theorem, Unknown, Verdict, decide, decide_gl

__all__ = [
    "ClosureSet", "closure_set",
    "FragmentError", "GLProof", "gl_prove", "gl_countermodel",
    "saturate",
    "SearchConfig", "SearchOutcome", "countermodel_search", "search", "gl_relations",
    "Theorem", "NonTheorem", "Unknown", "Verdict", "decide", "decide_gl",
]
