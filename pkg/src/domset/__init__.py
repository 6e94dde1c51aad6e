"""Exact domination analysis in subset-inclusion bipartite graphs G_{l,k}."""

from ._accel import BACKEND
from .bounds import alpha_star, gamma32, lemma2_rhs, new_upper, table1
from .core import SetFamily, VertexSet, binomial, colex_rank, colex_unrank, shadow
from .graphs import DomPair, Graph, GraphCertificate, certificate, f_value, isomorphic
from .hypergraph import (
    KGraph,
    cliques,
    dompair_from_wellcovered,
    is_well_covered,
    verify_dominating,
    verify_independent,
    wellcovered_from_dompair,
)
from .solver import SolveResult, solve

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "DomPair",
    "Graph",
    "GraphCertificate",
    "KGraph",
    "SetFamily",
    "SolveResult",
    "VertexSet",
    "alpha_star",
    "binomial",
    "certificate",
    "cliques",
    "colex_rank",
    "colex_unrank",
    "dompair_from_wellcovered",
    "f_value",
    "gamma32",
    "is_well_covered",
    "isomorphic",
    "lemma2_rhs",
    "new_upper",
    "shadow",
    "solve",
    "table1",
    "verify_dominating",
    "verify_independent",
    "wellcovered_from_dompair",
    "__version__",
]
