"""Hamiltonicity of norm graphs: oracles, reduction, cycle-set extraction and survey."""

from ._core import (
    Graph,
    GraphError,
    are_isomorphic,
    complete,
    complete_bipartite,
    cycle,
    enumerate_connected,
    is_hamiltonian,
    is_homeomorphic,
    is_norm,
    petersen,
    reduce,
    survey_json,
    theorem_check,
)

__all__ = [
    "Graph",
    "GraphError",
    "are_isomorphic",
    "complete",
    "complete_bipartite",
    "cycle",
    "enumerate_connected",
    "is_hamiltonian",
    "is_homeomorphic",
    "is_norm",
    "petersen",
    "reduce",
    "survey_json",
    "theorem_check",
]
