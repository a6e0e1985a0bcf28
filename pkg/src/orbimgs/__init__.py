"""Maximal green sequences for exchange matrices of triangulated orbifolds."""

from ._backend import BACKEND
from .diagrams import (
    OrbifoldParams,
    Rejection,
    build_diagram,
    rank3_example,
    validate_params,
    vertex_count,
)
from .errors import OrbiError, UnsupportedParams
from .mutation import (
    ExchangeMatrix,
    FramedSeed,
    VertexColor,
    diagram_mutate,
    diagram_view,
    frame,
    matrix_from_arrows,
    mutate_at,
)
from .search import SearchConfig, enumerate_all, search_mgs
from .sequences import MutationSequence, delta
from .verify import StateAssertion, apply_sequence, assert_state, render_trace, verify_mgs

__all__ = [
    "BACKEND",
    "ExchangeMatrix",
    "FramedSeed",
    "MutationSequence",
    "OrbiError",
    "OrbifoldParams",
    "Rejection",
    "SearchConfig",
    "StateAssertion",
    "UnsupportedParams",
    "VertexColor",
    "apply_sequence",
    "assert_state",
    "build_diagram",
    "delta",
    "diagram_mutate",
    "diagram_view",
    "enumerate_all",
    "frame",
    "matrix_from_arrows",
    "mutate_at",
    "rank3_example",
    "render_trace",
    "search_mgs",
    "validate_params",
    "verify_mgs",
    "vertex_count",
]
