"""Permutation codes, closed systems and Veech groups of square-tiled surfaces."""
from __future__ import annotations

from .closed_system import ClosedSystem, RingDiagram, closed_system, ring_diagram
from .codes import (
    CodePair,
    CylinderDecomposition,
    code,
    code_left,
    code_left_matrix,
    code_right,
    cut,
    cylinders,
    is_scc_at,
    scc_extension,
    scc_progression,
)
from .errors import (
    BoundExceeded,
    DegreeMismatch,
    DisconnectedSurface,
    HypothesisError,
    InvariantBreach,
    NotNeighbors,
    OrigamiError,
    ParseError,
)
from .farey import CFrac, I, L, Mat2, R, ROT, Slope, cf_value, farey_add, farey_pairs
from .kernels import BACKEND
from .oracle import trace_oracle
from .orbit import OrbitState, orbit_bfs_oracle, s_plus, veech_index
from .perm import Perm, canonical_pair, simultaneous_conjugator
from .surface import Surface, eierlegende_wollmilchsau, enumerate_surfaces
from .veech import (
    CodeGroupElement,
    code_group_op,
    group_G_X,
    group_S_X,
    rotated_code_test,
    veech_contains,
    veech_contains_positive,
)

__version__ = "0.1.0"

__all__ = [
    "ClosedSystem",
    "RingDiagram",
    "closed_system",
    "ring_diagram",
    "CodePair",
    "CylinderDecomposition",
    "code",
    "code_left",
    "code_left_matrix",
    "code_right",
    "cut",
    "cylinders",
    "is_scc_at",
    "scc_extension",
    "scc_progression",
    "BoundExceeded",
    "DegreeMismatch",
    "DisconnectedSurface",
    "HypothesisError",
    "InvariantBreach",
    "NotNeighbors",
    "OrigamiError",
    "ParseError",
    "CFrac",
    "I",
    "L",
    "Mat2",
    "R",
    "ROT",
    "Slope",
    "cf_value",
    "farey_add",
    "farey_pairs",
    "BACKEND",
    "trace_oracle",
    "OrbitState",
    "orbit_bfs_oracle",
    "s_plus",
    "veech_index",
    "Perm",
    "canonical_pair",
    "simultaneous_conjugator",
    "Surface",
    "eierlegende_wollmilchsau",
    "enumerate_surfaces",
    "CodeGroupElement",
    "code_group_op",
    "group_G_X",
    "group_S_X",
    "rotated_code_test",
    "veech_contains",
    "veech_contains_positive",
    "__version__",
]
