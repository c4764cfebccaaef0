"""Linear hexagonal chains L_n and hexagonal cylinders R_n."""

from .cylinder import resistance_cylinder
from .invariants import (
    Extremal,
    Limit,
    asymptotic_limits,
    extremal_pairs,
    kirchhoff_cylinder,
    kirchhoff_linear,
    kirchhoff_pair_sum,
    resistance,
)
from .k4 import K4Equivalent, k4_equivalent
from .labels import (
    ChainKind,
    LabelError,
    VertexLabel,
    automorphisms,
    build_chain,
    build_extended_linear,
    cylinder,
    label_pairs,
    linear,
)
from .linear import resistance_linear
from .sequences import seq_A, seq_B, seq_C, seq_a, seq_b, seq_c, seq_t, seq_x, seq_y, seq_z

__all__ = [
    "ChainKind",
    "Extremal",
    "K4Equivalent",
    "LabelError",
    "Limit",
    "VertexLabel",
    "asymptotic_limits",
    "automorphisms",
    "build_chain",
    "build_extended_linear",
    "cylinder",
    "extremal_pairs",
    "k4_equivalent",
    "kirchhoff_cylinder",
    "kirchhoff_linear",
    "kirchhoff_pair_sum",
    "label_pairs",
    "linear",
    "resistance",
    "resistance_cylinder",
    "resistance_linear",
    "seq_A",
    "seq_B",
    "seq_C",
    "seq_a",
    "seq_b",
    "seq_c",
    "seq_t",
    "seq_x",
    "seq_y",
    "seq_z",
]
