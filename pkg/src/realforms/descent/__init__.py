from .constants import printed_A1, printed_A2, printed_C, printed_C_bar
from .construct import (
    ChartData,
    RealStructureSpec,
    bezout_for,
    build_A,
    build_D,
    build_J,
    build_M,
    glued_structure,
    ideal_generators,
    printed_J,
    segre_components,
    verify_gluing,
    verify_involution,
    verify_n0_equivalence,
    verify_segre_quadric,
    verify_stable_example,
    verify_transition,
)
from .matrix import Chart, RingMatrix

__all__ = [
    "Chart",
    "ChartData",
    "RealStructureSpec",
    "RingMatrix",
    "bezout_for",
    "build_A",
    "build_D",
    "build_J",
    "build_M",
    "glued_structure",
    "ideal_generators",
    "printed_A1",
    "printed_A2",
    "printed_C",
    "printed_C_bar",
    "printed_J",
    "segre_components",
    "verify_gluing",
    "verify_involution",
    "verify_n0_equivalence",
    "verify_segre_quadric",
    "verify_stable_example",
    "verify_transition",
]
