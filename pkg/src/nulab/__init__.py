"""nulab: exact maximum k-edge-colorable subgraph computations.

Computes nu_k(G), the resistance r3(G) = |E| - nu_3(G), the 2-factor
statistic o(G) and related structural quantities for small multigraphs,
constructs the named tight example families, and verifies inequalities
between these quantities in exact rational arithmetic.
"""

from .exact import ColorClasses, NuResult, nu_k, resistance_r3
from .graph import MultiGraph, StructureFlags, build
from .profiling import compute_profile
from .rules import GraphProfile, RuleReport, evaluate_all, hunt

__version__ = "0.1.0"

__all__ = [
    "ColorClasses",
    "GraphProfile",
    "MultiGraph",
    "NuResult",
    "RuleReport",
    "StructureFlags",
    "build",
    "compute_profile",
    "evaluate_all",
    "hunt",
    "nu_k",
    "resistance_r3",
    "__version__",
]
