"""Exact invariants of fence quivers.

Littlewood-Richardson data, graded dimensions of parabolic invariant
algebras on quiver representation spaces, and semistability checks, each
computable along more than one independent route.
"""

from .errors import FencekitError, IncompatibleError, ResourceBoundError
from .young import Composition, Partition, block_compatible, conjugate, diagram_from_exponents, weight_of_diagram
from .lr import branch_multiplicity, gl_dim, lr_coefficient, multi_lr, tensor_expand
from .quiver import (
    FenceQuiver,
    FiniteFieldRep,
    Linearization,
    ParabolicData,
    ambient_dim,
    check_compatibility,
    check_parabolic_compatibility,
    exhaustive_stability,
    grassmannian_stability,
    king_pairing,
)
from .hilbert import (
    ComponentLabel,
    cauchy_check,
    component_dim,
    gm_table,
    section_dim_heads,
    section_dim_tails,
    transfer_check,
)

__version__ = "0.1.0"
