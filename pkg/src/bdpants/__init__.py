"""Coordinates of the Fuchsian locus of the rank-n Hitchin component of
a hyperbolic pair of pants, computed two independent ways.

The boundary lengths (or the rational parameter triple behind them)
determine a Fuchsian representation; embedding it by the symmetric
power gives a point of the rank-n Hitchin component, whose
Bonahon-Dreyer coordinates this package evaluates both from the
definitions (wedge determinants of boundary flags) and from explicit
closed-form binomial determinants, checking that the two agree exactly
over arbitrary-precision rationals.
"""

from .coords import (
    CoordinateVector,
    PositivityViolationError,
    assemble_phi,
    binom_ext,
    boundary_sum_R,
    polytope_check,
    shearing_invariant_closed,
    shearing_invariant_generic,
    tau_index_tuples,
    triangle_invariant_closed,
    triangle_invariant_generic,
)
from .flags import (
    DegenerateFlagsError,
    Flag,
    double_ratio_exp,
    flags_equal,
    is_generic,
    triple_ratio_exp,
    wedge_det,
)
from .pants import (
    BOUNDARIES,
    BOUNDARY_LEAVES,
    LEAVES,
    TRIANGLES,
    DomainError,
    PantsLengths,
    PantsParams,
    PantsRep,
    ProjPoint,
    SL2Mat,
    boundary_matrix,
    build_rep,
    check_domain,
    fixed_points,
    leaf_quadruple,
    lengths_from_params,
    mobius_apply,
    params_from_lengths,
    triangle_vertices,
    validate_params,
)
from .scalars import (
    MixedBackendError,
    Scalar,
    exact_sqrt,
    log_to_float,
    parse_scalar,
    scalar_str,
)
from .veronese import eigen_lengths, flag_curve, stable_flag, sym_power
from .verify import VerifyConfig, all_passed, run_verification

__version__ = "0.1.0"
