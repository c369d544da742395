"""Certify Jacobian non-vanishing for trace-polynomial families of transitive permutation groups."""
from .boundsearch import BoundReport, certify_group, exponent_general, feasibility, fiber_bound, schmidt_exponent, select_subset
from .groups import GroupSpec, build_coset_system, build_group, example1_spec, example2_spec
from .jaccert import (
    JacobianMatrix,
    NonvanishingCertificate,
    certify_nonvanishing,
    integer_determinant,
    jacobian,
    reverify,
    symbolic_determinant,
)
from .permgroup import (
    CosetSystem,
    Permutation,
    PermutationGroup,
    close_group,
    coset_system,
    left_action_lambda,
    malle_constant,
    normalizer,
    parse_permutation,
    point_stabilizer,
    right_action_pi,
)
from .polyring import SparsePolynomial
from .tracefam import ExponentVector, build_family, check_linear_independence, trace_polynomial

__version__ = "0.1.0"
