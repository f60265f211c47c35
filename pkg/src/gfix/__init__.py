"""Fixed-point certification on G-metric type spaces."""

__version__ = "0.1.0"

from .analysis import (
    Verdict,
    check_common_condition,
    check_local_contractive,
    check_phi_condition,
    check_power_condition,
    check_sequential_condition,
    iterated_lipschitz,
    lipschitz_constant,
    minimal_uniform_lambda,
)
from .bounds import bound_lambda_seq, bound_phi_an, bound_seq_an, bound_ulc
from .chains import Chain, ChainabilityVerdict, chainability_threshold, find_chain, is_chainable
from .coefficients import SQRT, CoefficientSeq, CoefficientTensor, PhiFunction
from .gspace import (
    AnalyticGSpace,
    AxiomReport,
    FiniteGSpace,
    derived_metric,
    diameter,
    discrete,
    g_eval,
    make_example,
    three_point,
    two_point,
    validate_axioms,
)
from .maps import AffineMap, TabulatedMap, apply_map, constant, identity, tabulated, three_point_map
from .oracle import OracleResult, brute_common_fixed_points, brute_fixed_points, brute_lipschitz, verify_cauchy
from .sequences import (
    LambdaCertificate,
    common_coefficient_check,
    lambda_sequence_check,
    product_series_check,
    series_converges,
)
from .solver import Certificate, IterationTrace, TheoremId, certify, common_fixed_point, picard
