"""Jacobi functions of the first and second kind for complex degree.

Evaluation via Gauss hypergeometric representations and integral
representations, plus a catalog of derivative / multi-derivative /
multi-integral identities verified against independent quadrature and
contour oracles.
"""

from . import errors
from .hypergeom import HypParams, SeriesValue, gauss2f1, ohyp2f1, phyp, reverse_finite_series
from .identity_engine import (
    IdentityCheck,
    IdentityReport,
    audit_constant,
    eval_identity_sides,
    list_identities,
    ode_residual,
    rodrigues_jacobi,
    verify_identity,
)
from .jacobi_first import (
    JacobiParams,
    Representation,
    jacobi_p,
    jacobi_p_at_one,
    jacobi_polynomial,
    taylor_section,
)
from .jacobi_second import (
    QIntegralSpec,
    jacobi_q,
    jacobi_q_integral,
    jacobi_q_integral_shifted,
    neumann_q,
)
from .quadrature import (
    Cut,
    QuadratureRule,
    RepeatedIntegralSpec,
    contour_derivative,
    gauss_jacobi_rule,
    integrate_finite,
    integrate_to_infinity,
    repeated_integral,
)
from .result import EvalResult
from .scalar_kernel import binomial, gamma, pochhammer, pochhammer_product, reciprocal_gamma

__all__ = [
    "errors",
    "EvalResult",
    "HypParams",
    "SeriesValue",
    "gauss2f1",
    "ohyp2f1",
    "phyp",
    "reverse_finite_series",
    "IdentityCheck",
    "IdentityReport",
    "audit_constant",
    "eval_identity_sides",
    "list_identities",
    "ode_residual",
    "rodrigues_jacobi",
    "verify_identity",
    "JacobiParams",
    "Representation",
    "jacobi_p",
    "jacobi_p_at_one",
    "jacobi_polynomial",
    "taylor_section",
    "QIntegralSpec",
    "jacobi_q",
    "jacobi_q_integral",
    "jacobi_q_integral_shifted",
    "neumann_q",
    "Cut",
    "QuadratureRule",
    "RepeatedIntegralSpec",
    "contour_derivative",
    "gauss_jacobi_rule",
    "integrate_finite",
    "integrate_to_infinity",
    "repeated_integral",
    "binomial",
    "gamma",
    "pochhammer",
    "pochhammer_product",
    "reciprocal_gamma",
]

__version__ = "0.1.0"
