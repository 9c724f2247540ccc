"""Weierstrass p, p', sigma, and zeta on the hexagonal lattice.

The lattice is {m*varpi + n*e^{i pi/3}*varpi} with invariants g2 = 0,
g3 = 1 (the equianharmonic case). Evaluation reduces arguments to the
cell, sums a Laurent series in the disk where it converges fast, and
walks back out through the duplication map; truncated lattice sums serve
as independent oracles. The identities module turns every function law
into a seeded residual check.
"""

from ._backend import BACKEND
from .analysis import (
    RootResult,
    RootTarget,
    SumResult,
    eisenstein_cubic_sum,
    half_argument_candidates,
    newton_refine,
    third_period_integral,
    zeros_of_dp_shifted,
    zeros_of_p,
)
from .constants import (
    Constants,
    get_constants,
    varpi_from_gamma,
    varpi_from_quadrature,
)
from .errors import (
    DerivativeVanishes,
    HexwpError,
    NearPoleOfF,
    NearZeroDenominator,
    NoConvergence,
    NonConvergence,
    PoleProximity,
    SigmaOverflow,
    UnknownSuite,
)
from .fermat import CurvePoint, baker_pair, f, f_prime, uniformize
from .identities import CheckReport, CheckResult, report_to_json, run_suite
from .wfun import (
    EvalOptions,
    p,
    p_doubleprime,
    p_oracle,
    p_pair,
    p_prime,
    p_prime_oracle,
    sigma,
    sigma_oracle,
    zeta,
    zeta_oracle,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CheckReport",
    "CheckResult",
    "Constants",
    "CurvePoint",
    "DerivativeVanishes",
    "EvalOptions",
    "HexwpError",
    "NearPoleOfF",
    "NearZeroDenominator",
    "NoConvergence",
    "NonConvergence",
    "PoleProximity",
    "RootResult",
    "RootTarget",
    "SigmaOverflow",
    "SumResult",
    "UnknownSuite",
    "baker_pair",
    "eisenstein_cubic_sum",
    "f",
    "f_prime",
    "get_constants",
    "half_argument_candidates",
    "newton_refine",
    "p",
    "p_doubleprime",
    "p_oracle",
    "p_pair",
    "p_prime",
    "p_prime_oracle",
    "report_to_json",
    "run_suite",
    "sigma",
    "sigma_oracle",
    "third_period_integral",
    "uniformize",
    "varpi_from_gamma",
    "varpi_from_quadrature",
    "zeros_of_dp_shifted",
    "zeros_of_p",
    "zeta",
    "zeta_oracle",
    "__version__",
]
