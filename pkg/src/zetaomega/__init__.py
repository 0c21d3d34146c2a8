"""Zeta, polygamma and Omega: special functions, identity checks and a CLI.

The numerical kernels are pure Python on top of :mod:`math`, :mod:`cmath`
and NumPy; nothing here depends on an external special-function library.
"""
from .differentiation import (ContourSpec, DerivativeValue, cauchy_derivative,
                              log_sin_derivative, log_zeta_ratio,
                              log_zeta_ratio_derivative, taylor_coefficients,
                              trig_log_derivative)
from .errors import (DomainError, EmptyGrid, InadmissiblePoint, NearZetaZero,
                     NonConvergent, NonPositiveIntegerShift, PoleAtInteger, PoleAtNode,
                     PoleAtNonPositiveInteger, PoleAtOne, SingularityInDisk,
                     UnknownIdentity, UnsupportedMode, ZetaOmegaError)
from .identities import (DEFAULT_COMPLEX_GRID, DEFAULT_REAL_GRID, CheckResult, GridSpec,
                         IdentitySpec, VerifyReport, check_identity, get_identity,
                         is_admissible, list_identities, quarter_point_sign_report,
                         verify_grid)
from .numerics import (SeriesEstimate, accelerate_alternating, bilateral_power_sum,
                       compensated_sum)
from .omega import (OmegaResult, golden_quartet, omega, omega_all, omega_beta_relation,
                    omega_closed_form, omega_functional_checks, omega_imaginary_series)
from .special import (DEFAULT_CONTEXT, EvalContext, FunctionValue, dirichlet_beta,
                      dirichlet_eta, evaluate, gamma, hurwitz_zeta, ln_gamma, polygamma,
                      riemann_zeta)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
