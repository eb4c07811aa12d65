"""Series solutions and verification oracles for two inverse source
problems of degenerate time-fractional diffusion equations."""

from .backend import BACKEND_NAME
from .errors import AccuracyError, DomainError, ExpressionError, FracinvError
from .specfun import (
    EvalResult,
    GenMLParams,
    MLParams,
    caputo_ode_solution,
    gamma_fn,
    gen_mittag_leffler,
    mittag_leffler,
    mittag_leffler_deriv,
)

__version__ = "0.1.0"

__all__ = [
    "AccuracyError",
    "BACKEND_NAME",
    "DomainError",
    "EvalResult",
    "ExpressionError",
    "FracinvError",
    "GenMLParams",
    "MLParams",
    "caputo_ode_solution",
    "gamma_fn",
    "gen_mittag_leffler",
    "mittag_leffler",
    "mittag_leffler_deriv",
    "__version__",
]
