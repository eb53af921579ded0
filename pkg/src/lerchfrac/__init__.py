"""Lerch zeta function, Riemann-Liouville/Weyl differintegrals and numerical
verification of their fractional-calculus identities."""

from .complexfn import cgamma, cpow_principal, gamma_ratio_shift, gbinom, rgamma
from .errors import (ConvergenceError, DecayViolation, DomainError, LerchFracError,
                     NonConvergence, PoleError, RadiusError, SlowDecayWarning)
from .lerch import (ParameterPoint, Regime, SeriesPolicy, hurwitz, lerch_series,
                    lerch_t_spectral, lerch_x_partial, riemann)
from .fraccalc import (CauchyCircleConfig, Engine, ExpSum, QuadratureConfig, Side,
                       cauchy_deriv, frac_composed, frac_exp, frac_expsum, frac_quadrature,
                       weyl_x_fractional)
from .identities import IdentityReport, LeibnizWindow

__version__ = "0.1.0"

__all__ = [
    "cgamma", "rgamma", "cpow_principal", "gbinom", "gamma_ratio_shift",
    "LerchFracError", "DomainError", "PoleError", "ConvergenceError", "NonConvergence",
    "DecayViolation", "RadiusError", "SlowDecayWarning",
    "ParameterPoint", "Regime", "SeriesPolicy", "lerch_series", "hurwitz", "riemann",
    "lerch_t_spectral", "lerch_x_partial",
    "Side", "Engine", "ExpSum", "QuadratureConfig", "CauchyCircleConfig", "frac_exp",
    "frac_expsum", "frac_quadrature", "frac_composed", "cauchy_deriv", "weyl_x_fractional",
    "IdentityReport", "LeibnizWindow",
]
