"""Exception and warning classes raised by lerchfrac."""


class LerchFracError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(LerchFracError, ValueError):
    """Arguments fall outside the region where an operation is defined."""


class PoleError(DomainError):
    """Argument sits on (or within the pole distance of) a gamma pole."""


class ConvergenceError(LerchFracError, ArithmeticError):
    """A series ran out of terms before meeting its tolerance."""


class NonConvergence(ConvergenceError):
    """Quadrature refinement stalled before reaching its target."""


class DecayViolation(LerchFracError, ArithmeticError):
    """Integrand on a semi-infinite ray does not decay."""


class RadiusError(DomainError):
    """Cauchy circle reaches a known singularity."""


class SlowDecayWarning(UserWarning):
    """Integrand decays only polynomially with a small exponent."""
