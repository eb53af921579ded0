"""Complex special-function primitives.

Everything here works on plain Python ``complex`` scalars.  The gamma function
uses the Lanczos approximation with Godfrey's coefficient set (g = 607/128,
15 terms), evaluated in logarithmic form so that large arguments do not
overflow the intermediate power.  Measured relative error is below 1e-14 on
Re(z) >= 1/2, |z| <= 50; the left half-plane goes through the reflection
formula.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import DomainError, PoleError

__all__ = [
    "EPS_POLE",
    "BranchConvention",
    "PRINCIPAL",
    "principal_arg",
    "sinpi",
    "cgamma",
    "rgamma",
    "lgamma",
    "cpow_principal",
    "gbinom",
    "gamma_ratio_shift",
    "is_nonpositive_integer",
]

EPS_POLE = 1e-12

_LANCZOS_G = 607.0 / 128.0
_LANCZOS_COEF = [
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
]
_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)
_LOG_PI = math.log(math.pi)
# beyond this modulus the direct gamma product in gbinom may overflow
_DIRECT_LIMIT = 40.0


@dataclass(frozen=True)
class BranchConvention:
    """Principal branch policy: arguments live in (-pi, pi]."""

    lower: float = -math.pi
    upper: float = math.pi

    def arg(self, z: complex) -> float:
        return principal_arg(z)

    def log(self, z: complex) -> complex:
        z = complex(z)
        return complex(math.log(abs(z)), principal_arg(z))


PRINCIPAL = BranchConvention()


def principal_arg(z: complex) -> float:
    """Argument of ``z`` in (-pi, pi]; negative reals (either zero sign) map to +pi."""
    z = complex(z)
    a = math.atan2(z.imag, z.real)
    if a == -math.pi:
        return math.pi
    return a


def is_nonpositive_integer(z: complex, eps: float = EPS_POLE) -> bool:
    z = complex(z)
    if z.real > 0.5:
        return False
    n = round(z.real)
    return abs(z - n) < eps


def sinpi(z: complex) -> complex:
    """sin(pi*z) with the real part reduced exactly before scaling by pi."""
    z = complex(z)
    n = round(z.real / 2.0) * 2.0
    return cmath.sin(math.pi * complex(z.real - n, z.imag))


def _lanczos_log(z: complex) -> complex:
    # log Gamma(z) for Re(z) >= 1/2 (some branch of the log; exp() is exact)
    zm = z - 1.0
    coef = _LANCZOS_COEF
    acc = complex(coef[0])
    for k in range(1, len(coef)):
        acc += coef[k] / (zm + k)
    t = zm + _LANCZOS_G + 0.5
    return _HALF_LOG_2PI + (zm + 0.5) * cmath.log(t) - t + cmath.log(acc)


def lgamma(z: complex) -> complex:
    """A logarithm of Gamma(z): ``exp(lgamma(z)) == cgamma(z)``.

    The imaginary part is not the continuous branch of log-gamma; it is
    only guaranteed to be some valid logarithm.
    """
    z = complex(z)
    if is_nonpositive_integer(z):
        raise PoleError(f"gamma has a pole at {z}")
    if z.real >= 0.5:
        return _lanczos_log(z)
    return _LOG_PI - cmath.log(sinpi(z)) - _lanczos_log(1.0 - z)


def cgamma(z: complex) -> complex:
    """Complex gamma function.

    Raises
    ------
    PoleError
        If ``z`` is within ``EPS_POLE`` of a nonpositive integer.
    """
    z = complex(z)
    if is_nonpositive_integer(z):
        raise PoleError(f"gamma has a pole at {z}")
    if z.real >= 0.5:
        return cmath.exp(_lanczos_log(z))
    return math.pi / (sinpi(z) * cmath.exp(_lanczos_log(1.0 - z)))


def rgamma(z: complex) -> complex:
    """Reciprocal gamma 1/Gamma(z); exactly zero at the nonpositive integers."""
    z = complex(z)
    if is_nonpositive_integer(z):
        return 0j
    if z.real >= 0.5:
        return cmath.exp(-_lanczos_log(z))
    return sinpi(z) * cmath.exp(_lanczos_log(1.0 - z)) / math.pi


def cpow_principal(base: complex, exponent: complex) -> complex:
    """``base**exponent`` on the principal branch, Arg in (-pi, pi].

    ``0**a`` is 0 for Re(a) > 0 and a DomainError otherwise (including a = 0).
    """
    base = complex(base)
    exponent = complex(exponent)
    if base == 0:
        if exponent.real > 0:
            return 0j
        raise DomainError(f"0 raised to {exponent} is undefined")
    log_base = complex(math.log(abs(base)), principal_arg(base))
    return cmath.exp(exponent * log_base)


def gbinom(alpha: complex, z: complex) -> complex:
    """Generalized binomial coefficient Gamma(a+1) / (Gamma(z+1) Gamma(a-z+1)).

    Exactly zero whenever ``z+1`` or ``alpha-z+1`` is a nonpositive integer.
    """
    alpha = complex(alpha)
    z = complex(z)
    if is_nonpositive_integer(alpha + 1.0):
        raise PoleError(f"binomial coefficient undefined for alpha = {alpha}")
    if is_nonpositive_integer(z + 1.0) or is_nonpositive_integer(alpha - z + 1.0):
        return 0j
    if max(abs(alpha), abs(z), abs(alpha - z)) <= _DIRECT_LIMIT:
        return cgamma(alpha + 1.0) * rgamma(z + 1.0) * rgamma(alpha - z + 1.0)
    return cmath.exp(lgamma(alpha + 1.0) - lgamma(z + 1.0) - lgamma(alpha - z + 1.0))


def gamma_ratio_shift(a: complex, k: int) -> complex:
    """Gamma(a)/Gamma(a-k) as the finite product (a-1)(a-2)...(a-k)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    a = complex(a)
    out = 1 + 0j
    for j in range(1, k + 1):
        out = out * (a - j)
    return out
