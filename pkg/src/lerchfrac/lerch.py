"""Direct-series evaluation of the Lerch, Hurwitz and Riemann zeta functions.

L(t, x, s) = sum_{m>=0} (m+x)^(-s) exp(2 pi i t m)

Two regimes are supported:

* geometric, Im(t) > 0: the exponential factor decays like q**m with
  q = exp(-2 pi Im t), so the series converges for every s.  Truncation uses
  a rigorous ratio bound on the tail (see ``_geometric_tail``).
* boundary, Im(t) = 0 with Re(s) > 1 and Re(x) > 0.  For integer t this is
  the Hurwitz zeta function and is summed with Euler-Maclaurin tail
  correction; for other real t the series is summed directly with an Abel
  summation bound on the tail.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from .complexfn import PRINCIPAL, cpow_principal, principal_arg
from .errors import ConvergenceError, DomainError

__all__ = [
    "Regime",
    "TailBound",
    "ParameterPoint",
    "SeriesPolicy",
    "SeriesResult",
    "lerch_series",
    "lerch_series_scaled",
    "lerch_series_info",
    "hurwitz",
    "riemann",
    "lerch_t_spectral",
    "lerch_t_spectral_info",
    "lerch_x_partial",
    "lerch_series_vec",
]

TWO_PI = 2.0 * math.pi


class Regime(enum.Enum):
    GEOMETRIC = "geometric"
    BOUNDARY = "boundary"
    INVALID = "invalid"


class TailBound(enum.Enum):
    GEOMETRIC = "geometric"
    INTEGRAL = "integral"


def _on_negative_axis(x: complex) -> bool:
    return x.imag == 0 and x.real <= 0


@dataclass(frozen=True)
class ParameterPoint:
    """A (t, x, s) triple for the Lerch zeta function."""

    t: complex
    x: complex
    s: complex

    def __post_init__(self):
        object.__setattr__(self, "t", complex(self.t))
        object.__setattr__(self, "x", complex(self.x))
        object.__setattr__(self, "s", complex(self.s))

    @property
    def regime(self) -> Regime:
        if _on_negative_axis(self.x):
            return Regime.INVALID
        if self.t.imag > 0:
            return Regime.GEOMETRIC
        if self.t.imag == 0 and self.s.real > 1 and self.x.real > 0:
            return Regime.BOUNDARY
        return Regime.INVALID

    def require(self, *allowed: Regime) -> Regime:
        regime = self.regime
        if regime not in allowed:
            raise DomainError(
                f"point (t={self.t}, x={self.x}, s={self.s}) is {regime.value}; "
                f"need {' or '.join(r.value for r in allowed)} ({self._why()})"
            )
        return regime

    def _why(self) -> str:
        if _on_negative_axis(self.x):
            return "x must lie off (-inf, 0]"
        if self.t.imag < 0:
            return "the series diverges for Im(t) < 0"
        if self.t.imag > 0:
            return "geometric regime is Im(t) > 0"
        return "Im(t) = 0 needs Re(s) > 1 and Re(x) > 0"

    def replace(self, **kw) -> "ParameterPoint":
        return ParameterPoint(kw.get("t", self.t), kw.get("x", self.x), kw.get("s", self.s))


@dataclass(frozen=True)
class SeriesPolicy:
    """Truncation control.  ``tail_bound=None`` picks the bound from the regime."""

    rel_tol: float = 1e-12
    max_terms: int = 10**6
    tail_bound: TailBound | None = None

    def __post_init__(self):
        if not self.rel_tol > 0:
            raise ValueError("rel_tol must be positive")
        if self.max_terms < 1:
            raise ValueError("max_terms must be at least 1")


DEFAULT_POLICY = SeriesPolicy()


@dataclass(frozen=True)
class SeriesResult:
    value: complex
    n_terms: int
    tail_bound: float


def _fsum(terms: list[complex]) -> complex:
    return complex(math.fsum(z.real for z in terms), math.fsum(z.imag for z in terms))


def _geometric_tail(M: int, x: complex, s: complex, q: float, power: float = 0.0,
                    power_scale: float = 1.0, log_factor: float = 0.0) -> float:
    """Bound on sum_{m>M} |(m+x)^(-s)| * (power_scale * m**power) * q**m.

    For m > M with Re(M+1+x) > 0, |m+x| increases and arg(m+x) shrinks toward
    zero, so each term is at most the first one times a ratio
    r = q (1 + 1/|M+1+x|)^max(0, -Re s) (1 + 1/(M+1))^max(0, power).
    """
    y = M + 1 + x
    if y.real <= 0:
        return math.inf
    ay = abs(y)
    log_first = (-s.real * math.log(ay) + max(0.0, s.imag * principal_arg(y))
                 + (M + 1) * math.log(q) + log_factor)
    if power:
        log_first += power * math.log(M + 1)
    ratio = q * (1.0 + 1.0 / ay) ** max(0.0, -s.real)
    if power > 0:
        ratio *= (1.0 + 1.0 / (M + 1)) ** power
    if ratio >= 1.0:
        return math.inf
    return power_scale * math.exp(log_first) / (1.0 - ratio)


def _sum_until(term: Callable[[int], complex], tail: Callable[[int], float],
               policy: SeriesPolicy, start: int = 0) -> SeriesResult:
    terms = []
    running = 0j
    for m in range(start, policy.max_terms):
        z = term(m)
        terms.append(z)
        running += z
        bound = tail(m)
        if bound < policy.rel_tol * abs(running):
            return SeriesResult(_fsum(terms), len(terms), bound)
    raise ConvergenceError(
        f"series did not reach rel_tol={policy.rel_tol} within {policy.max_terms} terms"
    )


# Bernoulli numbers B_2, B_4, ... (Akiyama-Tanigawa)
def _bernoulli_even(count: int) -> list[float]:
    n_max = 2 * count
    a = [Fraction(0)] * (n_max + 1)
    out = {}
    for m in range(n_max + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
        out[m] = a[0]
    return [float(out[2 * k]) for k in range(1, count + 1)]


_B2K = _bernoulli_even(40)
_FACT2K = [float(math.factorial(2 * k)) for k in range(1, 41)]


def _hurwitz_em(x: complex, s: complex, policy: SeriesPolicy) -> SeriesResult:
    """Hurwitz zeta by Euler-Maclaurin: direct sum to N, then integral,
    half-term and Bernoulli corrections at N.

    The remainder bound 4 |(s)_{2K}| / (2 pi)^{2K} Re(N+x)^(1-Re s-2K)/(Re s+2K-1)
    is rigorous for real x > 0 and used as an estimate for complex x.
    """
    sigma = s.real
    n = max(10, int(math.ceil(abs(s))) + 5)
    while n < policy.max_terms:
        head = [cpow_principal(m + x, -s) for m in range(n)]
        y = n + x
        tail = [cpow_principal(y, 1.0 - s) / (s - 1.0), 0.5 * cpow_principal(y, -s)]
        total = _fsum(head + tail)
        poch = s  # (s)_{2k-1}
        ypow = cpow_principal(y, -s - 1.0)
        inv_y2 = 1.0 / (y * y)
        log_ry = math.log(y.real)
        for k in range(1, len(_B2K) + 1):
            corr = _B2K[k - 1] / _FACT2K[k - 1] * poch * ypow
            tail.append(corr)
            # (s)_{2k}
            poch_even = poch * (s + 2 * k - 1)
            bound = (4.0 * abs(poch_even) / TWO_PI ** (2 * k)
                     * math.exp((1.0 - sigma - 2 * k) * log_ry) / (sigma + 2 * k - 1))
            total = _fsum(head + tail)
            if bound < policy.rel_tol * abs(total):
                return SeriesResult(total, n + k, bound)
            poch = poch_even * (s + 2 * k)
            ypow = ypow * inv_y2
        n *= 2
    raise ConvergenceError("Euler-Maclaurin summation did not converge")


def _boundary_abel(p: ParameterPoint, s: complex, policy: SeriesPolicy) -> SeriesResult:
    # |sum_{m>M} a_m z^m| <= 2/|1-z| (|a_{M+1}| + total variation of a beyond M)
    x, t = p.x, p.t
    z = cmath.exp(2j * math.pi * t)
    k = 2.0 / abs(1.0 - z)
    sigma = s.real

    def term(m):
        return cpow_principal(m + x, -s) * cmath.exp(2j * math.pi * t * m)

    def tail(M):
        y = M + 1 + x
        ang = math.exp(abs(s.imag) * abs(principal_arg(y)))
        first = abs(y) ** (-sigma) * ang
        variation = abs(s) * ang * y.real ** (-sigma) / sigma
        return k * (first + variation)

    return _sum_until(term, tail, policy)


def _is_integer_real(t: complex) -> bool:
    return t.imag == 0 and t.real == round(t.real)


def _series(p: ParameterPoint, s: complex, policy: SeriesPolicy,
            log_scale: complex = 0j) -> SeriesResult:
    """L(p.t, p.x, s) with the regime of (p.t, p.x, s), times exp(log_scale)
    (geometric regime only)."""
    regime = p.replace(s=s).require(Regime.GEOMETRIC, Regime.BOUNDARY)
    t, x = p.t, p.x
    if regime is Regime.GEOMETRIC:
        if policy.tail_bound is TailBound.INTEGRAL:
            raise DomainError("integral tail bound applies only at Im(t) = 0")
        q = math.exp(-TWO_PI * t.imag)

        def term(m):
            if m + x == 0:
                return cpow_principal(0, -s) * cmath.exp(log_scale)
            return cmath.exp(log_scale - s * PRINCIPAL.log(m + x) + 2j * math.pi * t * m)

        return _sum_until(term, lambda M: _geometric_tail(M, x, s, q, log_factor=log_scale.real),
                          policy)
    if log_scale:
        raise DomainError("scaled evaluation needs the geometric regime")
    if policy.tail_bound is TailBound.GEOMETRIC:
        raise DomainError("geometric tail bound needs Im(t) > 0")
    if _is_integer_real(t):
        return _hurwitz_em(x, s, policy)
    return _boundary_abel(p, s, policy)


def lerch_series_info(p: ParameterPoint, policy: SeriesPolicy = DEFAULT_POLICY) -> SeriesResult:
    """Like :func:`lerch_series` but also returns term count and tail bound."""
    return _series(p, p.s, policy)


def lerch_series(p: ParameterPoint, policy: SeriesPolicy = DEFAULT_POLICY) -> complex:
    """Evaluate L(t, x, s) by its defining series.

    Raises
    ------
    DomainError
        If the point is neither in the geometric nor the boundary regime.
    ConvergenceError
        If ``policy.max_terms`` is reached before the tail bound drops below
        ``policy.rel_tol`` times the partial sum.
    """
    return _series(p, p.s, policy).value


def lerch_series_scaled(p: ParameterPoint, log_scale: complex,
                        policy: SeriesPolicy = DEFAULT_POLICY) -> complex:
    """exp(log_scale) * L(t, x, s) with the factor applied inside every term.

    Lets callers form x^n L(t, x, s) for large s and |x| < 1 where L alone
    overflows.  Geometric regime only.
    """
    return _series(p, p.s, policy, complex(log_scale)).value


def hurwitz(x: complex, s: complex, policy: SeriesPolicy = DEFAULT_POLICY) -> complex:
    """Hurwitz zeta sum_{m>=0} (m+x)^(-s) for Re(s) > 1, Re(x) > 0."""
    x, s = complex(x), complex(s)
    if not (s.real > 1 and x.real > 0):
        raise DomainError("hurwitz needs Re(s) > 1 and Re(x) > 0")
    return lerch_series(ParameterPoint(0.0, x, s), policy)


def riemann(s: complex, policy: SeriesPolicy = DEFAULT_POLICY) -> complex:
    return hurwitz(1.0, s, policy)


def lerch_t_spectral_info(alpha: complex, p: ParameterPoint,
                          policy: SeriesPolicy = DEFAULT_POLICY,
                          right: bool = False) -> SeriesResult:
    alpha = complex(alpha)
    p.require(Regime.GEOMETRIC)
    if alpha == 0:
        return lerch_series_info(p, policy)
    if alpha.real <= 0:
        raise DomainError("m = 0 term needs Re(alpha) > 0 (0 to a power with Re <= 0)")
    t, x, s = p.t, p.x, p.s
    q = math.exp(-TWO_PI * t.imag)
    freq = -2j * math.pi if right else 2j * math.pi
    # |(+-2 pi i m)^alpha| = (2 pi m)^Re(a) * exp(-+Im(a) pi/2)
    scale = TWO_PI ** alpha.real * math.exp((1 if right else -1) * alpha.imag * math.pi / 2)

    def term(m):
        return (cpow_principal(m + x, -s) * cpow_principal(freq * m, alpha)
                * cmath.exp(2j * math.pi * t * m))

    def tail(M):
        return _geometric_tail(M, x, s, q, power=alpha.real, power_scale=scale)

    return _sum_until(term, tail, policy, start=1)


def lerch_t_spectral(alpha: complex, p: ParameterPoint,
                     policy: SeriesPolicy = DEFAULT_POLICY, right: bool = False) -> complex:
    """Termwise t-differintegral of L of order ``alpha``.

    Left (base -inf) multiplies term m by (2 pi i m)^alpha; ``right=True``
    gives the Weyl (base +inf) version with (-2 pi i m)^alpha.  The m = 0
    term vanishes for Re(alpha) > 0; alpha = 0 returns L itself; other
    orders with Re(alpha) <= 0 are refused.
    """
    return lerch_t_spectral_info(alpha, p, policy, right).value


def lerch_x_partial(k: int, p: ParameterPoint, policy: SeriesPolicy = DEFAULT_POLICY) -> complex:
    """k-th derivative in x, termwise: (-s)(-s-1)...(-s-k+1) (m+x)^(-s-k)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    coef = 1 + 0j
    for j in range(k):
        coef *= -p.s - j
    return coef * _series(p, p.s + k, policy).value


def lerch_series_vec(t: complex, xs: np.ndarray, s: complex,
                     rel_tol: float = 1e-13, max_terms: int = 100_000) -> np.ndarray:
    """Vectorised L(t, x, s) over an array of x values (geometric regime).

    Terms are added for all x at once until the tail bound holds at every
    point.  Points outside the geometric regime are evaluated one at a time
    through :func:`lerch_series`.
    """
    t, s = complex(t), complex(s)
    xs = np.asarray(xs, dtype=complex)
    if t.imag <= 0:
        pol = SeriesPolicy(rel_tol=rel_tol, max_terms=max_terms)
        return np.array([lerch_series(ParameterPoint(t, x, s), pol) for x in xs.ravel()],
                        dtype=complex).reshape(xs.shape)
    if np.any((xs.imag == 0) & (xs.real <= 0)):
        raise DomainError("x on (-inf, 0]")
    finite = np.isfinite(xs)
    if not np.all(finite):
        out = np.full(xs.shape, 0j if s.real > 0 else complex(np.nan, np.nan))
        out[finite] = lerch_series_vec(t, xs[finite], s, rel_tol, max_terms)
        return out
    q = math.exp(-TWO_PI * t.imag)
    log_q = math.log(q)
    acc = np.zeros_like(xs)
    comp = np.zeros_like(xs)
    growth_exp = max(0.0, -s.real)
    with np.errstate(over="ignore", under="ignore", invalid="ignore"):
        for m in range(max_terms):
            base = m + xs
            term = np.exp(-s * np.log(base) + 2j * math.pi * t * m)
            # compensated accumulation
            y = term - comp
            tot = acc + y
            comp = (tot - acc) - y
            acc = tot
            yv = m + 1 + xs
            ay = np.abs(yv)
            ratio = q * (1.0 + 1.0 / ay) ** growth_exp
            log_first = (-s.real * np.log(ay) + np.maximum(0.0, s.imag * np.angle(yv))
                         + (m + 1) * log_q)
            bound = np.where((yv.real > 0) & (ratio < 1),
                             np.exp(log_first) / np.where(ratio < 1, 1.0 - ratio, 1.0),
                             np.inf)
            if np.all((bound <= rel_tol * np.abs(acc)) | (bound < 1e-300)):
                return acc
    raise ConvergenceError("vectorised Lerch series did not converge")
