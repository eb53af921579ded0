"""Riemann-Liouville (base -inf) and Weyl (base +inf) differintegrals.

Three engines:

* spectral: exact action on exponentials, D^a e^{kt} = k^a e^{kt} on the
  left (Re k >= 0) and (-k)^a e^{kt} on the right (Re k <= 0), extended
  termwise to finite exponential sums;
* quadrature: the semi-infinite ray integral
  (1/Gamma(-a)) int_0^inf u^(-a-1) f(t -+ u) du for Re(a) < 0, computed by
  double-exponential quadrature with level-by-level step halving;
* composed: for Re(a) >= 0, n = floor(Re a) + 1 derivatives (Cauchy circle)
  of the order a-n integral; the right side carries (-1)^n.

Callables passed to the quadrature and circle engines must accept a 1-D
complex ndarray and return an array of the same shape.
"""

from __future__ import annotations

import cmath
import enum
import math
import warnings
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

from .complexfn import cpow_principal, rgamma
from .errors import DecayViolation, DomainError, NonConvergence, RadiusError, SlowDecayWarning
from .lerch import ParameterPoint, Regime, SeriesPolicy, lerch_series, lerch_series_vec

__all__ = [
    "Side",
    "Variable",
    "Engine",
    "Mapping",
    "ExpSum",
    "DifferintegralRequest",
    "QuadratureConfig",
    "CauchyCircleConfig",
    "QuadResult",
    "frac_exp",
    "frac_expsum",
    "kernel_expsum",
    "kernel_function",
    "kernel_terms_needed",
    "frac_quadrature",
    "frac_quadrature_info",
    "cauchy_deriv",
    "frac_composed",
    "weyl_x_fractional",
    "differintegrate",
]

ArrayFn = Callable[[np.ndarray], np.ndarray]


class Side(enum.Enum):
    LEFT = "left"    # base point -inf
    RIGHT = "right"  # base point +inf (Weyl)


class Variable(enum.Enum):
    T = "t"
    X = "x"


class Engine(enum.Enum):
    SPECTRAL = "spectral"
    QUADRATURE = "quadrature"
    COMPOSED = "composed"


class Mapping(enum.Enum):
    #: u = exp(tau - exp(-tau)); for integrands with exponential decay
    EXP_SINH = "exp-sinh"
    #: u = exp(pi/2 sinh(tau)); handles algebraic decay at infinity
    SINH_SINH = "sinh-sinh"


@dataclass(frozen=True)
class ExpSum:
    """f(t) = sum_j coeff_j exp(freq_j t)."""

    terms: tuple[tuple[complex, complex], ...]

    def __post_init__(self):
        object.__setattr__(self, "terms",
                           tuple((complex(c), complex(w)) for c, w in self.terms))

    def __call__(self, t):
        t = np.asarray(t, dtype=complex)
        out = np.zeros_like(t)
        for c, w in self.terms:
            out = out + c * np.exp(w * t)
        return out if out.ndim else complex(out)

    def check_side(self, side: Side) -> None:
        for _, w in self.terms:
            if side is Side.LEFT and w.real < 0:
                raise DomainError(f"left differintegral needs Re(freq) >= 0, got {w}")
            if side is Side.RIGHT and w.real > 0:
                raise DomainError(f"right differintegral needs Re(freq) <= 0, got {w}")


@dataclass(frozen=True)
class QuadratureConfig:
    mapping: Mapping = Mapping.EXP_SINH
    levels: int = 10
    abs_floor: float = 1e-300
    target_rel: float = 1e-10

    def __post_init__(self):
        if self.levels < 3:
            raise ValueError("levels must be at least 3")


@dataclass(frozen=True)
class CauchyCircleConfig:
    radius: float
    nodes: int = 64

    def __post_init__(self):
        if not self.radius > 0:
            raise ValueError("radius must be positive")
        if self.nodes < 2 or self.nodes & (self.nodes - 1):
            raise ValueError("nodes must be a power of two")


@dataclass(frozen=True)
class DifferintegralRequest:
    """Order (negative real part = integral), side, variable and engine."""

    order: complex
    side: Side = Side.LEFT
    variable: Variable = Variable.T
    engine: Engine = Engine.SPECTRAL

    def __post_init__(self):
        object.__setattr__(self, "order", complex(self.order))
        re = self.order.real
        if self.engine is Engine.QUADRATURE and not -1 <= re < 0:
            raise DomainError("quadrature engine takes -1 <= Re(order) < 0")
        if self.engine is Engine.COMPOSED and re < 0:
            raise DomainError("composed engine takes Re(order) >= 0")


@dataclass(frozen=True)
class QuadResult:
    value: complex
    levels: int
    error_estimate: float
    nodes: int


# ---------------------------------------------------------------- spectral


def frac_exp(order: complex, freq: complex, side: Side = Side.LEFT) -> complex:
    """Multiplier m with D^order e^{freq t} = m e^{freq t}."""
    order, freq = complex(order), complex(freq)
    if side is Side.LEFT and freq.real < 0:
        raise DomainError(f"left rule needs Re(k) >= 0, got k = {freq}")
    if side is Side.RIGHT and freq.real > 0:
        raise DomainError(f"right rule needs Re(k) <= 0, got k = {freq}")
    if order == 0:
        return 1 + 0j
    base = freq if side is Side.LEFT else -freq
    if base == 0 and order.real <= 0:
        raise DomainError("integral of a constant over a semi-infinite ray diverges")
    return cpow_principal(base, order)


def frac_expsum(order: complex, f: ExpSum, side: Side, t: complex) -> complex:
    f.check_side(side)
    t = complex(t)
    return sum((c * frac_exp(order, w, side) * cmath.exp(w * t) for c, w in f.terms), 0j)


def kernel_expsum(x: complex, M: int) -> ExpSum:
    """Truncated expansion of exp(2 pi i t x)/(1 - exp(2 pi i t)) for Im t > 0:
    terms (1, 2 pi i (m + x)), m = 0..M."""
    if M < 0:
        raise ValueError("M must be nonnegative")
    x = complex(x)
    return ExpSum(tuple((1.0, 2j * math.pi * (m + x)) for m in range(M + 1)))


def kernel_function(x: complex) -> ArrayFn:
    """The closed-form kernel t -> exp(2 pi i t x)/(1 - exp(2 pi i t))."""
    x = complex(x)

    def k(t):
        t = np.asarray(t, dtype=complex)
        with np.errstate(over="ignore", under="ignore", invalid="ignore"):
            out = np.exp(2j * np.pi * t * x) / (1.0 - np.exp(2j * np.pi * t))
        return out if out.ndim else complex(out)

    return k


def kernel_terms_needed(t: complex, tol: float) -> int:
    """Smallest M with q^(M+1)/(1-q) < tol, q = |exp(2 pi i t)|."""
    t = complex(t)
    if t.imag <= 0:
        raise DomainError("kernel expansion needs Im(t) > 0")
    q = math.exp(-2 * math.pi * t.imag)
    M = max(0, math.ceil(math.log(tol * (1 - q)) / math.log(q)) - 1)
    while q ** (M + 1) / (1 - q) >= tol:
        M += 1
    while M > 0 and q ** M / (1 - q) < tol:
        M -= 1
    return M


# ---------------------------------------------------------------- quadrature

_H0 = 0.5
_WINDOW = {Mapping.EXP_SINH: (-9.0, 12.0), Mapping.SINH_SINH: (-7.0, 7.0)}
_TRUNC = 1e-19


@lru_cache(maxsize=256)
def _nodes(mapping: Mapping, level: int, lo: int, hi: int) -> tuple[np.ndarray, np.ndarray]:
    """(log u, dlog u / dtau) at the nodes added at ``level``.

    Level 0 holds tau = k*H0 for k in [lo, hi]; level l > 0 the odd multiples
    of H0/2^l in the same window.  Arrays are read-only.
    """
    h = _H0 / 2 ** level
    if level == 0:
        tau = np.arange(lo, hi + 1) * h
    else:
        n = 2 ** level
        k = np.arange(lo * n + 1, hi * n, 2)
        tau = k * h
    if mapping is Mapping.EXP_SINH:
        e = np.exp(-tau)
        logu = tau - e
        dlog = 1.0 + e
    else:
        logu = 0.5 * np.pi * np.sinh(tau)
        dlog = 0.5 * np.pi * np.cosh(tau)
    logu.setflags(write=False)
    dlog.setflags(write=False)
    return logu, dlog


def _ray_values(g: ArrayFn, power: complex, logu: np.ndarray, dlog: np.ndarray) -> np.ndarray:
    # integrand of int_0^inf u^(power-1) g(u) du in the tau variable
    with np.errstate(over="ignore", under="ignore", invalid="ignore"):
        u = np.exp(logu)
        vals = np.exp(power * logu) * dlog * g(u)
    vals = np.asarray(vals, dtype=complex)
    bad = ~np.isfinite(vals)
    if np.any(bad):
        # underflow of a decaying factor times a huge one; only harmless far out
        vals = np.where(bad & (np.abs(logu) > 30), 0, vals)
    return vals


def _window(g, power, mapping) -> tuple[int, int]:
    lo_cap, hi_cap = (int(round(c / _H0)) for c in _WINDOW[mapping])
    k = np.arange(lo_cap, hi_cap + 1)
    logu, dlog = _nodes(mapping, 0, lo_cap, hi_cap)
    mags = np.abs(_ray_values(g, power, logu, dlog))
    if not np.all(np.isfinite(mags)):
        raise DecayViolation("integrand is not finite on the ray")
    peak = mags.max()
    if peak == 0:
        return 0, 0
    small = mags <= _TRUNC * peak
    # grow outward from the peak until two consecutive negligible nodes
    i0 = int(np.argmax(mags))
    lo = i0
    while lo > 0 and not (small[lo] and small[lo - 1]):
        lo -= 1
    hi = i0
    while hi < len(k) - 1 and not (small[hi] and small[hi + 1]):
        hi += 1
    if hi == len(k) - 1 and not small[hi]:
        raise DecayViolation("integrand does not decay along the ray")
    if lo == 0 and not small[0]:
        raise DecayViolation("integrand too singular at the ray origin")
    return int(k[lo]), int(k[hi])


def _ray_integral(g: ArrayFn, power: complex, cfg: QuadratureConfig) -> QuadResult:
    """int_0^inf u^(power-1) g(u) du for Re(power) > 0 and decaying g."""
    lo, hi = _window(g, power, cfg.mapping)
    logu, dlog = _nodes(cfg.mapping, 0, lo, hi)
    vals = _ray_values(g, power, logu, dlog)
    total = np.sum(vals)
    # convergence is judged against int |integrand|, so a result that
    # cancels to (nearly) zero still terminates
    mass = np.sum(np.abs(vals))
    estimate = _H0 * total
    n_nodes = logu.size
    err = math.inf
    for level in range(1, cfg.levels + 1):
        logu, dlog = _nodes(cfg.mapping, level, lo, hi)
        vals = _ray_values(g, power, logu, dlog)
        total = total + np.sum(vals)
        mass = mass + np.sum(np.abs(vals))
        n_nodes += logu.size
        h = _H0 / 2 ** level
        new = complex(h * total)
        err = abs(new - estimate)
        estimate = new
        scale = max(abs(estimate), h * mass)
        if level >= 2 and err <= cfg.target_rel * scale + cfg.abs_floor:
            return QuadResult(estimate, level, err, n_nodes)
    raise NonConvergence(
        f"quadrature stalled at relative error {err / max(abs(estimate), 1e-300):.3g}"
    )


def frac_quadrature_info(order: complex, f: ArrayFn, point: complex, side: Side = Side.LEFT,
                         cfg: QuadratureConfig = QuadratureConfig(),
                         ray_angle: float = 0.0) -> QuadResult:
    order, point = complex(order), complex(point)
    if not order.real < 0:
        raise DomainError("quadrature engine needs Re(order) < 0")
    direction = cmath.exp(1j * ray_angle)
    sign = -1.0 if side is Side.LEFT else 1.0

    def g(u):
        return f(point + sign * direction * u)

    res = _ray_integral(g, -order, cfg)
    # (u e^{i phi})^(-order-1) d(u e^{i phi}) = e^{-i phi order} u^(-order-1) du
    scale = cmath.exp(-1j * ray_angle * order) if ray_angle else 1.0
    value = res.value * scale * rgamma(-order)
    return QuadResult(value, res.levels, res.error_estimate * abs(rgamma(-order)), res.nodes)


def frac_quadrature(order: complex, f: ArrayFn, point: complex, side: Side = Side.LEFT,
                    cfg: QuadratureConfig = QuadratureConfig(), ray_angle: float = 0.0) -> complex:
    """Differintegral of order Re(order) < 0 by ray quadrature.

    The integral runs along t - u e^{i phi} (left) or t + u e^{i phi} (right),
    phi = ``ray_angle``; a nonzero angle rotates the ray into a sector where
    an oscillatory integrand decays.  ``f`` must decay at least exponentially
    (EXP_SINH mapping) or algebraically (SINH_SINH) along the ray.
    """
    return frac_quadrature_info(order, f, point, side, cfg, ray_angle).value


# ---------------------------------------------------------------- Cauchy circle


def cauchy_deriv(n: int, f: ArrayFn, point: complex, cfg: CauchyCircleConfig,
                 max_radius: float | None = None) -> complex:
    """n-th derivative by the trapezoid rule on a circle (Cauchy's formula).

    ``max_radius`` is the distance to the nearest known singularity; a circle
    reaching it raises RadiusError.
    """
    if n < 0:
        raise ValueError("derivative order must be nonnegative")
    if n >= cfg.nodes:
        raise ValueError("derivative order must be below the node count")
    if max_radius is not None and cfg.radius >= max_radius:
        raise RadiusError(f"radius {cfg.radius} reaches a singularity at distance {max_radius}")
    theta = 2 * np.pi * np.arange(cfg.nodes) / cfg.nodes
    w = np.exp(1j * theta)
    vals = np.asarray(f(complex(point) + cfg.radius * w), dtype=complex)
    coef = np.sum(vals * w ** (-n)) / cfg.nodes
    return complex(coef * math.factorial(n) / cfg.radius ** n)


def _pointwise(fn: Callable[[complex], complex]) -> ArrayFn:
    def wrapped(z):
        z = np.asarray(z, dtype=complex)
        return np.array([fn(complex(v)) for v in z.ravel()], dtype=complex).reshape(z.shape)

    return wrapped


def _split_order(order: complex) -> int:
    return math.floor(order.real) + 1


def frac_composed(order: complex, f: ArrayFn, point: complex, side: Side = Side.LEFT,
                  quad: QuadratureConfig = QuadratureConfig(),
                  circle: CauchyCircleConfig = CauchyCircleConfig(0.5),
                  max_radius: float | None = None) -> complex:
    """Differintegral of order Re(order) >= 0: d^n/dt^n I^(n-order), n = floor(Re)+1."""
    order = complex(order)
    if order.real < 0:
        raise DomainError("composed engine needs Re(order) >= 0")
    if order == 0:
        return complex(np.asarray(f(np.array([complex(point)])))[0])
    n = _split_order(order)
    inner = _pointwise(lambda z: frac_quadrature(order - n, f, z, side, quad))
    value = cauchy_deriv(n, inner, point, circle, max_radius)
    return -value if side is Side.RIGHT and n % 2 else value


# ---------------------------------------------------------------- Weyl in x


def weyl_x_fractional(order: complex, p: ParameterPoint,
                      quad: QuadratureConfig | None = None,
                      circle: CauchyCircleConfig | None = None,
                      rel_tol: float = 1e-13) -> complex:
    """Weyl differintegral of L(t, ., s) in x, evaluated at p.x.

    Re(order) < 0 is a single right-side ray quadrature; otherwise
    (-1)^n d^n/dx^n of the order - n integral, n = floor(Re order) + 1, with
    the Cauchy circle radius below Re(x).
    """
    order = complex(order)
    p.require(Regime.GEOMETRIC, Regime.BOUNDARY)
    t, x, s = p.t, p.x, p.s
    if x.real <= 0:
        raise DomainError("Weyl differintegral in x needs Re(x) > 0")
    if order == 0:
        return lerch_series(p, SeriesPolicy(rel_tol=rel_tol))
    quad = quad or QuadratureConfig(mapping=Mapping.SINH_SINH)
    n = 0 if order.real < 0 else _split_order(order)
    inner_order = order - n
    decay = s.real + inner_order.real
    if not decay > 0:
        raise DomainError(
            f"Weyl integral in x diverges: need Re(s) > {n - order.real:g}, got {s.real:g}"
        )
    if decay < 0.5:
        warnings.warn(f"x-integrand decays like u^-{1 + decay:.3g}", SlowDecayWarning,
                      stacklevel=2)

    def L_of_x(xs):
        return lerch_series_vec(t, xs, s, rel_tol=rel_tol)

    if n == 0:
        return frac_quadrature(order, L_of_x, x, Side.RIGHT, quad)
    circle = circle or CauchyCircleConfig(radius=0.5 * x.real)
    if circle.radius >= x.real:
        raise RadiusError("Cauchy radius in x must stay below Re(x)")
    inner = _pointwise(lambda z: frac_quadrature(inner_order, L_of_x, z, Side.RIGHT, quad))
    value = cauchy_deriv(n, inner, x, circle)
    return -value if n % 2 else value


# ---------------------------------------------------------------- dispatch


def differintegrate(req: DifferintegralRequest, f: ArrayFn | ExpSum, point: complex,
                    quad: QuadratureConfig = QuadratureConfig(),
                    circle: CauchyCircleConfig = CauchyCircleConfig(0.5),
                    max_radius: float | None = None) -> complex:
    """Apply ``req`` to ``f`` at ``point`` (``f`` an ExpSum for the spectral engine)."""
    if req.engine is Engine.SPECTRAL:
        if not isinstance(f, ExpSum):
            raise TypeError("spectral engine acts on ExpSum objects")
        return frac_expsum(req.order, f, req.side, point)
    if req.engine is Engine.QUADRATURE:
        return frac_quadrature(req.order, f, point, req.side, quad)
    return frac_composed(req.order, f, point, req.side, quad, circle, max_radius)
