"""Numerical checks of the fractional-calculus identities for L(t, x, s).

Every ``check_*`` function evaluates one identity at one parameter point and
returns an :class:`IdentityReport`.  The left-hand side is computed by one
engine and each right-hand-side candidate by another, so agreement is
evidence rather than a tautology.  Hypotheses of each identity are enforced
by :func:`precondition`; violating them raises DomainError (a sweep records
this as skipped, not failed).
"""

from __future__ import annotations

import cmath
import enum
import json
import math
from dataclasses import dataclass, field
from importlib import resources
from typing import Callable

import numpy as np

from . import complexfn as cf
from .errors import ConvergenceError, DomainError
from .fraccalc import (
    CauchyCircleConfig,
    Side,
    cauchy_deriv,
    frac_composed,
    frac_exp,
    frac_expsum,
    frac_quadrature,
    kernel_expsum,
    kernel_function,
    weyl_x_fractional,
)
from .lerch import (
    ParameterPoint,
    Regime,
    SeriesPolicy,
    _geometric_tail,
    lerch_series,
    lerch_series_info,
    lerch_series_scaled,
    lerch_series_vec,
    lerch_t_spectral_info,
    lerch_x_partial,
)

__all__ = [
    "TOL_SPECTRAL",
    "TOL_QUADRATURE",
    "TOL_XQUAD",
    "Acceleration",
    "Candidate",
    "IdentityReport",
    "LeibnizWindow",
    "IDENTITIES",
    "precondition",
    "check_frac_lerch",
    "check_weyl_lerch",
    "check_leibniz",
    "check_shift_identity",
    "check_theo_t",
    "check_theo_t2",
    "check_x_lemma",
    "check_theo_x",
    "check_pde",
    "theo_x_golden",
    "theo_x_coefficients",
    "euler_sum",
    "conjugation_gap",
    "PdeMode",
]

TOL_SPECTRAL = 1e-8
TOL_QUADRATURE = 1e-6
TOL_XQUAD = 1e-4
REL_FLOOR = 1e-300
TWO_PI = 2 * math.pi
_EPS = float(np.finfo(float).eps)


@dataclass
class Candidate:
    label: str
    value: complex
    abs_err: float
    rel_err: float
    tol: float

    @property
    def passed(self) -> bool:
        return bool(self.rel_err < self.tol)


@dataclass
class IdentityReport:
    """LHS, right-hand-side candidates with residuals, and truncation metadata."""

    identity_id: str
    params: dict[str, complex]
    lhs: complex
    candidates: list[Candidate]
    truncation: dict = field(default_factory=dict)
    engines: tuple[str, ...] = ()
    flags: list[str] = field(default_factory=list)
    primary: str | None = None

    def candidate(self, label: str) -> Candidate:
        for c in self.candidates:
            if c.label == label:
                return c
        raise KeyError(label)

    @property
    def primary_candidate(self) -> Candidate:
        if self.primary is None:
            return self.candidates[0]
        return self.candidate(self.primary)

    @property
    def passed(self) -> bool:
        return self.primary_candidate.passed and "truncation-limited" not in self.flags

    def add(self, label: str, value: complex, tol: float) -> Candidate:
        value = complex(value)
        abs_err = abs(value - self.lhs)
        if math.isnan(abs_err):
            abs_err = math.inf
        c = Candidate(label, value, abs_err, abs_err / max(abs(self.lhs), REL_FLOOR), tol)
        self.candidates.append(c)
        return c


class Acceleration(enum.Enum):
    NONE = "none"
    EULER = "euler"


@dataclass(frozen=True)
class LeibnizWindow:
    """Bilateral Leibniz sum truncated to n in [-N, N]."""

    N: int = 60
    acceleration: Acceleration = Acceleration.EULER

    def __post_init__(self):
        if self.N < 1:
            raise ValueError("N must be at least 1")


# ------------------------------------------------------------ preconditions


def _require_lerch_kernel(p: ParameterPoint, side: Side) -> None:
    if not p.t.imag > 0:
        raise DomainError("identity needs Im(t) > 0")
    if p.x.imag == 0 and p.x.real <= 0:
        raise DomainError("identity needs x outside (-inf, 0]")
    if side is Side.LEFT and p.x.imag > 0:
        raise DomainError("left (Riemann-Liouville) form needs Im(x) <= 0")
    if side is Side.RIGHT and p.x.imag < 0:
        raise DomainError("right (Weyl) form needs Im(x) >= 0")


def _require_positive_order(alpha: complex) -> None:
    if not complex(alpha).real > 0:
        raise DomainError("n-series needs Re(alpha) > 0")


def _require_leibniz(k, l, nu, side: Side) -> None:
    if cf.is_nonpositive_integer(complex(nu) + 1) or (
            complex(nu).imag == 0 and complex(nu).real < 0 and cf.is_nonpositive_integer(nu)):
        raise DomainError("Leibniz rule needs nu outside the negative integers")
    for w in (k, l, complex(k) + complex(l)):
        w = complex(w)
        if w == 0:
            raise DomainError("exponential frequencies must be nonzero")
        if side is Side.LEFT and w.real < 0:
            raise DomainError(f"left rule needs Re >= 0 for {w}")
        if side is Side.RIGHT and w.real > 0:
            raise DomainError(f"right rule needs Re <= 0 for {w}")


def _point(params: dict) -> ParameterPoint:
    return ParameterPoint(params.get("t", 0), params.get("x", 1), params.get("s", 0))


def precondition(identity_id: str, params: dict) -> None:
    """Raise DomainError if ``params`` violate the hypotheses of ``identity_id``."""
    if identity_id not in IDENTITIES:
        raise KeyError(f"unknown identity {identity_id!r}")
    alpha = complex(params.get("alpha", 0))
    if identity_id == "frac_lerch":
        _require_lerch_kernel(_point(params), Side.LEFT)
    elif identity_id == "weyl_lerch":
        _require_lerch_kernel(_point(params), Side.RIGHT)
    elif identity_id in ("theo_t", "theo_t2", "pde"):
        side = Side.RIGHT if identity_id == "theo_t2" else Side.LEFT
        _require_lerch_kernel(_point(params), side)
        _require_positive_order(alpha)
    elif identity_id == "x_lemma":
        p = _point(params)
        p.require(Regime.GEOMETRIC)
        if not p.x.real > 0:
            raise DomainError("Cauchy circle in x needs Re(x) > 0")
        k = params.get("k", alpha)
        if complex(k).imag != 0 or complex(k).real != int(complex(k).real) or complex(k).real < 0:
            raise DomainError("x-derivative order must be a nonnegative integer")
    elif identity_id == "theo_x":
        p = _point(params)
        p.require(Regime.GEOMETRIC, Regime.BOUNDARY)
        if not p.x.real > 0:
            raise DomainError("Weyl differintegral in x needs Re(x) > 0")
        n = 0 if alpha.real < 0 else math.floor(alpha.real) + 1
        if alpha != 0 and not p.s.real + alpha.real - n > 0:
            raise DomainError("Weyl integral in x diverges at this s")
    elif identity_id == "leibniz":
        side = Side(params.get("side", "left"))
        _require_leibniz(params.get("k", 1), params.get("l", 1), params.get("alpha", 0.5), side)
    elif identity_id == "shift":
        if not complex(params.get("k", 1)).real > 0:
            raise DomainError("shift identity needs Re(k) > 0")


# ------------------------------------------------------------ helpers


def _series_policy(tol: float) -> SeriesPolicy:
    return SeriesPolicy(rel_tol=max(0.01 * tol, 1e-16))


def _kernel_truncation(p: ParameterPoint, prefactor: complex, target: float) -> int:
    """Smallest M whose dropped kernel terms contribute less than ``target``.

    Term m of the differintegrated kernel has modulus at most
    (2 pi |m+x|)^(-Re s) exp(pi |Im s|) |exp(2 pi i t (m+x))|.
    """
    t, x, s = p.t, p.x, p.s
    q = math.exp(-TWO_PI * t.imag)
    scale = (abs(prefactor) * math.exp(-TWO_PI * (x * t).imag) * TWO_PI ** (-s.real)
             * math.exp(math.pi * abs(s.imag)))
    s_re = complex(s.real)
    for M in range(100_000):
        if scale * _geometric_tail(M, x, s_re, q) < target:
            return M
    raise ConvergenceError("kernel truncation did not converge")


def _lerch_representation(p: ParameterPoint, side: Side, tol: float, quad_tol: float,
                          engine: str) -> IdentityReport:
    ident = "frac_lerch" if side is Side.LEFT else "weyl_lerch"
    precondition(ident, {"t": p.t, "x": p.x, "s": p.s})
    t, x, s = p.t, p.x, p.s
    lhs_info = lerch_series_info(p, _series_policy(tol))
    report = IdentityReport(ident, {"t": t, "x": x, "s": s}, lhs_info.value, [],
                            truncation={"series_terms": lhs_info.n_terms},
                            engines=("series",))
    sign = 1 if side is Side.LEFT else -1
    prefactor = cf.cpow_principal(TWO_PI, s) * cmath.exp(
        1j * math.pi * (sign * s / 2 - 2 * t * x))
    engines = ["series"]
    if engine in ("auto", "spectral"):
        M = _kernel_truncation(p, prefactor, 0.01 * tol * max(abs(report.lhs), REL_FLOOR))
        rhs = prefactor * frac_expsum(-s, kernel_expsum(x, M), side, t)
        report.add("rhs_spectral", rhs, tol)
        report.truncation["kernel_M"] = M
        engines.append("spectral")
    if engine in ("auto", "quadrature", "composed"):
        decays = x.imag < 0 if side is Side.LEFT else x.imag > 0
        if not decays:
            report.flags.append("quadrature-unavailable:Im(x)=0")
            if engine != "auto":
                raise DomainError("quadrature RHS needs the kernel to decay along the ray")
        else:
            kernel = kernel_function(x)
            if s.real > 0:
                d = frac_quadrature(-s, kernel, t, side)
                label = "rhs_quadrature"
            else:
                radius = 0.5 * t.imag
                d = frac_composed(-s, kernel, t, side, circle=CauchyCircleConfig(radius),
                                  max_radius=t.imag)
                label = "rhs_composed"
            report.add(label, prefactor * d, quad_tol)
            engines.append(label.split("_")[1])
    if not report.candidates:
        raise ValueError(f"unknown engine {engine!r}")
    report.engines = tuple(engines)
    return report


# ------------------------------------------------------------ representations


def check_frac_lerch(p: ParameterPoint, tol: float = TOL_SPECTRAL,
                     quad_tol: float = TOL_QUADRATURE, engine: str = "auto") -> IdentityReport:
    """L = (2 pi)^s exp(i pi (s/2 - 2tx)) D_t^{-s}[kernel], left-sided (Im x <= 0).

    The spectral RHS applies the exponential rule to the truncated kernel
    expansion; the quadrature RHS (Im x < 0 only) integrates the closed-form
    kernel along the ray, through the composed engine when Re(s) <= 0.
    """
    return _lerch_representation(p, Side.LEFT, tol, quad_tol, engine)


def check_weyl_lerch(p: ParameterPoint, tol: float = TOL_SPECTRAL,
                     quad_tol: float = TOL_QUADRATURE, engine: str = "auto") -> IdentityReport:
    """Weyl mirror of :func:`check_frac_lerch` (Im x >= 0)."""
    return _lerch_representation(p, Side.RIGHT, tol, quad_tol, engine)


def conjugation_gap(p: ParameterPoint, tol: float = TOL_SPECTRAL) -> float:
    """Largest gap between the Weyl report at (-conj t, x) and the conjugated
    left report at (t, x); zero in exact arithmetic for real x and s."""
    left = check_frac_lerch(p, tol, engine="spectral")
    right = check_weyl_lerch(p.replace(t=-p.t.conjugate()), tol, engine="spectral")
    scale = max(abs(left.lhs), REL_FLOOR)
    gaps = [abs(right.lhs - left.lhs.conjugate())]
    gaps += [abs(r.value - l.value.conjugate()) for l, r in zip(left.candidates, right.candidates)]
    return max(gaps) / scale


# ------------------------------------------------------------ Leibniz


def euler_sum(terms: list[complex], ratio: complex) -> complex:
    """Sum a series whose terms behave like smooth(n) * ratio**n.

    Each level of the table replaces partial sums S_n by
    (S_{n+1} - ratio S_n)/(1 - ratio), which is exact for a geometric tail
    and removes one order of the smooth factor.  For |ratio| > 1 this is an
    analytic continuation whose partial sums grow, so every entry also
    carries a rounding bound propagated through the same recurrence.  The
    returned entry minimises max(spread, rounding), where spread is the
    disagreement among three consecutive entries of one level.
    """
    if not terms:
        return 0j
    t = np.asarray(terms, dtype=complex)
    sums = np.cumsum(t)
    if sums.size < 3:
        return complex(sums[-1])
    mag = np.cumsum(np.abs(t))
    denom = 1.0 - ratio
    best = complex(sums[-1])
    best_score = max(abs(sums[-1] - sums[-2]), _EPS * mag[-1])
    while sums.size > 2:
        sums = (sums[1:] - ratio * sums[:-1]) / denom
        mag = (mag[1:] + abs(ratio) * mag[:-1]) / abs(denom)
        d = np.abs(np.diff(sums))
        if d.size > 1:
            score = np.maximum(np.maximum(d[1:], d[:-1]), _EPS * mag[2:])
            offset = 2
        else:
            score = np.maximum(d, _EPS * mag[-1:])
            offset = 1
        i = int(np.argmin(score))
        if score[i] < best_score:
            best_score = float(score[i])
            best = complex(sums[i + offset])
    return best


def _leibniz_rhs(k, l, nu, mu, N, side, accel: Acceleration) -> tuple[complex, bool]:
    pos = [cf.gbinom(nu, mu + n) * frac_exp(nu - mu - n, k, side) * frac_exp(mu + n, l, side)
           for n in range(0, N + 1)]
    neg = [cf.gbinom(nu, mu - n) * frac_exp(nu - mu + n, k, side) * frac_exp(mu - n, l, side)
           for n in range(1, N + 1)]
    finite = (nu.imag == 0 and nu.real >= 0 and nu.real == int(nu.real)
              and mu.imag == 0 and mu.real == int(mu.real))
    if accel is Acceleration.NONE or finite:
        return complex(math.fsum(z.real for z in pos + neg),
                       math.fsum(z.imag for z in pos + neg)), False
    w_pos = -l / k
    w_neg = -k / l
    if abs(1 - w_pos) < 1e-12 or abs(1 - w_neg) < 1e-12:
        return complex(sum(pos) + sum(neg)), False
    return euler_sum(pos, w_pos) + euler_sum(neg, w_neg), True


def _monotone(residuals: list[float]) -> bool:
    # non-increasing within a factor-2 band, or already at rounding level
    return all(b <= 2 * a or b < 1e-13 for a, b in zip(residuals, residuals[1:]))


def check_leibniz(k: complex, l: complex, nu: complex, mu: complex = 0,
                  window: LeibnizWindow = LeibnizWindow(), side: Side = Side.LEFT,
                  tol: float = TOL_QUADRATURE, t: complex = 0,
                  curve: tuple[int, ...] = (10, 20, 40)) -> IdentityReport:
    """Bilateral fractional Leibniz rule on f = e^{kt}, g = e^{lt}.

    Both sides are multiples of e^{(k+l)t}: the LHS multiplier is
    frac_exp(nu, k+l) and the RHS is the sum over n of
    binom(nu, mu+n) frac_exp(nu-mu-n, k) frac_exp(mu+n, l).
    """
    k, l, nu, mu, t = (complex(v) for v in (k, l, nu, mu, t))
    params = {"k": k, "l": l, "alpha": nu, "mu": mu, "t": t}
    precondition("leibniz", {**params, "side": side.value})
    growth = cmath.exp((k + l) * t)
    lhs = frac_exp(nu, k + l, side) * growth
    report = IdentityReport("leibniz", params, lhs, [], engines=("spectral",),
                            truncation={"leibniz_N": window.N})
    Ns = sorted({n for n in curve if n < window.N} | {window.N})
    curve_out = []
    accelerated = False
    value = 0j
    for n in Ns:
        value, accelerated = _leibniz_rhs(k, l, nu, mu, n, side, window.acceleration)
        value *= growth
        curve_out.append((n, abs(value - lhs) / max(abs(lhs), REL_FLOOR)))
    report.add("rhs", value, tol)
    report.truncation["residual_curve"] = curve_out
    if accelerated:
        report.flags.append("euler-accelerated")
    if not _monotone([r for _, r in curve_out]):
        report.flags.append("non-monotone")
    return report


def check_shift_identity(nu: complex, k: complex, t: complex = 0,
                         tol: float = 1e-7) -> IdentityReport:
    """D^nu (t f) = t D^nu f + nu D^(nu-1) f for f = e^{kt}, left side.

    The LHS integrates u e^{ku} numerically (composed engine for Re nu >= 0);
    the RHS uses the exact exponential rule.
    """
    nu, k, t = complex(nu), complex(k), complex(t)
    precondition("shift", {"k": k})

    def f(u):
        u = np.asarray(u, dtype=complex)
        return u * np.exp(k * u)

    if nu == 0:
        lhs, engine = t * cmath.exp(k * t), "identity"
    elif nu.real < 0:
        lhs, engine = frac_quadrature(nu, f, t, Side.LEFT), "quadrature"
    else:
        lhs, engine = frac_composed(nu, f, t, Side.LEFT), "composed"
    e = cmath.exp(k * t)
    rhs = t * frac_exp(nu, k) * e + (nu * frac_exp(nu - 1, k) * e if nu != 0 else 0)
    report = IdentityReport("shift", {"alpha": nu, "k": k, "t": t}, lhs, [],
                            engines=(engine, "spectral"))
    report.add("rhs", rhs, tol)
    return report


# ------------------------------------------------------------ t-derivatives


def _n_series(term: Callable[[int], complex], alpha: complex, nmax: int,
              target_rel: float) -> tuple[complex, int, bool]:
    """Sum term(0..) until the tail estimate |T_n| n / Re(alpha) drops below
    target_rel * |sum|; the estimate integrates terms decaying like n^-(alpha+1)."""
    terms = []
    running = 0j
    prev = math.inf
    for n in range(nmax + 1):
        z = term(n)
        terms.append(z)
        running += z
        last = max(abs(z), prev if n > 0 else abs(z))
        prev = abs(z)
        if n >= 2 and last * n / alpha.real <= target_rel * abs(running):
            return _fsum(terms), n, True
    return _fsum(terms), nmax, False


def _fsum(terms):
    return complex(math.fsum(z.real for z in terms), math.fsum(z.imag for z in terms))


def _theo_t(identity_id: str, alpha, p: ParameterPoint, nmax: int, tol: float,
            subtract_m0: bool) -> IdentityReport:
    alpha = complex(alpha)
    right = identity_id == "theo_t2"
    precondition(identity_id, {"t": p.t, "x": p.x, "s": p.s, "alpha": alpha})
    policy = SeriesPolicy(rel_tol=1e-15)
    lhs_info = lerch_t_spectral_info(alpha, p, policy, right=right)
    prefactor = cf.cpow_principal(-TWO_PI * 1j if right else TWO_PI * 1j, alpha)
    t, x, s = p.t, p.x, p.s
    shift = cmath.exp(2j * math.pi * t)
    log_x = cf.PRINCIPAL.log(x)
    # binom(alpha, n) (-1)^n; the power x^n is folded into the series (no overflow for |x| < 1)
    coef = [1 + 0j]

    def term(n):
        while len(coef) <= n:
            j = len(coef) - 1
            coef.append(-coef[j] * (alpha - j) / (j + 1))
        if coef[n] == 0:
            return 0j
        if subtract_m0:
            # m >= 1 part: sum_{m>=1} (m+x)^-z e^{2 pi i t m} = e^{2 pi i t} L(t, x+1, z)
            val = shift * lerch_series_scaled(ParameterPoint(t, x + 1, s - alpha + n),
                                              n * log_x, policy)
        else:
            val = lerch_series_scaled(ParameterPoint(t, x, s - alpha + n), n * log_x, policy)
        return coef[n] * val

    total, n_used, converged = _n_series(term, alpha, nmax, 0.25 * tol)
    rhs = prefactor * total
    report = IdentityReport(identity_id, {"t": t, "x": x, "s": s, "alpha": alpha},
                            lhs_info.value, [], engines=("spectral", "series"),
                            truncation={"series_terms": lhs_info.n_terms, "n_terms": n_used})
    report.add("rhs", rhs, tol)
    report.flags.append("stated-domain:Im(t)<0")
    if subtract_m0:
        report.flags.append("m0-subtracted")
    if not converged:
        report.flags.append("truncation-limited")
    return report


def check_theo_t(alpha: complex, p: ParameterPoint, nmax: int = 5000,
                 tol: float = TOL_SPECTRAL, subtract_m0: bool = False) -> IdentityReport:
    """Left t-differintegral of L against the binomial n-series of shifted L.

    LHS: termwise (2 pi i m)^alpha.  RHS: (2 pi i)^alpha sum_n binom(alpha, n)
    (-x)^n L(t, x, s - alpha + n), truncated adaptively (n <= nmax).  The
    plain n-series converges like n^-Re(alpha); ``subtract_m0`` drops the
    m = 0 contribution, whose binomial sum is (1-1)^alpha = 0, leaving a
    geometrically convergent series.
    """
    return _theo_t("theo_t", alpha, p, nmax, tol, subtract_m0)


def check_theo_t2(alpha: complex, p: ParameterPoint, nmax: int = 5000,
                  tol: float = TOL_SPECTRAL, subtract_m0: bool = False) -> IdentityReport:
    """Weyl version of :func:`check_theo_t`, powers of 2 pi i replaced by -2 pi i."""
    return _theo_t("theo_t2", alpha, p, nmax, tol, subtract_m0)


# ------------------------------------------------------------ x-derivatives


def check_x_lemma(k: int, p: ParameterPoint, tol: float = TOL_SPECTRAL,
                  circle: CauchyCircleConfig | None = None) -> IdentityReport:
    precondition("x_lemma", {"t": p.t, "x": p.x, "s": p.s, "k": k})
    k = int(k)
    t, x, s = p.t, p.x, p.s
    policy = _series_policy(tol)
    lhs = lerch_x_partial(k, p, policy)
    circle = circle or CauchyCircleConfig(radius=0.5 * x.real)
    lhs_cauchy = cauchy_deriv(k, lambda xs: lerch_series_vec(t, xs, s, rel_tol=1e-15), x,
                              circle, max_radius=abs(x))
    rhs = cf.gamma_ratio_shift(1 - s, k) * lerch_series(p.replace(s=s + k), policy)
    report = IdentityReport("x_lemma", {"t": t, "x": x, "s": s, "k": complex(k)}, lhs, [],
                            engines=("termwise", "cauchy"),
                            truncation={"cauchy_nodes": circle.nodes})
    report.add("rhs", rhs, tol)
    report.add("lhs_cauchy", lhs_cauchy, tol)
    return report


def _is_int(z: complex) -> bool:
    return z.imag == 0 and z.real == round(z.real)


def theo_x_coefficients(alpha: complex, s: complex) -> dict[str, complex]:
    """Coefficients multiplying L(t, x, s+alpha) in the two candidate forms.

    ``stated``: exp(-i pi alpha) Gamma(1-s)/Gamma(1-s-alpha);
    ``termwise``: Gamma(s+alpha)/Gamma(s), from the Weyl power rule applied
    to each (m+x)^(-s).  Integer alpha uses finite products (no gamma poles).
    """
    alpha, s = complex(alpha), complex(s)
    if _is_int(alpha) and alpha.real >= 0:
        k = int(alpha.real)
        stated = (-1) ** k * cf.gamma_ratio_shift(1 - s, k)
        termwise = 1 + 0j
        for j in range(k):
            termwise *= s + j
        return {"stated": complex(stated), "termwise": termwise}
    out = {}
    try:
        out["stated"] = cmath.exp(-1j * math.pi * alpha) * cf.cgamma(1 - s) * cf.rgamma(1 - s - alpha)
    except cf.PoleError:
        out["stated"] = complex(math.nan, math.nan)
    try:
        out["termwise"] = cf.cgamma(s + alpha) * cf.rgamma(s)
    except cf.PoleError:
        out["termwise"] = complex(math.nan, math.nan)
    return out


_GOLDEN_CACHE: dict | None = None


def theo_x_golden() -> dict:
    """Adjudication record for the x-fractional identity (shipped data file)."""
    global _GOLDEN_CACHE
    if _GOLDEN_CACHE is None:
        text = resources.files("lerchfrac").joinpath("data/theo_x_golden.json").read_text()
        _GOLDEN_CACHE = json.loads(text)
    return _GOLDEN_CACHE


def check_theo_x(alpha: complex, p: ParameterPoint, tol: float = TOL_XQUAD) -> IdentityReport:
    """Weyl x-differintegral of L against both coefficient candidates.

    The LHS is computed by ray quadrature in x (plus Cauchy derivatives for
    Re(alpha) >= 0), independent of either closed form.  The report's primary
    candidate is the one pinned by the golden adjudication file.
    """
    alpha = complex(alpha)
    precondition("theo_x", {"t": p.t, "x": p.x, "s": p.s, "alpha": alpha})
    lhs = weyl_x_fractional(alpha, p)
    shifted = lerch_series(p.replace(s=p.s + alpha), SeriesPolicy(rel_tol=1e-14))
    coefs = theo_x_coefficients(alpha, p.s)
    report = IdentityReport("theo_x", {"t": p.t, "x": p.x, "s": p.s, "alpha": alpha,
                                       "gamma": alpha}, lhs, [],
                            engines=("quadrature-x", "series"),
                            truncation={"leibniz_beta": "gamma+n"})
    report.add("rhs_termwise", coefs["termwise"] * shifted, tol)
    report.add("rhs_stated", coefs["stated"] * shifted, tol)
    report.primary = theo_x_golden()["winner"]
    return report


# ------------------------------------------------------------ PDE


class PdeMode(enum.Enum):
    SUBSTITUTION = "substitution"
    QUADRATURE_X = "quadrature-x"


def _pde_prefactor(alpha: complex, right: bool) -> complex:
    if right:
        return cf.cpow_principal(TWO_PI, alpha) * cf.cpow_principal(-1j, 3 * alpha)
    return cf.cpow_principal(-TWO_PI * 1j, alpha)


def check_pde(alpha: complex, p: ParameterPoint, N: int = 5000,
              mode: PdeMode | str = PdeMode.SUBSTITUTION, tol: float | None = None,
              right: bool = False) -> IdentityReport:
    """Infinite-order fractional PDE in t and x.

    RHS = prefactor sum_n x^n alpha! (alpha-s-n)! / ((alpha-n)! n! (-s)!) D_x^{n-alpha} L
    with z! = Gamma(z+1).  SUBSTITUTION evaluates D_x^{n-alpha} L through the
    inverted x-identity (exp(-i pi (n-alpha)) Gamma(1-s)/Gamma(1-s-n+alpha)
    L(s+n-alpha)) and truncates adaptively like :func:`check_theo_t`;
    QUADRATURE_X computes every D_x^{n-alpha} L by ray quadrature in x, with
    exactly N + 1 terms.
    """
    mode = PdeMode(mode)
    alpha = complex(alpha)
    ident_pre = "theo_t2" if right else "pde"
    precondition(ident_pre, {"t": p.t, "x": p.x, "s": p.s, "alpha": alpha})
    t, x, s = p.t, p.x, p.s
    if tol is None:
        tol = TOL_SPECTRAL if mode is PdeMode.SUBSTITUTION else TOL_XQUAD
    lhs_info = lerch_t_spectral_info(alpha, p, SeriesPolicy(rel_tol=1e-15), right=right)
    prefactor = _pde_prefactor(alpha, right)
    params = {"t": t, "x": x, "s": s, "alpha": alpha}
    flags = ["stated-domain:Im(t)<0"]
    if cf.is_nonpositive_integer(1 - s):
        raise DomainError("(-s)! has a pole: s must not be a positive integer")

    if mode is PdeMode.SUBSTITUTION:
        if cf.is_nonpositive_integer(alpha - s + 1):
            raise DomainError("(alpha-s)! has a pole")
        # coefficient c_n and substitution factor d_n (D_x^{n-alpha} L = d_n L(s+n-alpha))
        # grow like 1/n! and n! separately, so their product e_n is stepped instead
        c0 = cf.cgamma(alpha - s + 1) * cf.rgamma(1 - s)
        d0 = cf.cgamma(1 - s) * cf.rgamma(1 - s + alpha) * cmath.exp(1j * math.pi * alpha)
        e = [c0 * d0]
        log_x = cf.PRINCIPAL.log(x)
        policy = SeriesPolicy(rel_tol=1e-15)

        def term(n):
            while len(e) <= n:
                j = len(e) - 1
                a_s = alpha - s - j
                c_ratio = (alpha - j) / ((j + 1) * (a_s if a_s != 0 else 1))
                d_ratio = -(a_s if a_s != 0 else 1)
                e.append(e[j] * c_ratio * d_ratio)
            if e[n] == 0:
                return 0j
            # x^n D_x^{n-alpha} L, with x^n folded into the series
            return e[n] * lerch_series_scaled(ParameterPoint(t, x, s + n - alpha), n * log_x,
                                              policy)

        total, n_used, converged = _n_series(term, alpha, N, 0.25 * tol)
        if not converged:
            flags.append("truncation-limited")
        engines = ("spectral", "substitution")
    else:
        terms = []
        for n in range(N + 1):
            rg = cf.rgamma(alpha - n + 1)
            if rg == 0 or cf.is_nonpositive_integer(alpha - s - n + 1):
                continue
            coef = (cf.cgamma(alpha + 1) * cf.cgamma(alpha - s - n + 1) * rg
                    * cf.rgamma(n + 1) * cf.rgamma(1 - s))
            dx = weyl_x_fractional(n - alpha, p)
            terms.append(cf.cpow_principal(x, n) * coef * dx if n else coef * dx)
        total, n_used = _fsum(terms), N
        engines = ("spectral", "quadrature-x")
    report = IdentityReport("pde", params, lhs_info.value, [], engines=engines,
                            truncation={"series_terms": lhs_info.n_terms, "n_terms": n_used},
                            flags=flags)
    report.add("rhs", prefactor * total, tol)
    if right:
        report.flags.append("weyl-form")
    return report


IDENTITIES = ("frac_lerch", "weyl_lerch", "leibniz", "shift", "theo_t", "theo_t2",
              "x_lemma", "theo_x", "pde")
