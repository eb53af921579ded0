"""Invariant suites behind ``lerchfrac selftest``.

Each suite returns a list of :class:`Outcome`.  Samples come from a seeded
``random.Random`` so runs are reproducible; the golden gamma table makes the
complexfn suite sensitive to perturbations of the Lanczos coefficients
(reflection and recurrence alone are nearly blind to a rescaled series).
"""

from __future__ import annotations

import cmath
import math
import random
import warnings
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import complexfn as cf
from . import identities as ids
from .fraccalc import (CauchyCircleConfig, cauchy_deriv, frac_composed, frac_exp,
                       frac_quadrature)
from .lerch import ParameterPoint, lerch_series, riemann


@dataclass(frozen=True)
class Outcome:
    suite: str
    name: str
    passed: bool
    detail: str


# mpmath at 50 digits
_GAMMA_GOLDEN = {
    complex(-2.5, 1): complex(-0.04173662580789361, -0.08636910736976348),
    complex(0.5, 2): complex(0.08985517670643163, -0.06049376029288757),
    complex(20, 5): complex(-4.487949206471812e+16, 4.636122845281109e+16),
    complex(3, -7): complex(-0.004411724185644916, 0.0036521031574413263),
    0.3: 2.991568987687591,
    1.7: 0.9086387328532904,
    4.25: 8.28508514183522,
    11.5: 11899423.083962249,
}
_LERCH_GOLDEN = (ParameterPoint(0.3 + 0.7j, 0.8 - 0.2j, 0.5 + 1j),
                 complex(0.8211913038834714, 0.2753136483832446))


def _rel(a: complex, b: complex) -> float:
    return abs(a - b) / max(abs(b), 1e-300)


def _worst(name: str, suite: str, errs, tol: float) -> Outcome:
    worst = max(errs) if errs else 0.0
    return Outcome(suite, name, bool(worst < tol), f"max rel err {worst:.2e} (tol {tol:.0e})")


def _sample_z(rng: random.Random, radius: float) -> complex:
    while True:
        z = complex(rng.uniform(-radius, radius), rng.uniform(-radius, radius))
        if abs(z) <= radius and abs(z - round(z.real)) > 0.1:
            return z


def suite_complexfn(rng: random.Random) -> list[Outcome]:
    S = "complexfn"
    out = [_worst("gamma golden values", S,
                  [_rel(cf.cgamma(z), v) for z, v in _GAMMA_GOLDEN.items()], 1e-12)]
    zs = [_sample_z(rng, 20) for _ in range(300)]
    out.append(_worst("reflection", S,
                      [abs(cf.cgamma(z) * cf.cgamma(1 - z) * cf.sinpi(z) / math.pi - 1) for z in zs],
                      1e-10))
    out.append(_worst("recurrence", S,
                      [_rel(cf.cgamma(z + 1), z * cf.cgamma(z)) for z in zs], 1e-11))
    errs = []
    for _ in range(100):
        b = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
        m = rng.randint(-6, 6)
        if m >= 0:
            ref = 1 + 0j
            for _ in range(m):
                ref *= b
        else:
            ref = 1 + 0j
            for _ in range(-m):
                ref /= b
        errs.append(_rel(cf.cpow_principal(b, m), ref))
    out.append(_worst("integer powers", S, errs, 1e-12))
    errs = []
    for _ in range(100):
        a = complex(rng.uniform(-5, 5), rng.uniform(-2, 2))
        n = rng.randint(1, 8)
        lhs = cf.gbinom(a, n)
        errs.append(abs(lhs - cf.gbinom(a - 1, n) - cf.gbinom(a - 1, n - 1)) / max(abs(lhs), 1))
    out.append(_worst("binomial Pascal rule", S, errs, 1e-10))
    return out


def suite_lerch(rng: random.Random) -> list[Outcome]:
    S = "lerch"
    out = [
        _worst("zeta(2), zeta(4)", S, [_rel(riemann(2), math.pi ** 2 / 6),
                                       _rel(riemann(4), math.pi ** 4 / 90)], 1e-12),
        _worst("geometric closed form s=0", S,
               [_rel(lerch_series(ParameterPoint(1j, 1, 0)), 1 / (1 - math.exp(-2 * math.pi)))],
               1e-13),
        _worst("golden geometric point", S, [_rel(lerch_series(_LERCH_GOLDEN[0]),
                                                  _LERCH_GOLDEN[1])], 1e-12),
    ]
    errs = []
    for _ in range(30):
        p = ParameterPoint(complex(rng.uniform(-1, 1), rng.uniform(0.2, 1)),
                           complex(rng.uniform(0.5, 2), rng.uniform(-0.5, 0.5)),
                           complex(rng.uniform(-2, 3), rng.uniform(-3, 3)))
        # L(t, x, s) = x^-s + e^{2 pi i t} L(t, x+1, s)
        lhs = lerch_series(p)
        rhs = cf.cpow_principal(p.x, -p.s) + cmath.exp(2j * math.pi * p.t) * lerch_series(
            p.replace(x=p.x + 1))
        errs.append(_rel(rhs, lhs))
    out.append(_worst("x-shift functional equation", S, errs, 1e-11))
    return out


def suite_fraccalc(rng: random.Random) -> list[Outcome]:
    S = "fraccalc"
    errs = []
    for k in (1, 2, 1 + 1j):
        for order in (-0.9, -0.5, -0.1):
            t = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))

            def f(u, k=k):
                return np.exp(k * np.asarray(u))

            errs.append(_rel(frac_quadrature(order, f, t), frac_exp(order, k) * cmath.exp(k * t)))
    out = [_worst("quadrature vs exponential rule", S, errs, 1e-9)]
    errs = []
    for order in (0.5, 1.5):
        t = complex(rng.uniform(-1, 1), 0)
        errs.append(_rel(frac_composed(order, lambda u: np.exp(2 * np.asarray(u)), t),
                         frac_exp(order, 2) * cmath.exp(2 * t)))
    out.append(_worst("composed engine", S, errs, 1e-7))
    d = cauchy_deriv(2, lambda u: np.exp(2 * np.asarray(u)), 0, CauchyCircleConfig(0.5))
    out.append(_worst("Cauchy second derivative", S, [_rel(d, 4)], 1e-12))
    a, b = -0.3, -0.4
    errs = []
    for t in (0.0, 0.5):
        inner = lambda u: np.array([frac_quadrature(b, np.exp, z) for z in np.atleast_1d(u)])
        errs.append(_rel(frac_quadrature(a, inner, t), frac_quadrature(a + b, np.exp, t)))
    out.append(_worst("quadrature semigroup", S, errs, 1e-7))
    return out


def suite_identities(rng: random.Random) -> list[Outcome]:
    S = "identities"
    reports = [
        ids.check_frac_lerch(ParameterPoint(0.2 + 0.8j, 1 - 0.5j, 0.5 + 2j)),
        ids.check_weyl_lerch(ParameterPoint(0.3 + 0.7j, 1 + 0.4j, 1.5)),
        ids.check_leibniz(1, 1, 0.5),
        ids.check_leibniz(1, 1j, 1.3, 0.3),
        ids.check_shift_identity(-0.5, 1),
    ]
    p = ParameterPoint(0.2 + 0.9j, 1, 1.2)
    for a in (1, 2, 3):
        reports.append(ids.check_theo_t(a, p))
        reports.append(ids.check_x_lemma(a, ParameterPoint(0.1 + 0.8j, 1.2, 0.7)))
    reports.append(ids.check_theo_t(2.5, p, tol=1e-6))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        reports.append(ids.check_theo_x(0.5, ParameterPoint(0.3 + 0.9j, 1.5, 2.5)))
    out = []
    for r in reports:
        prim = r.primary_candidate
        out.append(Outcome(S, f"{r.identity_id} {_short(r.params)}", r.passed,
                           f"{prim.label} rel err {prim.rel_err:.2e}"))
    errs = []
    for _ in range(20):
        s = complex(rng.uniform(-2, 3), rng.uniform(-1, 1))
        alpha = rng.uniform(0.1, 1.9)
        c = ids.theo_x_coefficients(alpha, s)
        ratio = cmath.exp(-1j * math.pi * alpha) * cf.sinpi(s + alpha) / cf.sinpi(s)
        errs.append(_rel(c["stated"] / c["termwise"], ratio))
    out.append(_worst("coefficient ratio", S, errs, 1e-10))
    return out


def suite_cli(rng: random.Random) -> list[Outcome]:
    from .records import ReportRecord, format_complex, parse_complex

    S = "cli"
    zs = [complex(rng.uniform(-9, 9), rng.uniform(-9, 9)) for _ in range(50)]
    ok = all(parse_complex(format_complex(z, 17)) == z for z in zs)
    out = [Outcome(S, "complex literal round trip", ok, "50 samples")]
    rec = ReportRecord.from_report(ids.check_frac_lerch(ParameterPoint(0.2 + 0.8j, 1, 0.5)))
    line = rec.to_json()
    out.append(Outcome(S, "record round trip", ReportRecord.from_json(line).to_json() == line,
                       f"{len(line)} bytes"))
    return out


def _short(params: dict) -> str:
    return " ".join(f"{k}={complex(v).real:g}{complex(v).imag:+g}i" for k, v in params.items()
                    if k in ("alpha", "s", "k", "mu"))


SUITES: dict[str, Callable[[random.Random], list[Outcome]]] = {
    "complexfn": suite_complexfn,
    "lerch": suite_lerch,
    "fraccalc": suite_fraccalc,
    "identities": suite_identities,
    "cli": suite_cli,
}


def collect(names: list[str] | None = None, seed: int = 20240607) -> list[Outcome]:
    names = list(names or SUITES)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise ValueError(f"unknown suite(s) {unknown}; choose from {list(SUITES)}")
    out = []
    for name in names:
        rng = random.Random(f"{seed}:{name}")
        try:
            out.extend(SUITES[name](rng))
        except Exception as exc:  # a crash is a failure of that suite, not of the runner
            out.append(Outcome(name, "suite crashed", False, f"{type(exc).__name__}: {exc}"))
    return out


def run(names: list[str] | None = None, seed: int = 20240607) -> int:
    try:
        outcomes = collect(names, seed)
    except ValueError as exc:
        print(f"error: {exc}")
        return 2
    width = max(len(o.name) for o in outcomes)
    for o in outcomes:
        print(f"{'PASS' if o.passed else 'FAIL'}  {o.suite:<10} {o.name:<{width}}  {o.detail}")
    failed = sum(not o.passed for o in outcomes)
    print(f"{len(outcomes) - failed}/{len(outcomes)} checks passed")
    return 0 if failed == 0 else 1
