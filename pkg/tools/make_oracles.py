"""Generate frozen reference values with mpmath at 50 digits.

Run once before the build; the outputs are committed:

    tests/golden/oracle_values.json        reference values used by the tests
    src/lerchfrac/data/theo_x_golden.json  adjudication of the x-identity coefficient

mpmath is only needed here, never at runtime.
"""

from __future__ import annotations

import json
from pathlib import Path

import mpmath as mp

mp.mp.dps = 50
ROOT = Path(__file__).resolve().parents[1]


def c(z) -> list[float]:
    z = mp.mpc(z)
    return [float(z.real), float(z.imag)]


def cpow(b, a):
    b, a = mp.mpc(b), mp.mpc(a)
    return mp.exp(a * (mp.log(abs(b)) + 1j * mp.arg(b)))


def lerch(t, x, s, extra=lambda m: 1):
    """Direct summation, geometric regime only."""
    t, x, s = mp.mpc(t), mp.mpc(x), mp.mpc(s)
    q = mp.exp(2j * mp.pi * t)
    total = mp.mpc(0)
    m = 0
    while True:
        term = extra(m) * cpow(m + x, -s) * q ** m
        total += term
        if m > 10 and abs(term) < mp.mpf(10) ** -55 * abs(total):
            return total
        m += 1


def lerch_t_spectral(alpha, t, x, s, right=False):
    w = -2j * mp.pi if right else 2j * mp.pi
    return lerch(t, x, s, extra=lambda m: cpow(w * m, alpha) if m else 0)


def main() -> None:
    out: dict = {}
    out["gamma_2p1i"] = c(mp.gamma(2 + 1j))
    out["cpow_1p1i_2.5p1i"] = c(cpow(1 + 1j, 2.5 + 1j))
    s = mp.mpc(0.5, 3)
    out["gamma_ratio_shift_3"] = c((1 - s - 1) * (1 - s - 2) * (1 - s - 3))
    out["gamma_golden"] = {repr(z): c(mp.gamma(z)) for z in
                           [0.3, 1.7, 4.25, 11.5, complex(0.5, 2.0), complex(-2.5, 1.0),
                            complex(3.0, -7.0), complex(20.0, 5.0)]}
    out["lerch_geometric"] = c(lerch(0.3 + 0.7j, 0.8 - 0.2j, 0.5 + 1j))
    out["lerch_s0_t_i"] = c(1 / (1 - mp.exp(-2 * mp.pi)))
    out["hurwitz_0.7_2.5"] = c(mp.zeta(2.5, 0.7))
    out["lerch_t_half"] = c(lerch_t_spectral(0.5, 0.2 + 0.9j, 1, 1.5))
    # termwise third x-derivative: (-s)(-s-1)(-s-2) (m+x)^(-s-3)
    out["x_partial_3"] = c((-0.7) * (-1.7) * (-2.7) * lerch(0.1 + 0.8j, 1.2, 3.7))
    out["frac_lerch_point"] = c(lerch(0.2 + 0.8j, 1 - 0.5j, 0.5 + 2j))
    out["frac_lerch_boundary"] = c(lerch(0.2 + 0.8j, 1, 0.5))
    out["weyl_lerch_point"] = c(lerch(0.3 + 0.7j, 1 + 0.4j, 1.5))
    out["theo_t_2.5"] = c(lerch_t_spectral(2.5, 0.2 + 0.9j, 1, 1.2))
    # termwise Weyl power rule: oracle for the x-fractional derivative
    t, x, s = 0.3 + 0.9j, 1.5, 2.5
    out["weyl_x_0.5"] = c(mp.gamma(s + 0.5) / mp.gamma(s) * lerch(t, x, s + 0.5))

    golden_dir = ROOT / "tests" / "golden"
    golden_dir.mkdir(parents=True, exist_ok=True)
    (golden_dir / "oracle_values.json").write_text(json.dumps(out, indent=1, sort_keys=True) + "\n")

    # adjudicate the x-identity coefficient: the LHS oracle is the termwise
    # power rule, compared against the two closed-form candidates
    points = []
    for (t, x, s) in [(0.3 + 0.9j, 1.5, 2.5), (0.2 + 0.8j, 1.2, 1.7 + 0.5j),
                      (0.25 + 0.7j, 0.9 - 0.1j, 3.2)]:
        for alpha in (0.5, 1.5, 1, 2):
            lhs = mp.gamma(s + alpha) / mp.gamma(s) * lerch(t, x, s + alpha)
            shifted = lerch(t, x, s + alpha)
            stated = mp.exp(-1j * mp.pi * alpha) * mp.gamma(1 - s) * mp.rgamma(1 - s - alpha) * shifted \
                if not mp.isint(1 - s) else mp.nan
            termwise = mp.gamma(s + alpha) / mp.gamma(s) * shifted
            rel = lambda v: float(abs(v - lhs) / abs(lhs))
            points.append({"t": c(t), "x": c(x), "s": c(s), "alpha": alpha,
                           "lhs": c(lhs),
                           "rel_err": {"rhs_stated": rel(stated), "rhs_termwise": rel(termwise)}})
    noninteger = [p for p in points if p["alpha"] % 1]
    score = {lab: max(p["rel_err"][lab] for p in noninteger) for lab in ("rhs_stated", "rhs_termwise")}
    winner = min(score, key=score.get)
    golden = {"winner": winner, "max_rel_err_noninteger": score, "points": points}
    data_dir = ROOT / "src" / "lerchfrac" / "data"
    data_dir.mkdir(parents=True, exist_ok=True)
    (data_dir / "theo_x_golden.json").write_text(json.dumps(golden, indent=1) + "\n")
    print("winner:", winner, score)


if __name__ == "__main__":
    main()
