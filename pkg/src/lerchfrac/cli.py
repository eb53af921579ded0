"""Command-line interface: ``lerchfrac {eval,frac,verify,sweep,selftest}``.

Complex literals are written ``a``, ``bi``, ``a+bi`` or ``a-bi`` (decimal
reals, no spaces; ``i`` alone is 1i).  Exit codes: 0 success/pass, 1 failed
check or numerical failure, 2 domain error or malformed input.
"""

from __future__ import annotations

import argparse
import csv
import itertools
import json
import os
import sys
import tempfile
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import identities as ids
from .errors import DomainError, LerchFracError
from .fraccalc import (CauchyCircleConfig, ExpSum, Side, frac_composed, frac_expsum,
                       frac_quadrature, kernel_expsum, kernel_function, kernel_terms_needed)
from .lerch import ParameterPoint, SeriesPolicy, lerch_series
from .records import CSV_HEADER, ReportRecord, format_complex, parse_complex

EXIT_OK, EXIT_FAIL, EXIT_DOMAIN = 0, 1, 2
AXES = ("t", "x", "s", "alpha", "k", "l", "mu")
DEFAULT_MAX_POINTS = 10**6

_REQUIRED = {
    "frac_lerch": ("t", "x", "s"),
    "weyl_lerch": ("t", "x", "s"),
    "leibniz": ("k", "l", "alpha"),
    "shift": ("alpha", "k"),
    "theo_t": ("t", "x", "s", "alpha"),
    "theo_t2": ("t", "x", "s", "alpha"),
    "x_lemma": ("t", "x", "s", "k"),
    "theo_x": ("t", "x", "s", "alpha"),
    "pde": ("t", "x", "s", "alpha"),
}


class UsageError(Exception):
    """Malformed command-line input or sweep spec (exit 2)."""


# ------------------------------------------------------------ dispatch


def run_identity(identity: str, params: dict[str, complex], tol: float | None = None,
                 engine: str = "auto", options: dict | None = None) -> ids.IdentityReport:
    """Evaluate one identity check from a flat parameter dict."""
    options = dict(options or {})
    if identity not in _REQUIRED:
        raise UsageError(f"unknown identity {identity!r}; choose from {', '.join(ids.IDENTITIES)}")
    missing = [k for k in _REQUIRED[identity] if k not in params]
    if missing:
        raise UsageError(f"{identity} needs --{' --'.join(missing)}")
    kw = {} if tol is None else {"tol": tol}
    g = params.get
    if identity in ("frac_lerch", "weyl_lerch", "theo_t", "theo_t2", "x_lemma", "theo_x", "pde"):
        p = ParameterPoint(g("t"), g("x"), g("s"))
    if identity == "frac_lerch":
        return ids.check_frac_lerch(p, engine=engine, **kw)
    if identity == "weyl_lerch":
        return ids.check_weyl_lerch(p, engine=engine, **kw)
    if identity == "leibniz":
        window = ids.LeibnizWindow(int(options.get("N", 60)),
                                   ids.Acceleration(options.get("acceleration", "euler")))
        return ids.check_leibniz(g("k"), g("l"), g("alpha"), g("mu", 0), window,
                                 Side(options.get("side", "left")), t=g("t", 0), **kw)
    if identity == "shift":
        return ids.check_shift_identity(g("alpha"), g("k"), g("t", 0), **kw)
    if identity in ("theo_t", "theo_t2"):
        fn = ids.check_theo_t if identity == "theo_t" else ids.check_theo_t2
        return fn(g("alpha"), p, int(options.get("nmax", 5000)),
                  subtract_m0=bool(options.get("subtract_m0", False)), **kw)
    if identity == "x_lemma":
        k = complex(g("k"))
        if k.imag or k.real != int(k.real):
            raise DomainError("x_lemma needs an integer k")
        return ids.check_x_lemma(int(k.real), p, **kw)
    if identity == "theo_x":
        return ids.check_theo_x(g("alpha"), p, **kw)
    mode = options.get("mode", "substitution")
    N = int(options.get("N", 5000 if mode == "substitution" else 3))
    return ids.check_pde(g("alpha"), p, N, mode, tol, right=bool(options.get("right", False)))


def evaluate_point(identity: str, params: dict, tol: float | None, engine: str,
                   options: dict) -> ReportRecord:
    """Run one check; hypotheses violations become skipped-domain records."""
    try:
        ids.precondition(identity, params)
        report = run_identity(identity, params, tol, engine, options)
    except DomainError as exc:
        return ReportRecord.skipped(identity, params, str(exc))
    except (LerchFracError, ArithmeticError) as exc:
        rec = ReportRecord(identity, {k: complex(v) for k, v in params.items()}, "fail",
                           flags=[f"error:{type(exc).__name__}"], message=str(exc))
        return rec
    return ReportRecord.from_report(report)


# ------------------------------------------------------------ sweep


@dataclass
class SweepSpec:
    """Parsed sweep configuration (JSON file).

    Schema::

        {"identity": "frac_lerch",
         "grid": {"t": ["0.2+0.5i", ...] | {"re": [a, b, n], "im": [a, b, n]}, ...},
         "tol": 1e-8, "engine": "spectral", "options": {...},
         "out": "report.jsonl", "jobs": 4, "max_points": 1000000}

    Grid axes are t, x, s, alpha, k, l, mu.  A linspace axis takes the
    product of its real and imaginary ranges (real index varies slowest);
    a missing ``im`` (or ``re``) range means the single value 0.
    """

    identity: str
    grid: dict[str, list[complex]]
    tol: float | None = None
    engine: str = "auto"
    options: dict = field(default_factory=dict)
    out: str | None = None
    jobs: int | None = None
    max_points: int = DEFAULT_MAX_POINTS

    @property
    def size(self) -> int:
        if not self.grid:
            return 0
        n = 1
        for values in self.grid.values():
            n *= len(values)
        return n

    def points(self):
        """Grid points in lexicographic order of the axis indices."""
        if not self.grid:
            return
        names = [a for a in AXES if a in self.grid]
        for combo in itertools.product(*(self.grid[a] for a in names)):
            yield dict(zip(names, combo))

    @classmethod
    def from_dict(cls, d: dict) -> "SweepSpec":
        if not isinstance(d, dict):
            raise UsageError("sweep spec must be a JSON object")
        unknown = set(d) - {"identity", "grid", "tol", "engine", "options", "out", "jobs",
                            "max_points"}
        if unknown:
            raise UsageError(f"unknown sweep keys: {sorted(unknown)}")
        identity = d.get("identity")
        if identity not in _REQUIRED:
            raise UsageError(f"unknown identity {identity!r}")
        grid_in = d.get("grid", {})
        if not isinstance(grid_in, dict):
            raise UsageError("grid must be an object of axes")
        grid = {}
        for axis, spec in grid_in.items():
            if axis not in AXES:
                raise UsageError(f"unknown grid axis {axis!r}")
            grid[axis] = _axis_values(axis, spec)
        engine = d.get("engine", "auto")
        if engine not in ("auto", "spectral", "quadrature", "composed"):
            raise UsageError(f"unknown engine {engine!r}")
        tol = d.get("tol")
        if tol is not None and not (isinstance(tol, (int, float)) and tol > 0):
            raise UsageError("tol must be a positive number")
        jobs = d.get("jobs")
        if jobs is not None and not (isinstance(jobs, int) and jobs >= 1):
            raise UsageError("jobs must be a positive integer")
        max_points = d.get("max_points", DEFAULT_MAX_POINTS)
        if not (isinstance(max_points, int) and max_points >= 0):
            raise UsageError("max_points must be a nonnegative integer")
        options = d.get("options", {})
        if not isinstance(options, dict):
            raise UsageError("options must be an object")
        spec = cls(identity, grid, tol, engine, options, d.get("out"), jobs, max_points)
        missing = [a for a in _REQUIRED[identity] if a not in grid]
        if spec.size and missing:
            raise UsageError(f"{identity} grid is missing axes {missing}")
        if spec.size > max_points:
            raise UsageError(f"grid has {spec.size} points, above the cap of {max_points}")
        return spec


def _axis_values(axis: str, spec) -> list[complex]:
    try:
        if isinstance(spec, list):
            return [parse_complex(v) if isinstance(v, str) else complex(v) for v in spec]
        if isinstance(spec, dict):
            re = np.linspace(*_triplet(spec.get("re"))) if "re" in spec else np.zeros(1)
            im = np.linspace(*_triplet(spec.get("im"))) if "im" in spec else np.zeros(1)
            return [complex(a, b) for a in re for b in im]
    except (TypeError, ValueError) as exc:
        raise UsageError(f"bad values for axis {axis!r}: {exc}") from None
    raise UsageError(f"axis {axis!r} must be a list or a {{re, im}} linspace object")


def _triplet(v) -> tuple[float, float, int]:
    if not (isinstance(v, list) and len(v) == 3 and isinstance(v[2], int) and v[2] >= 0):
        raise ValueError("linspace needs [start, stop, count]")
    return float(v[0]), float(v[1]), v[2]


def _sweep_task(args) -> str:
    identity, params, tol, engine, options = args
    return evaluate_point(identity, params, tol, engine, options).to_json()


def run_sweep(spec: SweepSpec, out: Path, jobs: int = 1, csv_path: Path | None = None):
    """Evaluate every grid point and write records to ``out`` in grid order.

    Output goes to a temporary file that is renamed on success and removed
    on any failure, so an aborted sweep leaves no partial report.  Returns
    (passed, failed, skipped).
    """
    tasks = [(spec.identity, p, spec.tol, spec.engine, spec.options) for p in spec.points()]
    out = Path(out)
    out.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(prefix=out.name + ".", suffix=".part", dir=out.parent)
    counts = {"pass": 0, "fail": 0, "skipped-domain": 0}
    rows = []
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            if jobs > 1 and len(tasks) > 1:
                chunk = max(1, len(tasks) // (jobs * 8))
                with ProcessPoolExecutor(max_workers=jobs) as pool:
                    lines = pool.map(_sweep_task, tasks, chunksize=chunk)
                    for line in lines:
                        _emit(fh, line, counts, rows, csv_path)
            else:
                for task in tasks:
                    _emit(fh, _sweep_task(task), counts, rows, csv_path)
        os.replace(tmp, out)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    if csv_path is not None:
        with open(csv_path, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(CSV_HEADER)
            writer.writerows(rows)
    return counts["pass"], counts["fail"], counts["skipped-domain"]


def _emit(fh, line, counts, rows, csv_path):
    fh.write(line + "\n")
    rec = ReportRecord.from_json(line)
    counts[rec.status] += 1
    if csv_path is not None:
        rows.append(rec.csv_row())


def summary_line(passed: int, failed: int, skipped: int) -> str:
    return f"{passed}/{passed + failed} passed; {failed} failed; {skipped} skipped-domain"


# ------------------------------------------------------------ commands


def _complex_arg(text: str) -> complex:
    try:
        return parse_complex(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _point_params(args) -> dict[str, complex]:
    return {a: getattr(args, a) for a in AXES if getattr(args, a, None) is not None}


def cmd_eval(args) -> int:
    policy = SeriesPolicy(rel_tol=args.rel_tol, max_terms=args.max_terms)
    value = lerch_series(ParameterPoint(args.t, args.x, args.s), policy)
    print(format_complex(value))
    return EXIT_OK


def cmd_frac(args) -> int:
    side = Side(args.side)
    order, t = args.order, args.t
    if args.kernel_x is not None:
        x = args.kernel_x
        engine = args.engine
        if engine == "auto":
            engine = "quadrature" if order.real < 0 else "composed"
        if engine == "spectral":
            M = kernel_terms_needed(t, 1e-3 * args.tol)
            value = frac_expsum(order, kernel_expsum(x, M), side, t)
        elif engine == "quadrature":
            value = frac_quadrature(order, kernel_function(x), t, side)
        else:
            value = frac_composed(order, kernel_function(x), t, side,
                                  circle=CauchyCircleConfig(0.5 * t.imag), max_radius=t.imag)
    else:
        if not args.term:
            raise UsageError("frac needs --term COEF,FREQ (repeatable) or --kernel-x X")
        f = ExpSum(tuple(args.term))
        engine = args.engine
        if engine in ("auto", "spectral"):
            value = frac_expsum(order, f, side, t)
        elif engine == "quadrature":
            value = frac_quadrature(order, f, t, side)
        else:
            value = frac_composed(order, f, t, side)
    print(format_complex(value))
    return EXIT_OK


def _term_arg(text: str) -> tuple[complex, complex]:
    try:
        c, w = text.split(",")
        return parse_complex(c), parse_complex(w)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected COEF,FREQ, got {text!r}") from None


def _options_from_args(args) -> dict:
    opts = {}
    for name in ("N", "nmax", "mode", "side", "acceleration"):
        v = getattr(args, name, None)
        if v is not None:
            opts[name] = v
    if getattr(args, "subtract_m0", False):
        opts["subtract_m0"] = True
    if getattr(args, "right", False):
        opts["right"] = True
    return opts


def cmd_verify(args) -> int:
    params = _point_params(args)
    if args.identity not in _REQUIRED:
        raise UsageError(f"unknown identity {args.identity!r}; choose from {', '.join(ids.IDENTITIES)}")
    missing = [k for k in _REQUIRED[args.identity] if k not in params]
    if missing:
        raise UsageError(f"{args.identity} needs --{' --'.join(missing)}")
    ids.precondition(args.identity, params)
    report = run_identity(args.identity, params, args.tol, args.engine, _options_from_args(args))
    rec = ReportRecord.from_report(report)
    print(rec.to_json())
    return EXIT_OK if rec.passed else EXIT_FAIL


def _default_jobs() -> int:
    env = os.environ.get("LERCHFRAC_JOBS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise UsageError(f"LERCHFRAC_JOBS must be an integer, got {env!r}") from None
    return 1


def cmd_sweep(args) -> int:
    try:
        with open(args.config, encoding="utf-8") as fh:
            raw = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read sweep spec: {exc}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"sweep spec is not valid JSON: {exc}") from None
    spec = SweepSpec.from_dict(raw)
    out = args.out or spec.out
    if not out:
        raise UsageError("sweep needs --out or an 'out' key in the spec")
    jobs = args.jobs or spec.jobs or _default_jobs()
    counts = run_sweep(spec, Path(out), jobs, Path(args.csv) if args.csv else None)
    print(summary_line(*counts))
    return EXIT_OK if counts[1] == 0 else EXIT_FAIL


def cmd_selftest(args) -> int:
    from . import selftest

    return selftest.run(args.suite, seed=args.seed)


# ------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lerchfrac",
        description="Lerch zeta function, fractional differintegrals and identity checks.",
        epilog="Complex literals: a, bi, a+bi, a-bi (e.g. 0.2+0.8i, -1.5, 2i).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate L(t, x, s) by its series")
    p.add_argument("--t", type=_complex_arg, required=True)
    p.add_argument("--x", type=_complex_arg, required=True)
    p.add_argument("--s", type=_complex_arg, required=True)
    p.add_argument("--rel-tol", type=float, default=1e-13)
    p.add_argument("--max-terms", type=int, default=10**6)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("frac", help="differintegral of an exponential sum or the Lerch kernel")
    p.add_argument("--order", type=_complex_arg, required=True)
    p.add_argument("--t", type=_complex_arg, required=True, help="evaluation point")
    p.add_argument("--side", choices=["left", "right"], default="left")
    p.add_argument("--engine", choices=["auto", "spectral", "quadrature", "composed"],
                   default="auto")
    p.add_argument("--term", type=_term_arg, action="append",
                   help="exponential term COEF,FREQ meaning COEF*exp(FREQ*t); repeatable")
    p.add_argument("--kernel-x", type=_complex_arg,
                   help="use the kernel exp(2 pi i t x)/(1 - exp(2 pi i t)) with this x")
    p.add_argument("--tol", type=float, default=1e-10)
    p.set_defaults(func=cmd_frac)

    p = sub.add_parser("verify", help="check one identity at one point; prints a JSON record")
    p.add_argument("identity", help=", ".join(ids.IDENTITIES))
    for axis in AXES:
        p.add_argument(f"--{axis}", type=_complex_arg)
    p.add_argument("--tol", type=float)
    p.add_argument("--engine", choices=["auto", "spectral", "quadrature", "composed"],
                   default="auto")
    p.add_argument("--N", type=int, help="Leibniz window or PDE truncation")
    p.add_argument("--nmax", type=int, help="n-series cap for theo_t/theo_t2")
    p.add_argument("--mode", choices=["substitution", "quadrature-x"])
    p.add_argument("--side", choices=["left", "right"])
    p.add_argument("--acceleration", choices=["none", "euler"])
    p.add_argument("--subtract-m0", action="store_true",
                   help="accelerate the n-series by removing the m = 0 contribution")
    p.add_argument("--right", action="store_true", help="Weyl form of the PDE")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="run a parameter-grid sweep from a JSON spec")
    p.add_argument("--config", required=True)
    p.add_argument("--out")
    p.add_argument("--jobs", type=int, help="worker processes (default $LERCHFRAC_JOBS or 1)")
    p.add_argument("--csv", help="also write a flat CSV table")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("selftest", help="run the invariant suites at pinned seeds")
    p.add_argument("--suite", action="append",
                   help="restrict to a suite (complexfn, lerch, fraccalc, identities, cli)")
    p.add_argument("--seed", type=int, default=20240607)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_DOMAIN if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (LerchFracError, ArithmeticError) as exc:
        print(f"numerical failure: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
