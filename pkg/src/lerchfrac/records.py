"""Serialized report rows and the complex-literal grammar used by the CLI."""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, field

from .identities import IdentityReport

__all__ = ["parse_complex", "format_complex", "ReportRecord", "Status"]

_NUM = r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_REAL = re.compile(rf"^[+-]?{_NUM}$")
_IMAG = re.compile(rf"^(?P<im>[+-]?(?:{_NUM})?)i$")
_FULL = re.compile(rf"^(?P<re>[+-]?{_NUM})(?P<im>[+-](?:{_NUM})?)i$")


def _imag_part(text: str) -> float:
    if text in ("", "+"):
        return 1.0
    if text == "-":
        return -1.0
    return float(text)


def parse_complex(text: str) -> complex:
    """Parse ``a``, ``bi``, ``a+bi`` or ``a-bi`` (decimal reals, no spaces).

    ``i`` alone stands for 1i.  Raises ValueError on anything else.
    """
    s = str(text).strip()
    if _REAL.match(s):
        return complex(float(s), 0.0)
    m = _IMAG.match(s)
    if m:
        return complex(0.0, _imag_part(m.group("im")))
    m = _FULL.match(s)
    if m:
        return complex(float(m.group("re")), _imag_part(m.group("im")))
    raise ValueError(f"not a complex literal: {text!r} (expected a, bi, a+bi or a-bi)")


def format_complex(z: complex, digits: int = 15) -> str:
    z = complex(z)
    if z.imag == 0:
        return f"{z.real:.{digits}g}"
    return f"{z.real:.{digits}g}{z.imag:+.{digits}g}i"


def _c(z: complex) -> dict:
    z = complex(z)
    return {"re": z.real, "im": z.imag}


def _uc(d: dict) -> complex:
    return complex(d["re"], d["im"])


class Status:
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped-domain"


@dataclass
class ReportRecord:
    """One serialized row: an identity evaluated at one grid point.

    Floats are written with ``repr`` (shortest round-tripping form), so
    ``from_json(r.to_json()).to_json() == r.to_json()`` byte for byte.
    """

    identity: str
    params: dict[str, complex]
    status: str
    lhs: complex | None = None
    rhs: list[tuple[str, complex]] = field(default_factory=list)
    abs_err: list[float] = field(default_factory=list)
    rel_err: list[float] = field(default_factory=list)
    passes: list[bool] = field(default_factory=list)
    primary: str | None = None
    n_terms: int | None = None
    leibniz_N: int | None = None
    engine: list[str] = field(default_factory=list)
    flags: list[str] = field(default_factory=list)
    message: str | None = None

    @property
    def passed(self) -> bool:
        return self.status == Status.PASS

    @classmethod
    def from_report(cls, report: IdentityReport) -> "ReportRecord":
        tr = report.truncation
        return cls(
            identity=report.identity_id,
            params={k: complex(v) for k, v in report.params.items()},
            status=Status.PASS if report.passed else Status.FAIL,
            lhs=complex(report.lhs),
            rhs=[(c.label, c.value) for c in report.candidates],
            abs_err=[float(c.abs_err) for c in report.candidates],
            rel_err=[float(c.rel_err) for c in report.candidates],
            passes=[c.passed for c in report.candidates],
            primary=report.primary_candidate.label,
            n_terms=tr.get("n_terms", tr.get("series_terms")),
            leibniz_N=tr.get("leibniz_N"),
            engine=list(report.engines),
            flags=list(report.flags),
        )

    @classmethod
    def skipped(cls, identity: str, params: dict, message: str) -> "ReportRecord":
        return cls(identity=identity, params={k: complex(v) for k, v in params.items()},
                   status=Status.SKIPPED, flags=["skipped-domain"], message=message)

    def to_dict(self) -> dict:
        return {
            "identity": self.identity,
            "params": {k: _c(v) for k, v in self.params.items()},
            "status": self.status,
            "pass": self.passed,
            "lhs": None if self.lhs is None else _c(self.lhs),
            "rhs": [{"label": lab, **_c(v)} for lab, v in self.rhs],
            "abs_err": self.abs_err,
            "rel_err": self.rel_err,
            "passes": self.passes,
            "primary": self.primary,
            "n_terms": self.n_terms,
            "leibniz_N": self.leibniz_N,
            "engine": self.engine,
            "flags": self.flags,
            "message": self.message,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"), allow_nan=True)

    @classmethod
    def from_dict(cls, d: dict) -> "ReportRecord":
        return cls(
            identity=d["identity"],
            params={k: _uc(v) for k, v in d["params"].items()},
            status=d["status"],
            lhs=None if d["lhs"] is None else _uc(d["lhs"]),
            rhs=[(r["label"], complex(r["re"], r["im"])) for r in d["rhs"]],
            abs_err=[float(v) for v in d["abs_err"]],
            rel_err=[float(v) for v in d["rel_err"]],
            passes=list(d["passes"]),
            primary=d["primary"],
            n_terms=d["n_terms"],
            leibniz_N=d["leibniz_N"],
            engine=list(d["engine"]),
            flags=list(d["flags"]),
            message=d["message"],
        )

    @classmethod
    def from_json(cls, line: str) -> "ReportRecord":
        return cls.from_dict(json.loads(line))

    def csv_row(self) -> list[str]:
        """Flat export: identity, params, status, primary residual."""
        p = ";".join(f"{k}={format_complex(v, 17)}" for k, v in self.params.items())
        rel = ""
        if self.rel_err:
            idx = [lab for lab, _ in self.rhs].index(self.primary) if self.primary else 0
            rel = repr(self.rel_err[idx])
        return [self.identity, p, self.status, self.primary or "", rel,
                "|".join(self.flags)]


CSV_HEADER = ["identity", "params", "status", "primary", "rel_err", "flags"]


def is_finite_record(rec: ReportRecord) -> bool:
    return all(math.isfinite(v) for v in rec.rel_err)
