"""Machine-readable reports: JSON with shortest round-trip floats, CSV at 17 digits."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import Sequence

from .identities import CheckResult, GridSpec, VerifyReport
from .omega import OmegaResult

SCHEMA_VERSION = "1"
CSV_COLUMNS = ("id", "s_re", "s_im", "n", "mode", "lhs_re", "lhs_im", "rhs_re",
               "rhs_im", "abs_residual", "rel_residual", "pass")
OMEGA_CSV_COLUMNS = ("s_re", "s_im", "n", "r1_re", "r1_im", "r2_re", "r2_im",
                     "r3_re", "r3_im", "r4_re", "r4_im", "spread")


@dataclass(frozen=True)
class Report:
    """Serializable report; ``results`` holds check or Omega records."""

    tol_abs: float
    tol_rel: float
    grid: dict | None
    results: tuple
    total: int
    passed: int
    failed: int
    max_residual: float
    schema_version: str = SCHEMA_VERSION


def _c(z: complex) -> dict:
    z = complex(z)
    return {"re": z.real, "im": z.imag}


def _z(d: dict) -> complex:
    return complex(d["re"], d["im"])


def from_verify(report: VerifyReport) -> Report:
    s = report.summary
    return Report(report.tol_abs, report.tol_rel, report.grid.describe(),
                  report.results, s.total, s.passed, s.failed, s.max_residual)


def from_omega(results: Sequence[OmegaResult], tol: float, grid: GridSpec | None = None
               ) -> Report:
    passed = sum(r.passed(tol) for r in results)
    worst = max((r.residual for r in results), default=0.0)
    return Report(tol, tol, None if grid is None else grid.describe(), tuple(results),
                  len(results), passed, len(results) - passed, worst)


def _result_dict(r) -> dict:
    if isinstance(r, CheckResult):
        return {"id": r.id, "s": _c(r.s), "n": r.n, "mode": r.mode, "lhs": _c(r.lhs),
                "rhs": _c(r.rhs), "abs_residual": r.abs_residual,
                "rel_residual": r.rel_residual, "pass": bool(r.passed)}
    return {"s": _c(r.s), "n": r.n, "r1_polygamma": _c(r.r1_polygamma),
            "r2_alternating": _c(r.r2_alternating),
            "r3_trig_derivative": _c(r.r3_trig_derivative),
            "r4_hurwitz": _c(r.r4_hurwitz), "spread": r.spread}


def _result_from(d: dict):
    if "id" in d:
        return CheckResult(d["id"], _z(d["s"]), d["n"], d["mode"], _z(d["lhs"]),
                           _z(d["rhs"]), d["abs_residual"], d["rel_residual"], d["pass"])
    return OmegaResult(_z(d["s"]), d["n"], _z(d["r1_polygamma"]), _z(d["r2_alternating"]),
                       _z(d["r3_trig_derivative"]), _z(d["r4_hurwitz"]), d["spread"])


def to_dict(report: Report) -> dict:
    return {
        "schema_version": report.schema_version,
        "context": {"tol_abs": report.tol_abs, "tol_rel": report.tol_rel,
                    "grid": report.grid},
        "results": [_result_dict(r) for r in report.results],
        "summary": {"total": report.total, "passed": report.passed,
                    "failed": report.failed, "max_residual": report.max_residual},
    }


def from_dict(d: dict) -> Report:
    ctx, summ = d["context"], d["summary"]
    return Report(ctx["tol_abs"], ctx["tol_rel"], ctx["grid"],
                  tuple(_result_from(r) for r in d["results"]), summ["total"],
                  summ["passed"], summ["failed"], summ["max_residual"],
                  d["schema_version"])


def to_json(report: Report) -> str:
    """JSON text; floats use Python's shortest round-trip repr."""
    return json.dumps(to_dict(report), indent=2) + "\n"


def from_json(text: str) -> Report:
    return from_dict(json.loads(text))


def _g(x: float) -> str:
    return format(float(x), ".17g")


def to_csv(report: Report) -> str:
    """CSV text with every float at 17 significant digits."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    omega_rows = bool(report.results) and isinstance(report.results[0], OmegaResult)
    w.writerow(OMEGA_CSV_COLUMNS if omega_rows else CSV_COLUMNS)
    for r in report.results:
        if omega_rows:
            row = [_g(r.s.real), _g(r.s.imag), r.n]
            for v in r.values:
                row += [_g(v.real), _g(v.imag)]
            w.writerow(row + [_g(r.spread)])
        else:
            w.writerow([r.id, _g(r.s.real), _g(r.s.imag), "" if r.n is None else r.n,
                        r.mode, _g(r.lhs.real), _g(r.lhs.imag), _g(r.rhs.real),
                        _g(r.rhs.imag), _g(r.abs_residual), _g(r.rel_residual),
                        "true" if r.passed else "false"])
    return buf.getvalue()
