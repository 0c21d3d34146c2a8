"""Command-line front end.

Usage::

    zetaomega eval zeta 2
    zetaomega eval polygamma --order 2 0.5
    zetaomega verify --ids I14 --grid real:0.1:0.9:17 --tol 1e-9 --format json
    zetaomega omega 0.5 --n 1 --all
    zetaomega omega --beta --n 1

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 math error
(pole, domain, or a series that failed to converge).
"""
from __future__ import annotations

import argparse
import re
import sys
from typing import Sequence

from . import report as rpt
from .differentiation import log_zeta_ratio, log_zeta_ratio_derivative, trig_log_derivative
from .errors import DomainError, NonConvergent, UnknownIdentity, UnsupportedMode
from .identities import DEFAULT_REAL_GRID, MODES, GridSpec, verify_grid
from .omega import (REPRESENTATIONS, golden_quartet, omega, omega_all,
                    omega_beta_relation, omega_functional_checks,
                    omega_imaginary_series)
from .special import EPS, evaluate

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_MATH = 0, 1, 2, 3
FUNCTIONS = ("zeta", "hurwitz", "gamma", "lngamma", "polygamma", "beta", "eta",
             "logratio", "trigderiv")

_NUM = r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_COMPLEX = re.compile(rf"^(?P<re>[+-]?{_NUM})?(?:(?P<sign>[+-])?(?P<im>{_NUM})?i)?$")


class UsageError(Exception):
    pass


def parse_complex(text: str) -> complex:
    """Parse ``a``, ``a+bi``, ``a-bi`` or ``bi`` (no whitespace).

    >>> parse_complex("0.5-2i")
    (0.5-2j)
    >>> parse_complex("-i")
    -1j
    """
    m = _COMPLEX.match(text)
    if not text or m is None:
        raise UsageError(f"cannot parse complex literal {text!r}")
    re_part, sign, im_part = m.group("re"), m.group("sign"), m.group("im")
    has_i = text.endswith("i")
    if not has_i:
        return complex(float(re_part))
    if re_part is not None and sign is None and im_part is None:
        # "2i" is matched as re="2" with an empty imaginary coefficient
        return complex(0.0, float(re_part))
    if re_part is not None and sign is None:
        raise UsageError(f"cannot parse complex literal {text!r}")
    im = float(im_part) if im_part is not None else 1.0
    if sign == "-":
        im = -im
    return complex(float(re_part) if re_part is not None else 0.0, im)


def format_complex(z: complex, digits: int = 15) -> str:
    """Format with ``digits`` significant digits, dropping a zero imaginary part."""
    z = complex(z)
    re_s = format(z.real, f".{digits}g")
    if z.imag == 0.0:
        return re_s
    im_s = format(abs(z.imag), f".{digits}g")
    sign = "-" if z.imag < 0 else "+"
    if z.real == 0.0:
        return f"{'-' if z.imag < 0 else ''}{im_s}i"
    return f"{re_s}{sign}{im_s}i"


def parse_grid(text: str) -> GridSpec:
    """``real:a:b:count``, ``complex:re0:re1:im0:im1:nre:nim`` or ``list:p1,p2,...``."""
    kind, _, rest = text.partition(":")
    try:
        if kind == "real":
            a, b, c = rest.split(":")
            return GridSpec("real_interval", (float(a), float(b), int(c)))
        if kind == "complex":
            re0, re1, im0, im1, nre, nim = rest.split(":")
            return GridSpec("complex_rectangle", (float(re0), float(re1), float(im0),
                                                  float(im1), int(nre), int(nim)))
        if kind == "list":
            return GridSpec("explicit_list", tuple(parse_complex(p) for p in rest.split(",")))
    except ValueError as exc:
        raise UsageError(f"bad grid {text!r}: {exc}") from None
    raise UsageError(f"unknown grid kind in {text!r}; use real:, complex: or list:")


def parse_range(text: str) -> list[int]:
    """``1:3`` (inclusive), ``1,2,5`` or a single integer."""
    try:
        if ":" in text:
            lo, hi = text.split(":")
            return list(range(int(lo), int(hi) + 1))
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise UsageError(f"bad order range {text!r}") from None


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- subcommands -------------------------------------------------------------

def cmd_eval(args) -> int:
    s = parse_complex(args.s)
    name = args.function
    if name == "logratio":
        if args.order == 0:
            value, hint = log_zeta_ratio(s), 8 * EPS
        else:
            if args.order % 2 == 0:
                raise UsageError("logratio derivatives exist for odd orders 2n+1 only")
            d = log_zeta_ratio_derivative(s, args.order // 2, method=args.method)
            value, hint = d.value, d.error_estimate / max(abs(d.value), 1e-300)
    elif name == "trigderiv":
        if args.order < 1:
            raise UsageError("trigderiv needs --order >= 1")
        value = trig_log_derivative(args.kind, s, args.order)
        hint = 16 * EPS * args.order
    else:
        fv = evaluate(name, s, order=args.order, a=parse_complex(args.a))
        value, hint = fv.value, fv.condition_hint
    print(format_complex(value))
    print(f"relative error ~ {hint:.1e}", file=sys.stderr)
    return EXIT_OK


def _split_ids(raw: Sequence[str]) -> list[str] | None:
    ids = [t for part in raw for t in part.split(",") if t]
    if not ids or [t.lower() for t in ids] == ["all"]:
        return None
    return ids


def _tolerances(args) -> tuple[float, float]:
    tol_abs = args.tol_abs if args.tol_abs is not None else args.tol
    tol_rel = args.tol_rel if args.tol_rel is not None else args.tol
    return tol_abs, tol_rel


def cmd_verify(args) -> int:
    grid = parse_grid(args.grid) if args.grid else DEFAULT_REAL_GRID
    tol_abs, tol_rel = _tolerances(args)
    result = verify_grid(_split_ids(args.ids), grid, parse_range(args.n), tol_abs, tol_rel,
                         mode=args.mode)
    report = rpt.from_verify(result)
    text = rpt.to_json(report) if args.format == "json" else rpt.to_csv(report)
    _emit(text, args.out)
    s = result.summary
    print(f"{s.passed}/{s.total} passed, {s.skipped} skipped, "
          f"max residual {s.max_residual:.3e}", file=sys.stderr)
    return EXIT_OK if s.failed == 0 else EXIT_FAIL


def _print_omega(r) -> None:
    names = ("R1 polygamma", "R2 alternating", "R3 trig-derivative", "R4 hurwitz")
    for label, v in zip(names, r.values):
        print(f"{label:<20} {format_complex(v)}")
    print(f"{'spread':<20} {r.spread:.3e} (relative {r.rel_spread:.3e})")


def cmd_omega(args) -> int:
    tol = args.tol
    if args.beta:
        b = omega_beta_relation(args.n)
        print(f"Omega(1/2, {b.n}) = {format_complex(b.omega_at_half)}  "
              f"(printed label: Omega({b.printed_label}))")
        print(f"derived  -2^(4n+3) (2n)! beta(2n+1) = {b.derived_constant:.15g}  "
              f"rel. residual {b.derived_residual:.3e}")
        print(f"printed  -2 2^(2n+1) 2^(2n+1) beta(2n+1) = {b.printed_constant:.15g}  "
              f"rel. residual {b.printed_residual:.3e}")
        print(f"matched: {b.matched}")
        return EXIT_OK if b.derived_matches or b.printed_matches else EXIT_FAIL
    if args.imaginary:
        r = omega_imaginary_series(args.n)
        print(f"series  {format_complex(r.series_value)}")
        print(f"rhs     {format_complex(r.rhs_value)}")
        print(f"residual {r.residual:.3e}")
        return EXIT_OK if r.residual <= tol else EXIT_FAIL
    if args.golden:
        vals = golden_quartet(args.n, rep=args.rep)
        for k, v in vals.items():
            print(f"{k:<8} {format_complex(v)}")
        vs = list(vals.values())
        worst = max(abs(a - b) / max(1.0, abs(a)) for a in vs for b in vs)
        print(f"max relative difference {worst:.3e}")
        return EXIT_OK if worst <= tol else EXIT_FAIL
    if args.s is None:
        raise UsageError("omega needs a point s unless --beta, --imaginary or --golden is given")
    s = parse_complex(args.s)
    if args.functional:
        fr = omega_functional_checks(s, args.n, rep=args.rep)
        for rel in fr.relations:
            sign = "+" if rel.sign > 0 else "-"
            target = f"{sign}Omega({rel.name})"
            print(f"Omega(s) = {target:<13} residual {rel.residual:.3e}")
        return EXIT_OK if fr.passed(tol) else EXIT_FAIL
    if args.all:
        r = omega_all(s, args.n)
        if args.format == "text":
            _print_omega(r)
        else:
            rep = rpt.from_omega([r], tol)
            sys.stdout.write(rpt.to_json(rep) if args.format == "json" else rpt.to_csv(rep))
        return EXIT_OK if r.passed(tol) else EXIT_FAIL
    print(format_complex(omega(s, args.n, args.rep)))
    return EXIT_OK


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="zetaomega",
                                description="Zeta, polygamma and Omega evaluation and "
                                            "identity verification.")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("eval", help="evaluate a special function")
    e.add_argument("function", choices=FUNCTIONS)
    e.add_argument("s", help="complex literal: a, a+bi, a-bi or bi")
    e.add_argument("--order", type=int, default=0,
                   help="polygamma order, derivative order for trigderiv/logratio")
    e.add_argument("--a", default="1", help="Hurwitz shift (hurwitz only)")
    e.add_argument("--kind", default="sin_half",
                   choices=("sin_half", "cos_half", "tan_half", "cot_half"))
    e.add_argument("--method", default="closed_form", choices=("closed_form", "contour"))
    e.set_defaults(func=cmd_eval)

    v = sub.add_parser("verify", help="run the identity catalog over a grid")
    v.add_argument("--ids", nargs="+", default=["all"],
                   help="identity ids (I1 ... I22) or 'all'")
    v.add_argument("--grid", help="real:a:b:count | complex:re0:re1:im0:im1:nre:nim | "
                                  "list:p1,p2,...")
    v.add_argument("--n", default="1:3", help="order range, e.g. 1:3")
    v.add_argument("--tol", type=float, default=1e-8)
    v.add_argument("--tol-abs", type=float, dest="tol_abs")
    v.add_argument("--tol-rel", type=float, dest="tol_rel")
    v.add_argument("--mode", choices=MODES)
    v.add_argument("--format", choices=("json", "csv"), default="json")
    v.add_argument("--out", help="write the report here instead of standard output")
    v.set_defaults(func=cmd_verify)

    o = sub.add_parser("omega", help="evaluate the Omega function")
    o.add_argument("s", nargs="?", help="complex literal")
    o.add_argument("--n", type=int, default=1)
    o.add_argument("--rep", choices=REPRESENTATIONS, default="R1")
    o.add_argument("--tol", type=float, default=1e-8)
    o.add_argument("--format", choices=("text", "json", "csv"), default="text")
    g = o.add_mutually_exclusive_group()
    g.add_argument("--all", action="store_true", help="all four representations")
    g.add_argument("--functional", action="store_true", help="functional equations")
    g.add_argument("--golden", action="store_true", help="golden-ratio quartet")
    g.add_argument("--beta", action="store_true", help="beta(2n+1) relation at s = 1/2")
    g.add_argument("--imaginary", action="store_true", help="series behind Omega(i)")
    o.set_defaults(func=cmd_omega)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UnknownIdentity as exc:
        print(f"zetaomega: error: unknown identity {exc.args[0]!r}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, UnsupportedMode) as exc:
        msg = exc.args[0] if exc.args else str(exc)
        print(f"zetaomega: error: {msg}", file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, NonConvergent) as exc:
        print(f"zetaomega: math error: {exc}", file=sys.stderr)
        return EXIT_MATH
    except ValueError as exc:
        print(f"zetaomega: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
