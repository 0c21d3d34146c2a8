"""Registry of zeta/gamma/polygamma identities and a grid verification runner.

Every log-form identity is stored as a chain of *sides*, each side a list of
:class:`Term` objects whose values add up to a logarithm.  Three comparison
modes are available:

``exp``
    compare ``exp`` of each side; integer multiples of ``2 pi i`` drop out.
``log_real``
    compare real parts of the log sums (real logs of absolute values), for
    real ``s`` only.
``derivative``
    compare order ``2n+1`` derivatives; contour integration of direct zeta
    evaluations on one side, polygamma and trig closed forms on the other.

Admissibility is decided per factor: each term knows its own singular
lattice, and a point is rejected when it lies within ``exclusion_radius`` of
the lattice of any factor on any side.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from .differentiation import log_zeta_ratio_derivative_split, trig_log_derivative_split
from .errors import (DomainError, EmptyGrid, InadmissiblePoint, NearZetaZero,
                     UnknownIdentity, UnsupportedMode)
from .special import DEFAULT_CONTEXT, EvalContext, ln_gamma, polygamma, riemann_zeta

MODES = ("exp", "log_real", "derivative")
EXCLUSION = 0.05
ZETA_FLOOR = 1e-12
LOG_PI = math.log(math.pi)
LOG_2 = math.log(2.0)
LOG_2PI = math.log(2.0 * math.pi)
LOG_2PII_2 = cmath.log((2j * math.pi) ** 2)
LOG_2PII_4 = cmath.log((2j * math.pi) ** 4)


# -- term language -----------------------------------------------------------

@dataclass(frozen=True)
class Term:
    """``coef * log(kind(a*s + b))``; for ``kind == "raw"`` the value is
    ``coef * (a*s + b)`` itself."""

    coef: float
    kind: str
    a: float
    b: complex

    def arg(self, s: complex) -> complex:
        return self.a * s + self.b

    def log_value(self, s: complex, ctx: EvalContext) -> complex:
        x = self.arg(s)
        if self.kind == "raw":
            return self.coef * x
        if self.kind == "zeta":
            z = riemann_zeta(x, ctx=ctx)
            if abs(z) < ZETA_FLOOR:
                raise NearZetaZero(f"|zeta({x})| below {ZETA_FLOOR:g}")
            v = cmath.log(z)
        elif self.kind == "gamma":
            v = ln_gamma(x, ctx=ctx)
        elif self.kind == "sin":
            v = cmath.log(cmath.sin(0.5 * math.pi * x))
        elif self.kind == "cos":
            v = cmath.log(cmath.cos(0.5 * math.pi * x))
        elif self.kind == "lin":
            v = cmath.log(x)
        else:  # pragma: no cover - constructor guards this
            raise ValueError(self.kind)
        return self.coef * v

    def lattice_distance(self, s: complex) -> float:
        """Distance in the ``s`` plane to the nearest singular point."""
        if self.kind == "raw":
            return math.inf
        x = self.arg(s)
        base = math.floor(x.real)
        cands = [base - 2 + j for j in range(6)]
        if self.kind == "zeta":
            bad = [k for k in cands if k == 1 or (k < 0 and k % 2 == 0)]
        elif self.kind == "gamma":
            bad = [k for k in cands if k <= 0]
        elif self.kind == "sin":
            bad = [k for k in cands if k % 2 == 0]
        elif self.kind == "cos":
            bad = [k for k in cands if k % 2 == 1]
        else:  # lin
            bad = [0]
        if not bad:
            return math.inf
        return min(abs(x - k) for k in bad) / abs(self.a)


def Z(c, a, b):
    return [Term(c, "zeta", a, b)]


def R(c, a, b):
    """``c * log(zeta(x) / zeta(1 - x))`` with ``x = a s + b``."""
    return [Term(c, "zeta", a, b), Term(-c, "zeta", -a, 1.0 - b)]


def G(c, a, b):
    return [Term(c, "gamma", a, b)]


def S(c, a, b):
    """``c * log sin(pi x / 2)``."""
    return [Term(c, "sin", a, b)]


def C(c, a, b):
    return [Term(c, "cos", a, b)]


def L(c, a, b):
    return [Term(c, "lin", a, b)]


def Raw(c, a, b):
    return [Term(c, "raw", a, b)]


def Sup(c, a, b):
    """``c * log(sin(pi (t+1)/4) / sin(pi (1 - t/2)/2))`` with ``t = a s + b``."""
    return S(c, a / 2, (b + 1) / 2) + S(-c, -a / 2, 1 - b / 2)


def side(*parts) -> tuple[Term, ...]:
    return tuple(t for p in parts for t in p)


def _sum_side(terms: Sequence[Term], s: complex, ctx: EvalContext) -> complex:
    re = [0.0]
    im = [0.0]
    for t in terms:
        v = t.log_value(s, ctx)
        re.append(v.real)
        im.append(v.imag)
    return complex(math.fsum(re), math.fsum(im))


# -- derivative-mode sides ---------------------------------------------------
#
# Near s = 0 and s = 1 several factors blow up like (s - p)**-m while the
# identity as a whole stays finite.  Each atom therefore carries its regular
# part and its pole terms separately; pole coefficients are combined before
# the poles are evaluated, so the cancellation happens in exact arithmetic.

_EPS = np.finfo(float).eps


@dataclass(frozen=True)
class _Part:
    reg: complex
    err: float
    poles: tuple[tuple[float, float], ...] = ()

    def value(self, s: complex, m: int) -> tuple[complex, float]:
        acc: dict[float, float] = {}
        for p, c in self.poles:
            acc[p] = acc.get(p, 0.0) + c
        tail = [c / (s - p) ** m for p, c in acc.items() if c != 0.0]
        big = sum(abs(x) for x in tail)
        return self.reg + sum(tail), self.err + 4 * _EPS * big


def _psi(k: int, a: float, b: float, s: complex, ctx: EvalContext) -> _Part:
    """``psi^(k)(a s + b)`` with the nearest lattice pole split off."""
    x = a * s + b
    if x.real >= 0.5:
        v = polygamma(k, x, ctx=ctx)
        return _Part(v, 32 * _EPS * abs(v) * (1 + k))
    j = max(0, int(round(-x.real)))
    sign = -1.0 if k % 2 == 0 else 1.0  # (-1)**(k+1)
    fk = math.factorial(k)
    terms = [polygamma(k, x + j + 1, ctx=ctx)]
    terms += [sign * fk / (x + i) ** (k + 1) for i in range(j)]
    reg = sum(terms)
    p = (-j - b) / a
    if abs(p - round(p)) < 1e-9:
        p = float(round(p))
    return _Part(reg, 32 * _EPS * sum(abs(v) for v in terms) * (1 + k),
                 ((p, sign * fk / a ** (k + 1)),))


def _trig(kind: str, s: complex, m: int) -> _Part:
    reg, poles = trig_log_derivative_split(kind, s, m)
    return _Part(reg, 32 * _EPS * abs(reg) * m, tuple(poles))


def _contour(s: complex, n: int, ctx: EvalContext) -> _Part:
    d, poles = log_zeta_ratio_derivative_split(s, n, ctx=ctx)
    return _Part(d.value, d.error_estimate, tuple(poles))


def _const(v: complex, rel: float = 8.0) -> _Part:
    return _Part(v, rel * _EPS * abs(v))


def _lin(*pairs: tuple[float, _Part]) -> _Part:
    # linear combination of parts
    reg = sum(c * p.reg for c, p in pairs)
    err = sum(abs(c) * p.err for c, p in pairs) + 4 * _EPS * sum(abs(c * p.reg) for c, p in pairs)
    poles = tuple((q, c * w) for c, p in pairs for q, w in p.poles)
    return _Part(reg, err, poles)


def _half_psi_sum(s, n, ctx):
    # d^m [log G(s/2) - log G((1-s)/2)] for odd m = 2n + 1
    m = 2 * n + 1
    return _lin((2.0**-m, _psi(2 * n, .5, 0., s, ctx)), (2.0**-m, _psi(2 * n, -.5, .5, s, ctx)))


def _d_I2(s, n, ctx):
    m = 2 * n + 1
    return [
        _lin((-1.0, _contour(s, n, ctx))),
        _lin(((-0.5) ** m, _psi(2 * n, -.5, .5, s, ctx)), (-(0.5**m), _psi(2 * n, .5, 0., s, ctx))),
        _lin((1.0, _trig("sin_half", s, m)), (-1.0, _psi(2 * n, -1., 1., s, ctx))),
    ]


def _d_I3(s, n, ctx):
    m = 2 * n + 1
    return [
        _contour(s, n, ctx),
        _lin((0.5**m, _psi(2 * n, .5, 0., s, ctx)), (-((-0.5) ** m), _psi(2 * n, -.5, .5, s, ctx))),
        _lin((1.0, _trig("cos_half", s, m)), (1.0, _psi(2 * n, 1., 0., s, ctx))),
    ]


def _d_I4(s, n, ctx):
    m = 2 * n + 1
    return [_psi(2 * n, 1., 0., s, ctx),
            _lin((1.0, _contour(s, n, ctx)), (-1.0, _trig("cos_half", s, m)))]


def _d_I5(s, n, ctx):
    return [_half_psi_sum(s, n, ctx), _contour(s, n, ctx)]


def _d_I6(s, n, ctx):
    m = 2 * n + 1
    half = _half_psi_sum(s, n, ctx)
    first = [_psi(2 * n, 1., 0., s, ctx),
             _lin((1.0, half), (-1.0, _trig("cos_half", s, m)))]
    second = [_lin((-1.0, _psi(2 * n, -1., 1., s, ctx))),
              _lin((-1.0, half), (-1.0, _trig("sin_half", s, m)))]
    return [first, second]


def _d_I7(s, n, ctx):
    m = 2 * n + 1
    return [
        _const(-(2.0**m - 1) * math.factorial(2 * n) * riemann_zeta(m, ctx=ctx)),
        _psi(2 * n, 1., 0., 0.5, ctx),
        _lin((1.0, _contour(0.5, n, ctx)), (-1.0, _trig("cos_half", 0.5, m))),
    ]


def _quarter_denominator(n: int) -> float:
    m = 2 * n + 1
    return 2.0**m * (2.0**m - 1) * math.factorial(2 * n)


def _quarter_sides(n: int, ctx) -> tuple[_Part, _Part]:
    m = 2 * n + 1
    d = 1.0 / _quarter_denominator(n)
    psi_form = _lin((d, _psi(2 * n, 1., 0., 0.25, ctx)), (d, _psi(2 * n, 1., 0., 0.75, ctx)))
    deriv_form = _lin((2 * d, _contour(0.25, n, ctx)), (d, _trig("tan_half", 0.25, m)))
    return psi_form, deriv_form


def _d_I9(s, n, ctx):
    psi_form, deriv_form = _quarter_sides(n, ctx)
    return [_const(-riemann_zeta(2 * n + 1, ctx=ctx)), psi_form, deriv_form]


def _d_I10(s, n, ctx):
    m = 2 * n + 1
    d = _contour(s, n, ctx)
    return [
        _lin((1.0, _psi(2 * n, 1., 0., s, ctx)), (1.0, _psi(2 * n, -1., 1., s, ctx))),
        _lin((2.0, d), (1.0, _trig("tan_half", s, m))),
        # d^m log(zeta(s)/zeta(1-s)) is the negated ratio derivative
        _lin((-2.0, _lin((-1.0, d))), (-1.0, _trig("cot_half", s, m))),
    ]


def _d_I11(s, n, ctx):
    m = 2 * n + 1
    return [
        _lin((1.0, _psi(2 * n, 1., 0., s, ctx)), (-1.0, _psi(2 * n, -1., 1., s, ctx))),
        _lin((-1.0, _trig("cos_half", s, m)), (-1.0, _trig("sin_half", s, m))),
    ]


def _v_I8(s, n, ctx):
    # zeta(n) composed from psi^(n-1) at 1/4 and 3/4
    lhs = riemann_zeta(n, ctx=ctx)
    psum = polygamma(n - 1, 0.25, ctx=ctx) + polygamma(n - 1, 0.75, ctx=ctx)
    rhs = (-1) ** n * psum / (2.0**n * (2.0**n - 1)) / math.factorial(n - 1)
    return [(lhs, 8 * _EPS * abs(lhs)), (rhs, 32 * _EPS * abs(psum) / (2.0**n * (2.0**n - 1))
                                         / math.factorial(n - 1))]


# -- registry types ----------------------------------------------------------

@dataclass(frozen=True)
class IdentitySpec:
    """One registered identity.

    ``equations`` holds chains of log-form sides; ``derivative`` and
    ``value`` hold evaluators for derivative and direct-value identities.
    """

    id: str
    title: str
    anchor: str
    modes: tuple[str, ...]
    equations: tuple[tuple[tuple[Term, ...], ...], ...] = ()
    derivative: Callable | None = None
    value: Callable | None = None
    deriv_factors: tuple[Term, ...] = ()
    fixed_point: complex | None = None
    uses_n: bool = False
    min_n: int = 1
    tolerance: float | None = None
    multi_equation: bool = False

    @property
    def primary_mode(self) -> str:
        return self.modes[0]


@dataclass(frozen=True)
class CheckResult:
    id: str
    s: complex
    n: int | None
    mode: str
    lhs: complex
    rhs: complex
    abs_residual: float
    rel_residual: float
    passed: bool
    error_estimate: float = 0.0

    @property
    def residual(self) -> float:
        return min(self.abs_residual, self.rel_residual)


def _eqs(*chains) -> tuple:
    return tuple(tuple(side(*sd) if isinstance(sd, list) else sd for sd in chain)
                 for chain in chains)


# d^m log(zeta(1-s)/zeta(s)) plus trig factors; shared lattices
_RATIO = tuple(R(1.0, 1.0, 0.0))
_DERIV_BASE = _RATIO + tuple(G(1, 1, 0) + G(1, -1, 1) + S(1, 1, 0) + C(1, 1, 0))


def _build_registry() -> dict[str, IdentitySpec]:
    specs: list[IdentitySpec] = []
    add = specs.append

    add(IdentitySpec(
        "I1", "Riemann functional equation",
        "zeta(s) Gamma(s/2) pi^(-s/2) is invariant under s -> 1-s", ("exp",),
        _eqs([side(Z(1, 1, 0), G(1, .5, 0), Raw(-LOG_PI, .5, 0)),
              side(Z(1, -1, 1), G(1, -.5, .5), Raw(-LOG_PI, -.5, .5))])))

    add(IdentitySpec(
        "I2", "log-ratio chain through Gamma(1-s)",
        "log ratio = s log(2 pi) - log pi + log sin(pi s/2) + log Gamma(1-s)",
        ("exp", "log_real", "derivative"),
        _eqs([side(R(1, 1, 0)),
              side(G(1, -.5, .5), G(-1, .5, 0), Raw(LOG_PI, 1, -.5)),
              side(Raw(LOG_2PI, 1, 0), Raw(-LOG_PI, 0, 1), S(1, 1, 0), G(1, -1, 1))]),
        derivative=_d_I2, deriv_factors=_DERIV_BASE, uses_n=True))

    add(IdentitySpec(
        "I3", "log-ratio chain through Gamma(s)",
        "log ratio = (1-s) log(2 pi) - log pi + log cos(pi s/2) + log Gamma(s)",
        ("exp", "log_real", "derivative"),
        _eqs([side(R(-1, 1, 0)),
              side(G(1, .5, 0), G(-1, -.5, .5), Raw(LOG_PI, -1, .5)),
              side(Raw(LOG_2PI, -1, 1), Raw(-LOG_PI, 0, 1), C(1, 1, 0), G(1, 1, 0))]),
        derivative=_d_I3, deriv_factors=_DERIV_BASE, uses_n=True))

    add(IdentitySpec(
        "I4", "odd derivative of log Gamma via the zeta ratio",
        "odd derivatives of log Gamma(s) + log Gamma(1-s) from the zeta ratio", ("derivative",),
        derivative=_d_I4, deriv_factors=_DERIV_BASE, uses_n=True))

    add(IdentitySpec(
        "I5", "half-argument log Gamma difference",
        "d^(2n+1) [log Gamma(s/2) - log Gamma((1-s)/2)]", ("derivative",),
        derivative=_d_I5, deriv_factors=_DERIV_BASE + tuple(G(1, .5, 0) + G(1, -.5, .5)),
        uses_n=True))

    add(IdentitySpec(
        "I6", "odd derivatives of log Gamma(s) and log Gamma(1-s)",
        "d^(2n+1) log Gamma(s) and log Gamma(1-s) separately", ("derivative",),
        derivative=_d_I6, deriv_factors=_DERIV_BASE + tuple(G(1, .5, 0) + G(1, -.5, .5)),
        uses_n=True, multi_equation=True))

    add(IdentitySpec(
        "I7", "zeta(2n+1) from psi^(2n)(1/2)",
        "zeta(2n+1) = -psi^(2n)(1/2) / ((2^(2n+1)-1) (2n)!)", ("derivative",),
        derivative=_d_I7, deriv_factors=_DERIV_BASE, fixed_point=0.5, uses_n=True))

    add(IdentitySpec(
        "I8", "zeta(n) from psi^(n-1)(1/4) + psi^(n-1)(3/4)",
        "zeta(n) from psi^(n-1)(1/4) + psi^(n-1)(3/4)", ("exp",),
        value=_v_I8, fixed_point=0.25, uses_n=True, min_n=2))

    add(IdentitySpec(
        "I9", "zeta(2n+1) from the log-ratio derivative at 1/4",
        "zeta(2n+1) from the log-ratio and log-tan derivatives at s = 1/4", ("derivative",),
        derivative=_d_I9, deriv_factors=_DERIV_BASE, fixed_point=0.25, uses_n=True))

    add(IdentitySpec(
        "I10", "psi^(2n)(s) + psi^(2n)(1-s), tan and cot forms",
        "psi^(2n)(s) + psi^(2n)(1-s) through tan and cot derivatives", ("derivative",),
        derivative=_d_I10, deriv_factors=_DERIV_BASE, uses_n=True))

    add(IdentitySpec(
        "I11", "psi^(2n)(s) - psi^(2n)(1-s)",
        "psi^(2n)(s) - psi^(2n)(1-s) through the log ratio", ("derivative",),
        derivative=_d_I11, deriv_factors=_DERIV_BASE, uses_n=True))

    half = side(R(1, .5, .5), R(1, .5, 0), Sup(-1, 1, 0))
    add(IdentitySpec(
        "I12", "half-argument decompositions",
        "log ratio split into half-argument ratios", ("exp", "log_real"),
        _eqs([side(G(1, -.5, .5), G(-1, .5, 0)), side(half, Raw(-LOG_2PI, 1, -.5))],
             [side(R(1, 1, 0)), side(half, Raw(-LOG_2, 1, -.5))]),
        multi_equation=True))

    add(IdentitySpec(
        "I13", "four-line log-ratio family",
        "log(zeta(s+1)/zeta(-s)) and three shifted companions", ("exp", "log_real"),
        _eqs(*[[side(R(1, 1, b)),
                side(R(1, .5, (b + 1) / 2), R(1, .5, b / 2), Raw(-LOG_2, 1, b - .5),
                     Sup(-1, 1, b))] for b in (1.0, 0.0, -1.0, -2.0)]),
        multi_equation=True))

    add(IdentitySpec(
        "I14", "shift-by-two zeta ratio",
        "zeta(s-2)/zeta(3-s) from zeta(s)/zeta(1-s)", ("exp",),
        _eqs([side(Z(1, 1, -2), Z(-1, -1, 3)),
              side(L(1, 1, -2), L(1, 1, -1), Raw(-1, 0, LOG_2PII_2), R(1, 1, 0))]),
        tolerance=1e-12))

    add(IdentitySpec(
        "I15", "half-shift ladder",
        "ladder of half-shifted log ratios", ("exp",),
        _eqs([side(R(1, 1, .5), R(1, 1, 0), S(-1, 1, .5), S(1, -1, 1)),
              side(R(1, 1, -.5), R(1, 1, -1), L(-1, 1, -1), L(-1, 1, -.5),
                   Raw(1, 0, LOG_2PII_2), S(-1, 1, -.5), S(1, -1, 2))])))

    add(IdentitySpec(
        "I16", "zeta at 1+s, -s, 1-s and s",
        "log ratios at 1+s, -s, 1-s and s", ("exp",),
        _eqs([side(R(2, 1, 1)),
              side(R(2, 1, 0), L(-2, 1, 0), Raw(1, 0, LOG_2PII_2), Sup(-1, 1, 1),
                   Sup(1, 1, 0), Sup(-1, 1, -1), Sup(1, 1, -2))])))

    tail = side(Raw(-LOG_2, 2, -3), Sup(-1, 1, 0), Sup(-1, 1, -2))
    add(IdentitySpec(
        "I17", "decomposition of the squared log ratio",
        "2 log ratio + log((s-2)(s-1)) via half-argument ratios", ("exp",),
        _eqs([side(L(1, 1, -2), L(1, 1, -1), Raw(-1, 0, LOG_2PII_2), R(2, 1, 0)),
              side(R(1, .5, 1), R(1, .5, .5), R(1, .5, 0), R(1, .5, -.5),
                   L(1, .5, -1), L(1, .5, 0), Raw(-1, 0, LOG_2PII_2), tail),
              side(R(1, .5, .5), R(1, .5, 0), R(1, .5, -.5), R(1, .5, -1), tail)])))

    add(IdentitySpec(
        "I18", "period-four sine/cosine ratio",
        "quarter-argument sin/cos ratios under a shift by 4", ("exp", "log_real"),
        _eqs([side(S(1, .5, .5), C(-1, .5, 0)), side(S(1, .5, -1.5), C(-1, .5, -2))],
             [side(Sup(1, 1, 0)), side(S(1, .5, -1.5), S(-1, -.5, 3))]),
        multi_equation=True))

    add(IdentitySpec(
        "I19", "gamma shift identity with log((s-4)/(s+4))",
        "half-argument Gamma shifts giving log((s-4)/(s+4))", ("exp",),
        _eqs([side(G(1, .5, 2), G(-1, -.5, -1.5), G(-1, -.5, 2), G(1, .5, -1.5)),
              side(G(1, .5, -2), G(-1, -.5, 2.5), G(-1, -.5, -2), G(1, .5, 2.5),
                   L(1, 1, -4), L(-1, 1, 4))])))

    add(IdentitySpec(
        "I20", "zeta at +-s +- 4",
        "zeta ratios at s +- 4 and -s +- 4", ("exp",),
        _eqs([side(R(-1, 1, 4), R(1, -1, 4)),
              side(R(-1, 1, -4), R(1, -1, -4), L(1, 1, -4), L(-1, 1, 4))])))

    add(IdentitySpec(
        "I21", "eight-factor product ratio",
        "eight-factor product prod (s+k)/(k-s) over k = -4..3", ("exp",),
        _eqs([side(*[L(1, 1, k) for k in range(-4, 4)], Raw(-1, 0, LOG_2PII_4),
                   *[L(-1, -1, k) for k in range(-4, 4)], Raw(1, 0, LOG_2PII_4)),
              side(L(1, 1, -4), L(-1, 1, 4))]),
        tolerance=1e-12))

    add(IdentitySpec(
        "I22", "shift-by-8 and shift-by-16 chain",
        "zeta ratio chain through shifts by 8 and 16", ("exp",),
        _eqs([side(R(1, 1, 0), R(1, -1, 0)),
              side(R(1, -1, 8), R(1, 1, -8), L(-1, 1, -8), L(1, 1, 0)),
              side(R(1, -1, 16), R(1, 1, -16), L(-1, 1, -16), L(1, 1, -8),
                   L(1, -1, 0), L(-1, -1, 8)),
              side(R(1, 1, 8), R(1, -1, -8), L(-1, -1, -8), L(1, -1, 0)),
              side(R(1, 1, 16), R(1, -1, -16), L(-1, -1, -16), L(1, -1, -8),
                   L(1, 1, 0), L(-1, 1, 8))])))

    return {sp.id: sp for sp in specs}


REGISTRY = _build_registry()


def list_identities() -> list[IdentitySpec]:
    """All registered identities in order I1..I22."""
    return sorted(REGISTRY.values(), key=lambda sp: int(sp.id[1:]))


def get_identity(identity_id: str) -> IdentitySpec:
    try:
        return REGISTRY[identity_id]
    except KeyError:
        raise UnknownIdentity(identity_id) from None


# -- admissibility -----------------------------------------------------------

def _factors(spec: IdentitySpec, mode: str) -> Iterable[Term]:
    if mode == "derivative":
        return spec.deriv_factors
    return (t for chain in spec.equations for sd in chain for t in sd)


def lattice_distance(spec: IdentitySpec, s: complex, mode: str) -> float:
    return min((t.lattice_distance(complex(s)) for t in _factors(spec, mode)),
               default=math.inf)


def is_admissible(identity_id: str, s: complex, n: int | None = None,
                  mode: str | None = None, exclusion: float = EXCLUSION) -> bool:
    spec = get_identity(identity_id)
    mode = mode or spec.primary_mode
    return _admissible(spec, complex(s), n, mode, exclusion) is None


def _admissible(spec: IdentitySpec, s: complex, n, mode: str, exclusion: float):
    """``None`` when admissible, otherwise the reason."""
    if mode not in spec.modes:
        return f"mode {mode} not supported"
    if spec.uses_n:
        if n is None or n < spec.min_n:
            return f"order n must be >= {spec.min_n}"
        if mode == "derivative" and 2 * n + 1 > 12:
            return "derivative order 2n+1 exceeds 12"
    if spec.fixed_point is not None:
        if abs(s - spec.fixed_point) > 1e-9:
            return f"identity holds only at s = {spec.fixed_point}"
        return None
    if mode == "log_real" and s.imag != 0.0:
        return "log_real mode needs real s"
    if mode == "derivative":
        k = round(s.real)
        if abs(s - k) < exclusion or abs(s.imag) > 2.0:
            return "derivative mode needs distance >= exclusion from integers and |Im s| <= 2"
    if lattice_distance(spec, s, mode) < exclusion * (1 - 1e-9):
        return "point lies on a singular lattice of a factor"
    return None


# -- checking ----------------------------------------------------------------

def _residual(a: complex, b: complex) -> tuple[float, float]:
    d = abs(a - b)
    scale = max(abs(a), abs(b))
    return d, (d / scale if scale > 0 else 0.0)


def _exp_side(terms, s, ctx):
    return cmath.exp(_sum_side(terms, s, ctx))


def _removable_exp(terms, s: complex, ctx: EvalContext) -> complex | None:
    """Value of ``exp(side)`` at a removable singularity, or ``None``.

    Samples the side on a circle around ``s`` that avoids every other
    singular point and requires the negative Laurent coefficients to vanish.
    """
    near = [t for t in terms if t.lattice_distance(s) < EXCLUSION]
    others = [t for t in terms if t not in near]
    radius = 0.25
    for t in others:
        radius = min(radius, 0.5 * t.lattice_distance(s))
    if radius < 1e-3:
        return None
    nodes = 64
    z = s + radius * np.exp(2j * np.pi * np.arange(nodes) / nodes)
    try:
        vals = np.array([_exp_side(terms, complex(zj), ctx) for zj in z])
    except (DomainError, OverflowError, ValueError):
        return None
    c = np.fft.fft(vals) / nodes
    top = np.max(np.abs(vals))
    if np.max(np.abs(c[nodes - 6:])) > 1e-9 * top:
        return None
    return complex(c[0])


def _chains_exp(spec, s, ctx, removable: bool):
    out = []
    for chain in spec.equations:
        vals = []
        for terms in chain:
            if any(t.lattice_distance(s) < EXCLUSION * (1 - 1e-9) for t in terms):
                v = _removable_exp(terms, s, ctx) if removable else None
                if v is None:
                    raise InadmissiblePoint(f"{spec.id}: s={s} hits a pole that is not removable")
            else:
                v = _exp_side(terms, s, ctx)
            vals.append((v, 0.0))
        out.append(vals)
    return out


def _chains_log_real(spec, s, ctx):
    return [[(complex(_sum_side(terms, s, ctx).real), 0.0) for terms in chain]
            for chain in spec.equations]


def _worst(spec: IdentitySpec, chains, s, n, mode, tol_abs, tol_rel) -> CheckResult:
    if spec.tolerance is not None:
        tol_abs = min(tol_abs, spec.tolerance)
        tol_rel = min(tol_rel, spec.tolerance)
    best = None
    for chain in chains:
        first = chain[0]
        for other in chain[1:]:
            a, r = _residual(first[0], other[0])
            key = min(a, r)
            if best is None or key > best[0]:
                best = (key, first, other, a, r)
    _, lhs, rhs, a, r = best
    passed = a <= tol_abs or r <= tol_rel
    return CheckResult(spec.id, s, n if spec.uses_n else None, mode, complex(lhs[0]),
                       complex(rhs[0]), float(a), float(r), bool(passed),
                       float(lhs[1] + rhs[1]))


def check_identity(identity_id: str, s: complex, n: int | None = None,
                   mode: str | None = None, *, tol_abs: float = 1e-8, tol_rel: float = 1e-8,
                   ctx: EvalContext = DEFAULT_CONTEXT,
                   exclusion: float = EXCLUSION) -> CheckResult:
    """Evaluate every side of an identity at ``s`` and compare.

    For chains and multi-line identities the worst-agreeing pair is
    reported.  In ``exp`` mode a point on a factor's pole lattice is still
    accepted when the side as a whole has a removable singularity there.

    Raises
    ------
    UnsupportedMode
        ``mode`` is not declared by the identity.
    InadmissiblePoint
        ``(s, n)`` violates the identity's admissibility rules.
    """
    spec = get_identity(identity_id)
    mode = mode or spec.primary_mode
    if mode not in MODES or mode not in spec.modes:
        raise UnsupportedMode(f"{identity_id} does not support mode {mode!r}")
    s = complex(s)
    if spec.fixed_point is not None and abs(s - spec.fixed_point) <= 1e-9:
        s = complex(spec.fixed_point)
    reason = _admissible(spec, s, n, mode, exclusion)
    removable = False
    if reason is not None:
        lattice_only = reason.startswith("point lies") and mode == "exp"
        if not lattice_only:
            raise InadmissiblePoint(f"{identity_id} at s={s}, n={n}: {reason}")
        removable = True
    try:
        if spec.value is not None:
            chains = [spec.value(s, n, ctx)]
        elif mode == "exp":
            chains = _chains_exp(spec, s, ctx, removable)
        elif mode == "log_real":
            chains = _chains_log_real(spec, s, ctx)
        else:
            out = spec.derivative(s, n, ctx)
            out = out if spec.multi_equation else [out]
            chains = [[part.value(s, 2 * n + 1) for part in chain] for chain in out]
    except InadmissiblePoint:
        raise
    except DomainError as exc:
        raise InadmissiblePoint(f"{identity_id} at s={s}: {exc}") from exc
    return _worst(spec, chains, s, n, mode, tol_abs, tol_rel)


def quarter_point_sign_report(n: int, *, ctx: EvalContext = DEFAULT_CONTEXT) -> dict:
    """Both sign readings of the quarter-point zeta(2n+1) formula.

    The printed form equates ``-zeta(2n+1)`` with the psi and derivative
    expressions; the alternative reads it as ``+zeta(2n+1)``.  Residuals
    for both are reported, with the derivative expression as the witness.
    """
    z = riemann_zeta(2 * n + 1, ctx=ctx).real
    psi_form, deriv_form = (p.value(0.25, 2 * n + 1) for p in _quarter_sides(n, ctx))
    printed = abs(-z - deriv_form[0])
    flipped = abs(z - deriv_form[0])
    return {
        "n": n,
        "zeta": z,
        "reconstructed": -deriv_form[0].real,
        "psi_form": psi_form[0].real,
        "derivative_form": deriv_form[0].real,
        "printed_sign_residual": printed,
        "flipped_sign_residual": flipped,
        "matching_sign": "printed" if printed < flipped else "flipped",
    }


# -- grids -------------------------------------------------------------------

@dataclass(frozen=True)
class GridSpec:
    """Point set for :func:`verify_grid`.

    ``kind`` is ``real_interval`` (params ``start, stop, count``),
    ``complex_rectangle`` (``re0, re1, im0, im1, n_re, n_im``) or
    ``explicit_list`` (params are the points).
    """

    kind: str
    params: tuple = ()
    exclusion_radius: float = EXCLUSION

    def points(self) -> list[complex]:
        if self.kind == "real_interval":
            start, stop, count = self.params
            xs = np.linspace(float(start), float(stop), int(count))
            return [complex(round(float(x), 12)) for x in xs]
        if self.kind == "complex_rectangle":
            re0, re1, im0, im1, nre, nim = self.params
            res = np.linspace(float(re0), float(re1), int(nre))
            ims = np.linspace(float(im0), float(im1), int(nim))
            return [complex(round(float(x), 12), round(float(y), 12))
                    for x in res for y in ims]
        if self.kind == "explicit_list":
            return [complex(p) for p in self.params]
        raise ValueError(f"unknown grid kind {self.kind!r}")

    def describe(self) -> dict:
        return {"kind": self.kind, "params": [_jsonable(p) for p in self.params],
                "exclusion_radius": self.exclusion_radius}


def _jsonable(p):
    if isinstance(p, complex):
        return {"re": p.real, "im": p.imag}
    return p


DEFAULT_REAL_GRID = GridSpec("real_interval", (0.05, 0.95, 19))
DEFAULT_COMPLEX_GRID = GridSpec("complex_rectangle", (0.1, 0.9, -1.0, 1.0, 5, 5))


@dataclass(frozen=True)
class Summary:
    total: int
    passed: int
    failed: int
    skipped: int
    max_residual: float


@dataclass(frozen=True)
class VerifyReport:
    results: tuple[CheckResult, ...]
    summary: Summary
    tol_abs: float
    tol_rel: float
    grid: GridSpec = field(default=DEFAULT_REAL_GRID)


def verify_grid(ids: Iterable[str] | None, grid: GridSpec = DEFAULT_REAL_GRID,
                n_range: Iterable[int] = (1, 2, 3), tol_abs: float = 1e-8,
                tol_rel: float = 1e-8, *, mode: str | None = None,
                ctx: EvalContext = DEFAULT_CONTEXT) -> VerifyReport:
    """Check every admissible (identity, point, n) combination.

    Results are ordered by identity number, point index, then ``n``.
    Identities that ignore ``n`` are checked once per point.  Inadmissible
    combinations are counted as skipped.  ``mode`` overrides each
    identity's primary mode where the identity supports it.

    Raises
    ------
    EmptyGrid
        No admissible combination exists.
    """
    if not (tol_abs > 0 and tol_rel > 0):
        raise ValueError("tolerances must be positive")
    specs = list_identities() if ids is None else [get_identity(i) for i in ids]
    specs.sort(key=lambda sp: int(sp.id[1:]))
    points = grid.points()
    ns = sorted(set(int(n) for n in n_range))
    results: list[CheckResult] = []
    skipped = 0
    for spec in specs:
        m = mode if (mode is not None and mode in spec.modes) else spec.primary_mode
        for s in points:
            for n in (ns if spec.uses_n else [None]):
                reason = _admissible(spec, s, n, m, grid.exclusion_radius)
                if reason is not None and not (
                        grid.kind == "explicit_list" and reason.startswith("point lies")
                        and m == "exp"):
                    skipped += 1
                    continue
                try:
                    results.append(check_identity(spec.id, s, n, m, tol_abs=tol_abs,
                                                  tol_rel=tol_rel, ctx=ctx,
                                                  exclusion=grid.exclusion_radius))
                except InadmissiblePoint:
                    skipped += 1
    if not results:
        raise EmptyGrid("no admissible (identity, point, order) combination")
    passed = sum(r.passed for r in results)
    summary = Summary(len(results), passed, len(results) - passed, skipped,
                      max(r.residual for r in results))
    return VerifyReport(tuple(results), summary, tol_abs, tol_rel, grid)
