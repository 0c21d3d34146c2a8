"""The Omega function and its four representations.

``Omega(s, n)`` is the antisymmetrized half-argument polygamma combination

    psi^(2n)(s/2) + psi^(2n)((1-s)/2) - psi^(2n)(1-s/2) - psi^(2n)((1+s)/2)

which equals ``-pi**m [cot^(2n) + tan^(2n)](pi s / 2)`` with ``m = 2n+1``.
It has poles of order ``m`` at every integer.  Four independent routes are
provided:

* ``R1`` -- the polygamma combination above.
* ``R2`` -- ``(-2)**m (2n)! [A(s) + A(1-s)]`` with the alternating sum
  ``A(x) = sum_k (-1)**k (k+x)**-m``.
* ``R3`` -- ``2**(2n)`` times the ``m``-th derivative of an eight-term
  combination of ``log sin`` / ``log cos`` at quarter arguments.
* ``R4`` -- ``-(2n)!`` times four Hurwitz zeta values at order ``m``.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .differentiation import log_sin_derivative
from .errors import PoleAtInteger
from .numerics import accelerate_alternating, compensated_sum
from .special import (DEFAULT_CONTEXT, EvalContext, dirichlet_beta, hurwitz_zeta,
                      polygamma)

REPRESENTATIONS = ("R1", "R2", "R3", "R4")
PHI = (1.0 + math.sqrt(5.0)) / 2.0
SPREAD_TOL = 1e-8

_Q = math.pi / 4
# (weight, beta): the combination is sum weight * log sin(pi s / 4 + beta);
# each log(sin a / cos b) contributes log sin a - log sin(b + pi/2)
_R3_TERMS = (
    (-1.0, 2 * _Q), (1.0, 3 * _Q),
    (1.0, _Q), (-1.0, 2 * _Q),
    (-1.0, 0.0), (1.0, _Q),
    (1.0, -_Q), (-1.0, 0.0),
)


def _arguments(s: complex) -> tuple[complex, complex, complex, complex]:
    return s / 2, (1 - s) / 2, 1 - s / 2, (1 + s) / 2


def _check(s: complex, n: int, exclusion: float) -> complex:
    if n < 0 or int(n) != n:
        raise ValueError("n must be a non-negative integer")
    s = complex(s)
    k = round(s.real)
    if abs(s - k) < exclusion:
        raise PoleAtInteger(f"pole at integer point s={k} (order {2 * int(n) + 1})")
    return s


def _r1(s: complex, n: int, ctx: EvalContext) -> complex:
    a1, a2, a3, a4 = _arguments(s)
    k = 2 * n
    return compensated_sum([polygamma(k, a1, ctx=ctx), polygamma(k, a2, ctx=ctx),
                            -polygamma(k, a3, ctx=ctx), -polygamma(k, a4, ctx=ctx)])


def alternating_power_sum(x: complex, m: int, target: float = 1e-16) -> complex:
    """``sum_{k>=0} (-1)**k (k + x)**-m`` by convergence acceleration.

    Terms with ``Re(k + x) < 1`` are summed directly so the accelerated tail
    starts where the terms decay monotonically.
    """
    x = complex(x)
    h = max(0, math.ceil(1.0 - x.real))
    head = [(-1) ** k * (k + x) ** (-m) for k in range(h)]
    z = x + h
    if z.imag == 0.0:
        zr = z.real
        term = lambda k: (k + zr) ** (-m)
    else:
        term = lambda k: (k + z) ** (-m)
    scale = max(abs(z) ** (-m), 1e-300)
    tail = accelerate_alternating(term, target * scale, cap=10**5).value
    return compensated_sum(head + [(-1) ** h * tail])


def _r2(s: complex, n: int) -> complex:
    m = 2 * n + 1
    total = alternating_power_sum(s, m) + alternating_power_sum(1 - s, m)
    return (-2.0) ** m * math.factorial(2 * n) * total


def _r3(s: complex, n: int) -> complex:
    m = 2 * n + 1
    parts = [w * log_sin_derivative(_Q, beta, s, m) for w, beta in _R3_TERMS]
    return 4.0**n * compensated_sum(parts)


def _hurwitz_combination(m: float | complex, s: complex, ctx: EvalContext) -> complex:
    a1, a2, a3, a4 = _arguments(s)
    return compensated_sum([hurwitz_zeta(m, a1, ctx=ctx), hurwitz_zeta(m, a2, ctx=ctx),
                            -hurwitz_zeta(m, a3, ctx=ctx), -hurwitz_zeta(m, a4, ctx=ctx)])


def _r4(s: complex, n: int, ctx: EvalContext) -> complex:
    if n > 0:
        return -math.factorial(2 * n) * _hurwitz_combination(2 * n + 1, s, ctx)
    # order 1: the poles at 1 cancel across the four terms; the mean over a
    # small circle around 1 gives the finite value
    nodes = 1.0 + 0.25 * np.exp(2j * np.pi * (np.arange(32) + 0.5) / 32)
    vals = [_hurwitz_combination(complex(z), s, ctx) for z in nodes]
    return -compensated_sum(vals) / len(vals)


def omega(s: complex, n: int, rep: str = "R1", *, exclusion: float | None = None,
          ctx: EvalContext = DEFAULT_CONTEXT) -> complex:
    """Evaluate ``Omega(s, n)`` with one representation.

    Parameters
    ----------
    s : complex
        Evaluation point; must not lie within ``exclusion`` of an integer.
    n : int
        Order parameter, ``n >= 0``; the polygamma order is ``2n``.
    rep : {"R1", "R2", "R3", "R4"}
        Representation, see the module docstring.
    exclusion : float, optional
        Pole exclusion radius; defaults to ``ctx.pole_exclusion_radius``.

    Raises
    ------
    PoleAtInteger
        When ``s`` is within the exclusion radius of an integer.

    Examples
    --------
    >>> abs(omega(0.5, 1) + 8 * math.pi**3) < 1e-10
    True
    """
    radius = ctx.pole_exclusion_radius if exclusion is None else exclusion
    s = _check(s, n, radius)
    n = int(n)
    if rep == "R1":
        return _r1(s, n, ctx)
    if rep == "R2":
        return _r2(s, n)
    if rep == "R3":
        return _r3(s, n)
    if rep == "R4":
        return _r4(s, n, ctx)
    raise ValueError(f"unknown representation {rep!r}; expected one of {REPRESENTATIONS}")


def omega_closed_form(s: complex, n: int) -> complex:
    """``Omega(s, 0) = -2 pi / sin(pi s)``; only ``n = 0`` has this form."""
    if n != 0:
        raise ValueError("closed form is implemented for n = 0 only")
    return -2.0 * math.pi / cmath.sin(math.pi * complex(_check(s, 0, 1e-6)))


@dataclass(frozen=True)
class OmegaResult:
    """All four representations of ``Omega(s, n)`` and their agreement."""

    s: complex
    n: int
    r1_polygamma: complex
    r2_alternating: complex
    r3_trig_derivative: complex
    r4_hurwitz: complex
    spread: float

    @property
    def values(self) -> tuple[complex, complex, complex, complex]:
        return (self.r1_polygamma, self.r2_alternating,
                self.r3_trig_derivative, self.r4_hurwitz)

    @property
    def rel_spread(self) -> float:
        """Spread divided by the largest magnitude (or 1, whichever is larger)."""
        return self.spread / max(1.0, max(abs(v) for v in self.values))

    @property
    def residual(self) -> float:
        """``min(spread, rel_spread)``, the convention used for identity checks."""
        return min(self.spread, self.rel_spread)

    def passed(self, tol: float = SPREAD_TOL) -> bool:
        return self.residual <= tol


def omega_all(s: complex, n: int, *, exclusion: float | None = None,
              ctx: EvalContext = DEFAULT_CONTEXT) -> OmegaResult:
    """Evaluate every representation and the maximum pairwise difference."""
    vals = [omega(s, n, rep, exclusion=exclusion, ctx=ctx) for rep in REPRESENTATIONS]
    spread = max(abs(a - b) for i, a in enumerate(vals) for b in vals[i + 1:])
    return OmegaResult(complex(s), int(n), *vals, spread)


# -- functional equations ----------------------------------------------------

@dataclass(frozen=True)
class Relation:
    """One functional relation ``Omega(s) = sign * Omega(t)``."""

    name: str
    point: complex
    sign: int
    lhs: complex
    rhs: complex

    @property
    def abs_residual(self) -> float:
        return abs(self.lhs - self.rhs)

    @property
    def rel_residual(self) -> float:
        return self.abs_residual / max(1.0, abs(self.lhs), abs(self.rhs))

    @property
    def residual(self) -> float:
        return min(self.abs_residual, self.rel_residual)


@dataclass(frozen=True)
class FunctionalReport:
    s: complex
    n: int
    relations: tuple[Relation, ...]

    @property
    def basic(self) -> tuple[Relation, ...]:
        """The six unit-shift and reflection relations."""
        return self.relations[:6]

    @property
    def family(self) -> tuple[Relation, ...]:
        """The ``j = 1, 2, 3`` shift family."""
        return self.relations[6:]

    @property
    def max_residual(self) -> float:
        return max(r.residual for r in self.relations)

    def passed(self, tol: float = 1e-8) -> bool:
        return self.max_residual <= tol


def _relations(s: complex, js: Sequence[int]) -> list[tuple[str, complex, int]]:
    out = [
        ("1-s", 1 - s, 1),
        ("-s", -s, -1),
        ("s+1", s + 1, -1),
        ("s-1", s - 1, -1),
        ("s+2", s + 2, 1),
        ("s-2", s - 2, 1),
    ]
    for j in js:
        o, e = 2 * j + 1, 2 * j
        out += [
            (f"s+{o}", s + o, -1), (f"s-{o}", s - o, -1),
            (f"-s+{o}", -s + o, 1), (f"-s-{o}", -s - o, 1),
            (f"s+{e}", s + e, 1), (f"s-{e}", s - e, 1),
            (f"-s+{e}", -s + e, -1), (f"-s-{e}", -s - e, -1),
        ]
    return out


def omega_functional_checks(s: complex, n: int, *, rep: str = "R1",
                            js: Sequence[int] = (1, 2, 3),
                            exclusion: float | None = None,
                            ctx: EvalContext = DEFAULT_CONTEXT) -> FunctionalReport:
    """Residuals of ``Omega(s) = sign * Omega(t)`` for the shift/reflection family.

    The first six relations are ``t = 1-s, -s, s+1, s-1, s+2, s-2`` with signs
    ``+, -, -, -, +, +``.  For each ``j`` in ``js`` the odd shifts ``s +- (2j+1)``
    flip the sign, their reflections ``-s +- (2j+1)`` keep it, even shifts keep
    it and reflected even shifts flip it.
    """
    s = complex(s)
    base = omega(s, n, rep, exclusion=exclusion, ctx=ctx)
    rels = []
    for name, t, sign in _relations(s, js):
        rels.append(Relation(name, t, sign, base, sign * omega(t, n, rep, exclusion=exclusion, ctx=ctx)))
    return FunctionalReport(s, int(n), tuple(rels))


def golden_quartet(n: int, *, rep: str = "R1",
                   ctx: EvalContext = DEFAULT_CONTEXT) -> dict[str, complex]:
    """``Omega`` at ``phi, 1-phi, 1+1/phi, -1/phi``, which coincide since ``phi**2 = phi+1``."""
    points = {"phi": PHI, "1-phi": 1 - PHI, "1+1/phi": 1 + 1 / PHI, "-1/phi": -1 / PHI}
    return {k: omega(v, n, rep, ctx=ctx) for k, v in points.items()}


# -- special evaluations -----------------------------------------------------

@dataclass(frozen=True)
class BetaRelation:
    """``Omega(1/2, n)`` against two closed-form candidates in ``beta(2n+1)``.

    ``derived_constant`` is ``-2**(4n+3) (2n)! beta(2n+1)``; ``printed_constant``
    is the printed ``-2 * 2**(2n+1) * 2**(2n+1) * beta(2n+1)``, which lacks the
    factorial.  The printed form labels the evaluation point ``1/4``, the
    polygamma arguments at ``s = 1/2`` are ``1/4`` and ``3/4``.
    """

    n: int
    point: float
    printed_label: str
    omega_at_half: complex
    derived_constant: float
    printed_constant: float
    derived_residual: float
    printed_residual: float
    tol: float

    @property
    def derived_matches(self) -> bool:
        return self.derived_residual <= self.tol

    @property
    def printed_matches(self) -> bool:
        return self.printed_residual <= self.tol

    @property
    def matched(self) -> str:
        return {(True, True): "both", (True, False): "derived",
                (False, True): "printed", (False, False): "neither"}[
            (self.derived_matches, self.printed_matches)]


def omega_beta_relation(n: int, *, tol: float = 1e-8,
                        ctx: EvalContext = DEFAULT_CONTEXT) -> BetaRelation:
    """Compare ``Omega(1/2, n)`` with both constants; residuals are relative."""
    if not 1 <= n <= 5:
        raise ValueError("n must be in 1..5")
    value = omega(0.5, n, "R1", ctx=ctx)
    beta = dirichlet_beta(2 * n + 1, ctx=ctx).real
    derived = -(2.0 ** (4 * n + 3)) * math.factorial(2 * n) * beta
    printed = -2.0 * 2.0 ** (2 * n + 1) * 2.0 ** (2 * n + 1) * beta
    rel = lambda c: abs(value - c) / abs(c)
    return BetaRelation(n, 0.5, "1/4", value, derived, printed, rel(derived), rel(printed), tol)


@dataclass(frozen=True)
class ImaginarySeries:
    """Alternating series behind ``Omega(i, n)`` against the trig-derivative form.

    ``series_value`` is the left side, ``rhs_value`` the right side built from
    the ``R3`` derivative at ``s = i``.  For ``n = 1`` both are divided by
    ``-6i`` so the series is the real sum
    ``-1/6 + sum_k (-1)**k (k**2 - 1/3) / (k**2 + 1)**3``.
    """

    n: int
    series_value: complex
    rhs_value: complex
    complex_series: complex
    residual: float


def omega_imaginary_series(n: int, *, ctx: EvalContext = DEFAULT_CONTEXT) -> ImaginarySeries:
    """Sum ``1/i**m + sum_{k>=1} (-1)**k ((k-i)**m - (k+i)**m) / (k**2+1)**m``.

    The right side is ``-D / (2 (2n)!)`` where ``D`` is the ``m``-th derivative
    of the eight-term log combination at ``s = i``.
    """
    if not 1 <= n <= 4:
        raise ValueError("n must be in 1..4")
    m = 2 * n + 1
    term = lambda k: ((k + 1 - 1j) ** m - (k + 1 + 1j) ** m) / ((k + 1) ** 2 + 1.0) ** m
    tail = accelerate_alternating(term, 1e-16, cap=10**5).value
    complex_series = 1j ** (-m) - tail
    deriv = _r3(1j, n) / 4.0**n
    rhs = -deriv / (2.0 * math.factorial(2 * n))
    if n == 1:
        real_term = lambda k: ((k + 1.0) ** 2 - 1.0 / 3.0) / ((k + 1.0) ** 2 + 1.0) ** 3
        series = -1.0 / 6.0 - accelerate_alternating(real_term, 1e-17).value
        rhs = rhs / (-6j)
    else:
        series = complex_series
    return ImaginarySeries(n, complex(series), complex(rhs), complex(complex_series),
                           abs(series - rhs))
