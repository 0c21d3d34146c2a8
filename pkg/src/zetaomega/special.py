"""Complex special functions: log-gamma, zeta, Hurwitz zeta, polygamma, eta, beta.

All functions take and return Python ``complex`` values (real inputs are
accepted).  None of them uses the zeta reflection formula: the identities
built on top of these primitives include that formula, so the primitives
must reach the left half-plane on their own.  Two routes are used:

* Euler-Maclaurin summation after an upward shift, for ``Re s >= 0``;
* the Hermite (Abel-Plana) integral, for ``Re s < 0``, where
  Euler-Maclaurin loses every significant digit to cancellation.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (NonPositiveIntegerShift, PoleAtNonPositiveInteger,
                     PoleAtOne)
from .numerics import accelerate_alternating, compensated_sum, even_bernoulli

LOG_2PI = math.log(2.0 * math.pi)
EPS = np.finfo(float).eps


@dataclass(frozen=True)
class EvalContext:
    """Numerical configuration shared by every special function.

    Attributes
    ----------
    em_shift : int
        Minimum Euler-Maclaurin shift ``N``; raised adaptively with ``|s|``.
    bernoulli_order : int
        Number of ``B_2j`` correction terms.
    pole_exclusion_radius : float
        Inputs closer than this to a pole raise instead of returning inf.
    default_tolerance : float
        Target accuracy for accelerated series.
    """

    em_shift: int = 10
    bernoulli_order: int = 15
    pole_exclusion_radius: float = 1e-6
    default_tolerance: float = 1e-13
    bernoulli_table: tuple[float, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.em_shift < 1 or self.bernoulli_order < 1:
            raise ValueError("em_shift and bernoulli_order must be positive")
        if not 0.0 < self.pole_exclusion_radius < 0.5:
            raise ValueError("pole_exclusion_radius must lie in (0, 0.5)")
        object.__setattr__(self, "bernoulli_table", even_bernoulli(self.bernoulli_order))


DEFAULT_CONTEXT = EvalContext()


@dataclass(frozen=True)
class FunctionValue:
    value: complex
    condition_hint: float  # estimated relative error


def _near_nonpositive_integer(z: complex, radius: float) -> bool:
    if z.real > radius:
        return False
    k = round(z.real)
    return k <= 0 and abs(z - k) < radius


# -- gamma family ------------------------------------------------------------

def _ln_gamma(s: complex, ctx: EvalContext) -> tuple[complex, float]:
    s = complex(s)
    if _near_nonpositive_integer(s, ctx.pole_exclusion_radius):
        raise PoleAtNonPositiveInteger(f"log-gamma pole at s={s}")
    n_shift = max(0, math.ceil(10.0 - s.real))
    z = s + n_shift
    terms = [(z - 0.5) * cmath.log(z), -z, 0.5 * LOG_2PI]
    zinv = 1.0 / z
    zpow = zinv
    z2inv = zinv * zinv
    for j, b in enumerate(ctx.bernoulli_table, start=1):
        terms.append(b / (2 * j * (2 * j - 1)) * zpow)
        zpow *= z2inv
    terms.extend(-cmath.log(s + k) for k in range(n_shift))
    value = compensated_sum(terms)
    scale = sum(abs(t) for t in terms)
    return value, 4 * EPS * scale


def ln_gamma(s: complex, *, ctx: EvalContext = DEFAULT_CONTEXT) -> complex:
    """Principal branch of ``log Gamma(s)``.

    Continuous on the plane cut along the negative real axis; on the cut
    itself the value approached from above is returned.

    >>> abs(ln_gamma(5) - math.log(24)) < 1e-14
    True
    """
    return _ln_gamma(s, ctx)[0]


def gamma(s: complex, *, ctx: EvalContext = DEFAULT_CONTEXT) -> complex:
    return cmath.exp(_ln_gamma(s, ctx)[0])


def _digamma(x: complex, ctx: EvalContext) -> complex:
    n_shift = max(0, math.ceil(10.0 - x.real))
    z = x + n_shift
    zinv2 = 1.0 / (z * z)
    zpow = zinv2
    terms = [cmath.log(z), -0.5 / z]
    for j, b in enumerate(ctx.bernoulli_table, start=1):
        terms.append(-b / (2 * j) * zpow)
        zpow *= zinv2
    terms.extend(-1.0 / (x + k) for k in range(n_shift))
    return compensated_sum(terms)


def _polygamma_pos(m: int, x: complex, ctx: EvalContext) -> complex:
    # asymptotic expansion at z = x + N, then downward recurrence
    n_shift = max(0, math.ceil(10.0 + 2 * m - x.real))
    z = x + n_shift
    zinv = 1.0 / z
    sign = -1.0 if m % 2 == 0 else 1.0  # (-1)**(m+1)
    terms = [math.factorial(m - 1) * zinv**m, math.factorial(m) / 2.0 * zinv ** (m + 1)]
    zpow = zinv ** (m + 2)
    z2inv = zinv * zinv
    for j, b in enumerate(ctx.bernoulli_table, start=1):
        terms.append(b * math.factorial(2 * j + m - 1) / math.factorial(2 * j) * zpow)
        zpow *= z2inv
    asym = sign * compensated_sum(terms)
    fm = math.factorial(m) * (1.0 if m % 2 == 0 else -1.0)  # (-1)**m m!
    rec = compensated_sum((x + k) ** (-(m + 1)) for k in range(n_shift))
    return asym - fm * rec


def polygamma(m: int, x: complex, *, ctx: EvalContext = DEFAULT_CONTEXT) -> complex:
    """``psi^(m)(x)``, the ``(m+1)``-th derivative of ``log Gamma``.

    ``m = 0`` is the digamma function.  For ``m >= 1`` the result equals
    ``(-1)**(m+1) m! zeta(m+1, x)``, but it is computed from the polygamma
    asymptotic series so it stays independent of :func:`hurwitz_zeta`.
    """
    if m < 0 or int(m) != m:
        raise ValueError("polygamma order must be a non-negative integer")
    x = complex(x)
    if _near_nonpositive_integer(x, ctx.pole_exclusion_radius):
        raise PoleAtNonPositiveInteger(f"polygamma pole at x={x}")
    if m == 0:
        return _digamma(x, ctx)
    return _polygamma_pos(int(m), x, ctx)


# -- zeta family -------------------------------------------------------------

def _em_shift(s: complex, ctx: EvalContext) -> int:
    return max(ctx.em_shift, math.ceil(0.64 * (abs(s) + 2 * ctx.bernoulli_order)))


def _hurwitz_em(s: complex, a: complex, ctx: EvalContext) -> tuple[complex, float]:
    target = _em_shift(s, ctx)
    n_shift = max(0, math.ceil(target - a.real))
    head = [cmath.exp(-s * cmath.log(a + k)) for k in range(n_shift)]
    z = a + n_shift
    logz = cmath.log(z)
    zs = cmath.exp(-s * logz)  # z**-s
    tail = [z * zs / (s - 1.0), 0.5 * zs]
    rising = s  # (s)_{2j-1}
    zpow = zs / z
    z2 = z * z
    fact = 2.0
    for j, b in enumerate(ctx.bernoulli_table, start=1):
        tail.append(b / fact * rising * zpow)
        rising *= (s + 2 * j - 1) * (s + 2 * j)
        zpow /= z2
        fact *= (2 * j + 1) * (2 * j + 2)
    terms = head + tail
    value = compensated_sum(terms)
    return value, 4 * EPS * sum(abs(t) for t in terms) + abs(tail[-1])


# exp-sinh nodes on x in [-4.5, 2.5]: t = exp(pi/2 sinh x)
_H = 1.0 / 64.0
_X = np.arange(-4.5, 2.5 + _H / 2, _H)
_T = np.exp(0.5 * np.pi * np.sinh(_X))
_W = (_T * 0.5 * np.pi * np.cosh(_X) * _H * np.exp(-2.0 * np.pi * _T)
      / -np.expm1(-2.0 * np.pi * _T))


def _hurwitz_hermite(s: complex, a: complex) -> tuple[complex, float]:
    """Hermite integral for zeta(s, a); requires Re a > 0."""
    la = cmath.log(a)
    base = cmath.exp(-s * la)
    lp = np.log(a + 1j * _T)
    lm = np.log(a - 1j * _T)
    g = 1j * (np.exp(-s * lp) - np.exp(-s * lm))
    fine = np.sum(g * _W)
    coarse = 2.0 * np.sum(g[::2] * _W[::2])
    integral = complex(fine)
    value = 0.5 * base + a * base / (s - 1.0) + integral
    scale = float(np.sum(np.abs(g * _W))) + abs(base) * (0.5 + abs(a / (s - 1.0)))
    return value, abs(integral - complex(coarse)) + 4 * EPS * scale


def _hurwitz(s: complex, a: complex, ctx: EvalContext) -> tuple[complex, float]:
    s = complex(s)
    a = complex(a)
    r = ctx.pole_exclusion_radius
    if abs(s - 1.0) < r:
        raise PoleAtOne(f"pole at s=1 (s={s})")
    if _near_nonpositive_integer(a, r):
        raise NonPositiveIntegerShift(f"Hurwitz shift a={a} hits the pole lattice")
    if s.real >= 0.0:
        return _hurwitz_em(s, a, ctx)
    n_shift = max(0, math.ceil(0.5 - a.real))
    head = [cmath.exp(-s * cmath.log(a + k)) for k in range(n_shift)]
    value, err = _hurwitz_hermite(s, a + n_shift)
    return compensated_sum(head + [value]), err + 4 * EPS * sum(abs(h) for h in head)


def hurwitz_zeta(s: complex, a: complex, *, ctx: EvalContext = DEFAULT_CONTEXT) -> complex:
    """``zeta(s, a) = sum_{k>=0} (k + a)**-s`` continued to ``s != 1``.

    Powers use the principal branch of ``log(k + a)``.
    """
    return _hurwitz(s, a, ctx)[0]


def riemann_zeta(s: complex, *, ctx: EvalContext = DEFAULT_CONTEXT) -> complex:
    """Riemann zeta on the whole plane minus ``s = 1``.

    Shares its code path with ``hurwitz_zeta(s, 1)``.

    >>> abs(riemann_zeta(2) - math.pi**2 / 6) < 1e-15
    True
    """
    return _hurwitz(s, 1.0, ctx)[0]


def dirichlet_eta(s: complex, *, ctx: EvalContext = DEFAULT_CONTEXT) -> complex:
    """Alternating zeta ``sum_{k>=1} (-1)**(k-1) k**-s``.

    The series is accelerated directly for ``Re s >= 0``.  For ``Re s < 0``
    the terms grow and acceleration loses digits, so the odd/even split
    ``2**-s [zeta(s, 1/2) - zeta(s, 1)]`` is used instead.
    """
    s = complex(s)
    if s.real < 0:
        h, _ = _hurwitz(s, 0.5, ctx)
        z, _ = _hurwitz(s, 1.0, ctx)
        return cmath.exp(-s * math.log(2.0)) * (h - z)
    term = (lambda k: (k + 1.0) ** (-s.real)) if s.imag == 0 else (lambda k: (k + 1.0) ** (-s))
    return accelerate_alternating(term, ctx.default_tolerance).value


def dirichlet_beta(s: complex, *, ctx: EvalContext = DEFAULT_CONTEXT) -> complex:
    """Dirichlet beta ``sum_{k>=0} (-1)**k (2k+1)**-s``; entire.

    Near ``s = 1`` the Hurwitz difference has two cancelling poles, so the
    alternating series is summed directly there.
    """
    s = complex(s)
    if abs(s - 1.0) < 0.25:
        if s.imag == 0:
            term = lambda k: (2.0 * k + 1.0) ** (-s.real)
        else:
            term = lambda k: (2.0 * k + 1.0) ** (-s)
        return accelerate_alternating(term, ctx.default_tolerance).value
    q = cmath.exp(-s * math.log(4.0))
    return q * (_hurwitz(s, 0.25, ctx)[0] - _hurwitz(s, 0.75, ctx)[0])


# -- uniform entry point with error hints ------------------------------------

def evaluate(name: str, s: complex, *, order: int = 0, a: complex = 1.0,
             ctx: EvalContext = DEFAULT_CONTEXT) -> FunctionValue:
    """Evaluate a named function and attach an estimated relative error.

    ``name`` is one of ``zeta, hurwitz, gamma, lngamma, polygamma, beta,
    eta``.
    """
    s = complex(s)
    if name in ("zeta", "hurwitz"):
        value, err = _hurwitz(s, 1.0 if name == "zeta" else a, ctx)
    elif name == "lngamma":
        value, err = _ln_gamma(s, ctx)
    elif name == "gamma":
        lg, err = _ln_gamma(s, ctx)
        value = cmath.exp(lg)
        err *= abs(value)
    elif name == "polygamma":
        value = polygamma(order, s, ctx=ctx)
        err = 16 * EPS * abs(value) * (1 + order)
    elif name == "beta":
        value = dirichlet_beta(s, ctx=ctx)
        err = ctx.default_tolerance
    elif name == "eta":
        value = dirichlet_eta(s, ctx=ctx)
        err = ctx.default_tolerance
    else:
        raise ValueError(f"unknown function {name!r}")
    hint = err / abs(value) if value != 0 else err
    return FunctionValue(value, float(max(hint, EPS)))
