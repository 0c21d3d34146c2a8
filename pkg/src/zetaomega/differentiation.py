"""High-order derivatives: Cauchy contour integrals and trig-log closed forms.

The contour route samples ``f`` on a circle and reads Taylor coefficients
off an FFT, so one set of samples yields every order at once.  Accuracy is
judged by comparing the full node set with its even-indexed half.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable

import numpy as np

from .errors import NearZetaZero, NonConvergent, PoleAtNode, SingularityInDisk
from .numerics import bilateral_power_sum
from .special import DEFAULT_CONTEXT, EvalContext, polygamma, riemann_zeta

MAX_ORDER = 12
MAX_NODES = 4096
EPS = np.finfo(float).eps
ZETA_FLOOR = 1e-12


@dataclass(frozen=True)
class ContourSpec:
    """Circle ``|z - center| = radius`` sampled at ``node_count`` points."""

    center: complex
    radius: float
    node_count: int = 64

    def __post_init__(self):
        if not self.radius > 0:
            raise ValueError("radius must be positive")
        n = self.node_count
        if n < 64 or n & (n - 1):
            raise ValueError("node_count must be a power of two, at least 64")


@dataclass(frozen=True)
class DerivativeValue:
    order: int
    value: complex
    error_estimate: float


@dataclass(frozen=True)
class TaylorData:
    """Taylor coefficients at the contour center plus per-order error."""

    coefficients: np.ndarray  # a_k, k = 0..N/2-1
    errors: np.ndarray
    node_count: int

    def derivative(self, order: int) -> DerivativeValue:
        f = math.factorial(order)
        return DerivativeValue(order, complex(f * self.coefficients[order]),
                               float(f * self.errors[order]))


def _sample(f, spec: ContourSpec, n: int, unwrap: bool) -> np.ndarray:
    theta = 2.0 * np.pi * np.arange(n) / n
    z = spec.center + spec.radius * np.exp(1j * theta)
    vals = np.array([complex(f(complex(zj))) for zj in z])
    if not np.all(np.isfinite(vals)):
        raise SingularityInDisk("non-finite value on the contour")
    if unwrap:
        # follow the analytic branch of a log around the circle
        im = np.unwrap(np.append(vals.imag, vals.imag[0]))
        if abs(im[-1] - im[0]) > np.pi:
            raise SingularityInDisk("logarithm winds around the contour: a zero or "
                                    "pole lies inside the disk")
        vals = vals.real + 1j * im[:-1]
    return vals


def _coefficients(vals: np.ndarray, radius: float, kmax: int) -> np.ndarray:
    n = len(vals)
    c = np.fft.fft(vals)[:kmax + 1] / n
    return c / radius ** np.arange(kmax + 1)


def taylor_coefficients(f: Callable[[complex], complex], spec: ContourSpec,
                        max_order: int = MAX_ORDER, *,
                        singularities: Iterable[complex] = (),
                        unwrap: bool = False, tol: float = 1e-10) -> TaylorData:
    """Taylor coefficients ``a_0..a_max_order`` of ``f`` at ``spec.center``.

    The node count doubles from ``spec.node_count`` until the coefficients
    from ``N`` and ``N/2`` nodes agree to ``tol`` (relative, per order) or
    reach the rounding floor.

    Parameters
    ----------
    singularities : iterable of complex
        Known singular points of ``f``; the closed disk must avoid them.
    unwrap : bool
        ``f`` returns principal logarithms; the imaginary part is made
        continuous along the contour before integrating.
    """
    if not 0 <= max_order <= MAX_ORDER:
        raise ValueError(f"order must lie in [0, {MAX_ORDER}]")
    for p in singularities:
        if abs(complex(p) - spec.center) <= spec.radius:
            raise SingularityInDisk(f"singularity {p} inside contour of radius "
                                    f"{spec.radius} at {spec.center}")
    n = spec.node_count
    vals = _sample(f, spec, n, unwrap)
    k = np.arange(max_order + 1)
    fact = np.array([math.factorial(int(j)) for j in k], dtype=float)
    while True:
        fine_vals = _sample(f, ContourSpec(spec.center, spec.radius, 2 * n), 2 * n, unwrap)
        if unwrap:
            # keep both resolutions on the same sheet
            shift = np.round((fine_vals[0].imag - vals[0].imag) / (2 * np.pi))
            fine_vals = fine_vals - 2j * np.pi * shift
        coarse = _coefficients(fine_vals[::2], spec.radius, max_order)
        fine = _coefficients(fine_vals, spec.radius, max_order)
        floor = 8 * EPS * np.max(np.abs(fine_vals)) / spec.radius**k
        diff = np.abs(fine - coarse)
        scale = np.maximum(np.abs(fine) * fact, 1.0) / fact
        if np.all(diff <= np.maximum(tol * scale, 16 * floor)):
            return TaylorData(fine, diff + floor, 2 * n)
        n *= 2
        vals = fine_vals
        if 2 * n > MAX_NODES:
            worst = int(np.argmax(diff / np.maximum(tol * scale, 16 * floor)))
            raise NonConvergent(f"contour coefficients of order {worst} did not "
                                f"settle with {MAX_NODES} nodes")


def cauchy_derivative(f: Callable[[complex], complex], spec: ContourSpec, order: int,
                      *, singularities: Iterable[complex] = (), unwrap: bool = False,
                      tol: float = 1e-10) -> DerivativeValue:
    """``f^(order)(spec.center)`` from the Cauchy integral formula.

    >>> d = cauchy_derivative(lambda z: z**3, ContourSpec(0.7, 0.5), 3)
    >>> abs(d.value - 6) < 1e-12
    True
    """
    if not 1 <= order <= MAX_ORDER:
        raise ValueError(f"order must lie in [1, {MAX_ORDER}]")
    data = taylor_coefficients(f, spec, order, singularities=singularities,
                               unwrap=unwrap, tol=tol)
    return data.derivative(order)


# -- closed forms for log sin / log cos --------------------------------------

def log_sin_derivative(alpha: complex, beta: complex, s: complex, order: int) -> complex:
    """``d^m/ds^m log sin(alpha*s + beta)`` for ``m >= 1``."""
    if order < 1 or int(order) != order:
        raise ValueError("order must be a positive integer")
    u = alpha * complex(s) + beta
    shift = round(u.real / math.pi)
    if abs(u - shift * math.pi) < 1e-6:
        raise PoleAtNode(f"sin({u}) vanishes")
    if order == 1:
        return alpha * cmath.cos(u) / cmath.sin(u)
    m = int(order)
    sign = 1.0 if m % 2 else -1.0  # (-1)**(m-1)
    return alpha**m * sign * math.factorial(m - 1) * bilateral_power_sum(u, m)


def log_sin_derivative_split(alpha: float, beta: float, s: complex, order: int
                             ) -> tuple[complex, float, float]:
    """Split ``d^m/ds^m log sin(alpha*s + beta)`` at the nearest zero ``p``.

    Returns ``(regular, p, c)`` with the full value equal to
    ``regular + c / (s - p)**m``.  Requires ``m >= 2`` and real ``alpha``.
    """
    m = int(order)
    if m < 2:
        raise ValueError("split form needs order >= 2")
    u = alpha * complex(s) + beta
    j = round(u.real / math.pi)
    p = (j * math.pi - beta) / alpha
    if abs(p - round(p)) < 1e-9:
        p = float(round(p))
    sign = 1.0 if m % 2 else -1.0
    c = sign * math.factorial(m - 1)
    reg = alpha**m * c * bilateral_power_sum(u, m, drop_nearest=True)
    return reg, p, c


_HALF = math.pi / 2
_TRIG = {
    "sin_half": ((0.0, 1.0),),
    "cos_half": ((_HALF, 1.0),),
    "tan_half": ((0.0, 1.0), (_HALF, -1.0)),
    "cot_half": ((_HALF, 1.0), (0.0, -1.0)),
}


def trig_log_derivative(kind: str, s: complex, order: int) -> complex:
    """Order-``m`` derivative of ``log f(pi s / 2)`` for ``f`` in sin, cos, tan, cot.

    ``kind`` is one of ``sin_half``, ``cos_half``, ``tan_half``, ``cot_half``.
    Cosine is handled as a shifted sine, tan and cot as log differences.

    >>> abs(trig_log_derivative("sin_half", 0.5, 1) - math.pi / 2) < 1e-15
    True
    """
    try:
        parts = _TRIG[kind]
    except KeyError:
        raise ValueError(f"unknown kind {kind!r}") from None
    return sum(c * log_sin_derivative(_HALF, beta, s, order) for beta, c in parts)


def trig_log_derivative_split(kind: str, s: complex, order: int
                              ) -> tuple[complex, list[tuple[float, float]]]:
    """Regular part and pole terms ``[(p, c), ...]`` of :func:`trig_log_derivative`.

    The full value is ``regular + sum(c / (s - p)**order)``.
    """
    parts = _TRIG[kind]
    reg = 0j
    poles = []
    for beta, w in parts:
        r, p, c = log_sin_derivative_split(_HALF, beta, s, order)
        reg += w * r
        poles.append((p, w * c))
    return reg, poles


# -- log of the zeta ratio ---------------------------------------------------

def _checked_zeta(s: complex, ctx: EvalContext) -> complex:
    z = riemann_zeta(s, ctx=ctx)
    if abs(z) < ZETA_FLOOR:
        raise NearZetaZero(f"|zeta({s})| = {abs(z):.2e} is below {ZETA_FLOOR:g}")
    return z


def log_zeta_ratio(s: complex, *, ctx: EvalContext = DEFAULT_CONTEXT) -> complex:
    """Principal ``log(zeta(s) / zeta(1 - s))`` from two direct evaluations.

    >>> log_zeta_ratio(0.5)
    0j
    """
    s = complex(s)
    a, b = _checked_zeta(s, ctx), _checked_zeta(1.0 - s, ctx)
    if s.imag == 0.0:
        # real ratio: keep the imaginary part at +0 so the branch is +pi
        return cmath.log(complex((a / b).real, 0.0))
    return cmath.log(a / b)


def _ratio_singularities(s: complex, regular: bool = False) -> list[complex]:
    # poles at 0 and 1 (removed when regular), trivial zeros of zeta(s) and
    # of zeta(1 - s)
    pts = [] if regular else [0.0, 1.0]
    k0 = max(1, int(abs(s.real)) // 2 - 1)
    for k in range(k0, k0 + 4):
        pts += [-2.0 * k, 1.0 + 2.0 * k]
    return [complex(p) for p in pts]


def contour_radius(s: complex, singular: Iterable[complex], cap: float = 0.4,
                   fraction: float = 0.6) -> float:
    """Disk radius: ``fraction`` of the distance to the nearest singularity."""
    d = min(abs(complex(s) - p) for p in singular)
    return min(cap, fraction * d)


def _regular_log_ratio(z: complex, ctx: EvalContext) -> complex:
    # log(zeta(1-z)/zeta(z)) minus its logarithmic poles at z = 0 and z = 1
    return (cmath.log(_checked_zeta(1.0 - z, ctx)) + cmath.log(z)
            - cmath.log(_checked_zeta(z, ctx)) - cmath.log(z - 1.0))


@lru_cache(maxsize=512)
def _ratio_taylor(s: complex, radius: float, ctx: EvalContext) -> TaylorData:
    # Taylor data of the regularised ratio; shared across orders
    return taylor_coefficients(lambda z: _regular_log_ratio(z, ctx),
                               ContourSpec(s, radius, 64), MAX_ORDER,
                               singularities=_ratio_singularities(s, True), unwrap=True,
                               tol=1e-11)


def log_zeta_ratio_derivative_split(s: complex, n: int, *,
                                    ctx: EvalContext = DEFAULT_CONTEXT
                                    ) -> tuple[DerivativeValue, list[tuple[float, float]]]:
    """Contour derivative of the regularised ratio plus its pole terms.

    ``log(zeta(1-s)/zeta(s)) = g(s) + log(s - 1) - log(s)`` (up to a
    constant) with ``g`` analytic near ``[0, 1]``; ``g`` is differentiated
    on a circle and the two logarithms contribute exact terms
    ``c / (s - p)**m``.
    """
    m = 2 * int(n) + 1
    s = complex(s)
    r = contour_radius(s, _ratio_singularities(s, True))
    # the removed poles are still evaluated as zeta poles: keep the circle
    # at least 0.1 away from 0 and 1
    for cand in (r, 0.75 * r, 0.5 * r):
        if min(abs(abs(s) - cand), abs(abs(s - 1.0) - cand)) >= min(0.1, 0.5 * cand):
            r = cand
            break
    if r < 1e-3:
        raise SingularityInDisk(f"s={s} is too close to a trivial zero for a contour")
    near = min(abs(s), abs(s - 1.0))
    if near < 1e-3:
        raise SingularityInDisk(f"s={s} is too close to a pole of the ratio")
    c = float(math.factorial(m - 1))  # (-1)**(m-1) (m-1)! with m odd
    return _ratio_taylor(s, r, ctx).derivative(m), [(1.0, c), (0.0, -c)]


def log_zeta_ratio_derivative(s: complex, n: int, method: str = "closed_form", *,
                              ctx: EvalContext = DEFAULT_CONTEXT) -> DerivativeValue:
    """``d^(2n+1)/ds^(2n+1) log(zeta(1 - s) / zeta(s))``.

    Parameters
    ----------
    method : {"closed_form", "contour"}
        ``closed_form`` uses ``psi^(2n)(s)`` plus the log-cosine derivative;
        ``contour`` differentiates direct zeta evaluations on a circle, after
        removing the logarithmic poles at 0 and 1 (their derivatives are
        added back exactly).  The radius is 0.6 times the distance to the
        nearest trivial zero, capped at 0.4.  The two routes share no code
        beyond the primitives.
    """
    if n < 1 or int(n) != n:
        raise ValueError("n must be a positive integer")
    m = 2 * int(n) + 1
    if m > MAX_ORDER:
        raise ValueError(f"order 2n+1 = {m} exceeds the cap {MAX_ORDER}")
    s = complex(s)
    if method == "closed_form":
        psi = polygamma(m - 1, s, ctx=ctx)
        trig = trig_log_derivative("cos_half", s, m)
        value = psi + trig
        err = 64 * EPS * (abs(psi) + abs(trig))
        return DerivativeValue(m, value, err)
    if method == "contour":
        reg, poles = log_zeta_ratio_derivative_split(s, n, ctx=ctx)
        tail = sum(c / (s - p) ** m for p, c in poles)
        return DerivativeValue(m, reg.value + tail,
                               reg.error_estimate + 4 * EPS * abs(tail))
    raise ValueError(f"unknown method {method!r}")
