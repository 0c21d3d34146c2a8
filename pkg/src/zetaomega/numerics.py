"""Summation machinery shared by the special functions and Omega.

Three tools live here:

* :func:`compensated_sum` -- correctly rounded summation of complex terms.
* :func:`accelerate_alternating` -- sums ``sum_k (-1)**k a_k`` using the
  Cohen-Villegas-Zagier polynomial scheme for real terms and an Euler
  transform of the tail for complex terms.
* :func:`bilateral_power_sum` -- ``sum_{k in Z} (u + k*pi)**-m``, the partial
  fraction expansion behind every derivative of ``log sin``.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable

from .errors import NonConvergent, PoleAtNode

SERIES_CAP = 10**7
_CVZ_RATE = 3.0 + math.sqrt(8.0)


@dataclass(frozen=True)
class SeriesEstimate:
    """Value of an infinite series plus a truncation error estimate."""

    value: complex
    error_bound: float
    terms_used: int
    converged: bool = True


def compensated_sum(terms: Iterable[complex]) -> complex:
    """Sum complex terms with correctly rounded real and imaginary parts.

    >>> compensated_sum([1e16, 1, -1e16])
    (1+0j)
    """
    re: list[float] = []
    im: list[float] = []
    for t in terms:
        t = complex(t)
        if not (math.isfinite(t.real) and math.isfinite(t.imag)):
            raise ValueError(f"non-finite term {t!r}")
        re.append(t.real)
        im.append(t.imag)
    return complex(math.fsum(re), math.fsum(im))


# -- Bernoulli numbers -------------------------------------------------------

@lru_cache(maxsize=None)
def bernoulli_fractions(count: int) -> tuple[Fraction, ...]:
    """Exact B_0..B_count from the recurrence sum_k C(n+1,k) B_k = 0."""
    b = [Fraction(1)]
    for n in range(1, count + 1):
        acc = Fraction(0)
        binom = 1
        for k in range(n):
            acc += binom * b[k]
            binom = binom * (n + 1 - k) // (k + 1)
        b.append(-acc / (n + 1))
    return tuple(b)


@lru_cache(maxsize=None)
def even_bernoulli(order: int) -> tuple[float, ...]:
    """B_2, B_4, ..., B_{2*order} rounded to double."""
    exact = bernoulli_fractions(2 * order)
    return tuple(float(exact[2 * j]) for j in range(1, order + 1))


# -- alternating series ------------------------------------------------------

def _cvz(term: Callable[[int], complex], n: int) -> complex:
    d = _CVZ_RATE**n
    d = (d + 1.0 / d) / 2.0
    b = -1.0
    c = -d
    s = 0j
    for k in range(n):
        c = b - c
        s += c * complex(term(k))
        b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1.0))
    return s / d


def _euler_tail(term: Callable[[int], complex], start: int, target: float,
                max_diffs: int) -> tuple[complex, float, int]:
    """Euler transform of sum_{k>=0} (-1)**k term(start + k)."""
    row: list[complex] = []
    total = []
    small = 0
    last = []
    for j in range(max_diffs):
        try:
            v = complex(term(start + j))
        except OverflowError:
            raise NonConvergent(f"term {start + j} overflows") from None
        new = [v]
        for i in range(j):
            new.append(new[i] - row[i])
        row = new
        t = (-1) ** j * row[j] / 2.0 ** (j + 1)
        total.append(t)
        last.append(abs(t))
        if not math.isfinite(last[-1]) or (j >= 12 and min(last[-4:]) > 1e3 * max(last[:4])):
            raise NonConvergent("Euler-transformed terms grow; the series diverges")
        if j >= 4 and abs(t) <= target / 8.0:
            small += 1
            if small >= 3:
                return compensated_sum(total), 2.0 * max(last[-3:]), j + 1
        else:
            small = 0
    return compensated_sum(total), 2.0 * max(last[-3:]), max_diffs


def accelerate_alternating(term: Callable[[int], complex],
                           target_error: float = 1e-12, *,
                           method: str = "auto", head: int = 16,
                           cap: int = SERIES_CAP) -> SeriesEstimate:
    """Sum ``sum_{k>=0} (-1)**k term(k)``.

    Parameters
    ----------
    term : callable
        ``term(k)`` for ``k = 0, 1, ...``; should decay and be eventually
        monotone in magnitude.
    target_error : float
        Requested absolute accuracy.
    method : {"auto", "cvz", "euler"}
        ``auto`` probes the first terms and picks CVZ when they are real.
    head : int
        Euler path only: number of leading terms summed directly before the
        transform is applied to the tail.
    cap : int
        Hard limit on term evaluations.

    Raises
    ------
    NonConvergent
        When two acceleration depths disagree (terms do not decay) or the
        Euler transform does not settle within ``cap`` terms.
    """
    if target_error <= 0:
        raise ValueError("target_error must be positive")
    if method == "auto":
        probe = [complex(term(k)) for k in range(4)]
        method = "cvz" if all(p.imag == 0.0 for p in probe) else "euler"

    if method == "cvz":
        a0 = max(abs(complex(term(0))), 1e-300)
        n = max(4, math.ceil(math.log(2.0 * a0 / target_error) / math.log(_CVZ_RATE)) + 1)
        n2 = n + 4
        if n2 > cap:
            raise NonConvergent(f"CVZ needs {n2} terms, cap is {cap}")
        s1 = _cvz(term, n)
        s2 = _cvz(term, n2)
        err = max(abs(s2 - s1), 2.0 * a0 / _CVZ_RATE**n2)
        if abs(s2 - s1) > max(target_error, 1e-13 * abs(s2)) * 1e3:
            raise NonConvergent(f"CVZ estimates disagree by {abs(s2 - s1):.3e}")
        return SeriesEstimate(s2, err, n2, err <= target_error)

    if method != "euler":
        raise ValueError(f"unknown method {method!r}")
    head = max(0, head)
    head_terms = [(-1) ** k * complex(term(k)) for k in range(head)]
    max_diffs = min(400, cap - head)
    tail, err, used = _euler_tail(term, head, target_error, max_diffs)
    value = compensated_sum(head_terms + [(-1) ** head * tail])
    err += 4e-16 * sum(abs(t) for t in head_terms)
    if err > target_error and not math.isfinite(err):
        raise NonConvergent("Euler transform produced non-finite terms")
    if err > 1e3 * target_error:
        raise NonConvergent(f"Euler transform did not settle (err {err:.3e})")
    return SeriesEstimate(value, err, head + used, err <= target_error)


# -- bilateral partial-fraction sums -----------------------------------------

def _em_tail(a: complex, m: int, start: int, order: int = 12) -> complex:
    """Euler-Maclaurin value of sum_{k>=start} (k + a)**-m, m >= 2."""
    z = start + a
    zm = z ** (-m)
    total = [z * zm / (m - 1), zm / 2.0]
    rising = float(m)  # (m)_{2j-1}
    zpow = zm / z
    z2 = z * z
    fact = 2.0  # (2j)!
    for j, b in enumerate(even_bernoulli(order), start=1):
        total.append(b / fact * rising * zpow)
        rising *= (m + 2 * j - 1) * (m + 2 * j)
        zpow /= z2
        fact *= (2 * j + 1) * (2 * j + 2)
    return compensated_sum(total)


def bilateral_power_sum(u: complex, m: int, *, exclusion: float = 1e-6,
                        window: int = 16, drop_nearest: bool = False) -> complex:
    """``sum_{k in Z} 1/(u + k*pi)**m`` for integer ``m >= 2``.

    A symmetric window ``|k| <= window`` is summed directly; both tails are
    closed with an Euler-Maclaurin correction, so the result is accurate to
    rounding for every ``m >= 2``.  With ``drop_nearest`` the term with the
    smallest ``|u + k*pi|`` is left out, which gives the regular part of the
    sum near a node without cancellation.

    >>> abs(bilateral_power_sum(math.pi / 4, 2) - 2.0) < 1e-14
    True
    """
    if m < 2 or int(m) != m:
        raise ValueError("m must be an integer >= 2")
    m = int(m)
    u = complex(u)
    shift = round(u.real / math.pi)
    u -= shift * math.pi
    if abs(u) < exclusion and not drop_nearest:
        raise PoleAtNode(f"u is within {exclusion:g} of {shift}*pi")
    x = u / math.pi
    direct = [(x + k) ** (-m) for k in range(-window, window + 1)
              if not (drop_nearest and k == 0)]
    right = _em_tail(x, m, window + 1)
    left = (-1) ** m * _em_tail(-x, m, window + 1)
    return compensated_sum(direct + [right, left]) / math.pi**m
