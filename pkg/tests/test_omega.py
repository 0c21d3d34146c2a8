"""Omega: four representations, functional equations, special evaluations."""
import math
import random

import mpmath as mp
import pytest
from hypothesis import given, settings, strategies as st

from zetaomega.errors import PoleAtInteger
from zetaomega.omega import (PHI, REPRESENTATIONS, alternating_power_sum, golden_quartet,
                             omega, omega_all, omega_beta_relation, omega_closed_form,
                             omega_functional_checks, omega_imaginary_series)
from zetaomega.special import dirichlet_beta

MINUS_8_PI3 = -8 * math.pi**3

# frozen mpmath values of the four-polygamma combination
ORACLES = [
    (0.3, 1, -630.30046964367413139),
    (1j, 1, -21.8006348262111984j),
    (1j, 2, 976.23602937951613191j),
    (0.3 + 0.4j, 2, 3813.7707478805115398 - 25792.398539459608517j),
    (0.3, 3, -422501642.74057449008),
    (-2.7, 2, 320372.82448308601728),
    (0.2 + 1.5j, 3, 4471.2834793891279639 - 5492.321177979957058j),
]


@pytest.mark.parametrize("rep", REPRESENTATIONS)
@pytest.mark.parametrize("s, n, expected", ORACLES)
def test_representations_match_oracle(s, n, expected, rep):
    assert abs(omega(s, n, rep) - expected) <= 1e-12 * abs(expected)


@pytest.mark.parametrize("rep", REPRESENTATIONS)
def test_half_point(rep):
    assert abs(omega(0.5, 1, rep) - MINUS_8_PI3) < 1e-10
    assert abs(omega(0.5, 0, rep) + 2 * math.pi) < 1e-12


def test_poles():
    for s in (0, 1, -3, 2 + 1e-9):
        with pytest.raises(PoleAtInteger, match="pole at integer point"):
            omega(s, 1)
    with pytest.raises(ValueError):
        omega(0.5, -1)
    with pytest.raises(ValueError):
        omega(0.5, 1, "R5")


def test_omega_all_examples():
    assert omega_all(0.3, 1).spread < 1e-8
    r = omega_all(1j, 1)
    assert r.spread < 1e-7 and abs(r.r1_polygamma - (-21.8006348262111984j)) < 1e-12
    assert omega_all(0.3 + 0.4j, 2).spread < 1e-7
    assert omega_all(0.3, 3).rel_spread < 1e-14


@settings(max_examples=40, deadline=None)
@given(st.floats(min_value=0.01, max_value=0.99))
def test_n0_closed_form(s):
    expected = omega_closed_form(s, 0)
    for rep in REPRESENTATIONS:
        assert abs(omega(s, 0, rep) - expected) <= 1e-10 * max(1.0, abs(expected))


def test_closed_form_only_for_n0():
    with pytest.raises(ValueError):
        omega_closed_form(0.3, 1)


def test_trig_closed_form_general_n():
    # Omega = -pi^m [cot^(2n) + tan^(2n)](pi s/2) via mpmath derivatives
    for s, n in ((0.3, 1), (0.7, 2), (0.4 + 0.3j, 2)):
        m = 2 * n + 1
        x = mp.mpc(s) * mp.pi / 2
        d = mp.diff(mp.cot, x, 2 * n) + mp.diff(mp.tan, x, 2 * n)
        expected = complex(-mp.pi**m * d)
        assert abs(omega(s, n) - expected) <= 1e-10 * abs(expected)


@pytest.mark.parametrize("x, m", [(0.3, 3), (-1.7, 5), (0.2 + 1j, 3), (-2.5 - 0.5j, 7)])
def test_alternating_power_sum(x, m):
    expected = complex(mp.nsum(lambda k: (-1) ** k / (k + mp.mpc(x)) ** m, [0, mp.inf]))
    assert abs(alternating_power_sum(x, m) - expected) <= 1e-13 * max(1.0, abs(expected))


def test_functional_examples():
    rep = omega_functional_checks(0.3, 1)
    assert len(rep.basic) == 6 and len(rep.family) == 24
    assert rep.passed(1e-8)
    rep = omega_functional_checks(0.5, 1)
    assert rep.basic[0].abs_residual == 0.0


def test_functional_random_points():
    rng = random.Random(7)
    done = 0
    while done < 20:
        s = complex(rng.uniform(-3, 3), rng.uniform(-1, 1))
        if abs(s - round(s.real)) < 0.05:
            continue
        rep = omega_functional_checks(s, rng.choice((1, 2)), js=(1, 2, 3))
        assert rep.passed(1e-8), rep.max_residual
        done += 1


def test_functional_pole_on_shift():
    with pytest.raises(PoleAtInteger):
        omega_functional_checks(1.0, 1)


def test_reflection_residual_is_the_same_expression():
    # Omega(s) + Omega(-s) at s equals Omega(-s) + Omega(s) at -s
    s = 0.37
    a = omega_functional_checks(s, 1).basic[1]
    b = omega_functional_checks(-s, 1).basic[1]
    assert a.lhs == -b.rhs and a.rhs == -b.lhs
    assert a.abs_residual == b.abs_residual


@pytest.mark.parametrize("n", [1, 2])
def test_golden_quartet(n):
    vals = list(golden_quartet(n).values())
    assert PHI**2 == pytest.approx(PHI + 1)
    for a in vals:
        for b in vals:
            assert abs(a - b) <= 1e-8 * abs(a)


def test_beta_relation():
    b = omega_beta_relation(1)
    assert abs(b.omega_at_half - MINUS_8_PI3) < 1e-8
    assert abs(b.derived_constant - MINUS_8_PI3) < 1e-10
    assert abs(b.derived_constant + 256 * dirichlet_beta(3).real) < 1e-10
    assert abs(b.printed_constant + 128 * math.pi**3 / 32) < 1e-10
    assert b.matched == "derived" and b.printed_label == "1/4" and b.point == 0.5
    b2 = omega_beta_relation(2)
    assert abs(b2.derived_constant + 2**11 * 24 * dirichlet_beta(5).real) < 1e-8
    assert b2.matched == "derived"
    with pytest.raises(ValueError):
        omega_beta_relation(6)


def test_beta_cross_input():
    assert abs(dirichlet_beta(3).real - math.pi**3 / 32) < 1e-15


def test_imaginary_series_n1():
    r = omega_imaginary_series(1)
    # frozen mpmath value of -1/6 + sum (-1)^k (k^2 - 1/3)/(k^2 + 1)^3
    assert abs(r.series_value - (-0.22708994610636665)) < 1e-14
    assert r.residual < 1e-8
    k = 2
    assert (k - 1j) ** 3 - (k + 1j) ** 3 == -22j
    assert abs(-6j * (k**2 - 1 / 3) + 22j) < 1e-14


@pytest.mark.parametrize("n, expected", [(2, -1.2711406632545782968j),
                                         (3, 0.8761532691179983046j)])
def test_imaginary_series_general(n, expected):
    r = omega_imaginary_series(n)
    assert abs(r.series_value - expected) < 1e-13
    assert r.residual < 1e-8
    # cross-module: series = Omega(i, n) / ((-2)^m (2n)!)
    w = omega_all(1j, n).r1_polygamma
    assert abs(r.series_value - w / ((-2.0) ** (2 * n + 1) * math.factorial(2 * n))) < 1e-12


def test_imaginary_series_bounds():
    with pytest.raises(ValueError):
        omega_imaginary_series(5)
