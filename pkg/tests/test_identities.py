"""Identity catalog: registry, admissibility, comparison modes, grid runner."""
import math

import pytest
from hypothesis import given, settings, strategies as st

from zetaomega.errors import EmptyGrid, InadmissiblePoint, UnknownIdentity, UnsupportedMode
from zetaomega.identities import (DEFAULT_COMPLEX_GRID, DEFAULT_REAL_GRID, GridSpec,
                                  check_identity, get_identity, is_admissible,
                                  list_identities, quarter_point_sign_report, verify_grid)

ZETA3 = 1.2020569031595942854


def test_registry():
    ids = [sp.id for sp in list_identities()]
    assert ids == [f"I{k}" for k in range(1, 23)]
    for sp in list_identities():
        assert sp.modes and sp.title and sp.anchor
    assert get_identity("I14").tolerance == 1e-12
    assert get_identity("I21").tolerance == 1e-12
    with pytest.raises(UnknownIdentity):
        get_identity("I99")


def test_examples():
    r = check_identity("I14", 0.3)
    assert r.passed and r.residual < 1e-12
    r = check_identity("I7", 0.5, 1)
    assert r.passed
    assert abs(r.lhs + 14 * ZETA3) < 1e-12 and abs(r.rhs + 14 * ZETA3) < 1e-9
    r = check_identity("I21", 2.5)
    assert r.passed and r.residual < 1e-12


def test_i21_rational_value():
    # the last side of I21 is exactly (s-4)/(s+4)
    r = check_identity("I21", 2.5)
    assert min(abs(r.lhs + 0.2307692307692308), abs(r.rhs + 0.2307692307692308)) < 1e-13


def test_mode_errors():
    with pytest.raises(UnsupportedMode):
        check_identity("I1", 0.3, mode="derivative")
    with pytest.raises(InadmissiblePoint):
        check_identity("I7", 0.3, 1)
    with pytest.raises(InadmissiblePoint):
        check_identity("I4", 2.0, 1)
    with pytest.raises(InadmissiblePoint):
        check_identity("I4", 0.3, 6)
    with pytest.raises(InadmissiblePoint):
        check_identity("I2", 0.3 + 0.1j, 1, mode="log_real")
    assert not is_admissible("I8", 0.25, 1)
    assert is_admissible("I8", 0.25, 2)


def test_explicit_list_i1():
    rep = verify_grid(["I1"], GridSpec("explicit_list", (2, 3, 0.5 + 0.3j)),
                      tol_abs=1e-10, tol_rel=1e-10)
    assert rep.summary.total == 3 and rep.summary.passed == 3


def test_empty_grid():
    with pytest.raises(EmptyGrid):
        verify_grid(["I7"], GridSpec("explicit_list", ()))
    with pytest.raises(ValueError):
        verify_grid(["I1"], tol_abs=0.0)


def test_default_real_grid_all_pass():
    rep = verify_grid(None, DEFAULT_REAL_GRID, (1, 2, 3))
    assert rep.summary.failed == 0
    assert {r.id for r in rep.results} == {f"I{k}" for k in range(1, 23)}
    for r in rep.results:
        if r.id in ("I14", "I21"):
            assert r.residual <= 1e-12


def test_default_complex_grid_all_pass():
    rep = verify_grid(None, DEFAULT_COMPLEX_GRID, (1, 2))
    assert rep.summary.failed == 0 and rep.summary.total > 400


@pytest.mark.parametrize("mode", ["log_real", "derivative"])
def test_secondary_modes_pass(mode):
    rep = verify_grid(None, DEFAULT_REAL_GRID, (1, 2, 3), mode=mode)
    assert rep.summary.failed == 0


def test_ordering_is_deterministic():
    a = verify_grid(["I3", "I1", "I2"], GridSpec("real_interval", (0.1, 0.9, 5)), (2, 1))
    b = verify_grid(["I2", "I3", "I1"], GridSpec("real_interval", (0.1, 0.9, 5)), (1, 2))
    assert a == b
    keys = [(int(r.id[1:]), r.s.real, r.n or 0) for r in a.results]
    assert keys == sorted(keys)
    assert a.summary.passed + a.summary.failed == len(a.results)


def test_exp_and_derivative_verdicts_agree():
    grid = GridSpec("real_interval", (0.1, 0.9, 9))
    for i in ("I2", "I3"):
        e = verify_grid([i], grid, (1,), mode="exp")
        d = verify_grid([i], grid, (1,), mode="derivative")
        assert [r.passed for r in e.results] == [r.passed for r in d.results]


@settings(max_examples=25, deadline=None)
@given(st.floats(min_value=0.06, max_value=0.94))
def test_residual_symmetry_under_reflection(s):
    # both points evaluate the same pair of values, swapped
    for i in ("I1",):
        a = check_identity(i, s)
        b = check_identity(i, 1 - s)
        assert a.passed and b.passed
        assert abs(a.lhs - b.rhs) <= 1e-12 * abs(a.lhs)
    for i, n in (("I10", 1), ("I11", 2)):
        a = check_identity(i, s, n)
        b = check_identity(i, 1 - s, n)
        assert a.passed and b.passed
        assert abs(abs(a.lhs) - abs(b.lhs)) <= 1e-9 * abs(a.lhs)


def test_i8_orders():
    for n in (2, 3, 4, 5, 6, 7, 9):
        assert check_identity("I8", 0.25, n).passed


def test_quarter_point_sign():
    for n in (1, 2):
        rep = quarter_point_sign_report(n)
        assert rep["matching_sign"] == "printed"
        assert rep["printed_sign_residual"] < 1e-8
        assert abs(rep["flipped_sign_residual"] - 2 * rep["zeta"]) < 1e-8
        assert abs(rep["reconstructed"] - rep["zeta"]) < 1e-8


def test_removable_point_accepted_in_exp_mode():
    # I21 factors are singular at integers but the ratio is rational
    r = check_identity("I21", 2.0)
    assert r.passed and abs(min(abs(r.lhs), abs(r.rhs)) - 1 / 3) < 1e-8
