import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from zetakit.critical_line import (ZeroTable, count_zeros_formula,
                                   count_zeros_main_term, extend_table, find_zeros, read_table,
                                   table_from_csv, table_to_csv, theta_exact, theta_rs,
                                   theta_rs_error, verify_count, write_table, z_function, z_many)
from zetakit.errors import CacheCorruptionError, DomainError, MissedZerosError
from zetakit.zeta_engine import xi_big, zeta

# ---- theta -------------------------------------------------------------------


def test_theta_exact_basics():
    assert theta_exact(0) == 0
    assert theta_exact(-7) == pytest.approx(-theta_exact(7), abs=1e-15)


@pytest.mark.parametrize("t", [0.5, 3.0, 14.134725, 100.0, 541.8])
def test_theta_exact_against_mpmath(t):
    assert theta_exact(t) == pytest.approx(float(mpmath.siegeltheta(t)), abs=1e-12)


def test_theta_exact_first_zero_value():
    # Im log Gamma(1/4 + it/2) - (t/2) log pi at the first zero, from mpmath
    t = 14.134725
    with mpmath.workdps(30):
        ref = mpmath.im(mpmath.loggamma(mpmath.mpf(1) / 4 + 1j * mpmath.mpf(t) / 2)) - t / 2 * mpmath.log(mpmath.pi)
    assert abs(theta_exact(t) - float(ref)) < 2e-3
    assert abs(theta_exact(t) - (-1.72867)) < 1e-5


def test_theta_rs_examples():
    assert abs(theta_rs(14.134725) - theta_exact(14.134725)) < 1e-4
    assert abs(theta_rs(100) - theta_exact(100)) < 1e-6
    # small t: the asymptotic form is off, and its error estimate says so
    assert abs(theta_rs(1) - theta_exact(1)) > 1e-3
    assert theta_rs_error(1) > 1e-3
    with pytest.raises(DomainError):
        theta_rs(0)


def test_theta_rs_grid():
    for t in np.linspace(20, 2000, 400):
        assert abs(theta_rs(t) - theta_exact(t)) < 1e-5
        assert abs(theta_rs(t) - theta_exact(t)) < 2 * theta_rs_error(t) + 4e-16 * abs(theta_exact(t))


def test_theta_array():
    ts = np.array([0.0, 1.0, 50.0])
    assert np.allclose(theta_exact(ts), [theta_exact(t) for t in ts], atol=1e-15)


# ---- Z -----------------------------------------------------------------------

def test_z_function_examples():
    assert abs(z_function(0) - (-1.4603545088)) < 1e-10
    assert abs(z_function(14.134725)) < 1e-6


def test_z_sign_changes_between_zeros():
    # one sign change per zero: Z(10) < 0, Z(18) > 0 across t1; Z(23) < 0 across t2
    assert z_function(10) < 0
    assert z_function(18) > 0
    assert z_function(23) < 0


@given(st.floats(0, 600))
@settings(max_examples=100, deadline=None)
def test_z_reality_and_modulus(t):
    z = z_function(t)  # raises on an imaginary residual
    assert abs(abs(z) - abs(zeta(complex(0.5, t)))) < 1e-10 * (1 + abs(z))


def test_z_many_matches_scalar():
    ts = np.linspace(-30, 300, 41)
    assert np.allclose(z_many(ts), [z_function(t) for t in ts], atol=1e-10)


def test_z_against_mpmath():
    for t in (5.0, 50.0, 333.3, 541.0):
        assert z_function(t) == pytest.approx(float(mpmath.siegelz(t)), abs=1e-10)


# ---- scanning ----------------------------------------------------------------

def test_find_zeros_examples():
    tab = find_zeros(10, 30, 0.05, 1e-6)
    assert [z.index for z in tab] == [1, 2, 3]
    for z, ref in zip(tab, (14.134725, 21.022040, 25.010858)):
        assert abs(z.t - ref) < 1e-5
    assert abs(tab[0].t - 14.134) < 1e-3 and abs(tab[1].t - 21.022) < 1e-3
    assert len(find_zeros(1, 10)) == 0
    assert count_zeros_formula(10) < 1
    empty = find_zeros(20, 20)
    assert len(empty) == 0


def test_find_zeros_domain():
    with pytest.raises(DomainError):
        find_zeros(0, 10)
    with pytest.raises(DomainError):
        find_zeros(10, 5)
    with pytest.raises(DomainError):
        find_zeros(1, 10, step=0)
    with pytest.raises(DomainError):
        find_zeros(1, 10, tol=-1)


def test_ordinates_against_mpmath(zeros_560):
    assert len(zeros_560) == 312
    for z in zeros_560.zeros[::13]:
        assert abs(z.t - float(mpmath.zetazero(z.index).imag)) < 1e-9


def test_every_zero_brackets_sign_change(zeros_560):
    for z in zeros_560:
        assert z.err > 0
        assert z_function(z.t - z.err) * z_function(z.t + z.err) < 0


def test_xi_vanishes_at_ordinates(zeros_560):
    for z in zeros_560.zeros[:60]:
        assert abs(xi_big(z.t)) < 1e-5


def test_step_refinement_stable():
    a = find_zeros(10, 100, 0.05, 1e-9)
    b = find_zeros(10, 100, 0.025, 1e-9)
    assert len(a) == len(b) == 29
    assert np.allclose(a.ordinates(), b.ordinates(), atol=2e-9)


def test_scan_deterministic():
    a = find_zeros(1, 60)
    b = find_zeros(1, 60)
    assert table_to_csv(a) == table_to_csv(b)


def test_coarse_step_reports_missed_zeros():
    # zeros 6 and 7 (t = 37.59, 40.92) are 3.3 apart; a step of 4 straddles them
    with pytest.raises(MissedZerosError) as info:
        find_zeros(1, 50, step=4.0)
    assert info.value.table is not None
    assert not info.value.report.passed


def test_partial_range_indices(zeros_560):
    tab = find_zeros(100, 150)
    assert tab[0].index == 30
    assert [z.index for z in tab] == list(range(30, 30 + len(tab)))
    assert np.allclose(tab.ordinates(), zeros_560.ordinates()[29:29 + len(tab)], atol=1e-9)
    assert verify_count(tab, 150).passed


def test_extend_table():
    base = find_zeros(1, 30)
    ext = extend_table(base, 100)
    assert len(ext) == 29
    assert [z.index for z in ext] == list(range(1, 30))
    assert extend_table(ext, 50) is ext
    direct = find_zeros(1, 100)
    assert np.allclose(ext.ordinates(), direct.ordinates(), atol=2e-9)


# ---- counting ----------------------------------------------------------------

def test_count_formula_examples():
    assert abs(count_zeros_formula(100) - 29.0) < 0.05
    assert abs(count_zeros_main_term(100) - 28.13) < 0.01
    assert count_zeros_formula(14.0) < 1
    with pytest.raises(DomainError):
        count_zeros_formula(2.9)


@pytest.mark.parametrize("T, n", [(13, 0), (30, 3), (50, 10), (100, 29)])
def test_verify_count_examples(zeros_560, T, n):
    rep = verify_count(zeros_560, T)
    assert rep.table_count == n
    assert rep.passed
    assert "PASS" in rep.line()


def test_verify_count_catches_dropped_zero(zeros_560):
    zs = list(zeros_560.zeros[:29])
    del zs[5]
    broken = ZeroTable(tuple(zs), 100.0, 1.0)
    assert not verify_count(broken, 100).passed


def test_verify_count_unreachable(zeros_560):
    with pytest.raises(DomainError):
        verify_count(zeros_560, 600)


def test_count_tracks_theta_and_formula(zeros_560):
    prev = 0
    for T in np.arange(20, 200.001, 0.25):
        c = zeros_560.count_upto(T)
        assert c >= prev
        prev = c
        assert abs(c - (theta_exact(T) / math.pi + 1)) <= 1
        assert abs(c - count_zeros_formula(T)) <= 1


@pytest.mark.parametrize("T", [30.0, 77.7, 150.0, 333.0, 555.0])
def test_n_of_t_is_integer(zeros_560, T):
    rep = verify_count(zeros_560, T)
    assert abs(rep.expected - round(rep.expected)) < 1e-6
    assert rep.passed


# ---- CSV ---------------------------------------------------------------------

def test_csv_roundtrip_bit_exact(zeros_560, tmp_path):
    p = tmp_path / "z.csv"
    write_table(zeros_560, p)
    first = p.read_bytes()
    back = read_table(p)
    assert back == zeros_560
    write_table(back, p)
    assert p.read_bytes() == first
    lines = first.decode().split("\n")
    assert lines[1] == "index,t,err"
    assert b"\r" not in first


def test_csv_corruption():
    good = table_to_csv(find_zeros(1, 30))
    with pytest.raises(CacheCorruptionError):
        table_from_csv("index,t,err\n1,14.1,1e-9\n")
    with pytest.raises(CacheCorruptionError):
        table_from_csv(good.replace("index,t,err", "i,t,e"))
    lines = good.split("\n")
    swapped = "\n".join(lines[:2] + [lines[3], lines[2]] + lines[4:])
    with pytest.raises(CacheCorruptionError):
        table_from_csv(swapped)
    with pytest.raises(CacheCorruptionError):
        table_from_csv(good.replace("\n2,", "\n7,"))
    with pytest.raises(CacheCorruptionError):
        table_from_csv(good + "4,xyz,1\n")
    with pytest.raises(CacheCorruptionError):
        table_from_csv(good.replace("t_max_scanned=30", "t_max_scanned=20"))
