import math

import numpy as np
import pytest
from scipy.optimize import brentq

from superray.errors import DomainError
from superray.media import PlasmaBandMedium, WeakShockPair
from superray.poles import NoPole, PoleRecord, bracket_pole, find_pole, pole_asymptotic
from superray.scattering import InterfaceScattering, f_denominator


def shock(a=1.0, delta=1e-3, v=1e-5):
    return InterfaceScattering.from_pair(WeakShockPair(a, 1.0, delta), v)


def brent_root(scatter, delta):
    """Independent root: Brent's method on log(x)."""
    g = lambda t: f_denominator(scatter, x=math.exp(t))
    return math.exp(brentq(g, math.log(1e-40), math.log(delta), xtol=1e-14, rtol=1e-15))


def test_asymptotic_examples():
    assert pole_asymptotic(1.0, 0.0) == 0.0
    assert pole_asymptotic(1.0, 1e-5) == pytest.approx(5e-11, rel=1e-14)
    with pytest.raises(DomainError):
        pole_asymptotic(0.0, 1e-5)


def test_no_pole_at_rest():
    rep = bracket_pole(shock(v=0.0))
    assert isinstance(rep, NoPole)
    assert not rep
    assert isinstance(find_pole(shock(v=0.0)), NoPole)


def test_bracket_contains_grid_sign_change():
    s = shock()
    lo, hi = bracket_pole(s)
    assert f_denominator(s, x=lo) < 0 < f_denominator(s, x=hi)
    # geometric grid scan as the oracle
    xs = np.geomspace(1e-20, 1e-3, 341)
    signs = np.sign([f_denominator(s, x=float(x)) for x in xs])
    i = int(np.argmax(signs > 0))
    assert lo <= xs[i - 1] and xs[i] <= hi
    assert xs[i - 1] < 5e-11 < xs[i] * 1.2


def test_find_pole_value_and_record():
    s = shock()
    rec = find_pole(s)
    assert isinstance(rec, PoleRecord)
    assert 2.5e-11 <= rec.x_offset <= 1.0e-10
    assert rec.x_offset == pytest.approx(brent_root(s, 1e-3), rel=1e-12)
    assert rec.asymptotic_prediction == pytest.approx(5e-11)
    assert abs(rec.f_residual) <= 1e-6 * math.sqrt(2e-3)
    assert rec.omega_star == pytest.approx(1.0 + rec.x_offset, rel=1e-15)
    lo, hi = rec.bracket
    assert f_denominator(s, x=lo) < 0 < f_denominator(s, x=hi)
    assert 0 < rec.x_offset <= 1e-3


@pytest.mark.parametrize("a", [0.5, 1.0, 2.0])
@pytest.mark.parametrize("delta", [1e-4, 1e-3, 1e-2])
def test_find_pole_agrees_with_brent(a, delta):
    s = shock(a, delta, 3e-5)
    assert find_pole(s).x_offset == pytest.approx(brent_root(s, delta), rel=1e-12)


def test_doubling_v_quadruples_offset():
    r = find_pole(shock(v=2e-5)).x_offset / find_pole(shock(v=1e-5)).x_offset
    assert r == pytest.approx(4.0, rel=0.2)


@pytest.mark.parametrize("v", [1e-6, 1e-5, 1e-4])
@pytest.mark.parametrize("a", [0.5, 1.0, 2.0])
@pytest.mark.parametrize("delta", [1e-4, 1e-3, 1e-2])
def test_offset_very_close_to_crossing(v, a, delta):
    rec = find_pole(shock(a, delta, v))
    assert rec.x_offset < 1e-8
    assert 0.5 <= rec.x_offset / pole_asymptotic(a, v) <= 2.0
    assert abs(rec.f_residual) <= 1e-6 * math.sqrt(2 * a * delta)


def test_delta_independence():
    ratio = find_pole(shock(delta=1e-2)).x_offset / find_pole(shock(delta=1e-4)).x_offset
    assert 0.5 <= ratio <= 2.0


@pytest.mark.parametrize("params", [(1.0, 1e-3, 1e-5), (2.0, 1e-2, 1e-4), (0.7, 1e-4, 1e-6)])
def test_f_monotone_on_bracket(params):
    s = shock(*params)
    lo, hi = bracket_pole(s)
    xs = np.geomspace(lo, hi, 64)
    fs = [f_denominator(s, x=float(x)) for x in xs]
    assert np.all(np.diff(fs) > 0)


def test_deterministic():
    assert find_pole(shock()) == find_pole(shock())


def test_rel_tol_bounds():
    with pytest.raises(DomainError):
        find_pole(shock(), rel_tol=1e-16)
    coarse = find_pole(shock(), rel_tol=1e-3)
    fine = find_pole(shock(), rel_tol=1e-15)
    assert coarse.iterations < fine.iterations
    assert coarse.x_offset == pytest.approx(fine.x_offset, rel=1e-3)


def test_requires_weak_shock_interface():
    m = PlasmaBandMedium(1.0, 1.0)
    with pytest.raises(DomainError):
        find_pole(InterfaceScattering.from_media(m, m, 1e-5))
