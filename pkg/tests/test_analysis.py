import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from razavy_dw.analysis import (
    composite_gradient,
    composite_hessian,
    composite_potential,
    find_minima,
    potential_grid,
    recommend_N,
    sweep_c,
    sweep_N,
)
from razavy_dw.hamiltonian import CoupledModel


def test_uncoupled_minima():
    minima = find_minima(CoupledModel.build(c=0.0))
    assert len(minima) == 2
    for p, sign in zip(minima, (-1, 1)):
        assert (p.x, p.y) == pytest.approx((sign * 1.38433, 0.0), abs=1e-5)
        assert p.value == pytest.approx(-8.125, abs=1e-4)


def test_linear_minima():
    minima = find_minima(CoupledModel.build())
    assert len(minima) == 2
    for p in minima:
        assert abs(p.x) == pytest.approx(1.41201, abs=1e-5)
        assert p.y == pytest.approx(np.sign(p.x) * 1.89592, abs=1e-5)
        assert p.value == pytest.approx(-9.438006, abs=1e-6)


def test_quadratic_minima():
    minima = find_minima(CoupledModel.build(d=2))
    assert len(minima) == 2
    assert minima[0].y == pytest.approx(minima[1].y, abs=1e-9)
    assert abs(minima[1].x) == pytest.approx(1.48694, abs=1e-5)
    assert minima[1].y == pytest.approx(2.96874, abs=1e-5)


@settings(max_examples=15, deadline=None)
@given(st.sampled_from([1, 2]), st.floats(0.0, 2.0), st.floats(0.5, 2.0), st.floats(2.0, 12.0))
def test_minima_are_stationary(d, c, m, alpha):
    model = CoupledModel.build(c=c, d=d, m=m, alpha=alpha)
    mw2 = m * model.ho.omega**2
    minima = find_minima(model)
    for p in minima:
        assert p.y == pytest.approx(c * p.x**d / mw2, abs=1e-8)
        assert np.all(np.linalg.eigvalsh(composite_hessian(p.x, p.y, model)) > 0)
    # reflection: (x, y) -> (-x, (-1)^d y) leaves U unchanged
    for p in minima:
        assert composite_potential(-p.x, (-1) ** d * p.y, model) == pytest.approx(p.value, abs=1e-12)


def test_gradient_against_difference():
    model = CoupledModel.build(d=2, c=0.7)
    h = 1e-6
    for x, y in [(0.3, -0.4), (1.2, 2.0), (-0.9, 0.5)]:
        gx = (composite_potential(x + h, y, model) - composite_potential(x - h, y, model)) / (2 * h)
        gy = (composite_potential(x, y + h, model) - composite_potential(x, y - h, model)) / (2 * h)
        np.testing.assert_allclose(composite_gradient(x, y, model), [gx, gy], atol=1e-6)


def test_potential_grid_shape():
    xs, ys, u = potential_grid(CoupledModel.build(), points=31)
    assert u.shape == (31, 31) and xs[0] == -xs[-1]


def test_sweep_c_starts_at_uncoupled_period():
    res = sweep_c(CoupledModel.build(), [0.0, 0.5, 1.0])
    assert res.periods[0] == pytest.approx(72.80, abs=0.01)
    assert res.periods[-1] == pytest.approx(158.7293, abs=1e-3)
    assert res.rows()[1][0] == 0.5


def test_sweep_N_zero_is_bare_double_well():
    res = sweep_N(CoupledModel.build(), [0, 1])
    assert res.periods[0] == pytest.approx(72.80, abs=0.01)
    with pytest.raises(ValueError):
        sweep_N(CoupledModel.build(), [11])


def test_sweep_parallel_matches_serial():
    base = CoupledModel.build(m=0.1)
    cs = np.linspace(0, 2, 5)
    assert sweep_c(base, cs, jobs=2) == sweep_c(base, cs, jobs=1)


@pytest.mark.parametrize("m, alpha", [(1.0, 10.0), (0.1, 10.0), (1.0, 2.0)])
def test_period_monotone_in_c_and_N(m, alpha):
    base = CoupledModel.build(m=m, alpha=alpha)
    assert np.all(np.diff(sweep_c(base, np.linspace(0, 2, 41)).periods) >= 0)
    assert np.all(np.diff(sweep_N(base, range(1, 11)).periods) >= 0)


def test_recommend_N(dw):
    assert recommend_N(10.0, dw) == pytest.approx(3.514, abs=1e-3)
    assert recommend_N(2.0, dw) == pytest.approx(19.570, abs=1e-3)
    with pytest.raises(ValueError):
        recommend_N(0.0, dw)
