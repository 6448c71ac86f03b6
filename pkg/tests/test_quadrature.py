import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from razavy_dw.quadrature import QuadratureError, composite_rule, integrate


def test_odd_integrand_vanishes():
    assert integrate(lambda x: x, -1.0, 1.0) == pytest.approx(0.0, abs=1e-14)


def test_gaussian():
    assert integrate(lambda x: np.exp(-x * x), -8.0, 8.0) == pytest.approx(math.sqrt(math.pi), abs=1e-10)


def test_vector_valued_integrand():
    vals = integrate(lambda x: np.stack([np.ones_like(x), x * x, np.cos(x)]), 0.0, 2.0)
    np.testing.assert_allclose(vals, [2.0, 8.0 / 3.0, math.sin(2.0)], atol=1e-12)


def test_sharp_feature_is_resolved():
    # narrow bump that forces several levels of bisection
    f = lambda x: np.exp(-((x - 0.3) ** 2) / 1e-4)
    assert integrate(f, -5.0, 5.0, tol=1e-12) == pytest.approx(math.sqrt(math.pi * 1e-4), rel=1e-9)


def test_depth_limit_reports_interval():
    with pytest.raises(QuadratureError) as info:
        integrate(lambda x: 1.0 / np.sqrt(np.abs(x - 0.1234567)), 0.0, 1.0, tol=1e-14, max_depth=5)
    lo, hi = info.value.interval
    assert lo < hi


@pytest.mark.parametrize("a, b", [(1.0, 1.0), (2.0, 1.0)])
def test_bad_interval(a, b):
    with pytest.raises(ValueError):
        integrate(np.sin, a, b)


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=0, max_value=12), st.floats(-3, 3), st.floats(0.1, 4))
def test_polynomials_exact(k, a, width):
    b = a + width
    exact = (b ** (k + 1) - a ** (k + 1)) / (k + 1)
    assert integrate(lambda x: x**k, a, b) == pytest.approx(exact, abs=1e-10, rel=1e-12)


def test_composite_rule_weights_sum_to_length():
    x, w = composite_rule(-2.0, 3.0, panels=7)
    assert w.sum() == pytest.approx(5.0, abs=1e-13)
    assert x.min() > -2.0 and x.max() < 3.0
