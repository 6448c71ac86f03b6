import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from razavy_dw.jacobi import jacobi_eigh


@settings(max_examples=60, deadline=None)
@given(
    st.integers(min_value=1, max_value=12).flatmap(
        lambda n: arrays(np.float64, (n, n), elements=st.floats(-10, 10))
    )
)
def test_matches_numpy(raw):
    a = raw + raw.T
    w, v = jacobi_eigh(a)
    scale = max(1.0, np.linalg.norm(a))
    np.testing.assert_allclose(w, np.linalg.eigvalsh(a), atol=1e-11 * scale)
    np.testing.assert_allclose(v.T @ v, np.eye(len(a)), atol=1e-12)
    np.testing.assert_allclose(a @ v, v * w, atol=1e-10 * scale)
    assert np.all(np.diff(w) >= 0)
    top = v[np.argmax(np.abs(v), axis=0), np.arange(len(a))]
    assert np.all(top > 0)


def test_ties_keep_diagonal_order():
    w, v = jacobi_eigh(np.diag([2.0, 1.0, 2.0]))
    np.testing.assert_array_equal(w, [1.0, 2.0, 2.0])
    np.testing.assert_array_equal(v, np.eye(3)[:, [1, 0, 2]])


def test_two_by_two():
    w, v = jacobi_eigh([[0.0, 1.0], [1.0, 0.0]])
    np.testing.assert_allclose(w, [-1.0, 1.0], atol=1e-15)
    np.testing.assert_allclose(np.abs(v), np.full((2, 2), 2**-0.5), atol=1e-15)


def test_rejects_non_symmetric():
    with pytest.raises(ValueError):
        jacobi_eigh([[1.0, 2.0], [0.0, 1.0]])
    with pytest.raises(ValueError):
        jacobi_eigh(np.ones((2, 3)))
