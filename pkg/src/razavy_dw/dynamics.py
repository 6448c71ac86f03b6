"""Spectral-method wavepacket evolution and observables.

A packet is a fixed set of amplitudes a_k over the coupled eigenstates;
at time t its coordinates in the product basis are
``V @ (a * exp(-i E t / hbar))``.  Expectation values contract those
coordinates against the quadrature-built operator matrices of
:mod:`razavy_dw.overlaps`; densities and marginals evaluate the basis
functions pointwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import pi, sqrt

import numpy as np

from .dw_basis import X_LIMIT, razavy_eigenfunction
from .ho_basis import ho_wavefunctions
from .overlaps import dw_matrices, ho_matrices
from .quadrature import composite_rule

SERIES_COLUMNS = (
    "t", "x_mean", "px_mean", "y_mean", "py_mean", "Pr", "dx", "dpx", "dxdpx", "gamma_corr",
)


class PeriodNotFound(RuntimeError):
    def __init__(self, threshold, horizon, best_t, best_value):
        self.best_t = best_t
        self.best_value = best_value
        super().__init__(
            f"no recurrence with correlation >= {threshold} before t={horizon:.6g}; "
            f"best candidate t={best_t:.6g} with correlation {best_value:.6f}"
        )


@dataclass(frozen=True)
class Wavepacket:
    coeffs: np.ndarray
    decomposition: object
    kind: str = "custom"

    def __post_init__(self):
        coeffs = np.asarray(self.coeffs, dtype=complex)
        dim = self.decomposition.energies.shape[0]
        if coeffs.shape != (dim,):
            raise ValueError(f"need {dim} coefficients, got shape {coeffs.shape}")
        total = float(np.sum(np.abs(coeffs) ** 2))
        if abs(total - 1.0) > 1e-12:
            raise ValueError(f"coefficients are not normalized: sum |a|^2 = {total!r}")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def two_term(cls, decomposition):
        a = np.zeros(decomposition.energies.shape[0], dtype=complex)
        a[:2] = 1.0 / sqrt(2.0)
        return cls(a, decomposition, "two-term")

    @classmethod
    def four_term(cls, decomposition):
        a = np.zeros(decomposition.energies.shape[0], dtype=complex)
        if a.shape[0] < 4:
            raise ValueError("a four-term packet needs at least four eigenstates")
        a[:4] = 0.5
        return cls(a, decomposition, "four-term")

    @classmethod
    def from_kind(cls, kind, decomposition):
        builders = {"two-term": cls.two_term, "four-term": cls.four_term}
        if kind not in builders:
            raise ValueError(f"unknown packet kind {kind!r}; expected one of {sorted(builders)}")
        return builders[kind](decomposition)

    @property
    def model(self):
        return self.decomposition.model

    @property
    def hbar(self):
        return self.model.hbar

    @property
    def support(self):
        return np.flatnonzero(np.abs(self.coeffs) > 0)

    def basis_coefficients(self, t):
        """Product-basis coordinates, shape ``t.shape + (N+1, 2)`` indexed [n, nu]."""
        t = np.asarray(t, dtype=float)
        phases = np.exp(-1j * np.multiply.outer(t, self.decomposition.energies) / self.hbar)
        flat = (phases * self.coeffs) @ self.decomposition.vectors.T
        return flat.reshape(t.shape + (self.model.N + 1, 2))


def _basis_values(model, x, y):
    phi = np.stack([razavy_eigenfunction(0, x, model.dw), razavy_eigenfunction(1, x, model.dw)])
    psi = ho_wavefunctions(model.N, y, model.ho)
    return phi, psi


def evaluate_wavefunction(wp, x, y, t):
    """Psi(x, y, t) with x and y broadcast against each other."""
    x, y = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
    phi, psi = _basis_values(wp.model, x, y)
    coef = wp.basis_coefficients(t)
    return np.einsum("nv,v...,n...->...", coef, phi, psi)


def evaluate_density(wp, x, y, t):
    return np.abs(evaluate_wavefunction(wp, x, y, t)) ** 2


def density_grid(wp, t, xs, ys):
    """|Psi|^2 on the tensor grid, shape (len(xs), len(ys))."""
    phi, _ = _basis_values(wp.model, np.asarray(xs, dtype=float), np.zeros(1))
    psi = ho_wavefunctions(wp.model.N, np.asarray(ys, dtype=float), wp.model.ho)
    coef = wp.basis_coefficients(t)
    return np.abs(np.einsum("nv,vi,nj->ij", coef, phi, psi)) ** 2


def snapshot_extent(model):
    """Half-widths of the default density window in x and y."""
    return 3.0, model.ho.length * (sqrt(2 * model.N + 1) + 4.0)


def default_grid(model, points=121):
    x_half, y_half = snapshot_extent(model)
    return np.linspace(-x_half, x_half, points), np.linspace(-y_half, y_half, points)


def density_peak(wp, t=0.0, points=121, tol=1e-10):
    """Global maximum of |Psi|^2: grid argmax, then repeated local zooming."""
    xs, ys = default_grid(wp.model, points)
    grid = density_grid(wp, t, xs, ys)
    i, j = np.unravel_index(np.argmax(grid), grid.shape)
    x0, y0 = xs[i], ys[j]
    hx, hy = xs[1] - xs[0], ys[1] - ys[0]
    best = grid[i, j]
    while max(hx, hy) > tol:
        lx = np.linspace(x0 - hx, x0 + hx, 11)
        ly = np.linspace(y0 - hy, y0 + hy, 11)
        local = density_grid(wp, t, lx, ly)
        i, j = np.unravel_index(np.argmax(local), local.shape)
        x0, y0, best = lx[i], ly[j], local[i, j]
        hx /= 5.0
        hy /= 5.0
    return float(x0), float(y0), float(best)


def _y_rule(model, panels=32):
    half = model.ho.half_width(model.N)
    return composite_rule(-half, half, panels)


def _x_rule(panels=32):
    return composite_rule(-X_LIMIT, X_LIMIT, panels)


def marginal_x(wp, x, t):
    """rho_x(x, t): |Psi|^2 integrated over y by composite Gauss-Legendre."""
    yq, wq = _y_rule(wp.model)
    x = np.asarray(x, dtype=float)
    dens = density_grid(wp, t, np.atleast_1d(x), yq)
    return (dens @ wq).reshape(x.shape)


def marginal_y(wp, y, t):
    xq, wq = _x_rule()
    y = np.asarray(y, dtype=float)
    dens = density_grid(wp, t, xq, np.atleast_1d(y))
    return (wq @ dens).reshape(y.shape)


def total_probability(wp, t):
    """Double integral of |Psi|^2 on the tensor quadrature mesh."""
    xq, wx = _x_rule()
    yq, wy = _y_rule(wp.model)
    return float(wx @ density_grid(wp, t, xq, yq) @ wy)


def _expect(coef, a, b):
    return np.einsum("...nv,vu,nk,...ku->...", coef.conj(), a, b, coef)


def _operators(wp):
    return dw_matrices(wp.model.dw), ho_matrices(wp.model.ho, wp.model.N)


def tunneling_probability(wp, t):
    """Probability of finding the particle at x < 0."""
    xm, ym = _operators(wp)
    return _expect(wp.basis_coefficients(t), xm.left, ym.overlap).real


def _real(values, what, scale=1.0):
    residue = np.max(np.abs(np.imag(values)), initial=0.0)
    if residue > 1e-10 * max(1.0, scale):
        raise ArithmeticError(f"{what} has imaginary residue {residue:.3e}")
    return np.real(values)


@dataclass(frozen=True)
class Expectations:
    x: np.ndarray
    px: np.ndarray
    y: np.ndarray
    py: np.ndarray


def expectations(wp, t):
    xm, ym = _operators(wp)
    coef = wp.basis_coefficients(t)
    h = wp.hbar
    return Expectations(
        x=_real(_expect(coef, xm.x, ym.overlap), "<x>"),
        px=_real(-1j * h * _expect(coef, xm.d, ym.overlap), "<p_x>"),
        y=_real(_expect(coef, xm.overlap, ym.y), "<y>"),
        py=_real(-1j * h * _expect(coef, xm.overlap, ym.d), "<p_y>"),
    )


def uncertainty(wp, t):
    """(dx, dp_x, dx * dp_x) from second moments."""
    xm, ym = _operators(wp)
    coef = wp.basis_coefficients(t)
    h = wp.hbar
    mean = expectations(wp, t)
    var_x = _real(_expect(coef, xm.x2, ym.overlap), "<x^2>") - mean.x**2
    var_p = h * h * _real(_expect(coef, xm.kinetic, ym.overlap), "<p_x^2>") - mean.px**2
    if np.any(var_x < -1e-12) or np.any(var_p < -1e-12):
        raise ArithmeticError("negative variance: quadrature matrices are inconsistent")
    dx = np.sqrt(np.clip(var_x, 0.0, None))
    dp = np.sqrt(np.clip(var_p, 0.0, None))
    return dx, dp, dx * dp


def correlation(wp, t):
    """Gamma(t) = |<Psi(0)|Psi(t)>| from orthonormality of the eigenstates."""
    t = np.asarray(t, dtype=float)
    weights = np.abs(wp.coeffs) ** 2
    phases = np.exp(-1j * np.multiply.outer(t, wp.decomposition.energies) / wp.hbar)
    return np.abs(phases @ weights)


def _refine_max(f, a, m, b, tol):
    """Successive parabolic interpolation on a bracket a < m < b with f(m) highest."""
    fa, fm, fb = f(a), f(m), f(b)
    for _ in range(200):
        denom = (m - a) * (fm - fb) - (m - b) * (fm - fa)
        if denom == 0.0:
            break
        v = m - 0.5 * ((m - a) ** 2 * (fm - fb) - (m - b) ** 2 * (fm - fa)) / denom
        if not a < v < b:
            break
        fv = f(v)
        if abs(v - m) < tol:
            if fv > fm:
                m, fm = v, fv
            break
        if v < m:
            if fv >= fm:
                b, fb, m, fm = m, fm, v, fv
            else:
                a, fa = v, fv
        else:
            if fv >= fm:
                a, fa, m, fm = m, fm, v, fv
            else:
                b, fb = v, fv
    return m, fm


def tunneling_period(wp, threshold=0.99, horizon=None):
    """Recurrence time of the packet.

    With exactly two populated eigenstates this is 2 pi hbar / |E_b - E_a|.
    Otherwise it is the first local maximum of the correlation function that
    reaches ``threshold``: a coarse scan at 1/100 of the fastest phase period,
    then parabolic refinement of each bracketed maximum in turn.
    """
    if not 0.9 < threshold <= 1.0:
        raise ValueError(f"threshold must lie in (0.9, 1], got {threshold}")
    idx = wp.support
    energies = wp.decomposition.energies[idx]
    if idx.size == 2:
        return 2.0 * pi * wp.hbar / abs(energies[1] - energies[0])
    if idx.size < 2:
        raise ValueError("a single stationary state has no tunneling period")

    gaps = np.abs(energies - energies[0])[1:] / wp.hbar
    fastest = gaps.max()
    slowest = gaps[gaps > 0].min()
    if horizon is None:
        horizon = 20.0 * 2.0 * pi / slowest
    if not horizon > 0:
        raise ValueError(f"horizon must be positive, got {horizon}")
    step = 2.0 * pi / (100.0 * fastest)
    t = np.arange(1, int(horizon / step) + 2) * step
    gamma = correlation(wp, t)

    def f(s):
        return float(correlation(wp, s))

    best_t, best_value = float(t[0]), float(gamma[0])
    peaks = np.flatnonzero((gamma[1:-1] >= gamma[:-2]) & (gamma[1:-1] >= gamma[2:])) + 1
    for i in peaks:
        tm, gm = _refine_max(f, t[i - 1], t[i], t[i + 1], 1e-12 * t[i])
        if gm >= threshold:
            return float(tm)
        if gm > best_value:
            best_t, best_value = float(tm), gm
    raise PeriodNotFound(threshold, horizon, best_t, best_value)


@dataclass(frozen=True)
class ObservableSeries:
    t: np.ndarray
    x_mean: np.ndarray
    px_mean: np.ndarray
    y_mean: np.ndarray
    py_mean: np.ndarray
    Pr: np.ndarray
    dx: np.ndarray
    dpx: np.ndarray
    dxdpx: np.ndarray
    gamma_corr: np.ndarray

    def rows(self):
        cols = [getattr(self, name) for name in SERIES_COLUMNS]
        return list(zip(*(c.tolist() for c in cols)))


def observable_series(wp, times):
    times = np.asarray(times, dtype=float)
    if times.ndim != 1 or np.any(np.diff(times) <= 0):
        raise ValueError("times must be a strictly increasing 1-d sequence")
    mean = expectations(wp, times)
    dx, dp, prod = uncertainty(wp, times)
    return ObservableSeries(
        t=times,
        x_mean=mean.x,
        px_mean=mean.px,
        y_mean=mean.y,
        py_mean=mean.py,
        Pr=tunneling_probability(wp, times),
        dx=dx,
        dpx=dp,
        dxdpx=prod,
        gamma_corr=correlation(wp, times),
    )


@dataclass(frozen=True)
class EhrenfestReport:
    a_x: float
    b_x: float
    omega1: float
    velocity_lhs: float  # Omega_1 a_x
    velocity_rhs: float  # (hbar/M) <Phi_0|d/dx|Phi_1>
    force_lhs: float  # hbar Omega_1 b_x
    force_rhs: float  # <Phi_0|dU/dx|Phi_1>
    velocity_residual: float
    force_residual: float
    dx_residual: float
    dp_residual: float
    ellipse_residual: float

    def residuals(self):
        return {
            "velocity": self.velocity_residual,
            "force": self.force_residual,
            "d<x>/dt": self.dx_residual,
            "d<p_x>/dt": self.dp_residual,
            "ellipse": self.ellipse_residual,
        }


def _element(left, a, b, right):
    return float(np.einsum("nv,vu,nk,ku->", left, a, b, right))


def _relative(lhs, rhs):
    scale = max(abs(lhs), abs(rhs))
    return 0.0 if scale == 0.0 else abs(lhs - rhs) / scale


def ehrenfest_check(wp, samples=16):
    """Residuals of the closed equations of motion for <x> and <p_x>.

    Valid for packets with a_0 = a_1 = 1/sqrt(2).  The velocity and force
    identities compare quadrature matrix elements; the two rate equations
    compare a five-point finite difference (h = T / 1e5) of the evolved
    expectation values with the linear right-hand sides.
    """
    if wp.support.tolist() != [0, 1] or not np.allclose(wp.coeffs[:2], 1.0 / sqrt(2.0), atol=1e-14):
        raise ValueError("ehrenfest_check needs the real two-term packet a0 = a1 = 1/sqrt(2)")
    model = wp.model
    dec = wp.decomposition
    xm, ym = _operators(wp)
    n1 = model.N + 1
    v0 = dec.vectors[:, 0].reshape(n1, 2)
    v1 = dec.vectors[:, 1].reshape(n1, 2)
    h = wp.hbar
    omega = dec.omega1

    a_x = _element(v0, xm.x, ym.overlap, v1)
    b_x = _element(v0, xm.d, ym.overlap, v1)
    coupling_x = xm.overlap if model.d == 1 else 2.0 * xm.x
    force = _element(v0, xm.force, ym.overlap, v1) - model.c * _element(v0, coupling_x, ym.y, v1)

    velocity_lhs = omega * a_x
    velocity_rhs = h / model.dw.M * b_x
    force_lhs = h * omega * b_x
    force_rhs = force

    period = 2.0 * pi / omega
    step = period / 1e5
    t = np.arange(samples) * period / samples
    offsets = np.array([-2.0, -1.0, 1.0, 2.0]) * step
    stencil = np.array([1.0, -8.0, 8.0, -1.0]) / (12.0 * step)
    shifted = expectations(wp, t[:, None] + offsets)
    dxdt = shifted.x @ stencil
    dpdt = shifted.px @ stencil
    mean = expectations(wp, t)
    p_scaled = mean.px / h
    dx_res = np.max(np.abs(dxdt - omega * a_x / b_x * p_scaled)) / abs(omega * a_x)
    dp_res = np.max(np.abs(dpdt / h + omega * b_x / a_x * mean.x)) / abs(omega * b_x)
    ellipse = np.max(np.abs((mean.x / a_x) ** 2 + (p_scaled / b_x) ** 2 - 1.0))

    return EhrenfestReport(
        a_x=a_x,
        b_x=b_x,
        omega1=omega,
        velocity_lhs=velocity_lhs,
        velocity_rhs=velocity_rhs,
        force_lhs=force_lhs,
        force_rhs=force_rhs,
        velocity_residual=_relative(velocity_lhs, velocity_rhs),
        force_residual=_relative(force_lhs, force_rhs),
        dx_residual=float(dx_res),
        dp_residual=float(dp_res),
        ellipse_residual=float(ellipse),
    )
