"""Matrix elements of x, x^2, d/dx, ... between basis functions.

Everything here is computed by quadrature over the closed-form basis
functions.  The small operator matrices are what the dynamics module
contracts wavepacket coefficients against; the :class:`OverlapTable`
collects the named constants that enter the Hamiltonian and the N = 1
closed forms.
"""

from __future__ import annotations

from dataclasses import astuple, dataclass, fields
from functools import lru_cache

import numpy as np

from .dw_basis import (
    X_LIMIT,
    razavy_eigenfunction,
    razavy_eigenfunction_derivative,
    razavy_potential_derivative,
)
from .ho_basis import ho_wavefunction_derivatives, ho_wavefunctions
from .quadrature import integrate

DEFAULT_TOL = 1e-10


@dataclass(frozen=True)
class DwMatrices:
    """2x2 matrices in the (phi_0, phi_1) basis."""

    overlap: np.ndarray
    x: np.ndarray
    x2: np.ndarray
    d: np.ndarray  # <phi_a | d/dx phi_b>
    kinetic: np.ndarray  # <d phi_a | d phi_b>
    left: np.ndarray  # integral of phi_a phi_b over x < 0
    force: np.ndarray  # <phi_a | V' | phi_b>


@dataclass(frozen=True)
class HoMatrices:
    """(n_max+1) square matrices in the psi_n basis."""

    overlap: np.ndarray
    y: np.ndarray
    y2: np.ndarray
    d: np.ndarray
    kinetic: np.ndarray


def _outer_stack(f, df, extra):
    """Integrand rows: f_a f_b, f_a x f_b, f_a x^2 f_b, f_a f_b', f_a' f_b', extra..."""

    def integrand(x):
        u = f(x)
        du = df(x)
        k = u.shape[0]
        pair = u[:, None, :] * u[None, :, :]
        rows = [
            pair,
            pair * x,
            pair * x * x,
            u[:, None, :] * du[None, :, :],
            du[:, None, :] * du[None, :, :],
        ]
        rows.extend(e(x, u, pair) for e in extra)
        return np.stack(rows).reshape(len(rows) * k * k, -1)

    return integrand


@lru_cache(maxsize=32)
def dw_matrices(dw, tol=DEFAULT_TOL):
    def f(x):
        return np.stack([razavy_eigenfunction(0, x, dw), razavy_eigenfunction(1, x, dw)])

    def df(x):
        return np.stack(
            [razavy_eigenfunction_derivative(0, x, dw), razavy_eigenfunction_derivative(1, x, dw)]
        )

    force = [lambda x, u, pair: pair * razavy_potential_derivative(x, dw)]
    full = integrate(_outer_stack(f, df, force), -X_LIMIT, X_LIMIT, tol=tol).reshape(6, 2, 2)
    left = integrate(
        lambda x: (f(x)[:, None, :] * f(x)[None, :, :]).reshape(4, -1), -X_LIMIT, 0.0, tol=tol
    ).reshape(2, 2)
    overlap, x, x2, d, kinetic, forcem = full
    return DwMatrices(overlap, x, x2, d, kinetic, left, forcem)


@lru_cache(maxsize=64)
def ho_matrices(ho, n_max, tol=DEFAULT_TOL):
    half = ho.half_width(n_max)
    vals = integrate(
        _outer_stack(
            lambda y: ho_wavefunctions(n_max, y, ho),
            lambda y: ho_wavefunction_derivatives(n_max, y, ho),
            [],
        ),
        -half,
        half,
        tol=tol,
    ).reshape(5, n_max + 1, n_max + 1)
    return HoMatrices(*vals)


@dataclass(frozen=True)
class OverlapTable:
    gamma: float
    gamma0: float
    gamma1: float
    eta: float
    gamma_y: float
    eta_y: float
    chi0: float
    chi1: float
    b: float

    def rows(self):
        return [(f.name, getattr(self, f.name)) for f in fields(self)]


@dataclass(frozen=True)
class ZetaCoefficients:
    zeta: float
    zeta0: float
    zeta1: float

    def __iter__(self):
        return iter(astuple(self))


def overlap_table(dw, ho, tol=DEFAULT_TOL):
    x = dw_matrices(dw, tol)
    y = ho_matrices(ho, 1, tol)
    return OverlapTable(
        gamma=float(x.x[0, 1]),
        gamma0=float(x.x2[0, 0]),
        gamma1=float(x.x2[1, 1]),
        eta=float(x.d[0, 1]),
        gamma_y=float(y.y[0, 1]),
        eta_y=float(y.d[0, 1]),
        chi0=float(x.kinetic[0, 0]),
        chi1=float(x.kinetic[1, 1]),
        b=float(-x.left[0, 1]),
    )


def zeta_coefficients(c, m, alpha, table, delta, hbar=1.0):
    """Coupling energies c * gamma_* * (hbar^2 / 4 m alpha delta)^(1/4).

    The prefactor is sqrt(g/2) with g the oscillator length; this is the
    normalization the reference gaps and periods are built on.
    """
    if not (m > 0 and alpha > 0):
        raise ValueError(f"m and alpha must be positive, got m={m}, alpha={alpha}")
    scale = c * (hbar**2 / (4.0 * m * alpha * delta)) ** 0.25
    return ZetaCoefficients(
        zeta=scale * table.gamma,
        zeta0=scale * table.gamma0,
        zeta1=scale * table.gamma1,
    )
