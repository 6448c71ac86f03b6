"""Harmonic-oscillator eigenfunctions and levels."""

from __future__ import annotations

from dataclasses import dataclass
from math import pi, sqrt

import numpy as np

MAX_LEVEL = 64


@dataclass(frozen=True)
class HoModel:
    """Oscillator of mass ``m`` whose quantum hbar*omega is ``alpha`` times the doublet splitting."""

    m: float
    omega: float
    alpha: float
    hbar: float = 1.0

    def __post_init__(self):
        for name in ("m", "omega", "alpha", "hbar"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive, got {getattr(self, name)}")

    @classmethod
    def from_alpha(cls, m, alpha, delta, hbar=1.0):
        return cls(m=m, omega=alpha * delta / hbar, alpha=alpha, hbar=hbar)

    @property
    def length(self):
        """Oscillator length g = sqrt(hbar / m omega)."""
        return sqrt(self.hbar / (self.m * self.omega))

    def half_width(self, n_max):
        """Integration half-width: turning point of level n_max plus 8 lengths."""
        return self.length * (sqrt(2 * n_max + 1) + 8.0)


def _check_level(n):
    if n < 0 or int(n) != n:
        raise ValueError(f"level must be a non-negative integer, got {n}")
    if n > MAX_LEVEL:
        raise ValueError(f"level {n} exceeds the supported cutoff {MAX_LEVEL}")


def hermite(n, z):
    """Physicists' Hermite polynomial H_n(z) by upward recurrence."""
    _check_level(n)
    z = np.asarray(z, dtype=float)
    prev = np.ones_like(z)
    if n == 0:
        return prev
    cur = 2.0 * z
    for k in range(1, n):
        prev, cur = cur, 2.0 * z * cur - 2.0 * k * prev
    return cur


def ho_wavefunctions(n_max, y, model):
    """Stack of psi_0..psi_{n_max} at ``y``, shape ``(n_max + 1,) + y.shape``.

    The recurrence runs on the normalized functions so the Gaussian is
    carried along and no H_n(z) ever has to be formed on its own.
    """
    _check_level(n_max)
    return _stack(n_max, y, model)


def _stack(n_max, y, model):
    y = np.asarray(y, dtype=float)
    z = y / model.length
    out = np.empty((n_max + 1,) + y.shape)
    out[0] = (model.m * model.omega / (pi * model.hbar)) ** 0.25 * np.exp(-0.5 * z * z)
    if n_max >= 1:
        out[1] = sqrt(2.0) * z * out[0]
    for n in range(1, n_max):
        out[n + 1] = sqrt(2.0 / (n + 1)) * z * out[n] - sqrt(n / (n + 1)) * out[n - 1]
    return out


def ho_wavefunction_derivatives(n_max, y, model):
    """d psi_n / dy for n = 0..n_max via the ladder relation."""
    _check_level(n_max)
    psi = _stack(n_max + 1, y, model)
    out = np.empty_like(psi[:-1])
    for n in range(n_max + 1):
        down = sqrt(n / 2.0) * psi[n - 1] if n > 0 else 0.0
        out[n] = (down - sqrt((n + 1) / 2.0) * psi[n + 1]) / model.length
    return out


def ho_wavefunction(n, y, model):
    return ho_wavefunctions(n, y, model)[n]


def ho_energy(n, model):
    if n < 0:
        raise ValueError(f"level must be non-negative, got {n}")
    return (n + 0.5) * model.hbar * model.omega
