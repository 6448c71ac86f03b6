"""Analytic observables of the two-term packet for N = 1.

These evaluate the mixing-angle formulas directly from an
:class:`~razavy_dw.hamiltonian.AnalyticN1` and the overlap constants.  The
tests use them as an oracle for the quadrature-based routines in
:mod:`razavy_dw.dynamics`.  They assume the mixing-angle labelling coincides
with the energy ordering of the two lowest levels, i.e. no level crossing
between Phi_0 and Phi_1.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import cos, sin

import numpy as np

from .dw_basis import razavy_eigenfunction
from .ho_basis import ho_wavefunctions


@dataclass(frozen=True)
class TwoTermN1:
    """Closed forms for a_0 = a_1 = 1/sqrt(2) on the N = 1 model."""

    analytic: object  # AnalyticN1
    table: object  # OverlapTable
    model: object  # CoupledModel

    @property
    def omega1(self):
        e = self.analytic.energies
        return (e[1] - e[0]) / self.model.hbar

    @property
    def _angles(self):
        return self.analytic.theta1, self.analytic.theta2

    def rho_x(self, x, t):
        th1, th2 = self._angles
        phi0 = razavy_eigenfunction(0, x, self.model.dw)
        phi1 = razavy_eigenfunction(1, x, self.model.dw)
        osc = np.cos(self.omega1 * np.asarray(t)) * cos(th1 - th2) * phi0 * phi1
        if self.analytic.d == 1:
            w0 = 0.5 * (cos(th1) ** 2 + sin(th2) ** 2)
            w1 = 0.5 * (sin(th1) ** 2 + cos(th2) ** 2)
        else:
            w0 = w1 = 0.5
        return w0 * phi0**2 + w1 * phi1**2 + osc

    def rho_y(self, y, t):
        th1, th2 = self._angles
        psi0, psi1 = ho_wavefunctions(1, y, self.model.ho)
        w0 = 0.5 * (cos(th1) ** 2 + cos(th2) ** 2)
        w1 = 0.5 * (sin(th1) ** 2 + sin(th2) ** 2)
        if self.analytic.d == 1:
            cross = sin(th1 + th2) * np.cos(self.omega1 * np.asarray(t))
        else:
            # time independent; bracketing fixed by direct integration over x
            cross = 0.5 * (sin(2 * th1) + sin(2 * th2)) * np.ones_like(np.asarray(t, dtype=float))
        return w0 * psi0**2 + w1 * psi1**2 + cross * psi0 * psi1

    def tunneling_probability(self, t):
        th1, th2 = self._angles
        return 0.5 - self.table.b * cos(th1 - th2) * np.cos(self.omega1 * np.asarray(t))

    def expectations(self, t):
        """(<x>, <p_x>, <y>, <p_y>) at times ``t``."""
        th1, th2 = self._angles
        tb = self.table
        c = np.cos(self.omega1 * np.asarray(t, dtype=float))
        s = np.sin(self.omega1 * np.asarray(t, dtype=float))
        h = self.model.hbar
        x = tb.gamma * cos(th1 - th2) * c
        if self.analytic.d == 1:
            px = -h * tb.eta * cos(th1 + th2) * s
            y = tb.gamma_y * sin(th1 + th2) * c
            py = h * tb.eta_y * sin(th1 - th2) * s
        else:
            px = -h * tb.eta * cos(th1 - th2) * s
            y = 0.5 * tb.gamma_y * (sin(2 * th1) + sin(2 * th2)) * np.ones_like(c)
            py = np.zeros_like(c)
        return x, px, y, py

    def variances(self, t):
        """((dx)^2, (dp_x)^2) at times ``t``."""
        th1, th2 = self._angles
        tb = self.table
        c = np.cos(self.omega1 * np.asarray(t, dtype=float))
        s = np.sin(self.omega1 * np.asarray(t, dtype=float))
        h = self.model.hbar
        if self.analytic.d == 1:
            w0 = cos(th1) ** 2 + sin(th2) ** 2
            w1 = sin(th1) ** 2 + cos(th2) ** 2
            drift_p = cos(th1 + th2)
        else:
            w0 = w1 = 1.0
            drift_p = cos(th1 - th2)
        var_x = 0.5 * tb.gamma0 * w0 + 0.5 * tb.gamma1 * w1 - (tb.gamma * cos(th1 - th2) * c) ** 2
        var_p = h * h * (0.5 * tb.chi0 * w0 + 0.5 * tb.chi1 * w1 - (tb.eta * drift_p * s) ** 2)
        return var_x, var_p
