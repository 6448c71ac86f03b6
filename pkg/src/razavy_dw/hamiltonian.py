"""Coupled double-well + oscillator Hamiltonian in the product basis.

Basis states are phi_nu(x) psi_n(y) with nu in {0, 1} and n = 0..N, stored
at flat index 2n + nu.  For N = 1 that is (psi0 phi0, psi0 phi1, psi1 phi0,
psi1 phi1).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import atan2, cos, pi, sin, sqrt
from typing import Optional

import numpy as np

from .dw_basis import RazavyModel, razavy_eigenvalues
from .ho_basis import HoModel
from .jacobi import jacobi_eigh
from .overlaps import OverlapTable, ZetaCoefficients, overlap_table, zeta_coefficients

MAX_N = 10


@dataclass(frozen=True)
class CoupledModel:
    dw: RazavyModel
    ho: HoModel
    d: int = 1
    c: float = 1.0
    N: int = 1

    def __post_init__(self):
        if self.d not in (1, 2):
            raise ValueError(f"d must be 1 or 2, got {self.d}")
        if not self.c >= 0:
            raise ValueError(f"c must be non-negative, got {self.c}")
        if self.N < 0 or int(self.N) != self.N:
            raise ValueError(f"N must be a non-negative integer, got {self.N}")

    @classmethod
    def build(cls, m=1.0, alpha=10.0, c=1.0, d=1, N=1, M=1.0, xi=1.0, hbar=1.0):
        """Model from the scalar parameters, with hbar*omega = alpha * delta."""
        dw = RazavyModel(M=M, xi=xi, hbar=hbar)
        delta = razavy_eigenvalues(dw).delta
        return cls(dw=dw, ho=HoModel.from_alpha(m, alpha, delta, hbar), d=d, c=c, N=N)

    def with_(self, **changes):
        params = dict(dw=self.dw, ho=self.ho, d=self.d, c=self.c, N=self.N)
        params.update(changes)
        return CoupledModel(**params)

    @property
    def dim(self):
        return 2 * (self.N + 1)

    @property
    def hbar(self):
        return self.dw.hbar


@dataclass(frozen=True)
class BasisIndex:
    nu: int
    n: int

    @property
    def flat(self):
        return 2 * self.n + self.nu

    @classmethod
    def from_flat(cls, k):
        return cls(nu=k % 2, n=k // 2)


@dataclass(frozen=True)
class SpectralDecomposition:
    energies: np.ndarray
    vectors: np.ndarray  # columns are eigenvectors over the flat basis
    model: Optional[CoupledModel] = field(default=None, compare=False)
    table: Optional[OverlapTable] = field(default=None, compare=False, repr=False)

    @property
    def omega1(self):
        hbar = self.model.hbar if self.model is not None else 1.0
        return (self.energies[1] - self.energies[0]) / hbar

    @property
    def period(self):
        """Two-term tunneling period 2 pi / Omega_1."""
        return 2.0 * pi / self.omega1


@dataclass(frozen=True)
class AnalyticN1:
    """Closed-form N = 1 levels in the conventional mixing-angle labelling (not necessarily sorted)."""

    energies: tuple
    theta1: float
    theta2: float
    d: int

    def vectors(self):
        """Columns Phi_0..Phi_3 over the flat basis, matching ``energies``."""
        c1, s1 = cos(self.theta1), sin(self.theta1)
        c2, s2 = cos(self.theta2), sin(self.theta2)
        if self.d == 1:
            cols = [
                (c1, 0.0, 0.0, s1),
                (0.0, c2, s2, 0.0),
                (0.0, -s2, c2, 0.0),
                (-s1, 0.0, 0.0, c1),
            ]
        else:
            cols = [
                (c1, 0.0, s1, 0.0),
                (0.0, c2, 0.0, s2),
                (-s1, 0.0, c1, 0.0),
                (0.0, -s2, 0.0, c2),
            ]
        return np.array(cols).T


def model_zetas(model, table):
    delta = razavy_eigenvalues(model.dw).delta
    return zeta_coefficients(model.c, model.ho.m, model.ho.alpha, table, delta, model.hbar)


def assemble(model, table, max_N=MAX_N):
    if model.N > max_N:
        raise ValueError(f"N={model.N} exceeds the basis guard {max_N}")
    levels = razavy_eigenvalues(model.dw)
    eps = (levels.eps0, levels.eps1)
    hw = model.hbar * model.ho.omega
    z = model_zetas(model, table)
    h = np.zeros((model.dim, model.dim))
    for n in range(model.N + 1):
        for nu in (0, 1):
            k = 2 * n + nu
            h[k, k] = eps[nu] + (n + 0.5) * hw
    for n in range(model.N):
        ladder = sqrt(n + 1)
        for nu in (0, 1):
            row = 2 * n + nu
            if model.d == 1:
                col = 2 * (n + 1) + (1 - nu)
                value = -z.zeta * ladder
            else:
                col = 2 * (n + 1) + nu
                value = -(z.zeta0 if nu == 0 else z.zeta1) * ladder
            h[row, col] = h[col, row] = value
    return h


def diagonalize(matrix, model=None, table=None):
    w, v = jacobi_eigh(matrix)
    return SpectralDecomposition(energies=w, vectors=v, model=model, table=table)


def solve(model, table=None):
    """Assemble and diagonalize in one step, computing the overlap table if needed."""
    if table is None:
        table = overlap_table(model.dw, model.ho)
    return diagonalize(assemble(model, table), model=model, table=table)


def analytic_n1(model, zetas: ZetaCoefficients):
    if model.N != 1:
        raise ValueError(f"closed forms exist for N=1 only, got N={model.N}")
    levels = razavy_eigenvalues(model.dw)
    delta = levels.delta
    hw = model.hbar * model.ho.omega
    if model.d == 1:
        zeta = zetas.zeta
        r1 = sqrt(0.25 * (hw + delta) ** 2 + zeta**2)
        r2 = sqrt(0.25 * (hw - delta) ** 2 + zeta**2)
        mid = 0.5 * levels.eps + hw
        energies = (mid - r1, mid - r2, mid + r2, mid + r1)
        theta1 = 0.5 * atan2(2.0 * zeta, hw + delta)
        theta2 = 0.5 * atan2(2.0 * zeta, hw - delta)
    else:
        r0 = sqrt(0.25 * hw**2 + zetas.zeta0**2)
        r1 = sqrt(0.25 * hw**2 + zetas.zeta1**2)
        energies = (
            levels.eps0 + hw - r0,
            levels.eps1 + hw - r1,
            levels.eps0 + hw + r0,
            levels.eps1 + hw + r1,
        )
        theta1 = 0.5 * atan2(2.0 * zetas.zeta0, hw)
        theta2 = 0.5 * atan2(2.0 * zetas.zeta1, hw)
    return AnalyticN1(energies=energies, theta1=theta1, theta2=theta2, d=model.d)
