"""Wavepacket dynamics of a Razavy double well coupled to a harmonic oscillator."""

from .analysis import PotentialMinimum, SweepResult, composite_potential, find_minima, recommend_N, sweep_c, sweep_N
from .dw_basis import RazavyModel, razavy_eigenfunction, razavy_eigenvalues, razavy_potential
from .dynamics import (
    Wavepacket,
    correlation,
    ehrenfest_check,
    evaluate_density,
    expectations,
    marginal_x,
    marginal_y,
    observable_series,
    tunneling_period,
    tunneling_probability,
    uncertainty,
)
from .hamiltonian import CoupledModel, SpectralDecomposition, analytic_n1, assemble, diagonalize, solve
from .ho_basis import HoModel, hermite, ho_energy, ho_wavefunction
from .overlaps import OverlapTable, ZetaCoefficients, overlap_table, zeta_coefficients
from .quadrature import integrate

__version__ = "0.1.0"
