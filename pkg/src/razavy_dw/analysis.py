"""Composite potential landscape and tunneling-period sweeps."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import pi

import numpy as np

from .dw_basis import (
    razavy_eigenvalues,
    razavy_potential,
    razavy_potential_derivative,
    razavy_potential_second_derivative,
)
from .hamiltonian import solve
from .overlaps import overlap_table


@dataclass(frozen=True)
class PotentialMinimum:
    x: float
    y: float
    value: float


@dataclass(frozen=True)
class SweepResult:
    params: tuple
    periods: tuple
    gaps: tuple
    m: float
    alpha: float
    d: int

    def rows(self):
        return list(zip(self.params, self.periods, self.gaps))


def composite_potential(x, y, model):
    """U(x, y) = V(x) + m omega^2 y^2 / 2 - c x^d y."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    ho = model.ho
    return razavy_potential(x, model.dw) + 0.5 * ho.m * ho.omega**2 * y * y - model.c * x**model.d * y


def composite_gradient(x, y, model):
    ho = model.ho
    d = model.d
    ux = razavy_potential_derivative(x, model.dw) - model.c * d * x ** (d - 1) * y
    uy = ho.m * ho.omega**2 * y - model.c * x**d
    return np.array([ux, uy], dtype=float)


def composite_hessian(x, y, model):
    ho = model.ho
    d = model.d
    uxx = razavy_potential_second_derivative(x, model.dw) - (model.c * 2.0 * y if d == 2 else 0.0)
    uxy = -model.c * d * x ** (d - 1)
    uyy = ho.m * ho.omega**2
    return np.array([[uxx, uxy], [uxy, uyy]], dtype=float)


def search_box(model):
    """Half-widths (x, y) of the region scanned for minima."""
    ho = model.ho
    return 3.0, model.c * 9.0 / (ho.m * ho.omega**2) + 3.0 * ho.length


def _newton(x, y, model, tol=1e-10, max_iter=100):
    for _ in range(max_iter):
        g = composite_gradient(x, y, model)
        if np.hypot(*g) < tol:
            return x, y, True
        hess = composite_hessian(x, y, model)
        try:
            step = np.linalg.solve(hess, g)
        except np.linalg.LinAlgError:
            step = g
        # backtrack so the potential never goes up
        u0 = composite_potential(x, y, model)
        scale = 1.0
        while scale > 1e-12:
            nx, ny = x - scale * step[0], y - scale * step[1]
            if composite_potential(nx, ny, model) <= u0 + 1e-15 * abs(u0):
                break
            scale *= 0.5
        x, y = nx, ny
    return x, y, np.hypot(*composite_gradient(x, y, model)) < tol


def find_minima(model, points=401):
    """All local minima in the search box, ordered by value then x."""
    x_half, y_half = search_box(model)
    xs = np.linspace(-x_half, x_half, points)
    ys = np.linspace(-y_half, y_half, points)
    u = composite_potential(xs[:, None], ys[None, :], model)
    core = u[1:-1, 1:-1]
    is_min = np.ones_like(core, dtype=bool)
    for di in (-1, 0, 1):
        for dj in (-1, 0, 1):
            if di == 0 and dj == 0:
                continue
            is_min &= core < u[1 + di : points - 1 + di, 1 + dj : points - 1 + dj]

    found = []
    for i, j in zip(*np.nonzero(is_min)):
        x, y, ok = _newton(xs[i + 1], ys[j + 1], model)
        if not ok or np.any(np.linalg.eigvalsh(composite_hessian(x, y, model)) <= 0):
            continue
        if any(abs(x - p.x) < 1e-6 and abs(y - p.y) < 1e-6 for p in found):
            continue
        found.append(PotentialMinimum(float(x), float(y), float(composite_potential(x, y, model))))
    assert found, "composite potential has no minimum in the search box"
    return sorted(found, key=lambda p: (p.value, p.x))


def potential_grid(model, points=121):
    """U on a tensor grid over the search box: (xs, ys, values[i, j])."""
    x_half, y_half = search_box(model)
    xs = np.linspace(-x_half, x_half, points)
    ys = np.linspace(-y_half, y_half, points)
    return xs, ys, composite_potential(xs[:, None], ys[None, :], model)


def _period_job(args):
    model, table = args
    dec = solve(model, table)
    return 2.0 * pi / dec.omega1, dec.omega1


def _run(jobs, tasks):
    if jobs is None or jobs <= 1 or len(tasks) <= 1:
        return [_period_job(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_period_job, tasks))


def sweep_c(base, c_values, jobs=1):
    """Two-term period 2 pi / Omega_1 for each coupling strength."""
    c_values = [float(c) for c in c_values]
    if not c_values or min(c_values) < 0:
        raise ValueError("c_values must be a non-empty list of non-negative numbers")
    table = overlap_table(base.dw, base.ho)
    out = _run(jobs, [(base.with_(c=c), table) for c in c_values])
    return SweepResult(
        params=tuple(c_values),
        periods=tuple(float(p) for p, _ in out),
        gaps=tuple(float(g) for _, g in out),
        m=base.ho.m,
        alpha=base.ho.alpha,
        d=base.d,
    )


def sweep_N(base, N_values, jobs=1, max_N=10):
    """Two-term period per oscillator cutoff; N = 0 is the uncoupled double well."""
    N_values = [int(n) for n in N_values]
    if not N_values or min(N_values) < 0 or max(N_values) > max_N:
        raise ValueError(f"N_values must lie in [0, {max_N}]")
    table = overlap_table(base.dw, base.ho)
    out = _run(jobs, [(base.with_(N=n), table) for n in N_values])
    return SweepResult(
        params=tuple(N_values),
        periods=tuple(float(p) for p, _ in out),
        gaps=tuple(float(g) for _, g in out),
        m=base.ho.m,
        alpha=base.ho.alpha,
        d=base.d,
    )


def recommend_N(alpha, dw):
    """Cutoff at which (N + 1/2) hbar omega reaches the third double-well level."""
    if not alpha > 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    levels = razavy_eigenvalues(dw)
    return (levels.eps2 - levels.eps0) / (alpha * levels.delta) - 0.5
