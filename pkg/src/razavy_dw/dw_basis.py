"""Razavy hyperbolic double well: potential, closed-form levels, ground doublet."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .quadrature import integrate

# phi_nu decays like exp(-xi cosh(2x)/4); beyond |x| = 8 nothing survives
X_LIMIT = 8.0


class DomainError(ValueError):
    """Argument too large for the hyperbolic terms to stay finite."""


def _checked(values, x, what):
    if not np.all(np.isfinite(values)):
        bad = np.asarray(x)[~np.isfinite(values)] if np.ndim(values) else x
        raise DomainError(f"{what} overflows at x={np.ravel(bad)[0]!r}")
    return values


def _doublet_factors(xi):
    k0 = 4.0 - xi + 2.0 * np.sqrt(4.0 - 2.0 * xi + xi * xi)
    k1 = 4.0 + xi + 2.0 * np.sqrt(4.0 + 2.0 * xi + xi * xi)
    return k0, k1


def _unnormalized(level, x, xi):
    k0, k1 = _doublet_factors(xi)
    with np.errstate(over="ignore", invalid="ignore"):
        envelope = np.exp(-0.25 * xi * np.cosh(2.0 * x))
        if level == 0:
            poly = 3.0 * xi * np.cosh(x) + k0 * np.cosh(3.0 * x)
        else:
            poly = 3.0 * xi * np.sinh(x) + k1 * np.sinh(3.0 * x)
        out = envelope * poly
    return _checked(out, x, f"phi_{level}")


def _unnormalized_derivative(level, x, xi):
    k0, k1 = _doublet_factors(xi)
    with np.errstate(over="ignore", invalid="ignore"):
        envelope = np.exp(-0.25 * xi * np.cosh(2.0 * x))
        slope = -0.5 * xi * np.sinh(2.0 * x)
        if level == 0:
            poly = 3.0 * xi * np.cosh(x) + k0 * np.cosh(3.0 * x)
            dpoly = 3.0 * xi * np.sinh(x) + 3.0 * k0 * np.sinh(3.0 * x)
        else:
            poly = 3.0 * xi * np.sinh(x) + k1 * np.sinh(3.0 * x)
            dpoly = 3.0 * xi * np.cosh(x) + 3.0 * k1 * np.cosh(3.0 * x)
        out = envelope * (slope * poly + dpoly)
    return _checked(out, x, f"phi_{level}'")


@dataclass(frozen=True)
class RazavyModel:
    """Double-well parameters.  ``norm0``/``norm1`` are filled in on construction."""

    M: float = 1.0
    xi: float = 1.0
    hbar: float = 1.0
    norm0: float = field(init=False, repr=False, compare=False)
    norm1: float = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        for name in ("M", "xi", "hbar"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive, got {getattr(self, name)}")
        for level, attr in ((0, "norm0"), (1, "norm1")):
            mass = integrate(
                lambda x: _unnormalized(level, x, self.xi) ** 2,
                -X_LIMIT, X_LIMIT, tol=1e-13,
            )
            object.__setattr__(self, attr, 1.0 / np.sqrt(mass))

    @property
    def scale(self):
        """Energy unit hbar^2 / 2M shared by the potential and the levels."""
        return self.hbar**2 / (2.0 * self.M)


@dataclass(frozen=True)
class RazavyLevels:
    eps0: float
    eps1: float
    eps2: float
    eps3: float

    @property
    def delta(self):
        return self.eps1 - self.eps0

    @property
    def eps(self):
        return self.eps1 + self.eps0

    def as_tuple(self):
        return (self.eps0, self.eps1, self.eps2, self.eps3)


def razavy_potential(x, model):
    """V(x) = (hbar^2/2M) [xi^2/8 cosh 4x - 4 xi cosh 2x - xi^2/8]."""
    xi = model.xi
    with np.errstate(over="ignore", invalid="ignore"):
        v = model.scale * (
            xi * xi / 8.0 * np.cosh(4.0 * np.asarray(x, dtype=float))
            - 4.0 * xi * np.cosh(2.0 * np.asarray(x, dtype=float))
            - xi * xi / 8.0
        )
    return _checked(v, x, "V")


def razavy_potential_derivative(x, model):
    xi = model.xi
    x = np.asarray(x, dtype=float)
    with np.errstate(over="ignore", invalid="ignore"):
        dv = model.scale * (0.5 * xi * xi * np.sinh(4.0 * x) - 8.0 * xi * np.sinh(2.0 * x))
    return _checked(dv, x, "V'")


def razavy_potential_second_derivative(x, model):
    xi = model.xi
    x = np.asarray(x, dtype=float)
    with np.errstate(over="ignore", invalid="ignore"):
        d2v = model.scale * (2.0 * xi * xi * np.cosh(4.0 * x) - 16.0 * xi * np.cosh(2.0 * x))
    return _checked(d2v, x, "V''")


def razavy_eigenvalues(model):
    """The four quasi-exactly known levels, lowest first."""
    xi = model.xi
    s_minus = np.sqrt(4.0 - 2.0 * xi + xi * xi)
    s_plus = np.sqrt(4.0 + 2.0 * xi + xi * xi)
    return RazavyLevels(
        eps0=model.scale * (-xi - 5.0 - 2.0 * s_minus),
        eps1=model.scale * (xi - 5.0 - 2.0 * s_plus),
        eps2=model.scale * (-xi - 5.0 + 2.0 * s_minus),
        eps3=model.scale * (xi - 5.0 + 2.0 * s_plus),
    )


def _norm(level, model):
    if level == 0:
        return model.norm0
    if level == 1:
        return model.norm1
    raise ValueError(f"only levels 0 and 1 are available, got {level}")


def razavy_eigenfunction(level, x, model):
    """Normalized phi_0 (even, positive) or phi_1 (odd, positive for x > 0)."""
    norm = _norm(level, model)
    return norm * _unnormalized(level, np.asarray(x, dtype=float), model.xi)


def razavy_eigenfunction_derivative(level, x, model):
    norm = _norm(level, model)
    return norm * _unnormalized_derivative(level, np.asarray(x, dtype=float), model.xi)
