"""Adaptive composite Gauss-Legendre quadrature.

Integrands are evaluated on whole arrays of nodes at once and may be
vector valued: ``f(x)`` returns an array whose *last* axis runs over the
nodes, so a single adaptive pass can integrate a stack of related
functions (all entries of an overlap matrix, say) on a shared mesh.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np


class QuadratureError(RuntimeError):
    """Adaptive refinement hit its depth limit before meeting the tolerance."""

    def __init__(self, interval, residual, tol):
        self.interval = interval
        self.residual = residual
        self.tol = tol
        lo, hi = interval
        super().__init__(
            f"quadrature did not converge on [{lo:.6g}, {hi:.6g}]: "
            f"residual {residual:.3e} > local tolerance {tol:.3e}"
        )


@lru_cache(maxsize=None)
def _legendre_rule(order):
    nodes, weights = np.polynomial.legendre.leggauss(order)
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


def _panel(f, lo, hi, order):
    nodes, weights = _legendre_rule(order)
    half = 0.5 * (hi - lo)
    mid = 0.5 * (hi + lo)
    vals = np.asarray(f(mid + half * nodes), dtype=float)
    return half * (vals @ weights)


def integrate(f, a, b, tol=1e-10, order=16, initial_panels=8, max_depth=40):
    """Integrate ``f`` over ``[a, b]`` to absolute accuracy ``tol``.

    Each panel is accepted once its Gauss-Legendre estimate agrees with the
    sum over its two halves to within the panel's share of the tolerance;
    otherwise both halves are refined with half the budget each.

    Raises
    ------
    QuadratureError
        If a panel is still unresolved after ``max_depth`` bisections.
    """
    if not b > a:
        raise ValueError(f"need a < b, got a={a}, b={b}")
    if not tol > 0:
        raise ValueError(f"tol must be positive, got {tol}")

    edges = np.linspace(a, b, initial_panels + 1)
    share = tol / initial_panels
    stack = [
        (lo, hi, _panel(f, lo, hi, order), share, 0)
        for lo, hi in zip(edges[:-1], edges[1:])
    ]
    total = 0.0
    eps = np.finfo(float).eps
    while stack:
        lo, hi, coarse, budget, depth = stack.pop()
        mid = 0.5 * (lo + hi)
        left = _panel(f, lo, mid, order)
        right = _panel(f, mid, hi, order)
        fine = left + right
        residual = float(np.max(np.abs(fine - coarse)))
        # roundoff floor for panels carrying large values
        floor = 64 * eps * float(np.max(np.abs(fine)))
        if residual <= max(budget, floor):
            total = total + fine
            continue
        if depth >= max_depth:
            raise QuadratureError((lo, hi), residual, budget)
        stack.append((mid, hi, right, 0.5 * budget, depth + 1))
        stack.append((lo, mid, left, 0.5 * budget, depth + 1))
    return total


def composite_rule(a, b, panels, order=16):
    """Nodes and weights of a fixed composite Gauss-Legendre rule on [a, b]."""
    nodes, weights = _legendre_rule(order)
    edges = np.linspace(a, b, panels + 1)
    half = 0.5 * np.diff(edges)[:, None]
    mid = 0.5 * (edges[:-1] + edges[1:])[:, None]
    return (mid + half * nodes).ravel(), (half * weights).ravel()
