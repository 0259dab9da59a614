"""Gauss-Legendre nodes and weights from first principles.

Nodes are Legendre-polynomial roots located by Newton iteration from
Chebyshev-like initial guesses; weights follow from the derivative at each
root. An n-point rule integrates polynomials up to degree 2n - 1 exactly,
which is what the moment computation depends on.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = ["GaussRule", "legendre_value_and_derivative", "gauss_legendre_rule"]

NEWTON_TOLERANCE = 1e-15
NEWTON_MAX_ITERATIONS = 100


@dataclass(frozen=True)
class GaussRule:
    """Gauss-Legendre rule of a given order: ascending nodes in (-1, 1)."""

    order: int
    nodes: np.ndarray
    weights: np.ndarray


def legendre_value_and_derivative(n: int, x):
    """Evaluate the Legendre polynomial P_n and its derivative at ``x``.

    Uses the standard three-term recurrence
    ``(k + 1) P_{k+1} = (2k + 1) x P_k - k P_{k-1}`` and the identity
    ``P_n'(x) = n (x P_n - P_{n-1}) / (x^2 - 1)``, with the closed-form
    limit ``P_n'(+-1) = (+-1)^(n-1) n (n + 1) / 2`` at the endpoints.

    Accepts a scalar or an array; returns a matching pair of values.
    """
    if n < 0:
        raise ValueError(f"polynomial degree must be >= 0, got {n}")
    scalar = np.ndim(x) == 0
    x = np.atleast_1d(np.asarray(x, dtype=float))
    p_prev = np.zeros_like(x)
    p = np.ones_like(x)
    for k in range(n):
        p, p_prev = ((2 * k + 1) * x * p - k * p_prev) / (k + 1), p
    if n == 0:
        deriv = np.zeros_like(x)
    else:
        with np.errstate(divide="ignore", invalid="ignore"):
            deriv = n * (x * p - p_prev) / (x * x - 1.0)
        at_edge = np.abs(x) == 1.0
        if np.any(at_edge):
            deriv = np.where(at_edge, x ** (n + 1) * (n * (n + 1) / 2.0), deriv)
    if scalar:
        return float(p[0]), float(deriv[0])
    return p, deriv


def gauss_legendre_rule(n: int) -> GaussRule:
    """Compute the n-point Gauss-Legendre rule on [-1, 1].

    Starts Newton iteration at ``cos(pi (k - 1/4) / (n + 1/2))`` for
    k = 1..n and declares convergence once every update falls below
    ``NEWTON_TOLERANCE``. The roots are simple and well separated, so a
    handful of iterations suffices; exceeding the iteration cap indicates
    a defect and raises ``RuntimeError`` rather than ``ValueError``.
    """
    if n < 1:
        raise ValueError(f"rule order must be >= 1, got {n}")
    k = np.arange(1, n + 1)
    x = np.cos(np.pi * (k - 0.25) / (n + 0.5))
    for _ in range(NEWTON_MAX_ITERATIONS):
        value, deriv = legendre_value_and_derivative(n, x)
        step = value / deriv
        x -= step
        if np.max(np.abs(step)) < NEWTON_TOLERANCE:
            break
    else:
        raise RuntimeError(
            f"Newton iteration for order-{n} Legendre roots did not converge "
            f"within {NEWTON_MAX_ITERATIONS} iterations"
        )
    x = x[::-1].copy()  # initial guesses descend from +1; report ascending
    _, deriv = legendre_value_and_derivative(n, x)
    weights = 2.0 / ((1.0 - x * x) * deriv * deriv)
    return GaussRule(order=n, nodes=x, weights=weights)
