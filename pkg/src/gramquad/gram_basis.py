"""Orthonormal Gram (discrete Legendre) polynomial basis on point sets.

The basis is defined by a three-term recurrence whose coefficients depend
only on the number of sample points, so evaluating all rows up to a degree
cap needs just the coefficient table and the two most recent rows. That
two-row discipline is what the weight-assembly layer relies on to stay at
O(P) memory.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "GramRecurrence",
    "RowState",
    "alpha_coefficient",
    "build_recurrence",
    "equidistant_nodes",
    "initial_row_state",
    "advance_row",
]


@dataclass(frozen=True)
class GramRecurrence:
    """Coefficient table driving the Gram-polynomial recurrence.

    Attributes
    ----------
    n_param : int
        Size parameter of the basis, one less than the point count.
    max_degree : int
        Highest basis degree the table supports.
    alpha : ndarray, shape (max_degree + 2,)
        ``alpha[0]`` is the seed coefficient 1; ``alpha[m + 1]`` is the
        leading coefficient for advancing a degree-``m`` row. The trailing
        recurrence coefficient is never stored: it is always the ratio
        ``alpha[m + 1] / alpha[m]``.
    """

    n_param: int
    max_degree: int
    alpha: np.ndarray


@dataclass(frozen=True)
class RowState:
    """Two live rows of basis values: ``cur`` at ``degree``, ``prev`` one below."""

    prev: np.ndarray
    cur: np.ndarray
    degree: int


def alpha_coefficient(m: int, n_param: int) -> float:
    """Leading recurrence coefficient for advancing a degree-``m`` row.

    Parameters
    ----------
    m : int
        Degree of the row being advanced, ``0 <= m <= n_param - 1``.
    n_param : int
        Basis size parameter (point count minus one).

    Returns
    -------
    float
        ``(n_param / (m + 1)) * sqrt((4(m+1)^2 - 1) / ((n_param+1)^2 - (m+1)^2))``
    """
    if n_param < 1:
        raise ValueError(f"basis size parameter must be >= 1, got {n_param}")
    if m < 0 or m + 1 >= n_param + 1:
        raise ValueError(
            f"degree {m} is outside the valid range 0..{n_param - 1} for "
            f"{n_param + 1} points"
        )
    numerator = 4 * (m + 1) ** 2 - 1
    denominator = (n_param + 1) ** 2 - (m + 1) ** 2
    return n_param / (m + 1) * math.sqrt(numerator / denominator)


def build_recurrence(p_points: int, max_degree: int | None = None) -> GramRecurrence:
    """Build the coefficient table for a basis on ``p_points`` points.

    The default degree cap is ``isqrt(p_points - 1)``, the largest degree
    for which the assembled quadrature weights stay strictly positive.
    An explicit ``max_degree`` above that cap is rejected.
    """
    if p_points < 2:
        raise ValueError(f"at least 2 points are required, got {p_points}")
    n_param = p_points - 1
    cap = math.isqrt(n_param)
    if max_degree is None:
        max_degree = cap
    elif not 0 <= max_degree <= cap:
        raise ValueError(
            f"max_degree {max_degree} is outside 0..{cap}, the stability cap "
            f"for {p_points} points"
        )
    alpha = np.empty(max_degree + 2)
    alpha[0] = 1.0
    for m in range(max_degree + 1):
        # The top table entry sits at m == n_param only when p_points == 2;
        # its denominator vanishes and the formula limit is +inf. Advances
        # within the degree cap never consume it.
        alpha[m + 1] = alpha_coefficient(m, n_param) if m < n_param else math.inf
    return GramRecurrence(n_param=n_param, max_degree=max_degree, alpha=alpha)


def equidistant_nodes(p_points: int) -> np.ndarray:
    """Equidistant nodes ``-1 + 2i/(p_points - 1)``, endpoints exact."""
    if p_points < 2:
        raise ValueError(f"at least 2 points are required, got {p_points}")
    return -1.0 + 2.0 * np.arange(p_points) / (p_points - 1)


def initial_row_state(rec: GramRecurrence, points: np.ndarray) -> RowState:
    """Degree-0 state on ``points``: a zero row below a constant row.

    The constant equals ``(n_param + 1) ** -0.5`` so that the degree-0 row
    has unit discrete norm on the equidistant point set.
    """
    points = np.asarray(points, dtype=float)
    if points.shape != (rec.n_param + 1,):
        raise ValueError(
            f"expected {rec.n_param + 1} points, got {points.shape[0] if points.ndim == 1 else points.shape}"
        )
    constant = (rec.n_param + 1) ** -0.5
    return RowState(prev=np.zeros(points.shape), cur=np.full(points.shape, constant), degree=0)


def advance_row(state: RowState, rec: GramRecurrence, points: np.ndarray) -> RowState:
    """Advance one degree: ``alpha_m * x * cur - (alpha_m / alpha_{m-1}) * prev``.

    Element-wise and linear in the two rows, so rescaled rows (for example
    rows with quadrature weights folded in) advance under the same map.
    """
    if state.degree >= rec.max_degree:
        raise ValueError(
            f"cannot advance past degree {rec.max_degree}; no coefficients beyond the cap"
        )
    points = np.asarray(points, dtype=float)
    if points.shape != state.cur.shape:
        raise ValueError(f"points shape {points.shape} does not match rows {state.cur.shape}")
    leading = rec.alpha[state.degree + 1]
    trailing = leading / rec.alpha[state.degree]
    nxt = points * state.cur
    nxt *= leading
    nxt -= trailing * state.prev
    return RowState(prev=state.cur, cur=nxt, degree=state.degree + 1)
