"""Exact integrals of the Gram basis over [-1, 1].

Each basis polynomial of degree m <= M is integrated exactly by a
Gauss-Legendre rule with floor(M / 2) + 1 points. Folding the Gauss
weights into the degree-0 row lets the whole moment vector come out of the
same two-row recurrence used everywhere else: the recurrence is linear, so
a weighted row advances to the next weighted row.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gauss_legendre import GaussRule
from .gram_basis import GramRecurrence, RowState, advance_row

__all__ = ["MomentVector", "minimum_gauss_order", "compute_moments"]


@dataclass(frozen=True)
class MomentVector:
    """Integrals of the basis polynomials: ``values[m]`` for degrees 0..degree."""

    values: np.ndarray
    degree: int


def minimum_gauss_order(max_degree: int) -> int:
    """Smallest Gauss order that integrates every degree <= max_degree exactly."""
    return max_degree // 2 + 1


def compute_moments(rec: GramRecurrence, gauss: GaussRule) -> MomentVector:
    """Integrate each basis polynomial up to ``rec.max_degree`` over [-1, 1].

    Raises ``ValueError`` if the Gauss order is too low for the integrals
    to be exact. The degree-0 moment is ``2 * (n_param + 1) ** -0.5``; odd
    degrees integrate to zero by parity.
    """
    needed = minimum_gauss_order(rec.max_degree)
    if gauss.order < needed:
        raise ValueError(
            f"Gauss order {gauss.order} cannot integrate degree {rec.max_degree} "
            f"exactly; at least {needed} points are required"
        )
    constant = (rec.n_param + 1) ** -0.5
    state = RowState(prev=np.zeros(gauss.order), cur=gauss.weights * constant, degree=0)
    values = np.empty(rec.max_degree + 1)
    values[0] = state.cur.sum()
    for m in range(rec.max_degree):
        state = advance_row(state, rec, gauss.nodes)
        values[m + 1] = state.cur.sum()
    return MomentVector(values=values, degree=rec.max_degree)
