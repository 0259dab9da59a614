"""Brute-force baselines used to validate the streaming implementation.

Nothing here is meant to be efficient: the dense path materializes the full
design matrix on purpose, and the Newton-Cotes weights exist to demonstrate
the sign instability that the Gram-basis weights avoid.
"""
from __future__ import annotations

import math

import numpy as np

from .gauss_legendre import gauss_legendre_rule
from .gram_basis import GramRecurrence, build_recurrence, equidistant_nodes
from .moments import minimum_gauss_order

__all__ = ["dense_design_matrix", "dense_weights", "newton_cotes_weights"]

MAX_NEWTON_COTES_POINTS = 30


def dense_design_matrix(rec: GramRecurrence, points) -> np.ndarray:
    """All basis rows at once: entry [m, i] is the degree-m value at points[i].

    O(P * M) storage by design; rows are orthonormal on the equidistant
    point set the recurrence was built for.
    """
    points = np.asarray(points, dtype=float)
    matrix = np.empty((rec.max_degree + 1, points.size))
    matrix[0] = (rec.n_param + 1) ** -0.5
    if rec.max_degree >= 1:
        matrix[1] = rec.alpha[1] * (points * matrix[0])
    for m in range(1, rec.max_degree):
        leading = rec.alpha[m + 1]
        matrix[m + 1] = leading * (points * matrix[m]) - (leading / rec.alpha[m]) * matrix[m - 1]
    return matrix


def dense_weights(p_points: int, degree: int | None = None) -> np.ndarray:
    """Quadrature weights via the fully materialized design matrix.

    Same contract as ``weights.compute_rule`` but assembled with dense
    matrix products: moments come from contracting the basis on Gauss
    nodes against the Gauss weights, and the weight vector is the matrix
    transpose applied to the moments.
    """
    rec = build_recurrence(p_points, degree)
    gauss = gauss_legendre_rule(minimum_gauss_order(rec.max_degree))
    moments = dense_design_matrix(rec, gauss.nodes) @ gauss.weights
    design = dense_design_matrix(rec, equidistant_nodes(p_points))
    return design.T @ moments


def newton_cotes_weights(p_points: int) -> np.ndarray:
    """Interpolatory (Newton-Cotes) weights on equidistant points in [-1, 1].

    Weight i is the integral of the i-th Lagrange basis polynomial,
    evaluated in product form and integrated exactly by a Gauss rule two
    orders above the exactness minimum. Capped at 30 points: beyond that
    the construction is too ill-conditioned to demonstrate anything.
    """
    if not 2 <= p_points <= MAX_NEWTON_COTES_POINTS:
        raise ValueError(
            f"point count must be in 2..{MAX_NEWTON_COTES_POINTS}, got {p_points}"
        )
    nodes = equidistant_nodes(p_points)
    gauss = gauss_legendre_rule(math.ceil(p_points / 2) + 2)
    weights = np.empty(p_points)
    for i in range(p_points):
        basis = np.ones_like(gauss.nodes)
        for j in range(p_points):
            if j != i:
                basis *= (gauss.nodes - nodes[j]) / (nodes[i] - nodes[j])
        weights[i] = np.dot(gauss.weights, basis)
    return weights
