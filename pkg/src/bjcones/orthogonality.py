"""Birkhoff-James orthogonality and its two approximate relaxations.

x is Birkhoff-James orthogonal to y when ||x + t y|| >= ||x|| for every t.
The distance-type relaxation at level eps lowers the right side to
sqrt(1 - eps^2) ||x||; the quadratic-type relaxation instead requires
||x + t y||^2 >= ||x||^2 - 2 eps ||x|| ||t y||.  Both relations are
homogeneous, so every predicate here works on the normalized pair.
"""

import math
from dataclasses import dataclass

import numpy as np

from .minimize import dist_to_line, min_b_functional, sup_b_ratio
from .norms import as_vector, one_sided_derivative

__all__ = [
    "PRED_TOL",
    "OrthReport",
    "is_bj_orthogonal",
    "in_x_plus",
    "in_x_minus",
    "is_approx_orth_d",
    "is_approx_orth_b",
    "eps_d_min",
    "eps_b_min",
    "is_collinear",
    "orth_report",
]

# one-sided tolerance band: boundary cases count as orthogonal
PRED_TOL = 1e-9


def _check_eps(eps):
    if not (0.0 <= eps < 1.0):
        raise ValueError(f"eps must lie in [0, 1), got {eps}")


def _normalized_pair(spec, x, y):
    x = as_vector(x, spec.dim)
    y = as_vector(y, spec.dim)
    nx = spec.value(x)
    if nx == 0.0:
        raise ValueError("x must be nonzero")
    ny = spec.value(y)
    return x / nx, y, ny


def is_bj_orthogonal(spec, x, y, tol=PRED_TOL):
    """Whether ||x + t y|| >= ||x|| for all t, within tol."""
    xu, y, ny = _normalized_pair(spec, x, y)
    if ny == 0.0:
        return True
    return dist_to_line(spec, xu, y / ny).value >= 1.0 - tol


def in_x_plus(spec, x, y, tol=PRED_TOL):
    """Whether ||x + t y|| >= ||x|| for all t >= 0 (right derivative >= 0)."""
    xu, y, ny = _normalized_pair(spec, x, y)
    if ny == 0.0:
        return True
    return one_sided_derivative(spec, xu, y / ny, "plus") >= -tol


def in_x_minus(spec, x, y, tol=PRED_TOL):
    """Whether ||x + t y|| >= ||x|| for all t <= 0 (left derivative <= 0)."""
    xu, y, ny = _normalized_pair(spec, x, y)
    if ny == 0.0:
        return True
    return one_sided_derivative(spec, xu, y / ny, "minus") <= tol


def is_approx_orth_d(spec, x, y, eps, tol=PRED_TOL):
    """Distance-type approximate orthogonality: inf ||x + t y|| >= sqrt(1-eps^2) ||x||."""
    _check_eps(eps)
    xu, y, ny = _normalized_pair(spec, x, y)
    if ny == 0.0:
        return True
    bound = math.sqrt(1.0 - eps * eps)
    return dist_to_line(spec, xu, y / ny).value >= bound - tol


def is_approx_orth_b(spec, x, y, eps, tol=PRED_TOL):
    """Quadratic-type approximate orthogonality at level eps."""
    _check_eps(eps)
    xu, y, ny = _normalized_pair(spec, x, y)
    if ny == 0.0:
        return True
    return min_b_functional(spec, xu, y / ny, eps) >= -tol


def eps_d_min(spec, x, y):
    """Least eps at which the distance-type relation holds."""
    xu, y, ny = _normalized_pair(spec, x, y)
    if ny == 0.0:
        raise ValueError("y must be nonzero")
    d = min(dist_to_line(spec, xu, y / ny).value, 1.0)
    return math.sqrt(max(0.0, 1.0 - d * d))


def eps_b_min(spec, x, y):
    """Least eps at which the quadratic-type relation holds."""
    xu, y, ny = _normalized_pair(spec, x, y)
    if ny == 0.0:
        raise ValueError("y must be nonzero")
    return sup_b_ratio(spec, xu, y / ny)


def is_collinear(x, y, rtol=1e-12):
    """Linear dependence of two vectors, via the Euclidean Gram determinant."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    xx = float(x @ x)
    yy = float(y @ y)
    xy = float(x @ y)
    return xx * yy - xy * xy <= rtol * xx * yy


@dataclass(frozen=True)
class OrthReport:
    """Full orthogonality profile of a pair (x, y)."""

    bj: bool
    in_plus: bool
    in_minus: bool
    eps_d_min: float
    eps_b_min: float
    degenerate: bool


def orth_report(spec, x, y):
    """Assemble the orthogonality profile of (x, y); both must be nonzero."""
    x = as_vector(x, spec.dim)
    y = as_vector(y, spec.dim)
    if spec.value(x) == 0.0 or spec.value(y) == 0.0:
        raise ValueError("orth_report requires nonzero x and y")
    return OrthReport(
        bj=is_bj_orthogonal(spec, x, y),
        in_plus=in_x_plus(spec, x, y),
        in_minus=in_x_minus(spec, x, y),
        eps_d_min=eps_d_min(spec, x, y),
        eps_b_min=eps_b_min(spec, x, y),
        degenerate=is_collinear(x, y),
    )
