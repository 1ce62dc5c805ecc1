"""One-dimensional convex minimization along lines, under an arbitrary norm.

Every objective handled here is convex in the line parameter, and the
minimizers all live inside the bracket [-R, R] with R = 2 ||x|| / ||y||:
outside it the triangle inequality gives ||x + t y|| >= |t| ||y|| - ||x|| >
||x||, which already exceeds the value at 0.  Golden-section search on a
certified bracket therefore needs no assumptions beyond convexity.
"""

import math
from dataclasses import dataclass

import numpy as np

from .norms import as_vector

__all__ = [
    "MinResult",
    "golden_section_min",
    "dist_to_line",
    "line_distances",
    "line_distances_from",
    "min_b_functional",
    "min_b_values",
    "sup_b_ratio",
]

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0
_INVPHI2 = (3.0 - math.sqrt(5.0)) / 2.0


@dataclass(frozen=True)
class MinResult:
    """Minimum of a convex objective plus the interval attaining it within tol."""

    value: float
    lambda_lo: float
    lambda_hi: float
    tol: float


def golden_section_min(f, lo, hi, tol):
    """Vectorized golden-section minimization of row-wise convex objectives.

    f maps a (m,) array of line parameters to a (m,) array of values; row i
    is searched on [lo[i], hi[i]].  Returns (lam, val) for the best point
    seen per row (endpoints included), so val never underestimates the
    objective anywhere.
    """
    a = np.array(lo, dtype=float, copy=True)
    b = np.array(hi, dtype=float, copy=True)
    h = b - a
    hmax = float(h.max(initial=0.0))
    if hmax <= tol:
        mid = 0.5 * (a + b)
        return mid, f(mid)
    n = int(math.ceil(math.log(tol / hmax) / math.log(_INVPHI)))
    n = min(max(n, 1), 200)

    c = a + _INVPHI2 * h
    d = a + _INVPHI * h
    yc = f(c)
    yd = f(d)
    best_x = a.copy()
    best_y = f(a)
    for x_new, y_new in ((b, f(b)), (c, yc), (d, yd)):
        better = y_new < best_y
        best_x = np.where(better, x_new, best_x)
        best_y = np.minimum(best_y, y_new)

    for _ in range(n):
        left = yc < yd
        b = np.where(left, d, b)
        a = np.where(left, a, c)
        h = h * _INVPHI
        c_fresh = a + _INVPHI2 * h
        d_fresh = a + _INVPHI * h
        x_new = np.where(left, c_fresh, d_fresh)
        y_new = f(x_new)
        new_c = np.where(left, c_fresh, d)
        new_yc = np.where(left, y_new, yd)
        new_d = np.where(left, c, d_fresh)
        new_yd = np.where(left, yc, y_new)
        c, d, yc, yd = new_c, new_d, new_yc, new_yd
        better = y_new < best_y
        best_x = np.where(better, x_new, best_x)
        best_y = np.minimum(best_y, y_new)
    return best_x, best_y


def _line_min_values(spec, points, dirs, tol):
    """Row-wise inf over t of ||points[i] + t * dirs[i]||."""
    npts = spec.values(points)
    ndirs = spec.values(dirs)
    if np.any(ndirs == 0.0):
        raise ValueError("line direction must be nonzero")
    radius = 2.0 * npts / ndirs

    def f(lam):
        return spec.values(points + lam[:, None] * dirs)

    _, vals = golden_section_min(f, -radius, radius, tol)
    return np.minimum(vals, npts)


def dist_to_line(spec, x, y, tol=None):
    """Distance inf_t ||x + t y|| together with the near-minimal interval.

    The interval [lambda_lo, lambda_hi] collects every t whose objective is
    within tol of the reported value; flat minimizer intervals (common for
    polygonal norms) are recovered by outward bisection at level value + tol.
    """
    x = as_vector(x, spec.dim)
    y = as_vector(y, spec.dim)
    if tol is None:
        tol = spec.minimization_tol
    ny = spec.value(y)
    if ny == 0.0:
        raise ValueError("y must be nonzero")
    nx = spec.value(x)
    if nx == 0.0:
        return MinResult(0.0, 0.0, 0.0, tol)
    radius = 2.0 * nx / ny

    def f(lam):
        return spec.values(x[None, :] + lam[:, None] * y[None, :])

    lam_b, val_b = golden_section_min(f, np.array([-radius]), np.array([radius]), tol)
    lam0 = float(lam_b[0])
    val0 = float(val_b[0])
    at_zero = float(f(np.zeros(1))[0])
    if at_zero < val0:
        lam0, val0 = 0.0, at_zero

    def scalar(t):
        return float(f(np.array([t]))[0])

    level = val0 + tol
    lo = -radius if scalar(-radius) <= level else _edge(scalar, lam0, -radius, level, tol)
    hi = radius if scalar(radius) <= level else _edge(scalar, lam0, radius, level, tol)
    return MinResult(val0, lo, hi, tol)


def _edge(f, inside, outside, level, tol):
    # bisect the crossing of f(t) <= level; valid since the sublevel set is an interval
    while abs(outside - inside) > tol:
        mid = 0.5 * (inside + outside)
        if f(mid) <= level:
            inside = mid
        else:
            outside = mid
    return inside


def line_distances(spec, x, directions, tol=None):
    """dist_to_line values of one x against many directions (rows), values only."""
    x = as_vector(x, spec.dim)
    dirs = np.asarray(directions, dtype=float)
    if tol is None:
        tol = spec.minimization_tol
    pts = np.broadcast_to(x, dirs.shape).copy()
    return _line_min_values(spec, pts, dirs, tol)


def line_distances_from(spec, points, direction, tol=None):
    """dist_to_line values of many x (rows) against one direction, values only."""
    y = as_vector(direction, spec.dim)
    pts = np.asarray(points, dtype=float)
    if tol is None:
        tol = spec.minimization_tol
    dirs = np.broadcast_to(y, pts.shape).copy()
    return _line_min_values(spec, pts, dirs, tol)


def min_b_functional(spec, x, y, eps):
    """inf over t of ||x + t y||^2 - ||x||^2 + 2 eps ||x|| ||y|| |t|.

    Nonnegative infimum characterizes the quadratic form of approximate
    orthogonality at level eps.
    """
    vals = min_b_values(spec, x, np.asarray(y, dtype=float)[None, :], eps)
    return float(vals[0])


def min_b_values(spec, x, directions, eps):
    """Row-wise version of min_b_functional for many directions."""
    if not (0.0 <= eps < 1.0):
        raise ValueError(f"eps must lie in [0, 1), got {eps}")
    x = as_vector(x, spec.dim)
    dirs = np.asarray(directions, dtype=float)
    ndirs = spec.values(dirs)
    if np.any(ndirs == 0.0):
        raise ValueError("y must be nonzero")
    nx = spec.value(x)
    radius = 2.0 * nx / ndirs

    def f(lam):
        nv = spec.values(x[None, :] + lam[:, None] * dirs)
        return nv * nv - nx * nx + 2.0 * eps * nx * ndirs * np.abs(lam)

    _, vals = golden_section_min(f, -radius, radius, spec.minimization_tol)
    # t = 0 always gives exactly 0, so the reported inf never exceeds it
    return np.minimum(vals, f(np.zeros(dirs.shape[0])))


def sup_b_ratio(spec, x, y):
    """sup over t != 0 of (||x||^2 - ||x + t y||^2) / (2 ||x|| |t| ||y||), clipped to [0, 1].

    The sup is the least eps for which the quadratic approximate-orthogonality
    inequality holds.  Evaluated on a sign-split grid over the certified
    bracket, refined by local golden search around the best grid points, and
    combined with the two analytic t -> 0 limits, which equal tau_minus/||y||
    and -tau_plus/||y|| for the one-sided norm derivatives tau.  Collinear
    pairs return 1 (the degenerate case).
    """
    from .norms import one_sided_derivative

    x = as_vector(x, spec.dim)
    y = as_vector(y, spec.dim)
    nx = spec.value(x)
    ny = spec.value(y)
    if nx == 0.0 or ny == 0.0:
        raise ValueError("sup_b_ratio requires nonzero x and y")
    xx = float(x @ x)
    yy = float(y @ y)
    xy = float(x @ y)
    if xx * yy - xy * xy <= 1e-14 * xx * yy:
        return 1.0

    radius = 2.0 * nx / ny
    # by convexity the ratio never exceeds the t -> 0 limits, which are added
    # analytically below, so a generous exclusion band around 0 only removes
    # cancellation noise, never the supremum
    guard = 1e-6 * radius

    def ratio(lam):
        nv = spec.values(x[None, :] + lam[:, None] * y[None, :])
        with np.errstate(divide="ignore", invalid="ignore"):
            r = (nx * nx - nv * nv) / (2.0 * nx * ny * np.abs(lam))
        return np.where(np.abs(lam) < guard, -np.inf, r)

    lam = np.linspace(-radius, radius, 2048)
    rs = ratio(lam)
    best = float(rs.max())

    top = np.argsort(rs)[-3:]
    lo = lam[np.maximum(top - 1, 0)]
    hi = lam[np.minimum(top + 1, len(lam) - 1)]
    _, neg = golden_section_min(lambda t: -ratio(t), lo, hi, 1e-10 * max(radius, 1.0))
    best = max(best, float(-neg.min()))

    tau_plus = one_sided_derivative(spec, x, y, "plus")
    tau_minus = one_sided_derivative(spec, x, y, "minus")
    best = max(best, -tau_plus / ny, tau_minus / ny, 0.0)
    return min(best, 1.0)
