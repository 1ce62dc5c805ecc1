"""Normal-cone decompositions of approximate-orthogonality sets in the plane.

For a unit vector x and eps in [0, 1), the set of directions approximately
orthogonal to x (distance type) is a union K U (-K) of a normal cone and its
reflection.  The boundary rays of K are found constructively: pick any unit y
with x Birkhoff-James orthogonal to y, then slide along the segments from x
to y and from -x to y until the approximate relation first holds.  The
quadratic-type set is handled through its arc structure on the unit sphere
around the orthogonal direction.
"""

import math
from dataclasses import dataclass

import numpy as np

from .minimize import line_distances, line_distances_from
from .norms import (
    as_vector,
    is_smooth_point,
    is_smooth_space,
    one_sided_derivative,
    sphere_point,
)
from .orthogonality import PRED_TOL

__all__ = [
    "NormalCone2D",
    "ConePair",
    "FConeResult",
    "NoSolutionError",
    "normal_cone",
    "cone_membership",
    "cones_equal",
    "find_bj_direction",
    "f_cone",
    "s_set",
    "g_cone",
    "find_x_for_cone",
]


class NoSolutionError(Exception):
    """Raised when no (x, eps) generates the requested cone pair."""


@dataclass(frozen=True)
class NormalCone2D:
    """The cone {a*v1 + b*v2 : a, b >= 0} spanned by two unit boundary vectors."""

    v1: np.ndarray
    v2: np.ndarray


@dataclass(frozen=True)
class ConePair:
    """A cone together with its reflection, K U (-K)."""

    cone: NormalCone2D

    def contains(self, v):
        v = as_vector(v, 2)
        return cone_membership(self.cone, v) or cone_membership(self.cone, -v)


@dataclass(frozen=True)
class FConeResult:
    """Cone pair of the distance-type set, with construction data.

    t1 and t2 are the smallest path parameters at which the sliding segments
    from x and -x toward witness_y first satisfy the approximate relation;
    the boundary vectors are the normalized segment points at t1 and t2.
    """

    pair: ConePair
    t1: float
    t2: float
    witness_y: np.ndarray


def _dist_value(spec, x, y):
    return float(line_distances(spec, x, np.asarray(y, dtype=float)[None, :])[0])


def _dir_angle(u, v):
    """Euclidean angle between the directions of u and v, in [0, pi]."""
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    nu = np.linalg.norm(u)
    nv = np.linalg.norm(v)
    if nu == 0.0 or nv == 0.0:
        raise ValueError("angle of the zero vector is undefined")
    return math.acos(min(1.0, max(-1.0, float(u @ v) / (nu * nv))))


def _wrap(a):
    """Map an angle difference into (-pi, pi]."""
    return math.remainder(a, 2.0 * math.pi)


def normal_cone(spec, v1, v2):
    """Validate and normalize two boundary vectors into a NormalCone2D.

    Opposite boundary vectors are rejected: the span would be a full line,
    which violates the pointedness of a normal cone.
    """
    if spec.dim != 2:
        raise ValueError("normal cones are 2-D objects")
    u1 = spec.unit(as_vector(v1, 2))
    u2 = spec.unit(as_vector(v2, 2))
    if _dir_angle(u1, -u2) <= 1e-12:
        raise ValueError("v1 and -v2 coincide: the cone would contain a full line")
    return NormalCone2D(u1, u2)


def cone_membership(cone, v, tol=1e-9):
    """Whether v = a*v1 + b*v2 with a, b >= -tol.

    Linearly dependent boundary vectors fall back to the half-line test.
    """
    v = as_vector(v, 2)
    v1, v2 = cone.v1, cone.v2
    det = v1[0] * v2[1] - v1[1] * v2[0]
    scale = float(np.linalg.norm(v1) * np.linalg.norm(v2))
    if abs(det) <= 1e-9 * scale:
        if not np.any(v):
            return True
        cross = v1[0] * v[1] - v1[1] * v[0]
        if abs(cross) > 1e-9 * float(np.linalg.norm(v1) * np.linalg.norm(v)):
            return False
        return float(v @ v1) / float(v1 @ v1) >= -tol
    alpha = (v[0] * v2[1] - v[1] * v2[0]) / det
    beta = (v1[0] * v[1] - v1[1] * v[0]) / det
    return alpha >= -tol and beta >= -tol


def cones_equal(a, b, tol=1e-9):
    """Whether two cone pairs coincide: boundary sets {v1, v2} match as
    unordered pairs, up to one global sign flip, each within angle tol."""
    ca = a.cone if isinstance(a, ConePair) else a
    cb = b.cone if isinstance(b, ConePair) else b
    for sigma in (1.0, -1.0):
        for w1, w2 in ((cb.v1, cb.v2), (cb.v2, cb.v1)):
            if (_dir_angle(ca.v1, sigma * w1) <= tol
                    and _dir_angle(ca.v2, sigma * w2) <= tol):
                return True
    return False


def _tau_sign_bisect(g, lo, hi, tol=1e-11):
    """Bisect a sign change of g from g(lo) > 0 to g(hi) <= 0."""
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if g(mid) > 0.0:
            lo = mid
        else:
            hi = mid
    return lo, 0.5 * (lo + hi), hi


def find_bj_direction(spec, x):
    """A unit y with x Birkhoff-James orthogonal to y.

    The right derivative t -> ||x + t d(phi)|| at 0 is positive when d points
    along x and negative when it points along -x, so its sign change over a
    half circle marks an orthogonal direction (where the left derivative is
    automatically <= 0).
    """
    if spec.dim != 2:
        raise ValueError("find_bj_direction requires a 2-D norm")
    x = as_vector(x, 2)
    nx = spec.value(x)
    if nx == 0.0:
        raise ValueError("x must be nonzero")
    xu = x / nx

    def g(phi):
        return one_sided_derivative(spec, xu, np.array([math.cos(phi), math.sin(phi)]), "plus")

    phi_x = math.atan2(xu[1], xu[0])
    lo, mid, hi = _tau_sign_bisect(g, phi_x, phi_x + math.pi)
    best_y, best_d = None, -1.0
    for phi in (mid, lo, hi):
        y = sphere_point(spec, phi)
        d = _dist_value(spec, xu, y)
        if d > best_d:
            best_y, best_d = y, d
    if best_d < 1.0 - PRED_TOL:
        raise RuntimeError(
            f"direction search exhausted its tolerance: best distance {best_d:.12g} "
            f"on bracket [{lo:.12g}, {hi:.12g}]"
        )
    return best_y


def _find_left_orthogonal(spec, v):
    """A unit x with x Birkhoff-James orthogonal to the given v."""
    v = as_vector(v, 2)
    if spec.value(v) == 0.0:
        raise ValueError("v must be nonzero")

    def g(phi):
        return one_sided_derivative(
            spec, np.array([math.cos(phi), math.sin(phi)]), v, "plus")

    phi_v = math.atan2(v[1], v[0])
    lo, mid, hi = _tau_sign_bisect(g, phi_v, phi_v + math.pi)
    best_x, best_d = None, -1.0
    for phi in (mid, lo, hi):
        xc = sphere_point(spec, phi)
        d = _dist_value(spec, xc, v)
        if d > best_d:
            best_x, best_d = xc, d
    if best_d < 1.0 - PRED_TOL:
        raise RuntimeError(
            f"left-orthogonality search exhausted its tolerance: best distance {best_d:.12g}"
        )
    return best_x


def _first_true(pred, tol=1e-9):
    """Smallest t in [0, 1] with pred true, given pred(0) False and pred(1) True.

    The predicates used here are monotone along the sliding path: false
    strictly below the boundary parameter and true from it onward.
    """
    t_false, t_true = 0.0, 1.0
    while t_true - t_false > tol:
        mid = 0.5 * (t_false + t_true)
        if pred(mid):
            t_true = mid
        else:
            t_false = mid
    return t_true


def _checked_unit_x(spec, x):
    x = as_vector(x, 2)
    nx = spec.value(x)
    if abs(nx - 1.0) > 1e-6:
        raise ValueError(f"x must be a unit vector, got norm {nx:.12g}")
    return x / nx


def f_cone(spec, x, eps):
    """Cone pair decomposing the distance-type approximate-orthogonality set of x.

    Requires unit x and eps in [0, 1).  Returns the boundary construction
    data; the cone pair covers exactly the directions y with
    inf_t ||x + t y|| >= sqrt(1 - eps^2).
    """
    if spec.dim != 2:
        raise ValueError("f_cone requires a 2-D norm")
    if not (0.0 <= eps < 1.0):
        raise ValueError(f"eps must lie in [0, 1), got {eps}")
    x = _checked_unit_x(spec, x)
    y = find_bj_direction(spec, x)
    bound = math.sqrt(1.0 - eps * eps)

    if eps == 0.0:
        # The relation degenerates to exact orthogonality, where the distance
        # criterion only touches its threshold tangentially and bisecting on
        # it loses half the working precision.  On each sliding segment exact
        # orthogonality is equivalent to the sign of a single one-sided
        # derivative (the other one cannot bind there), and that sign change
        # is transversal.
        def holds_1(w):
            return one_sided_derivative(spec, x, w, "minus") <= PRED_TOL

        def holds_2(w):
            return one_sided_derivative(spec, x, w, "plus") >= -PRED_TOL
    else:
        def holds_1(w):
            return _dist_value(spec, x, w) >= bound - PRED_TOL

        holds_2 = holds_1

    if not (holds_1(y) and holds_2(y)):
        raise RuntimeError("witness direction failed the approximate relation at t = 1")
    t1 = _first_true(lambda t: holds_1((1.0 - t) * x + t * y))
    t2 = _first_true(lambda t: holds_2(-(1.0 - t) * x + t * y))
    v1 = spec.unit((1.0 - t1) * x + t1 * y)
    v2 = spec.unit(-(1.0 - t2) * x + t2 * y)
    return FConeResult(ConePair(normal_cone(spec, v1, v2)), t1, t2, y)


def s_set(spec, x, eps, cert_tol=1e-6):
    """The extremal directions where inf_t ||x + t y|| equals sqrt(1 - eps^2) exactly.

    For eps > 0 these are the four boundary vectors of the cone pair; for
    eps = 0 they are the endpoints of the Birkhoff-James orthogonality arc
    (a single antipodal pair when the arc degenerates to a point).  Every
    returned vector is certified against the target distance.
    """
    res = f_cone(spec, x, eps)
    v1, v2 = res.pair.cone.v1, res.pair.cone.v2
    if eps == 0.0 and _dir_angle(v1, v2) <= 1e-8:
        pts = [v1, -v1]
    else:
        pts = [v1, v2, -v1, -v2]
    xu = _checked_unit_x(spec, x)
    bound = math.sqrt(1.0 - eps * eps)
    for v in pts:
        d = _dist_value(spec, xu, v)
        if abs(d - bound) > cert_tol:
            raise RuntimeError(
                f"extremal certification failed: distance {d:.12g} vs target {bound:.12g}"
            )
    return pts


def g_cone(spec, x, eps):
    """Cone pair decomposing the quadratic-type approximate-orthogonality set of x.

    Requires a smooth unit x.  The set meets the unit sphere in two antipodal
    closed arcs around the orthogonal direction z: a unit w belongs iff some
    multiple of z lies within eps of w.  Arc endpoints are located by angle
    bisection from z (inside) toward +-x (outside).
    """
    if spec.dim != 2:
        raise ValueError("g_cone requires a 2-D norm")
    if not (0.0 <= eps < 1.0):
        raise ValueError(f"eps must lie in [0, 1), got {eps}")
    x = _checked_unit_x(spec, x)
    if not is_smooth_point(spec, x):
        raise ValueError(
            "g_cone requires a smooth point: the norm is not differentiable at x, "
            "so the orthogonal direction is not unique up to sign"
        )
    z = find_bj_direction(spec, x)
    phi_z = math.atan2(z[1], z[0])
    phi_x = math.atan2(x[1], x[0])

    def member(offset):
        w = sphere_point(spec, phi_z + offset)
        return _dist_value(spec, w, z) <= eps + PRED_TOL

    if not member(0.0):
        raise RuntimeError("orthogonal direction unexpectedly outside its own arc")
    d1 = _wrap(phi_x - phi_z)
    if d1 > 0.0:
        pos_end, neg_end = d1, d1 - math.pi
    else:
        pos_end, neg_end = d1 + math.pi, d1
    if member(pos_end) or member(neg_end):
        raise RuntimeError("x unexpectedly belongs to the arc around its orthogonal direction")
    o_plus = _boundary_offset(member, pos_end)
    o_minus = _boundary_offset(member, neg_end)
    if abs(o_plus) <= 1e-8 and abs(o_minus) <= 1e-8:
        return ConePair(NormalCone2D(z, z))
    v1 = sphere_point(spec, phi_z + o_minus)
    v2 = sphere_point(spec, phi_z + o_plus)
    return ConePair(normal_cone(spec, v1, v2))


def _boundary_offset(pred, end, tol=1e-9):
    """Last offset toward end (either sign) where pred holds, given pred(0)."""
    t_true, t_false = 0.0, end
    while abs(t_false - t_true) > tol:
        mid = 0.5 * (t_true + t_false)
        if pred(mid):
            t_true = mid
        else:
            t_false = mid
    return t_true


def find_x_for_cone(spec, cone):
    """Recover (x, eps) whose distance-type set equals the given cone pair.

    Scans the unit sphere for points equidistant (in the line-distance sense)
    from the two boundary rays, then certifies each candidate by rebuilding
    its cone and comparing.  Raises NoSolutionError when the space is not
    smooth or when no candidate round-trips, which does happen for cones that
    no (x, eps) generates.
    """
    if spec.dim != 2:
        raise ValueError("find_x_for_cone requires a 2-D norm")
    target = cone if isinstance(cone, ConePair) else ConePair(cone)
    v1 = spec.unit(target.cone.v1)
    v2 = spec.unit(target.cone.v2)
    if _dir_angle(v1, -v2) <= 1e-9:
        raise ValueError("v1 and -v2 coincide: not a valid cone pair")
    if not is_smooth_space(spec):
        raise NoSolutionError(
            "the norm is not smooth (sphere sample found a corner); "
            "the cone-to-(x, eps) correspondence is only certified on smooth spaces"
        )

    if _dir_angle(v1, v2) <= 1e-9:
        # half-line: look for x orthogonal to v1 with eps = 0
        x0 = _find_left_orthogonal(spec, v1)
        tried = []
        for cand in (x0, -x0):
            rebuilt = f_cone(spec, cand, 0.0)
            if cones_equal(rebuilt.pair, target, 1e-5):
                return cand, 0.0
            tried.append(cand)
        raise NoSolutionError(
            f"no orthogonal point reproduced the half-line cone (tried {len(tried)} candidates)"
        )

    n = 2048
    angles = np.linspace(0.0, 2.0 * math.pi, n, endpoint=False)
    raw = np.stack([np.cos(angles), np.sin(angles)], axis=1)
    points = raw / spec.values(raw)[:, None]
    h = line_distances_from(spec, points, v1) - line_distances_from(spec, points, v2)

    def h_scalar(phi):
        p = sphere_point(spec, phi)
        return _dist_value(spec, p, v1) - _dist_value(spec, p, v2)

    roots = []
    for k in range(n):
        a, b = h[k], h[(k + 1) % n]
        if a == 0.0:
            roots.append(angles[k])
        elif a * b < 0.0:
            lo, hi = angles[k], angles[k] + 2.0 * math.pi / n
            while hi - lo > 1e-9:
                mid = 0.5 * (lo + hi)
                if h_scalar(mid) * (1.0 if a > 0 else -1.0) > 0.0:
                    lo = mid
                else:
                    hi = mid
            roots.append(0.5 * (lo + hi))

    failures = []
    for phi in roots:
        x0 = sphere_point(spec, phi)
        d = 0.5 * (_dist_value(spec, x0, v1) + _dist_value(spec, x0, v2))
        if d >= 1.0 - PRED_TOL:
            failures.append((phi, None))
            continue
        eps0 = math.sqrt(max(0.0, 1.0 - d * d))
        rebuilt = f_cone(spec, x0, eps0)
        if cones_equal(rebuilt.pair, target, 1e-5):
            return x0, eps0
        failures.append((phi, eps0))
    raise NoSolutionError(
        f"no equidistant sphere point reproduced the cone: "
        f"{len(roots)} candidate angles failed the round-trip check "
        f"({', '.join(f'{phi:.6f}' for phi, _ in failures) or 'none found'})"
    )
