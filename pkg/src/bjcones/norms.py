"""Norms on R^n: lp norms and symmetric polygonal gauges, plus directional derivatives.

A norm object evaluates single vectors or batches of row vectors, and exposes
just enough structure (analytic gradients where available, smoothness hints)
for the orthogonality and cone routines built on top of it.
"""

import json
import math

import numpy as np

__all__ = [
    "Norm",
    "LpNorm",
    "PolyhedralNorm",
    "as_vector",
    "is_zero_vector",
    "load_norm_spec",
    "norm_from_dict",
    "sphere_point",
    "one_sided_derivative",
    "is_smooth_point",
    "is_smooth_space",
]


def as_vector(v, dim=None):
    """Coerce v to a finite 1-D float array, optionally checking its length."""
    arr = np.asarray(v, dtype=float)
    if arr.ndim == 0:
        raise ValueError("expected a vector, got a scalar")
    if arr.ndim != 1 or arr.size == 0:
        raise ValueError(f"expected a 1-D vector, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("vector entries must be finite")
    if dim is not None and arr.size != dim:
        raise ValueError(f"dimension mismatch: expected {dim}, got {arr.size}")
    return arr


def is_zero_vector(v):
    return not np.any(np.asarray(v, dtype=float))


class Norm:
    """Base class for a norm on R^dim."""

    dim = None

    def values(self, points):
        """Norm of each row of a (m, dim) array, returned as a (m,) array."""
        raise NotImplementedError

    def value(self, v):
        """Norm of a single vector."""
        v = as_vector(v, self.dim)
        return float(self.values(v[None, :])[0])

    def unit(self, v):
        """v scaled to norm one."""
        v = as_vector(v, self.dim)
        n = self.value(v)
        if n == 0.0:
            raise ValueError("cannot normalize the zero vector")
        return v / n

    def gradient(self, x):
        """Gradient of the norm at x, or None when no analytic form is used."""
        return None

    def known_smooth(self):
        """True/False when smoothness of the whole space is known, else None."""
        return None

    @property
    def minimization_tol(self):
        """Default bracket tolerance for 1-D minimizations under this norm."""
        return 1e-9

    def _check_points(self, points):
        pts = np.asarray(points, dtype=float)
        if pts.ndim != 2 or pts.shape[1] != self.dim:
            raise ValueError(
                f"expected points of shape (m, {self.dim}), got {pts.shape}"
            )
        return pts


class LpNorm(Norm):
    """The lp norm on R^dim for p in [1, inf]."""

    def __init__(self, p, dim):
        if isinstance(p, str):
            raise ValueError("p must be a number or math.inf; use norm_from_dict for JSON input")
        p = float(p)
        if not (p >= 1.0):
            raise ValueError(f"p must satisfy p >= 1, got {p}")
        dim = int(dim)
        if dim < 1:
            raise ValueError(f"dim must be a positive integer, got {dim}")
        self.p = p
        self.dim = dim

    def __repr__(self):
        return f"LpNorm(p={self.p}, dim={self.dim})"

    def values(self, points):
        pts = self._check_points(points)
        a = np.abs(pts)
        if math.isinf(self.p):
            return a.max(axis=1)
        if self.p == 1.0:
            return a.sum(axis=1)
        if self.p == 2.0:
            return np.sqrt((a * a).sum(axis=1))
        # scale by the row max so large p does not overflow
        m = a.max(axis=1)
        safe = np.where(m > 0.0, m, 1.0)
        return m * ((a / safe[:, None]) ** self.p).sum(axis=1) ** (1.0 / self.p)

    def gradient(self, x):
        """Analytic norm gradient, available for 1 < p < inf only."""
        if not (1.0 < self.p < math.inf):
            return None
        x = as_vector(x, self.dim)
        m = np.abs(x).max()
        if m == 0.0:
            raise ValueError("norm gradient is undefined at the zero vector")
        xs = x / m
        w = np.sign(xs) * np.abs(xs) ** (self.p - 1.0)
        denom = (np.abs(xs) ** self.p).sum() ** ((self.p - 1.0) / self.p)
        return w / denom

    def known_smooth(self):
        return 1.0 < self.p < math.inf

    @property
    def minimization_tol(self):
        return 1e-10 if 1.0 < self.p < math.inf else 1e-9


class PolyhedralNorm(Norm):
    """Minkowski gauge of a symmetric convex polygon with the origin inside.

    Only dim = 2 is supported.  Vertices may be given in any order; they are
    sorted by angle and validated for symmetry and strict convexity.
    """

    dim = 2

    def __init__(self, vertices):
        verts = np.asarray(vertices, dtype=float)
        if verts.ndim != 2 or verts.shape[1] != 2:
            raise ValueError(f"vertices must be a (k, 2) array, got shape {verts.shape}")
        if not np.all(np.isfinite(verts)):
            raise ValueError("vertex coordinates must be finite")
        if verts.shape[0] < 4:
            raise ValueError("a symmetric polygon with nonempty interior needs at least 4 vertices")
        scale = np.abs(verts).max()
        if np.any(np.abs(verts).max(axis=1) <= 1e-12 * scale):
            raise ValueError("the origin cannot be a vertex")

        order = np.argsort(np.arctan2(verts[:, 1], verts[:, 0]))
        verts = verts[order]

        k = verts.shape[0]
        for i in range(k):
            a, b = verts[i], verts[(i + 1) % k]
            if np.abs(a - b).max() <= 1e-12 * scale:
                raise ValueError(f"duplicate vertex {a.tolist()}")

        # symmetry: every vertex must have its reflection in the list
        for v in verts:
            gap = np.abs(verts + v).max(axis=1).min()
            if gap > 1e-9 * scale:
                raise ValueError(
                    f"vertex list is not symmetric about the origin: no match for -{v.tolist()}"
                )

        # strict convexity of the angularly sorted polygon
        for i in range(k):
            a = verts[i]
            b = verts[(i + 1) % k]
            c = verts[(i + 2) % k]
            cross = (b[0] - a[0]) * (c[1] - b[1]) - (b[1] - a[1]) * (c[0] - b[0])
            if cross <= 1e-12 * scale * scale:
                raise ValueError(
                    "vertices are not in strictly convex position "
                    f"(flat or reflex corner near {b.tolist()})"
                )

        # one linear functional per edge, normalized to equal 1 on the edge
        funcs = np.empty((k, 2))
        for i in range(k):
            a = verts[i]
            b = verts[(i + 1) % k]
            funcs[i] = np.linalg.solve(np.array([a, b]), np.ones(2))
        self.vertices = verts
        self._funcs = funcs

    def __repr__(self):
        return f"PolyhedralNorm({self.vertices.tolist()})"

    def values(self, points):
        pts = self._check_points(points)
        return (pts @ self._funcs.T).max(axis=1)

    def known_smooth(self):
        return False


def norm_from_dict(doc):
    """Build a norm from a parsed JSON document.

    Accepted shapes:
      {"type": "lp", "p": <number or "inf">, "dim": <int>}
      {"type": "polyhedral", "vertices": [[x, y], ...]}
    """
    if not isinstance(doc, dict):
        raise ValueError(f"norm spec must be a JSON object, got {type(doc).__name__}")
    kind = doc.get("type")
    if kind == "lp":
        if "p" not in doc or "dim" not in doc:
            raise ValueError('lp norm spec needs keys "p" and "dim"')
        p = doc["p"]
        if isinstance(p, str):
            if p.lower() in ("inf", "infinity"):
                p = math.inf
            else:
                raise ValueError(f'unrecognized p value "{p}" (use a number or "inf")')
        return LpNorm(p, doc["dim"])
    if kind == "polyhedral":
        if "vertices" not in doc:
            raise ValueError('polyhedral norm spec needs key "vertices"')
        return PolyhedralNorm(doc["vertices"])
    raise ValueError(f'unknown norm type {kind!r} (expected "lp" or "polyhedral")')


def load_norm_spec(path):
    """Load a norm from a JSON file."""
    with open(path) as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(f"invalid JSON in norm spec {path}: {exc}") from exc
    return norm_from_dict(doc)


def sphere_point(spec, angle):
    """The unit-sphere point of spec in the direction (cos angle, sin angle)."""
    if spec.dim != 2:
        raise ValueError("sphere_point requires a 2-D norm")
    c = np.array([math.cos(angle), math.sin(angle)])
    return c / spec.value(c)


def one_sided_derivative(spec, x, y, side="plus", tol=1e-9, t_start=1e-2, t_floor=1e-10):
    """One-sided directional derivative of the norm at x in direction y.

    side="plus" gives lim_{t->0+} (||x + t y|| - ||x||)/t, side="minus" the
    limit from the left.  Uses the analytic gradient when the norm has one,
    otherwise monotone halving of the difference quotient: by convexity the
    quotient is nonincreasing as t decreases, so halving stops once two
    consecutive quotients agree to within tol.
    """
    if side not in ("plus", "minus"):
        raise ValueError(f'side must be "plus" or "minus", got {side!r}')
    x = as_vector(x, spec.dim)
    y = as_vector(y, spec.dim)
    if spec.value(x) == 0.0:
        raise ValueError("one-sided derivative requires x != 0")
    if side == "minus":
        return -one_sided_derivative(spec, x, -y, "plus", tol=tol,
                                     t_start=t_start, t_floor=t_floor)
    g = spec.gradient(x)
    if g is not None:
        return float(g @ y)
    sy = float(np.linalg.norm(y))
    if sy == 0.0:
        return 0.0
    # work on a normalized pair so the step sizes are scale free
    xu = x / spec.value(x)
    yu = y / sy
    n0 = spec.value(xu)
    t = t_start
    q_prev = (spec.value(xu + t * yu) - n0) / t
    while t > t_floor:
        t *= 0.5
        q = (spec.value(xu + t * yu) - n0) / t
        if q_prev - q < tol:
            q_prev = q
            break
        q_prev = q
    return sy * q_prev


def is_smooth_point(spec, x, tol=1e-7):
    """Whether the 2-D norm is differentiable at x (gap of one-sided derivatives <= tol)."""
    if spec.dim != 2:
        raise ValueError("is_smooth_point requires a 2-D norm")
    x = as_vector(x, 2)
    if spec.value(x) == 0.0:
        raise ValueError("smoothness is undefined at the zero vector")
    perp = np.array([-x[1], x[0]])
    perp = perp / np.linalg.norm(perp)
    gap = (one_sided_derivative(spec, x, perp, "plus")
           - one_sided_derivative(spec, x, perp, "minus"))
    return gap <= tol


def is_smooth_space(spec, n=512, tol=1e-7):
    """Whether every sphere point of the 2-D norm looks smooth.

    Uses the norm's own knowledge when available, otherwise checks an
    n-point sample of the unit sphere.
    """
    known = spec.known_smooth()
    if known is not None:
        return bool(known)
    if spec.dim != 2:
        raise ValueError("sampling smoothness requires a 2-D norm")
    for k in range(n):
        if not is_smooth_point(spec, sphere_point(spec, 2.0 * math.pi * k / n), tol=tol):
            return False
    return True
