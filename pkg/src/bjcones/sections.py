"""Two-dimensional sections of higher-dimensional normed spaces.

The approximate-orthogonality sets in dimension n decompose as unions of
2-D cones over plane sections through x, so the plane case carries all of
the structure.  A SectionNorm is the norm induced on coefficient pairs
(a, b) -> ||a*x + b*y|| for a fixed basis of the section.
"""

import numpy as np

from .norms import Norm, as_vector
from .orthogonality import is_approx_orth_b, is_approx_orth_d

__all__ = ["SectionNorm", "restrict_norm", "f_membership", "g_membership"]


class SectionNorm(Norm):
    """Norm induced on the plane spanned by two independent ambient vectors."""

    dim = 2

    def __init__(self, ambient, basis_x, basis_y):
        bx = as_vector(basis_x, ambient.dim)
        by = as_vector(basis_y, ambient.dim)
        gram = float(bx @ bx) * float(by @ by) - float(bx @ by) ** 2
        if gram <= 1e-12 * float(bx @ bx) * float(by @ by):
            raise ValueError("section basis vectors must be linearly independent")
        self.ambient = ambient
        self.basis = np.stack([bx, by])

    def __repr__(self):
        return f"SectionNorm(ambient={self.ambient!r})"

    def values(self, points):
        pts = self._check_points(points)
        return self.ambient.values(pts @ self.basis)

    def known_smooth(self):
        # a section of a smooth norm is smooth; otherwise fall back to sampling
        return True if self.ambient.known_smooth() is True else None

    @property
    def minimization_tol(self):
        return self.ambient.minimization_tol


def restrict_norm(spec, x, y):
    """The 2-D norm on span{x, y} in coefficient coordinates."""
    return SectionNorm(spec, x, y)


def f_membership(spec, x, eps, y):
    """Distance-type approximate orthogonality of (x, y) in any dimension."""
    return is_approx_orth_d(spec, x, y, eps)


def g_membership(spec, x, eps, y):
    """Quadratic-type approximate orthogonality of (x, y) in any dimension."""
    return is_approx_orth_b(spec, x, y, eps)
