"""Cone decompositions: construction, membership, extremal sets, inversion."""

import math

import numpy as np
import pytest

from bjcones import (
    ConePair,
    NormalCone2D,
    NoSolutionError,
    cone_membership,
    cones_equal,
    dist_to_line,
    f_cone,
    find_bj_direction,
    find_x_for_cone,
    g_cone,
    in_x_minus,
    in_x_plus,
    is_approx_orth_d,
    is_bj_orthogonal,
    normal_cone,
    s_set,
    sphere_point,
)
from bjcones import LpNorm, PolyhedralNorm
from conftest import HEX_VERTICES, L1, L15, L2, L3, LINF, ang, random_unit

HEXN = PolyhedralNorm(HEX_VERTICES)
ALL_NORMS = [L1, L15, L2, L3, LINF, HEXN]
SMOOTH_NORMS = [L15, L2, L3]


def line_gap(u, v):
    """Angular distance between the lines spanned by u and v."""
    a = ang(u, v)
    return min(a, math.pi - a)


def test_normal_cone_normalizes_in_ambient_norm():
    cone = normal_cone(L1, [2, 2], [-1, 3])
    assert np.allclose(cone.v1, [0.5, 0.5], atol=1e-12)
    assert np.allclose(cone.v2, [-0.25, 0.75], atol=1e-12)
    assert L1.value(cone.v1) == pytest.approx(1.0)
    assert L1.value(cone.v2) == pytest.approx(1.0)


def test_normal_cone_rejects_opposite_vectors():
    with pytest.raises(ValueError):
        normal_cone(L2, [1, 0], [-2, 0])
    with pytest.raises(ValueError):
        normal_cone(LpNorm(2, 3), [1, 0, 0], [0, 1, 0])


def test_cone_membership_quadrant_anchors():
    cone = normal_cone(L2, [1, 0], [0, 1])
    assert cone_membership(cone, [2, 3])
    assert not cone_membership(cone, [-1, 1])
    assert cone_membership(cone, [0, 0])
    assert cone_membership(cone, [1e-12, 5])


def test_cone_membership_wide_cone_anchor():
    cone = normal_cone(L2, [0.6, 0.8], [-0.6, 0.8])
    assert cone_membership(cone, [0, 1])
    assert not cone_membership(cone, [1, 0])
    assert not cone_membership(cone, [0, -1])


def test_cone_membership_half_line():
    cone = normal_cone(L2, [0, 1], [0, 1])
    assert np.allclose(cone.v1, cone.v2)
    assert cone_membership(cone, [0, 2])
    assert not cone_membership(cone, [0, -2])
    assert not cone_membership(cone, [0.1, 1])
    assert cone_membership(cone, [0, 0])


def test_cone_pair_contains_is_symmetric():
    rng = np.random.default_rng(30)
    pair = ConePair(normal_cone(L2, [1, 0.2], [-0.3, 1]))
    for _ in range(40):
        v = rng.normal(size=2)
        assert pair.contains(v) == pair.contains(-v)


def test_cones_equal_identity_reflection_swap():
    v1 = np.array([0.6, 0.8])
    v2 = np.array([-0.6, 0.8])
    a = ConePair(NormalCone2D(v1, v2))
    assert cones_equal(a, a)
    assert cones_equal(a, ConePair(NormalCone2D(-v1, -v2)))
    assert cones_equal(a, ConePair(NormalCone2D(v2, v1)))
    assert cones_equal(a, NormalCone2D(-v2, -v1))


def test_cones_equal_rejects_angular_gap():
    a = NormalCone2D(np.array([0.6, 0.8]), np.array([-0.6, 0.8]))
    b = NormalCone2D(np.array([0.6, 0.8]), np.array([-0.7, math.sqrt(1 - 0.49)]))
    assert not cones_equal(a, b, tol=1e-6)


def test_cones_equal_rejects_single_sign_flip():
    # flipping one boundary vector describes the complementary pair of cones
    v1 = np.array([0.6, 0.8])
    v2 = np.array([-0.6, 0.8])
    assert not cones_equal(NormalCone2D(v1, v2), NormalCone2D(-v1, v2))


def test_find_bj_direction_euclidean():
    th = math.radians(40)
    x = np.array([math.cos(th), math.sin(th)])
    y = find_bj_direction(L2, x)
    assert line_gap(y, [-math.sin(th), math.cos(th)]) <= 1e-6
    assert np.linalg.norm(y) == pytest.approx(1.0, abs=1e-9)


def test_find_bj_direction_linf():
    y = find_bj_direction(LINF, [1, 0])
    assert line_gap(y, [0, 1]) <= 1e-6
    y = find_bj_direction(LINF, [1, 1])
    assert is_bj_orthogonal(LINF, [1, 1], y)


def test_find_bj_direction_always_orthogonal():
    rng = np.random.default_rng(31)
    for spec in ALL_NORMS:
        for _ in range(4):
            x = random_unit(spec, rng)
            y = find_bj_direction(spec, x)
            assert spec.value(y) == pytest.approx(1.0, abs=1e-9)
            assert is_bj_orthogonal(spec, x, y)


def test_f_cone_euclidean_anchor():
    res = f_cone(L2, [1, 0], 0.6)
    expected = normal_cone(L2, [0.6, 0.8], [-0.6, 0.8])
    assert cones_equal(res.pair, expected, tol=1e-6)
    assert res.t1 == pytest.approx(4.0 / 7.0, abs=1e-6)
    assert res.t2 == pytest.approx(4.0 / 7.0, abs=1e-6)
    assert line_gap(res.witness_y, [0, 1]) <= 1e-6
    assert 0.0 < res.t1 < 1.0 and 0.0 < res.t2 < 1.0


def test_f_cone_smooth_eps_zero_degenerates():
    rng = np.random.default_rng(32)
    for spec in SMOOTH_NORMS:
        x = random_unit(spec, rng)
        res = f_cone(spec, x, 0.0)
        assert ang(res.pair.cone.v1, res.pair.cone.v2) <= 1e-7
        assert ang(res.pair.cone.v1, res.witness_y) <= 1e-7
        assert res.t1 >= 1.0 - 1e-6 and res.t2 >= 1.0 - 1e-6
        assert is_bj_orthogonal(spec, x, res.pair.cone.v1)


def test_f_cone_l1_eps_zero_anchor():
    res = f_cone(L1, [1, 0], 0.0)
    expected = normal_cone(L1, [0.5, 0.5], [-0.5, 0.5])
    assert cones_equal(res.pair, expected, tol=1e-6)
    assert res.t1 == pytest.approx(0.5, abs=1e-6)


def test_f_cone_linf_corner_eps_zero():
    res = f_cone(LINF, [1, 1], 0.0)
    expected = normal_cone(LINF, [0, 1], [-1, 0])
    assert cones_equal(res.pair, expected, tol=1e-6)


def test_f_cone_rejects_bad_inputs():
    with pytest.raises(ValueError):
        f_cone(L2, [1, 0], 1.0)
    with pytest.raises(ValueError):
        f_cone(L2, [1, 0], -0.2)
    with pytest.raises(ValueError):
        f_cone(L2, [2, 0], 0.3)
    with pytest.raises(ValueError):
        f_cone(LpNorm(2, 3), [1, 0, 0], 0.3)


def test_f_cone_sign_split():
    """For eps > 0 one boundary vector lies in x+, the other in x-."""
    rng = np.random.default_rng(33)
    for spec in ALL_NORMS:
        x = random_unit(spec, rng)
        for eps in (0.2, 0.5, 0.8):
            res = f_cone(spec, x, eps)
            v1, v2 = res.pair.cone.v1, res.pair.cone.v2
            plus = [in_x_plus(spec, x, v) for v in (v1, v2)]
            minus = [in_x_minus(spec, x, v) for v in (v1, v2)]
            assert sum(plus) == 1, (spec, eps)
            assert minus[plus.index(False)]


def test_f_cone_matches_predicate_scan():
    rng = np.random.default_rng(34)
    for spec in (L1, HEXN):
        x = random_unit(spec, rng)
        eps = 0.5
        pair = f_cone(spec, x, eps).pair
        bounds = [math.atan2(v[1], v[0])
                  for v in (pair.cone.v1, pair.cone.v2, -pair.cone.v1, -pair.cone.v2)]
        for a in np.linspace(0.0, 2.0 * math.pi, 720, endpoint=False):
            if min(abs(math.remainder(a - b, 2.0 * math.pi)) for b in bounds) <= 1e-4:
                continue
            p = sphere_point(spec, a)
            assert pair.contains(p) == is_approx_orth_d(spec, x, p, eps)


def test_s_set_euclidean_anchors():
    pts = s_set(L2, [1, 0], 0.6)
    assert len(pts) == 4
    targets = [np.array([sx * 0.6, sy * 0.8]) for sx in (1, -1) for sy in (1, -1)]
    for p in pts:
        assert min(float(np.abs(p - t).max()) for t in targets) <= 1e-6

    pts = s_set(L2, [1, 0], 0.0)
    assert len(pts) == 2
    assert line_gap(pts[0], [0, 1]) <= 1e-6
    assert np.allclose(pts[0], -pts[1])


def test_s_set_linf_corner_arc_endpoints():
    pts = s_set(LINF, [1, 1], 0.0)
    assert len(pts) == 4
    for p in pts:
        gap = min(line_gap(p, [0, 1]), line_gap(p, [1, 0]))
        assert gap <= 1e-6
        assert dist_to_line(LINF, [1, 1], p).value >= 1.0 - 1e-6
    # the whole arc between the endpoints is orthogonal; its midpoint strictly so
    assert is_bj_orthogonal(LINF, [1, 1], [1, -1])
    assert not is_bj_orthogonal(LINF, [1, 1], [1, 1e-3])


def test_s_set_certified_distance():
    rng = np.random.default_rng(35)
    for spec in ALL_NORMS:
        x = random_unit(spec, rng)
        for eps in (0.35, 0.75):
            pts = s_set(spec, x, eps)
            assert len(pts) == 4
            bound = math.sqrt(1.0 - eps * eps)
            for p in pts:
                assert spec.value(p) == pytest.approx(1.0, abs=1e-9)
                assert dist_to_line(spec, x, p).value == pytest.approx(bound, abs=1e-6)


def test_s_set_interior_is_strictly_above_bound():
    rng = np.random.default_rng(36)
    for spec in (L2, LINF, HEXN):
        x = random_unit(spec, rng)
        for eps in (0.3, 0.7):
            res = f_cone(spec, x, eps)
            v1, v2 = res.pair.cone.v1, res.pair.cone.v2
            bound = math.sqrt(1.0 - eps * eps)
            for s in np.linspace(0.1, 0.9, 9):
                z = spec.unit((1.0 - s) * v1 + s * v2)
                if min(ang(z, v1), ang(z, v2)) < 1e-3:
                    continue
                assert dist_to_line(spec, x, z).value > bound + 1e-9


def test_g_cone_euclidean_matches_f_cone():
    gp = g_cone(L2, [1, 0], 0.6)
    fp = f_cone(L2, [1, 0], 0.6).pair
    assert cones_equal(gp, fp, tol=1e-6)


def test_g_cone_eps_zero_half_line():
    for spec, x in ((L2, [1, 0]), (L3, [0, 1])):
        pair = g_cone(spec, x, 0.0)
        assert np.allclose(pair.cone.v1, pair.cone.v2)
        assert is_bj_orthogonal(spec, x, pair.cone.v1)


def test_g_cone_linf_smooth_point_anchor():
    # x = (1, 0.3) sits inside an edge of the sup-norm sphere, so the
    # hypothesis is met even though the space is not smooth; the member arc
    # around (0, 1) spans exactly the unit vectors (w, 1) with |w| <= eps
    pair = g_cone(LINF, [1, 0.3], 0.2)
    expected = normal_cone(LINF, [0.2, 1], [-0.2, 1])
    assert cones_equal(pair, expected, tol=1e-6)
    assert pair.contains([0.1, 1])
    assert not pair.contains([0.3, 1])


def test_g_cone_rejects_corner_and_bad_eps():
    with pytest.raises(ValueError):
        g_cone(L1, [1, 0], 0.3)
    with pytest.raises(ValueError):
        g_cone(LINF, [1, 1], 0.2)
    with pytest.raises(ValueError):
        g_cone(L2, [1, 0], 1.0)
    with pytest.raises(ValueError):
        g_cone(L2, [3, 0], 0.2)


def test_find_x_euclidean_anchor():
    x, eps = find_x_for_cone(L2, normal_cone(L2, [0.6, 0.8], [-0.6, 0.8]))
    assert eps == pytest.approx(0.6, abs=1e-6)
    assert line_gap(x, [1, 0]) <= 1e-6
    assert L2.value(x) == pytest.approx(1.0, abs=1e-9)


def test_find_x_half_line():
    x, eps = find_x_for_cone(L2, normal_cone(L2, [0, 1], [0, 1]))
    assert eps == 0.0
    assert line_gap(x, [1, 0]) <= 1e-6


def test_find_x_accepts_cone_pair_wrapper():
    pair = ConePair(normal_cone(L2, [0.6, 0.8], [-0.6, 0.8]))
    x, eps = find_x_for_cone(L2, pair)
    assert eps == pytest.approx(0.6, abs=1e-6)


def test_find_x_refuses_non_smooth_spaces():
    cone = normal_cone(LINF, [-0.5, 1], [-1, 1])
    with pytest.raises(NoSolutionError) as exc:
        find_x_for_cone(LINF, cone)
    assert "smooth" in str(exc.value)
    with pytest.raises(NoSolutionError):
        find_x_for_cone(HEXN, normal_cone(HEXN, [1, 0], [0, 1]))


def test_find_x_round_trip_l3():
    rng = np.random.default_rng(37)
    x = random_unit(L3, rng)
    res = f_cone(L3, x, 0.45)
    x2, eps2 = find_x_for_cone(L3, res.pair)
    assert eps2 == pytest.approx(0.45, abs=1e-5)
    assert line_gap(x2, x) <= 1e-5
    assert cones_equal(f_cone(L3, x2, eps2).pair, res.pair, tol=1e-5)


def test_find_x_rejects_invalid_cone():
    with pytest.raises(ValueError):
        find_x_for_cone(L2, NormalCone2D(np.array([1.0, 0.0]), np.array([-1.0, 0.0])))
