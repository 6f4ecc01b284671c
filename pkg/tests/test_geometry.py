import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.optimize import brentq

from regtri.classify import reference
from regtri.equivalence import canonical_code
from regtri.errors import DegreeTooSmall, UnsupportedInput
from regtri.geometry.models import (
    EUCLIDEAN,
    HYPERBOLOID,
    SPHERICAL,
    J,
    ModelPoint,
    Motion,
    base_triangle,
    edge_length,
    hyperbolic_distance,
    hyperboloid_point,
    mink,
    reflection,
    rotation_about,
    spherical_distance,
    to_poincare,
    triangle_group,
    vertex_angle,
)
from regtri.geometry.realize import (
    orbit_disk,
    platonic_model,
    realize,
    reflection_mismatch,
    verify_metric,
)

from conftest import disk


def law_of_cosines_side(d):
    """Side s of the equilateral triangle with angles a = 2 pi / d, solved numerically
    from cos a = -cos^2 a + sin^2 a cosh s."""
    a = 2 * math.pi / d
    return brentq(lambda s: -math.cos(a) ** 2 + math.sin(a) ** 2 * math.cosh(s) - math.cos(a),
                  1e-9, 20.0, xtol=1e-15)


class TestEdgeLength:
    @pytest.mark.parametrize("d", range(7, 31))
    def test_matches_oracle(self, d):
        assert edge_length(d) == pytest.approx(law_of_cosines_side(d), abs=1e-12)

    def test_examples(self):
        # 1.090549..., quoted to four places as 1.0906
        assert edge_length(7) == pytest.approx(1.0906, abs=1e-4)
        assert edge_length(12) == pytest.approx(2.5533, abs=1e-4)

    @pytest.mark.parametrize("d", [3, 5, 6])
    def test_too_small(self, d):
        with pytest.raises(DegreeTooSmall):
            edge_length(d)


class TestPoints:
    def test_poincare(self):
        assert to_poincare(ModelPoint(HYPERBOLOID, (0.0, 0.0, 1.0))) == (0.0, 0.0)
        p = ModelPoint.hyperboloid(hyperboloid_point(2.0))
        x, y = to_poincare(p)
        assert x == pytest.approx(math.tanh(1.0), abs=1e-14)
        assert x == pytest.approx(0.76159, abs=5e-6)
        assert y == pytest.approx(0.0, abs=1e-15)

    @settings(max_examples=100, deadline=None)
    @given(t=st.floats(0, 15), phi=st.floats(-4, 4))
    def test_poincare_radius(self, t, phi):
        x, y = to_poincare(hyperboloid_point(t, phi))
        assert math.hypot(x, y) == pytest.approx(math.tanh(t / 2), abs=1e-12)
        assert math.hypot(x, y) < 1.0 or t > 18

    def test_validation(self):
        with pytest.raises(ValueError):
            ModelPoint(HYPERBOLOID, (1.0, 0.0, 1.0))
        with pytest.raises(ValueError):
            ModelPoint(SPHERICAL, (1.0, 1.0, 0.0))
        with pytest.raises(ValueError):
            ModelPoint(EUCLIDEAN, (1.0, 1.0, 0.0))
        with pytest.raises(ValueError):
            ModelPoint("elliptic", (1.0, 0.0))
        with pytest.raises(ValueError):
            to_poincare(ModelPoint(SPHERICAL, (0.0, 0.0, 1.0)))

    @settings(max_examples=100, deadline=None)
    @given(a=st.floats(0, 6), b=st.floats(0, 6), t1=st.floats(0, 7), t2=st.floats(0, 7))
    def test_distance_against_arccosh(self, a, b, t1, t2):
        p, q = hyperboloid_point(t1, a), hyperboloid_point(t2, b)
        with mpmath.workdps(50):
            def lift(v):
                v = [mpmath.mpf(float(x)) for x in v]
                return [v[0], v[1], mpmath.sqrt(1 + v[0] ** 2 + v[1] ** 2)]

            P, Q = lift(p), lift(q)
            inner = P[2] * Q[2] - P[0] * Q[0] - P[1] * Q[1]
            ref = float(mpmath.acosh(max(inner, 1)))
        assert hyperbolic_distance(p, q) == pytest.approx(ref, abs=1e-9, rel=1e-9)

    def test_spherical_distance(self):
        assert spherical_distance([1.0, 0, 0], [0, 1.0, 0]) == pytest.approx(math.pi / 2)
        assert spherical_distance([1.0, 0, 0], [-1.0, 0, 0]) == pytest.approx(math.pi)


class TestMotions:
    @pytest.mark.parametrize("d", [7, 8, 12])
    def test_triangle_group_relations(self, d):
        r1, r2, r3 = triangle_group(d)
        for m in (r1, r2, r3):
            assert m.form_residual() <= 1e-12
            assert (m @ m).identity_residual() <= 1e-12
        assert ((r1 @ r2) ** 3).identity_residual() <= 1e-9
        assert ((r2 @ r3) ** d).identity_residual() <= 1e-9
        assert ((r1 @ r3) ** 2).identity_residual() <= 1e-9
        # and no smaller power of the rotation about the vertex vanishes
        assert ((r2 @ r3) ** (d - 1)).identity_residual() > 1e-3

    @pytest.mark.parametrize("d", [7, 9, 12])
    def test_base_triangle_angles(self, d):
        t = base_triangle(d)
        assert vertex_angle(t.p, t.q, t.r, HYPERBOLOID) == pytest.approx(math.pi / d, abs=1e-12)
        assert vertex_angle(t.q, t.p, t.r, HYPERBOLOID) == pytest.approx(math.pi / 3, abs=1e-12)
        assert vertex_angle(t.r, t.p, t.q, HYPERBOLOID) == pytest.approx(math.pi / 2, abs=1e-12)
        # pr is half a tiling edge
        assert 2 * hyperbolic_distance(t.p, t.r) == pytest.approx(edge_length(d), abs=1e-12)

    def test_reflection_fixes_mirror(self):
        p, q = hyperboloid_point(0.7, 0.3), hyperboloid_point(1.1, 2.0)
        m = reflection(p, q)
        assert np.allclose(m @ p, p) and np.allclose(m @ q, q)
        assert np.abs(m.matrix.T @ J @ m.matrix - J).max() < 1e-12

    @settings(max_examples=50, deadline=None)
    @given(t=st.floats(0, 4), phi=st.floats(-3, 3), theta=st.floats(-3, 3))
    def test_rotation_about(self, t, phi, theta):
        c = hyperboloid_point(t, phi)
        m = rotation_about(c, theta)
        assert m.form_residual() <= 1e-9 * max(1.0, c[2] ** 2)
        assert np.allclose(m @ c, c, atol=1e-9 * c[2])
        x = hyperboloid_point(0.5, 1.0)
        assert hyperbolic_distance(m @ x, c) == pytest.approx(hyperbolic_distance(x, c), abs=1e-7)

    def test_euclidean_motion(self):
        m = rotation_about([1.0, 2.0], math.pi / 2, EUCLIDEAN)
        assert np.allclose(m @ np.array([2.0, 2.0]), [1.0, 3.0])
        assert m.form_residual() < 1e-15
        with pytest.raises(ValueError):
            m @ Motion(np.eye(3), HYPERBOLOID)


class TestRealize:
    def test_hyperbolic_disc(self):
        r = realize(disk(7, 3))
        rep = verify_metric(r, 1e-9)
        assert rep.passed, rep.text()
        assert rep.target == pytest.approx(law_of_cosines_side(7), abs=1e-12)
        assert r.position(disk(7, 3).center).tolist() == [0.0, 0.0, 1.0]

    def test_perturbation_detected(self):
        x = disk(7, 3)
        r = realize(x)
        v = x.layers[2][0]
        p = r.position(v).copy()
        p[0] += 1e-3
        from regtri.geometry.models import hyperboloid_normalize
        bad = r.perturbed(v, hyperboloid_normalize(p) - r.position(v))
        rep = verify_metric(bad, 1e-9)
        assert not rep.passed
        assert v in rep.worst_edge

    def test_flat(self):
        r = realize(disk(6, 2))
        rep = verify_metric(r, 1e-12)
        assert rep.passed, rep.text()
        lengths = [r.distance(a, b) for a, b in r.surface.edges]
        assert max(abs(x - 1.0) for x in lengths) < 1e-15
        assert verify_metric(realize(disk(6, 3)), 1e-12).passed

    def test_octahedron(self):
        r = realize(reference("octahedron"))
        chords = [np.linalg.norm(r.position(a) - r.position(b)) for a, b in r.surface.edges]
        assert len(chords) == 12
        assert np.allclose(chords, math.sqrt(2), atol=1e-15)
        assert verify_metric(r).passed

    @pytest.mark.parametrize("kind", ["tetrahedron", "icosahedron"])
    def test_platonic(self, kind):
        r = realize(reference(kind))
        assert verify_metric(r, 1e-12).passed
        assert np.allclose(np.linalg.norm(r.coords, axis=1), 1.0)

    def test_platonic_models_match_references(self):
        for kind in ("tetrahedron", "octahedron", "icosahedron"):
            s, _ = platonic_model(kind)
            assert canonical_code(s) == canonical_code(reference(kind).surface)

    def test_unsupported(self):
        with pytest.raises(UnsupportedInput):
            realize(reference("rp2_6"))
        from regtri.classify import torus_7
        with pytest.raises(UnsupportedInput):
            realize(torus_7())
        with pytest.raises(UnsupportedInput):
            realize("not a surface")

    def test_poincare_images(self):
        r = realize(disk(7, 4))
        from regtri.geometry.models import poincare_array
        xy = poincare_array(r.coords)
        assert (np.hypot(xy[:, 0], xy[:, 1]) < 1).all()
        diff = xy[:, None, :] - xy[None, :, :]
        sep = np.hypot(diff[..., 0], diff[..., 1]) + np.eye(len(xy))
        assert sep.min() > 0

    @pytest.mark.parametrize("d, k", [(7, 4), (7, 6), (8, 4), (12, 3)])
    def test_path_independence(self, d, k):
        assert reflection_mismatch(realize(disk(d, k))) <= 1e-9

    def test_float64_limit_far_out(self):
        # z ~ 1.3e4 at the rim: stored coordinates only carry ~1e-8 in distance
        rep = verify_metric(realize(disk(12, 4)), 1e-7)
        assert rep.passed, rep.text()


class TestOrbit:
    @pytest.mark.parametrize("d, k", [(6, 4), (7, 4), (8, 4), (9, 3), (12, 3)])
    def test_orbit_equals_generated(self, d, k):
        assert canonical_code(orbit_disk(d, k)) == canonical_code(disk(d, k).surface)

    def test_small_degree(self):
        with pytest.raises(UnsupportedInput):
            orbit_disk(5, 2)
