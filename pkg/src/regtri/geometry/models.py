"""Constant-curvature models, their isometries, and the (2,3,d) triangle group.

Hyperbolic points live on the upper sheet of ``x^2 + y^2 - z^2 = -1``;
isometries are 3x3 matrices preserving the Minkowski form ``J = diag(1,1,-1)``.
Spherical points are unit vectors in R^3.  Euclidean points are planar and
their motions are 3x3 homogeneous affine matrices.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import DegreeTooSmall

SPHERICAL = "spherical"
EUCLIDEAN = "euclidean"
HYPERBOLOID = "hyperboloid"
MODELS = (SPHERICAL, EUCLIDEAN, HYPERBOLOID)

J = np.diag([1.0, 1.0, -1.0])


def mink(p, q):
    """Minkowski product ``x1 x2 + y1 y2 - z1 z2`` (broadcasts over leading axes)."""
    p = np.asarray(p)
    q = np.asarray(q)
    return p[..., 0] * q[..., 0] + p[..., 1] * q[..., 1] - p[..., 2] * q[..., 2]


def hyperboloid_normalize(p):
    """Radially rescale a timelike vector back onto the upper sheet."""
    p = np.asarray(p)
    if p.dtype != np.longdouble:
        p = p.astype(float)
    return p / np.sqrt(-mink(p, p))[..., None] * np.sign(p[..., 2])[..., None]


def hyperbolic_distance(p, q):
    # 2 asinh(|p - q| / 2) keeps full relative precision for nearby points
    diff = np.asarray(p) - np.asarray(q)
    if diff.dtype != np.longdouble:
        diff = diff.astype(float)
    return 2.0 * np.arcsinh(np.sqrt(np.maximum(0.0, mink(diff, diff))) / 2.0)


def spherical_distance(p, q):
    chord = np.linalg.norm(np.asarray(p, dtype=float) - np.asarray(q, dtype=float), axis=-1)
    return 2.0 * np.arcsin(np.clip(chord / 2.0, 0.0, 1.0))


def euclidean_distance(p, q):
    return np.linalg.norm(np.asarray(p) - np.asarray(q), axis=-1)


DISTANCE = {
    HYPERBOLOID: hyperbolic_distance,
    SPHERICAL: spherical_distance,
    EUCLIDEAN: euclidean_distance,
}


@dataclass(frozen=True)
class ModelPoint:
    model: str
    coords: tuple[float, ...]

    def __post_init__(self):
        if self.model not in MODELS:
            raise ValueError(f"unknown model {self.model!r}")
        c = np.asarray(self.coords, dtype=float)
        if self.model == EUCLIDEAN:
            if c.shape != (2,):
                raise ValueError("euclidean points have 2 coordinates")
        elif c.shape != (3,):
            raise ValueError(f"{self.model} points have 3 coordinates")
        elif self.model == SPHERICAL and abs(c @ c - 1.0) > 1e-12:
            raise ValueError("spherical point is not on the unit sphere")
        elif self.model == HYPERBOLOID:
            scale = max(1.0, c[2] * c[2])
            if c[2] <= 0 or abs(mink(c, c) + 1.0) > 1e-12 * scale:
                raise ValueError("point is not on the upper hyperboloid sheet")

    @classmethod
    def hyperboloid(cls, coords) -> "ModelPoint":
        return cls(HYPERBOLOID, tuple(float(x) for x in hyperboloid_normalize(coords)))

    @property
    def array(self) -> np.ndarray:
        return np.asarray(self.coords, dtype=float)


def to_poincare(p) -> tuple[float, float]:
    """Poincare-disk image ``(x, y) / (1 + z)`` of a hyperboloid point."""
    c = p.array if isinstance(p, ModelPoint) else np.asarray(p, dtype=float)
    if isinstance(p, ModelPoint) and p.model != HYPERBOLOID:
        raise ValueError("to_poincare expects a hyperboloid point")
    return float(c[0] / (1.0 + c[2])), float(c[1] / (1.0 + c[2]))


def poincare_array(coords: np.ndarray) -> np.ndarray:
    coords = np.asarray(coords, dtype=float)
    return coords[:, :2] / (1.0 + coords[:, 2:3])


class Motion:
    """An isometry of one of the three models, stored as a 3x3 matrix."""

    __slots__ = ("matrix", "model")

    def __init__(self, matrix, model: str = HYPERBOLOID):
        self.matrix = np.asarray(matrix, dtype=float)
        self.model = model

    def __matmul__(self, other):
        if isinstance(other, Motion):
            if other.model != self.model:
                raise ValueError("cannot compose motions of different models")
            return Motion(self.matrix @ other.matrix, self.model)
        return self.apply(other)

    def __pow__(self, n: int) -> "Motion":
        return Motion(np.linalg.matrix_power(self.matrix, n), self.model)

    def apply(self, points):
        pts = np.asarray(points, dtype=float)
        if self.model == EUCLIDEAN:
            homog = np.concatenate([pts, np.ones(pts.shape[:-1] + (1,))], axis=-1)
            return (homog @ self.matrix.T)[..., :2]
        return pts @ self.matrix.T

    def form_residual(self) -> float:
        """``max |M^T F M - F|`` for the model's invariant form ``F``."""
        m = self.matrix
        if self.model == HYPERBOLOID:
            return float(np.abs(m.T @ J @ m - J).max())
        if self.model == SPHERICAL:
            return float(np.abs(m.T @ m - np.eye(3)).max())
        a = m[:2, :2]
        lin = float(np.abs(a.T @ a - np.eye(2)).max())
        return max(lin, float(np.abs(m[2] - [0.0, 0.0, 1.0]).max()))

    def identity_residual(self) -> float:
        return float(np.abs(self.matrix - np.eye(3)).max())

    def __repr__(self):
        return f"Motion({self.model}, {self.matrix.tolist()})"


def reflection(p, q, model: str = HYPERBOLOID) -> Motion:
    """Reflection across the geodesic through ``p`` and ``q``."""
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    if model == HYPERBOLOID:
        n = J @ np.cross(p, q)
        return Motion(np.eye(3) - 2.0 * np.outer(n, J @ n) / mink(n, n), model)
    if model == SPHERICAL:
        n = np.cross(p, q)
        return Motion(np.eye(3) - 2.0 * np.outer(n, n) / (n @ n), model)
    u = (q - p) / np.linalg.norm(q - p)
    a = 2.0 * np.outer(u, u) - np.eye(2)
    m = np.eye(3)
    m[:2, :2] = a
    m[:2, 2] = p - a @ p
    return Motion(m, model)


def reflect_point(x, p, q, model: str = HYPERBOLOID) -> np.ndarray:
    """Image of ``x`` under :func:`reflection` ``(p, q)``, renormalised onto the model."""
    x = np.asarray(x)
    if x.dtype != np.longdouble:
        x = x.astype(float)
    if model == HYPERBOLOID:
        n = J @ np.cross(p, q)
        y = x - 2.0 * mink(x, n) / mink(n, n) * n
        return hyperboloid_normalize(y)
    if model == SPHERICAL:
        n = np.cross(p, q)
        y = x - 2.0 * (x @ n) / (n @ n) * n
        return y / np.linalg.norm(y)
    return reflection(p, q, model).apply(x)


def rotation_about(center, theta: float, model: str = HYPERBOLOID) -> Motion:
    """Rotation by ``theta`` about ``center`` (counter-clockwise seen from above)."""
    c, s_ = np.cos(theta), np.sin(theta)
    if model == EUCLIDEAN:
        v = np.asarray(center, dtype=float)
        a = np.array([[c, -s_], [s_, c]])
        m = np.eye(3)
        m[:2, :2] = a
        m[:2, 2] = v - a @ v
        return Motion(m, model)
    if model != HYPERBOLOID:
        raise ValueError(f"rotation_about is not implemented for {model}")
    v = hyperboloid_normalize(center)
    r = np.arcsinh(np.hypot(v[0], v[1]))  # arccosh(z) loses small radii
    phi = np.arctan2(v[1], v[0])
    boost = _rot_z(phi) @ np.array([[np.cosh(r), 0.0, np.sinh(r)],
                                    [0.0, 1.0, 0.0],
                                    [np.sinh(r), 0.0, np.cosh(r)]]) @ _rot_z(-phi)
    inverse = J @ boost.T @ J
    return Motion(boost @ _rot_z(theta) @ inverse, model)


def _rot_z(t):
    c, s = np.cos(t), np.sin(t)
    return np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])


def edge_length(d: int) -> float:
    """Side of the equilateral hyperbolic triangle with all angles ``2 pi / d``.

    ``cosh s = cos(a) / (1 - cos(a))`` with ``a = 2 pi / d``; only defined for
    ``d >= 7`` (at ``d = 6`` the triangle is flat and ``s`` collapses to 0).
    """
    if d <= 6:
        raise DegreeTooSmall(f"hyperbolic edge length needs d >= 7, got {d}")
    c = np.cos(2.0 * np.pi / d)
    return float(np.arccosh(c / (1.0 - c)))


def hyperboloid_point(distance: float, angle: float = 0.0) -> np.ndarray:
    """Point at hyperbolic ``distance`` from the apex in direction ``angle``."""
    sh = np.sinh(distance)
    return np.array([sh * np.cos(angle), sh * np.sin(angle), np.cosh(distance)])


@dataclass(frozen=True)
class BaseTriangle:
    """Right triangle with angles pi/d (at ``p``), pi/3 (at ``q``), pi/2 (at ``r``).

    ``p`` is a tiling vertex at the apex, ``r`` the midpoint of the tiling
    edge along the positive x-axis and ``q`` the centre of a tiling face.
    """

    d: int
    p: np.ndarray
    q: np.ndarray
    r: np.ndarray


def base_triangle(d: int) -> BaseTriangle:
    if d <= 6:
        raise DegreeTooSmall(f"the (2,3,d) triangle is hyperbolic only for d >= 7, got {d}")
    a = np.pi / d
    b = np.pi / 3
    # right-angled hyperbolic trigonometry
    pq = np.arccosh(1.0 / (np.tan(a) * np.tan(b)))
    pr = np.arccosh(np.cos(b) / np.sin(a))
    p = np.array([0.0, 0.0, 1.0])
    r = hyperboloid_point(pr, 0.0)
    q = hyperboloid_point(pq, a)
    return BaseTriangle(d, p, q, r)


def triangle_group(d: int) -> tuple[Motion, Motion, Motion]:
    """Reflections in the sides ``qr``, ``pq`` and ``pr`` of the base triangle.

    Consecutive sides meet at angles pi/3, pi/d and pi/2, so the products
    ``R1 R2``, ``R2 R3`` and ``R1 R3`` have orders 3, ``d`` and 2.
    """
    t = base_triangle(d)
    return reflection(t.q, t.r), reflection(t.p, t.q), reflection(t.p, t.r)


def vertex_angle(p, q, r, model: str) -> float:
    """Angle at ``p`` of the geodesic triangle ``pqr``."""
    p, q, r = (np.asarray(x, dtype=float) for x in (p, q, r))
    if model == HYPERBOLOID:
        tq = q + mink(q, p) * p
        tr = r + mink(r, p) * p
        c = mink(tq, tr) / np.sqrt(mink(tq, tq) * mink(tr, tr))
    elif model == SPHERICAL:
        tq = q - (q @ p) * p
        tr = r - (r @ p) * p
        c = (tq @ tr) / np.sqrt((tq @ tq) * (tr @ tr))
    else:
        tq = q - p
        tr = r - p
        c = (tq @ tr) / np.sqrt((tq @ tq) * (tr @ tr))
    return float(np.arccos(np.clip(c, -1.0, 1.0)))
