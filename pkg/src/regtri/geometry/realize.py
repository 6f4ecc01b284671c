"""Geometric realisations of regular triangulations and their metric audit.

Hyperbolic discs (``d >= 7``) are laid out on the hyperboloid: the centre at
the apex, its first neighbour at distance ``s`` on the x-axis, the rest of
its link by rotation through ``2 pi / d``.  Every further vertex is the
reflection of a known vertex across the geodesic through the edge it shares
with it, processed in breadth-first face order.  ``d = 6`` discs use exact
integer lattice coordinates; spherical references use the vertices of the
Platonic solids.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field

import numpy as np

from ..classify import ReferenceSurface, classify_closed, reference
from ..complex import SimplicialSurface
from ..equivalence import equivalent
from ..errors import NumericalDrift, UnsupportedInput
from ..generator.layered import LayeredDisk
from .models import (
    DISTANCE,
    EUCLIDEAN,
    HYPERBOLOID,
    SPHERICAL,
    ModelPoint,
    edge_length,
    hyperbolic_distance,
    hyperboloid_point,
    mink,
    reflect_point,
    rotation_about,
    hyperboloid_normalize,
    vertex_angle,
)

DRIFT_TOL = 1e-8


@dataclass
class RealizedSurface:
    surface: SimplicialSurface
    model: str
    coords: np.ndarray
    edge_length: float
    index: dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        if not self.index:
            self.index = {v: i for i, v in enumerate(self.surface.vertices)}

    def position(self, v) -> np.ndarray:
        return self.coords[self.index[v]]

    def point(self, v) -> ModelPoint:
        return ModelPoint(self.model, tuple(float(x) for x in self.position(v)))

    def distance(self, u, v) -> float:
        return float(DISTANCE[self.model](self.position(u), self.position(v)))

    def perturbed(self, v, delta) -> "RealizedSurface":
        coords = self.coords.copy()
        coords[self.index[v]] += np.asarray(delta, dtype=float)
        return RealizedSurface(self.surface, self.model, coords, self.edge_length, dict(self.index))


# ----------------------------------------------------------- Platonic models

_PHI = (1.0 + math.sqrt(5.0)) / 2.0


def _platonic_points(kind: str) -> np.ndarray:
    if kind == "tetrahedron":
        pts = np.array([[1, 1, 1], [1, -1, -1], [-1, 1, -1], [-1, -1, 1]], dtype=float)
    elif kind == "octahedron":
        pts = np.array([[1, 0, 0], [-1, 0, 0], [0, 1, 0], [0, -1, 0], [0, 0, 1], [0, 0, -1]],
                       dtype=float)
    elif kind == "icosahedron":
        rows = []
        for s1 in (1, -1):
            for s2 in (1, -1):
                rows += [[0, s1, s2 * _PHI], [s1, s2 * _PHI, 0], [s2 * _PHI, 0, s1]]
        pts = np.array(rows, dtype=float)
    else:
        raise UnsupportedInput(f"no spherical model for {kind!r}")
    return pts / np.linalg.norm(pts, axis=1)[:, None]


def platonic_model(kind: str) -> tuple[SimplicialSurface, np.ndarray]:
    """Coordinates of a Platonic solid and its faces (mutually nearest triples)."""
    pts = _platonic_points(kind)
    n = len(pts)
    gram = pts @ pts.T
    near = gram[~np.eye(n, dtype=bool)].max()
    adj = np.isclose(gram, near) & ~np.eye(n, dtype=bool)
    faces = [(a, b, c) for a in range(n) for b in range(a + 1, n) for c in range(b + 1, n)
             if adj[a, b] and adj[b, c] and adj[a, c]]
    return SimplicialSurface(faces), pts


def _realize_spherical(surface: SimplicialSurface, kind: str) -> RealizedSurface:
    model_surface, pts = platonic_model(kind)
    eq = equivalent(surface, model_surface)
    if not eq:
        raise UnsupportedInput(f"surface is not the boundary of the {kind}")
    coords = np.array([pts[eq.witness[v]] for v in surface.vertices])
    a, b = surface.edges[0]
    s = float(np.arccos(np.clip(pts[eq.witness[a]] @ pts[eq.witness[b]], -1.0, 1.0)))
    return RealizedSurface(surface, SPHERICAL, coords, s)


# -------------------------------------------------------------- planar discs


def _bfs_place(surface: SimplicialSurface, center, seeds, reflect):
    """Place every vertex reachable from the centre by reflecting across edges."""
    pos = {center: seeds[center]}
    ring = surface.link(center).vertices
    for v in ring:
        pos[v] = seeds[v]
    queue = deque(surface.faces_at(center))
    queued = set(queue)
    while queue:
        face = queue.popleft()
        a, b, c = face
        for u, v, w in ((a, b, c), (b, c, a), (a, c, b)):
            for x in surface.edge_apexes(u, v):
                if x == w:
                    continue
                if x not in pos:
                    pos[x] = reflect(pos[w], pos[u], pos[v])
                nxt = tuple(sorted((u, v, x)))
                if nxt not in queued:
                    queued.add(nxt)
                    queue.append(nxt)
    return pos


_HEX_RING = [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)]


def _realize_flat(disk: LayeredDisk) -> RealizedSurface:
    s = disk.surface
    ring = s.link(disk.center).vertices
    seeds = {disk.center: (0, 0)}
    seeds.update({v: _HEX_RING[i] for i, v in enumerate(ring)})
    lattice = _bfs_place(s, disk.center, seeds,
                         lambda w, u, v: (u[0] + v[0] - w[0], u[1] + v[1] - w[1]))
    basis = np.array([[1.0, 0.0], [0.5, math.sqrt(3.0) / 2.0]])
    coords = np.array([np.asarray(lattice[v], dtype=float) @ basis for v in s.vertices])
    return RealizedSurface(s, EUCLIDEAN, coords, 1.0)


def _realize_hyperbolic(disk: LayeredDisk) -> RealizedSurface:
    s = disk.surface
    d = disk.d
    step = edge_length(d)
    ring = s.link(disk.center).vertices
    # placement runs in extended precision; chained reflections far from the
    # centre otherwise lose about a digit per layer
    ext = np.longdouble
    seeds = {disk.center: np.array([0.0, 0.0, 1.0], dtype=ext)}
    for i, v in enumerate(ring):
        t = ext(2) * np.pi * i / d
        seeds[v] = np.array([np.sinh(ext(step)) * np.cos(t), np.sinh(ext(step)) * np.sin(t),
                             np.cosh(ext(step))], dtype=ext)
    pos = _bfs_place(s, disk.center, seeds, lambda w, u, v: reflect_point(w, u, v))
    coords = np.array([pos[v] for v in s.vertices]).astype(float)
    # relative to z^2, the size of the terms that cancel in the form
    drift = float((np.abs(mink(coords, coords) + 1.0) / coords[:, 2] ** 2).max())
    if drift > DRIFT_TOL:
        raise NumericalDrift(f"hyperboloid residual {drift:.3g} after placement")
    return RealizedSurface(s, HYPERBOLOID, coords, step)


def realize(obj) -> RealizedSurface:
    """Realise a layered disc (``d >= 6``) or a spherical reference/closed surface."""
    if isinstance(obj, LayeredDisk):
        if obj.d == 6:
            return _realize_flat(obj)
        if obj.d >= 7:
            return _realize_hyperbolic(obj)
        raise UnsupportedInput("layered discs have d >= 6")
    if isinstance(obj, ReferenceSurface):
        if obj.kind == "rp2_6":
            raise UnsupportedInput("the projective plane has no realisation here")
        return _realize_spherical(obj.surface, obj.kind)
    if isinstance(obj, SimplicialSurface) and obj.is_closed:
        cls = classify_closed(obj)
        if cls.case.startswith("sphere"):
            return _realize_spherical(obj, cls.reference)
        raise UnsupportedInput(f"no realisation for closed surfaces of case {cls.case}")
    raise UnsupportedInput(f"cannot realise {type(obj).__name__}")


# ------------------------------------------------------------ verification


@dataclass
class MetricReport:
    model: str
    target: float
    tol: float
    max_edge_deviation: float
    worst_edge: tuple[int, int] | None
    max_angle_deviation: float
    worst_vertex: int | None
    min_vertex_distance: float
    min_nonadjacent_distance: float
    closest_nonadjacent: tuple[int, int] | None
    max_reflection_mismatch: float

    @property
    def passed(self) -> bool:
        return (self.max_edge_deviation <= self.tol
                and self.max_angle_deviation <= self.tol
                and self.min_nonadjacent_distance >= self.target - self.tol)

    def text(self) -> str:
        lines = [
            f"model={self.model} edge_length={self.target:.12g} tol={self.tol:g} "
            + ("PASS" if self.passed else "FAIL"),
            f"max_edge_deviation={self.max_edge_deviation:.3e} worst_edge={self.worst_edge}",
            f"max_angle_sum_deviation={self.max_angle_deviation:.3e} worst_vertex={self.worst_vertex}",
            f"min_vertex_distance={self.min_vertex_distance:.12g}",
            f"min_nonadjacent_distance={self.min_nonadjacent_distance:.12g} "
            f"pair={self.closest_nonadjacent}",
            f"max_reflection_mismatch={self.max_reflection_mismatch:.3e}",
        ]
        return "\n".join(lines)

    def tsv(self) -> str:
        rows = [("model", self.model), ("edge_length", repr(self.target)), ("tol", repr(self.tol)),
                ("max_edge_deviation", repr(self.max_edge_deviation)),
                ("max_angle_sum_deviation", repr(self.max_angle_deviation)),
                ("min_vertex_distance", repr(self.min_vertex_distance)),
                ("min_nonadjacent_distance", repr(self.min_nonadjacent_distance)),
                ("max_reflection_mismatch", repr(self.max_reflection_mismatch)),
                ("status", "pass" if self.passed else "fail")]
        return "\n".join(f"{k}\t{v}" for k, v in rows)


def _pairwise_min(r: RealizedSurface, chunk: int = 1024):
    """Smallest distance overall and between non-adjacent vertices."""
    x = r.coords
    n = len(x)
    verts = r.surface.vertices
    best_all = math.inf
    best_non = math.inf
    best_pair = None
    for start in range(0, n, chunk):
        block = x[start:start + chunk]
        if r.model == HYPERBOLOID:
            dist = hyperbolic_distance(block[:, None, :], x[None, :, :])
        else:
            dist = DISTANCE[r.model](block[:, None, :], x[None, :, :])
        rows = np.arange(start, start + len(block))
        dist[rows - start, rows] = np.inf
        best_all = min(best_all, float(dist.min()))
        for i in range(len(block)):
            v = verts[start + i]
            for w in r.surface.neighbors(v):
                dist[i, r.index[w]] = np.inf
        if np.isfinite(dist).any():
            flat = int(np.argmin(dist))
            i, j = divmod(flat, n)
            if dist[i, j] < best_non:
                best_non = float(dist[i, j])
                best_pair = (verts[start + i], verts[j])
    return best_all, best_non, best_pair


def reflection_mismatch(r: RealizedSurface) -> float:
    """Largest distance between a face apex and the mirror image of the other apex.

    Zero for an exact realisation: the position of every vertex is then the
    same whichever adjacent face it is reached from.
    """
    worst = 0.0
    dist = DISTANCE[r.model]
    for a, b in r.surface.edges:
        apexes = r.surface.edge_apexes(a, b)
        if len(apexes) != 2:
            continue
        w, x = apexes
        # extended precision so the measurement does not add its own rounding
        pa, pb, pw, px = (r.position(v).astype(np.longdouble) for v in (a, b, w, x))
        if r.model == EUCLIDEAN:
            image = pa + pb - pw
        else:
            image = reflect_point(pw, pa, pb, r.model)
        worst = max(worst, float(dist(image, px)))
    return worst


def verify_metric(r: RealizedSurface, tol: float = 1e-9) -> MetricReport:
    s = r.surface
    edges = s.edges
    ia = np.array([r.index[a] for a, _ in edges])
    ib = np.array([r.index[b] for _, b in edges])
    lengths = DISTANCE[r.model](r.coords[ia], r.coords[ib])
    dev = np.abs(lengths - r.edge_length)
    k = int(np.argmax(dev))

    worst_angle = 0.0
    worst_vertex = None
    for v in s.interior_vertices:
        total = 0.0
        for face in s.faces_at(v):
            q, w = (x for x in face if x != v)
            total += vertex_angle(r.position(v), r.position(q), r.position(w), r.model)
        err = abs(total - 2.0 * math.pi)
        if err > worst_angle or worst_vertex is None:
            worst_angle, worst_vertex = err, v

    min_all, min_non, pair = _pairwise_min(r)
    return MetricReport(
        model=r.model,
        target=r.edge_length,
        tol=tol,
        max_edge_deviation=float(dev[k]),
        worst_edge=edges[k],
        max_angle_deviation=worst_angle,
        worst_vertex=worst_vertex,
        min_vertex_distance=min_all,
        min_nonadjacent_distance=min_non,
        closest_nonadjacent=pair,
        max_reflection_mismatch=reflection_mismatch(r),
    )


# ------------------------------------------------- orbit (geometric) disc


def orbit_disk(d: int, k: int) -> SimplicialSurface:
    """The radius-``k`` disc cut from the geometric {3,d} tiling.

    Built without the combinatorial extension rule: starting from one vertex
    star, the star of every vertex at graph distance ``< k`` is completed by
    rotating a known neighbour about it in steps of ``2 pi / d``, and
    coincident points are merged.  ``d = 6`` uses the flat plane, otherwise
    the hyperboloid.
    """
    if d < 6:
        raise UnsupportedInput("orbit discs need d >= 6")
    model = EUCLIDEAN if d == 6 else HYPERBOLOID
    if model == EUCLIDEAN:
        step = 1.0
        pts = [np.zeros(2)] + [np.array([math.cos(math.pi * i / 3), math.sin(math.pi * i / 3)])
                               for i in range(6)]
    else:
        step = edge_length(d)
        pts = [np.array([0.0, 0.0, 1.0])] + [hyperboloid_point(step, 2 * math.pi * i / d)
                                             for i in range(d)]
    dist = DISTANCE[model]
    depth = [0] + [1] * d
    # a known face (v, a, b) for every vertex, with b following a in the turning order
    seed_pair = {i: (0, i % d + 1) for i in range(1, d + 1)}
    seed_pair[0] = (1, 2)
    faces = set()
    store = np.array(pts)

    def lookup(x):
        nonlocal store
        if len(store) != len(pts):
            store = np.array(pts)
        gaps = dist(store, x[None, :])
        j = int(np.argmin(gaps))
        return j if gaps[j] < step / 2 else None

    angle = 2.0 * math.pi / d
    v = 0
    while v < len(pts):
        if depth[v] >= k:
            v += 1
            continue
        q0, q1 = seed_pair[v]
        turn = None
        for sign in (1.0, -1.0):
            rot = rotation_about(pts[v], sign * angle, model)
            if dist(rot.apply(pts[q0]), pts[q1]) < step / 2:
                turn = rot
                break
        if turn is None:
            raise NumericalDrift(f"seed face of orbit vertex {v} is not a tiling face")
        link = [q0, q1]
        power = turn @ turn
        for _ in range(d - 2):
            x = power.apply(pts[q0])
            if model == HYPERBOLOID:
                x = hyperboloid_normalize(x)
            j = lookup(x)
            if j is None:
                j = len(pts)
                pts.append(x)
                depth.append(depth[v] + 1)
                seed_pair[j] = (link[-1], v)
            link.append(j)
            power = turn @ power
        for i in range(d):
            faces.add(tuple(sorted((v, link[i], link[(i + 1) % d]))))
        v += 1
    return SimplicialSurface(faces)
