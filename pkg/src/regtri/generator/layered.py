"""Layer-by-layer construction of the d-regular triangulated disc.

``X_1`` is the star of a centre vertex.  ``X_{k+1}`` is obtained from ``X_k``
by closing the link of every boundary vertex to a ``d``-cycle: each boundary
edge gets one new vertex shared by its two endpoints (label ``A``), and each
boundary vertex ``v`` of degree ``deg`` in ``X_k`` gets ``d - deg - 2`` fresh
vertices of its own (label ``B`` when ``v`` is an ``A`` vertex, else ``C``).
The result is forced: no choice is made anywhere except the numbering.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass, field

from ..complex import SimplicialSurface, boundary_cycle, is_disc
from ..errors import (
    DegreeTooSmall,
    InternalInvariantViolation,
    LayerOutOfRange,
    NotADisc,
    ResourceLimit,
)
from .. import triformat
from .counts import layer_counts_recurrence

DEFAULT_MAX_VERTICES = 5_000_000


def max_vertices_default() -> int:
    env = os.environ.get("REGTRI_MAX_VERTICES")
    return int(env) if env else DEFAULT_MAX_VERTICES


@dataclass(frozen=True)
class LayeredDisk:
    """A triangulated disc ``X_k`` with its vertex layers ``V_0..V_k``.

    ``layers[j]`` lists ``V_j``; the last layer is in boundary-walk order.
    ``labels`` maps every vertex of layer ``>= 2`` to ``"A"``, ``"B"`` or
    ``"C"``.
    """

    surface: SimplicialSurface
    d: int
    layers: tuple[tuple[int, ...], ...]
    labels: dict[int, str] = field(default_factory=dict)

    @property
    def radius(self) -> int:
        return len(self.layers) - 1

    @property
    def center(self) -> int:
        return self.layers[0][0]

    @property
    def boundary(self) -> tuple[int, ...]:
        return self.layers[-1]

    def layer_of(self) -> dict[int, int]:
        return {v: j for j, layer in enumerate(self.layers) for v in layer}

    def layer_sizes(self) -> list[int]:
        return [len(layer) for layer in self.layers]

    def label(self, v) -> str:
        return self.labels.get(v, "R")

    def annotations(self) -> dict[int, tuple[int, str]]:
        return {v: (j, self.label(v)) for j, layer in enumerate(self.layers) for v in layer}

    def to_tri(self) -> str:
        return triformat.dumps(self.surface, self.annotations())

    def with_surface(self, surface: SimplicialSurface) -> "LayeredDisk":
        """Same layer bookkeeping on a different face set (used to inject defects)."""
        return LayeredDisk(surface, self.d, self.layers, dict(self.labels))


def initial_disk(d: int) -> LayeredDisk:
    """``X_1 = st(v_0)``: centre ``0`` and boundary ``1..d``."""
    if d < 6:
        raise DegreeTooSmall(f"layered construction needs d >= 6, got {d}")
    ring = tuple(range(1, d + 1))
    faces = [(0, ring[i], ring[(i + 1) % d]) for i in range(d)]
    return LayeredDisk(SimplicialSurface(faces), d, ((0,), ring), {})


def extend(disk: LayeredDisk, *, reverse: bool = False, rotate: int = 0) -> LayeredDisk:
    """Return ``X_{k+1}`` from ``X_k``.

    ``reverse`` walks the boundary in the opposite direction and ``rotate``
    moves the starting edge; both only change vertex numbering.  New ids are
    handed out along the walk starting with the ``A`` vertex on the first
    boundary edge.
    """
    d = disk.d
    walk = list(disk.boundary)
    if reverse:
        walk.reverse()
    m = len(walk)
    if m:
        r = rotate % m
        walk = walk[r:] + walk[:r]
    surface = disk.surface

    fresh_counts = []
    for v in walk:
        deg = surface.degree(v)
        if deg not in (3, 4):
            raise NotADisc(f"boundary vertex {v} has degree {deg}; expected 3 or 4")
        fresh_counts.append(d - deg - 2)

    next_id = max(surface.vertices) + 1
    a_vertex = [0] * m
    fresh: list[list[int]] = [[] for _ in range(m)]
    new_walk = []

    def take():
        nonlocal next_id
        next_id += 1
        return next_id - 1

    a_vertex[0] = take()
    new_walk.append(a_vertex[0])
    for i in list(range(1, m)) + [0]:
        fresh[i] = [take() for _ in range(fresh_counts[i])]
        new_walk.extend(fresh[i])
        if i != 0:
            a_vertex[i] = take()
            new_walk.append(a_vertex[i])

    labels = dict(disk.labels)
    new_faces = list(surface.faces)
    for i, v in enumerate(walk):
        path = [walk[i - 1], a_vertex[i - 1], *fresh[i], a_vertex[i], walk[(i + 1) % m]]
        # the last triangle (v, a_i, v_{i+1}) is added as the first one of v_{i+1}
        for x, y in zip(path[:-2], path[1:-1]):
            new_faces.append((v, x, y))
        kind = "B" if labels.get(v) == "A" else "C"
        for u in fresh[i]:
            labels[u] = kind
    for u in a_vertex:
        labels[u] = "A"

    out = LayeredDisk(SimplicialSurface(new_faces), d, disk.layers + (tuple(new_walk),), labels)
    _post_audit(out, walk)
    return out


def _post_audit(disk: LayeredDisk, old_walk) -> None:
    s = disk.surface
    bset = set(disk.boundary)
    if set(s.boundary_vertices) != bset:
        raise InternalInvariantViolation("boundary of extended disc differs from the new layer")
    for v in old_walk:
        if s.degree(v) != disk.d or s.is_boundary_vertex(v):
            raise InternalInvariantViolation(f"vertex {v} did not close to degree {disk.d}")
    for v in disk.boundary:
        if s.degree(v) not in (3, 4):
            raise InternalInvariantViolation(f"new boundary vertex {v} has degree {s.degree(v)}")
    if s.euler_characteristic() != 1:
        raise InternalInvariantViolation("extended complex is not a disc")
    walk = disk.boundary
    for i, v in enumerate(walk):
        if not s.is_boundary_edge(v, walk[(i + 1) % len(walk)]):
            raise InternalInvariantViolation("new layer order is not the boundary walk")


def generate(d: int, k: int, *, reverse: bool = False, rotate: int = 0,
             max_vertices: int | None = None) -> LayeredDisk:
    """The layered disc of degree ``d`` and radius ``k``.

    Raises :class:`ResourceLimit` before building anything if the vertex
    count would exceed ``max_vertices`` (default from ``REGTRI_MAX_VERTICES``
    or five million).
    """
    if d < 6:
        raise DegreeTooSmall(f"layered construction needs d >= 6, got {d}")
    if k < 1:
        raise ValueError("radius k must be >= 1")
    cap = max_vertices_default() if max_vertices is None else max_vertices
    total = sum(layer_counts_recurrence(d, k))
    if total > cap:
        raise ResourceLimit(f"generate({d}, {k}) needs {total} vertices; cap is {cap}")
    disk = initial_disk(d)
    for _ in range(k - 1):
        disk = extend(disk, reverse=reverse, rotate=rotate)
    return disk


def partition_sizes(disk: LayeredDisk, j: int) -> tuple[int, int, int]:
    """``(|A_j|, |B_j|, |C_j|)`` for ``2 <= j <= radius``."""
    if not 2 <= j <= disk.radius:
        raise LayerOutOfRange(f"layer {j} outside 2..{disk.radius}")
    counts = {"A": 0, "B": 0, "C": 0}
    for v in disk.layers[j]:
        counts[disk.labels[v]] += 1
    return counts["A"], counts["B"], counts["C"]


# ------------------------------------------------------------ reconstruction


def bfs_layers(surface: SimplicialSurface, center: int) -> list[list[int]]:
    dist = {center: 0}
    queue = deque([center])
    while queue:
        u = queue.popleft()
        for w in sorted(surface.neighbors(u)):
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    layers: list[list[int]] = [[] for _ in range(max(dist.values()) + 1)]
    for v in sorted(dist):
        layers[dist[v]].append(v)
    return layers


def _infer_center(surface: SimplicialSurface) -> int:
    depth = {v: 0 for v in surface.boundary_vertices}
    queue = deque(sorted(depth))
    while queue:
        u = queue.popleft()
        for w in sorted(surface.neighbors(u)):
            if w not in depth:
                depth[w] = depth[u] + 1
                queue.append(w)
    deepest = max(depth.values())
    centers = [v for v, t in depth.items() if t == deepest]
    if len(centers) != 1:
        raise NotADisc(f"no unique centre: {len(centers)} vertices at depth {deepest}")
    return centers[0]


def compute_labels(surface: SimplicialSurface, layers) -> dict[int, str]:
    """Label rule: two previous-layer neighbours -> A; otherwise B if the single
    neighbour is an A vertex, C if not (layer 2 has no A vertices below it)."""
    labels: dict[int, str] = {}
    for j in range(2, len(layers)):
        prev = set(layers[j - 1])
        for v in layers[j]:
            below = [w for w in surface.neighbors(v) if w in prev]
            if len(below) >= 2:
                labels[v] = "A"
            elif below and labels.get(below[0]) == "A":
                labels[v] = "B"
            else:
                labels[v] = "C"
    return labels


def from_surface(surface: SimplicialSurface, annotations=None) -> LayeredDisk:
    """Rebuild a :class:`LayeredDisk` from a bare disc (e.g. a TRI file).

    With ``annotations`` (``{v: (layer, cls)}``) the stored layers and labels
    are used as given, so a verifier can check them; otherwise the centre is
    the unique deepest vertex and layers/labels are recomputed.
    """
    if annotations:
        by_layer: dict[int, list[int]] = {}
        labels = {}
        for v, (j, cls) in annotations.items():
            by_layer.setdefault(j, []).append(v)
            if cls != "R":
                labels[v] = cls
        top = max(by_layer)
        if sorted(by_layer) != list(range(top + 1)) or len(by_layer[0]) != 1:
            raise NotADisc("layer annotations must cover 0..k with a single centre")
        layers = [sorted(by_layer[j]) for j in range(top + 1)]
    else:
        center = _infer_center(surface)
        layers = bfs_layers(surface, center)
        labels = compute_labels(surface, layers)
    if is_disc(surface):
        walk = boundary_cycle(surface)
        if set(walk) == set(layers[-1]):
            layers[-1] = walk
    d = surface.degree(layers[0][0])
    return LayeredDisk(surface, d, tuple(tuple(x) for x in layers), labels)


def from_tri(text: str) -> LayeredDisk:
    doc = triformat.loads(text)
    return from_surface(doc.surface, doc.layers)
