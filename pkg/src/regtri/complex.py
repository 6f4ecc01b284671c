"""Simplicial surfaces: faces, links, stars and Euler counts.

A :class:`SimplicialSurface` is identified by its set of 2-simplices.  The
constructor validates that every edge lies in one or two faces and that the
link of every vertex is a single cycle (interior vertex) or a single simple
path (boundary vertex).  Instances are immutable once built.

Vertex ids are non-negative integers.  They do not have to be contiguous,
which lets stars and induced subcomplexes keep the ids of the surface they
were cut from; :meth:`SimplicialSurface.compact` renumbers densely when a
file format needs it.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    BadLink,
    ClosedSurface,
    DegenerateFace,
    Disconnected,
    DuplicateFace,
    NonManifoldEdge,
    NotADisc,
    UnknownVertex,
)

Face = tuple[int, int, int]
Edge = tuple[int, int]


def _edge(a: int, b: int) -> Edge:
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class FVector:
    f0: int
    f1: int
    f2: int

    @property
    def chi(self) -> int:
        return self.f0 - self.f1 + self.f2

    def __iter__(self):
        return iter((self.f0, self.f1, self.f2))


@dataclass(frozen=True)
class Link:
    """Ordered link of a vertex.

    ``kind`` is ``"cycle"`` for interior vertices and ``"path"`` for boundary
    vertices.  Cycles start at the smallest neighbour and continue towards the
    smaller of its two link-neighbours; paths start at the smaller endpoint.
    """

    kind: str
    vertices: tuple[int, ...]

    @property
    def is_cycle(self) -> bool:
        return self.kind == "cycle"

    def __len__(self):
        return len(self.vertices)


def _order_link(v: int, pairs: list[tuple[int, int]]) -> Link:
    adj: dict[int, list[int]] = {}
    for a, b in pairs:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    for x, nbrs in adj.items():
        if len(nbrs) > 2:
            # an edge v-x in three faces; reported separately before we get here
            raise NonManifoldEdge(f"edge {_edge(v, x)} lies in {len(nbrs)} faces")
    ends = sorted(x for x, nbrs in adj.items() if len(nbrs) == 1)
    if not ends:
        kind = "cycle"
        start = min(adj)
        first = min(adj[start])
    elif len(ends) == 2:
        kind = "path"
        start = ends[0]
        first = adj[start][0]
    else:
        raise BadLink(f"link of vertex {v} is not connected ({len(ends) // 2} paths)")
    order = [start, first]
    while True:
        prev, cur = order[-2], order[-1]
        nxt = [x for x in adj[cur] if x != prev]
        if not nxt or nxt[0] == start:
            break
        order.append(nxt[0])
        if len(order) > len(adj):
            break
    if len(order) != len(adj):
        raise BadLink(f"link of vertex {v} is not connected")
    return Link(kind, tuple(order))


class SimplicialSurface:
    """Triangulated surface, possibly with boundary.

    Parameters
    ----------
    faces : iterable of vertex triples
        The 2-simplices.  Orientation and order are irrelevant.
    """

    __slots__ = ("faces", "_face_set", "_edge_faces", "_nbrs", "_links", "_vertices")

    def __init__(self, faces: Iterable[Sequence[int]]):
        seen: set[Face] = set()
        normalized: list[Face] = []
        for raw in faces:
            tri = tuple(sorted(int(x) for x in raw))
            if len(tri) != 3:
                raise DegenerateFace(f"face {tuple(raw)} is not a triple")
            if tri[0] == tri[1] or tri[1] == tri[2]:
                raise DegenerateFace(f"face {tuple(raw)} repeats a vertex")
            if tri[0] < 0:
                raise DegenerateFace(f"face {tuple(raw)} has a negative vertex id")
            if tri in seen:
                raise DuplicateFace(f"face {tri} listed twice")
            seen.add(tri)
            normalized.append(tri)
        if not normalized:
            raise BadLink("a surface needs at least one face")
        normalized.sort()
        self.faces: tuple[Face, ...] = tuple(normalized)
        self._face_set = frozenset(normalized)

        edge_faces: dict[Edge, list[int]] = {}
        by_vertex: dict[int, list[tuple[int, int]]] = {}
        for a, b, c in normalized:
            for u, v, w in ((a, b, c), (a, c, b), (b, c, a)):
                edge_faces.setdefault((u, v), []).append(w)
            by_vertex.setdefault(a, []).append((b, c))
            by_vertex.setdefault(b, []).append((a, c))
            by_vertex.setdefault(c, []).append((a, b))
        bad = sorted(e for e, opp in edge_faces.items() if len(opp) > 2)
        if bad:
            e = bad[0]
            raise NonManifoldEdge(f"edge {e} lies in {len(edge_faces[e])} faces")
        self._edge_faces = {e: tuple(sorted(o)) for e, o in edge_faces.items()}

        self._links = {v: _order_link(v, pairs) for v, pairs in by_vertex.items()}
        self._nbrs = {v: frozenset(lk.vertices) for v, lk in self._links.items()}
        self._vertices = tuple(sorted(by_vertex))

    # ------------------------------------------------------------------ basics

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    @property
    def vertex_count(self) -> int:
        return len(self._vertices)

    @property
    def edges(self) -> list[Edge]:
        return sorted(self._edge_faces)

    def __contains__(self, v) -> bool:
        return v in self._links

    def __eq__(self, other):
        if not isinstance(other, SimplicialSurface):
            return NotImplemented
        return self._face_set == other._face_set

    def __hash__(self):
        return hash(self._face_set)

    def __repr__(self):
        f = self.f_vector()
        kind = "closed" if self.is_closed else "bounded"
        return f"SimplicialSurface({kind}, f=({f.f0},{f.f1},{f.f2}))"

    def _check(self, v):
        if v not in self._links:
            raise UnknownVertex(f"vertex {v} is not in the surface")

    def has_face(self, a, b, c) -> bool:
        return tuple(sorted((a, b, c))) in self._face_set

    def has_edge(self, a, b) -> bool:
        return _edge(a, b) in self._edge_faces

    def edge_apexes(self, a, b) -> tuple[int, ...]:
        """Third vertices of the one or two faces containing edge ``ab``."""
        return self._edge_faces[_edge(a, b)]

    def neighbors(self, v) -> frozenset[int]:
        self._check(v)
        return self._nbrs[v]

    def degree(self, v) -> int:
        self._check(v)
        return len(self._nbrs[v])

    def link(self, v) -> Link:
        self._check(v)
        return self._links[v]

    def is_boundary_vertex(self, v) -> bool:
        return not self.link(v).is_cycle

    def is_boundary_edge(self, a, b) -> bool:
        return len(self._edge_faces[_edge(a, b)]) == 1

    @property
    def boundary_edges(self) -> list[Edge]:
        return sorted(e for e, opp in self._edge_faces.items() if len(opp) == 1)

    @property
    def boundary_vertices(self) -> list[int]:
        return [v for v in self._vertices if not self._links[v].is_cycle]

    @property
    def interior_vertices(self) -> list[int]:
        return [v for v in self._vertices if self._links[v].is_cycle]

    @property
    def is_closed(self) -> bool:
        return all(len(opp) == 2 for opp in self._edge_faces.values())

    def faces_at(self, v) -> list[Face]:
        lk = self.link(v)
        verts = lk.vertices
        pairs = list(zip(verts, verts[1:]))
        if lk.is_cycle:
            pairs.append((verts[-1], verts[0]))
        return [tuple(sorted((v, a, b))) for a, b in pairs]

    # ------------------------------------------------------------- counting

    def f_vector(self) -> FVector:
        return FVector(len(self._vertices), len(self._edge_faces), len(self.faces))

    def euler_characteristic(self) -> int:
        return self.f_vector().chi

    def components(self) -> list[list[int]]:
        seen: set[int] = set()
        comps = []
        for root in self._vertices:
            if root in seen:
                continue
            comp = [root]
            seen.add(root)
            queue = deque([root])
            while queue:
                u = queue.popleft()
                for w in self._nbrs[u]:
                    if w not in seen:
                        seen.add(w)
                        comp.append(w)
                        queue.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def orientation(self) -> dict[Face, Face] | None:
        """A coherent orientation of every face, or ``None`` if non-orientable.

        The smallest face of each component keeps its ascending vertex order;
        the choice propagates across shared edges.
        """
        oriented: dict[Face, Face] = {}
        for seed in self.faces:
            if seed in oriented:
                continue
            oriented[seed] = seed
            queue = deque([seed])
            while queue:
                face = queue.popleft()
                a, b, c = oriented[face]
                for u, v in ((a, b), (b, c), (c, a)):
                    for w in self._edge_faces[_edge(u, v)]:
                        other = tuple(sorted((u, v, w)))
                        if other == face:
                            continue
                        # the neighbour must traverse the shared edge as v -> u
                        want = (v, u, w)
                        if other in oriented:
                            if not _same_cyclic(oriented[other], want):
                                return None
                        else:
                            oriented[other] = want
                            queue.append(other)
        return oriented

    def is_orientable(self) -> bool:
        return self.orientation() is not None

    # ---------------------------------------------------------- subcomplexes

    def subsurface(self, faces: Iterable[Sequence[int]]) -> "SimplicialSurface":
        return SimplicialSurface(faces)

    def induced(self, vertices: Iterable[int]) -> list[Face]:
        """Faces of the subcomplex induced by ``vertices`` (may be empty)."""
        keep = set(vertices)
        return [f for f in self.faces if f[0] in keep and f[1] in keep and f[2] in keep]

    def compact(self) -> tuple["SimplicialSurface", dict[int, int]]:
        """Relabel vertices to ``0..n-1`` preserving order; returns (surface, old->new)."""
        mapping = {v: i for i, v in enumerate(self._vertices)}
        if all(k == v for k, v in mapping.items()):
            return self, mapping
        return self.relabel(mapping), mapping

    def relabel(self, mapping) -> "SimplicialSurface":
        return SimplicialSurface((mapping[a], mapping[b], mapping[c]) for a, b, c in self.faces)


def _same_cyclic(x: Face, y: Face) -> bool:
    return y in (x, (x[1], x[2], x[0]), (x[2], x[0], x[1]))


# ---------------------------------------------------------------- free API


def build_from_faces(faces: Iterable[Sequence[int]]) -> SimplicialSurface:
    return SimplicialSurface(faces)


def link(surface: SimplicialSurface, v: int) -> Link:
    return surface.link(v)


def star(surface: SimplicialSurface, v: int) -> SimplicialSurface:
    """The cone of ``v`` over its link, keeping the surface's vertex ids."""
    return SimplicialSurface(surface.faces_at(v))


def f_vector(surface: SimplicialSurface) -> FVector:
    return surface.f_vector()


def common_neighbor_count(surface: SimplicialSurface, u: int, v: int) -> int:
    if u == v:
        raise ValueError("common_neighbor_count needs two distinct vertices")
    return len(surface.neighbors(u) & surface.neighbors(v))


def is_d_regular(surface: SimplicialSurface, d: int) -> bool:
    """Degree test on interior vertices (all vertices when the surface is closed)."""
    return all(len(surface.neighbors(v)) == d for v in surface.interior_vertices)


def is_disc(surface: SimplicialSurface) -> bool:
    if surface.is_closed or not surface.is_connected():
        return False
    if surface.euler_characteristic() != 1:
        return False
    return _boundary_components(surface) == 1


def _boundary_components(surface: SimplicialSurface) -> int:
    adj: dict[int, list[int]] = {}
    for a, b in surface.boundary_edges:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    seen: set[int] = set()
    count = 0
    for root in adj:
        if root in seen:
            continue
        count += 1
        stack = [root]
        seen.add(root)
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
    return count


def boundary_cycle(surface: SimplicialSurface) -> list[int]:
    """Boundary vertices of a triangulated disc in cyclic order.

    The direction follows the orientation fixed by
    :meth:`SimplicialSurface.orientation` (each boundary edge is traversed as
    in its oriented face), starting from the smallest boundary vertex.
    """
    if surface.is_closed:
        raise ClosedSurface("surface has no boundary")
    if not surface.is_connected():
        raise Disconnected("surface is not connected")
    if not is_disc(surface):
        raise NotADisc(f"surface with chi={surface.euler_characteristic()} is not a disc")
    orient = surface.orientation()
    if orient is None:
        raise NotADisc("surface is not orientable")
    succ: dict[int, int] = {}
    for a, b in surface.boundary_edges:
        (w,) = surface.edge_apexes(a, b)
        face = orient[tuple(sorted((a, b, w)))]
        if _same_cyclic(face, (a, b, w)):
            succ[a] = b
        else:
            succ[b] = a
    start = min(succ)
    cycle = [start]
    while succ[cycle[-1]] != start:
        cycle.append(succ[cycle[-1]])
    return cycle
