"""Canonical codes for triangulated surfaces.

A flag is a triple ``(v, u, w)``: a vertex ``v``, an edge ``vu`` and the face
``vuw``.  Three involutions act on flags: swap the vertex along the edge,
swap the edge inside the face, and swap the face across the edge (undefined
on the boundary).  A breadth-first walk from a starting flag numbers every
flag; recording the numbers reached by the three involutions gives a string
that determines the surface up to relabelling.  The canonical code is the
lexicographically smallest such string over a label-independent set of
starting flags.  Orientation-reversing equivalences are included because
both orientations of every edge-face pair are flags.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

from .complex import SimplicialSurface
from .errors import Disconnected

MAGIC = b"RT\x01"
_BOUNDARY = 0


@dataclass(frozen=True)
class Flag:
    root: int
    neighbor: int
    apex: int

    @property
    def face(self):
        return tuple(sorted((self.root, self.neighbor, self.apex)))


class _FlagTable:
    """Flags of a surface as integers with the three involutions tabulated."""

    def __init__(self, surface: SimplicialSurface):
        flags = []
        for face in surface.faces:
            flags.extend(permutations(face))
        index = {f: i for i, f in enumerate(flags)}
        n = len(flags)
        s0 = [0] * n
        s1 = [0] * n
        s2 = [-1] * n
        for i, (v, u, w) in enumerate(flags):
            s0[i] = index[(u, v, w)]
            s1[i] = index[(v, w, u)]
            for x in surface.edge_apexes(v, u):
                if x != w:
                    s2[i] = index[(v, u, x)]
        self.surface = surface
        self.flags = flags
        self.ops = (s0, s1, s2)

    def walk(self, start: int, best: list[int] | None):
        """Code from ``start``; returns ``None`` as soon as it exceeds ``best``."""
        ops = self.ops
        n = len(self.flags)
        number = [-1] * n
        number[start] = 0
        order = [start]
        code: list[int] = []
        tied = best is not None
        pos = 0
        head = 0
        while head < len(order):
            f = order[head]
            head += 1
            for op in ops:
                g = op[f]
                if g < 0:
                    entry = _BOUNDARY
                else:
                    if number[g] < 0:
                        number[g] = len(order)
                        order.append(g)
                    entry = number[g] + 1
                if tied:
                    ref = best[pos]
                    if entry > ref:
                        return None
                    if entry < ref:
                        tied = False
                code.append(entry)
                pos += 1
        return code, order


def _refined_colors(surface: SimplicialSurface) -> dict[int, int]:
    """Colour refinement seeded with (degree, on-boundary); label independent."""
    color = {v: (surface.degree(v), surface.is_boundary_vertex(v)) for v in surface.vertices}
    palette = {c: i for i, c in enumerate(sorted(set(color.values())))}
    color = {v: palette[c] for v, c in color.items()}
    classes = len(palette)
    while True:
        sig = {v: (color[v], tuple(sorted(color[w] for w in surface.neighbors(v))))
               for v in surface.vertices}
        palette = {s: i for i, s in enumerate(sorted(set(sig.values())))}
        color = {v: palette[s] for v, s in sig.items()}
        if len(palette) == classes:
            return color
        classes = len(palette)


def root_candidates(surface: SimplicialSurface, prune: bool = True) -> list[int]:
    """Vertices whose flags are tried as starting points.

    With ``prune`` only the smallest colour class (ties broken by colour
    index) of the refined colouring is used.  The class is chosen from
    isomorphism-invariant data, so isomorphic surfaces select corresponding
    classes.
    """
    if not prune:
        return list(surface.vertices)
    color = _refined_colors(surface)
    sizes: dict[int, int] = {}
    for c in color.values():
        sizes[c] = sizes.get(c, 0) + 1
    chosen = min(sizes, key=lambda c: (sizes[c], c))
    return [v for v in surface.vertices if color[v] == chosen]


@lru_cache(maxsize=32)
def _best_walk(surface: SimplicialSurface, prune: bool):
    if not surface.is_connected():
        raise Disconnected("canonical codes are defined for connected surfaces")
    table = _FlagTable(surface)
    roots = set(root_candidates(surface, prune))
    best = None
    best_order = None
    for i, (v, _, _) in enumerate(table.flags):
        if v not in roots:
            continue
        res = table.walk(i, best)
        if res is None:
            continue
        code, order = res
        if best is None or code < best:
            best, best_order = code, order
    return table, best, best_order


@dataclass(frozen=True)
class CanonicalCode:
    data: bytes

    def hex(self) -> str:
        return self.data.hex()

    def __str__(self):
        return self.hex()


def _pack(code: list[int], nflags: int) -> bytes:
    return MAGIC + struct.pack(f">I{len(code)}I", nflags, *code)


def canonical_code(surface: SimplicialSurface, prune: bool = True) -> CanonicalCode:
    table, best, _ = _best_walk(surface, prune)
    return CanonicalCode(_pack(best, len(table.flags)))


@dataclass
class Equivalence:
    equivalent: bool
    witness: dict[int, int] | None = None

    def __bool__(self):
        return self.equivalent


def equivalent(a: SimplicialSurface, b: SimplicialSurface) -> Equivalence:
    """Compare canonical codes; on a match return a checked vertex bijection ``a -> b``."""
    ta, ca, oa = _best_walk(a, True)
    tb, cb, ob = _best_walk(b, True)
    if len(ta.flags) != len(tb.flags) or ca != cb:
        return Equivalence(False)
    mapping: dict[int, int] = {}
    for fa, fb in zip(oa, ob):
        va, vb = ta.flags[fa][0], tb.flags[fb][0]
        if mapping.setdefault(va, vb) != vb:
            raise AssertionError("flag walks disagree on a vertex image")
    check_witness(a, b, mapping)
    return Equivalence(True, mapping)


def check_witness(a: SimplicialSurface, b: SimplicialSurface, mapping) -> None:
    """Raise ``AssertionError`` unless ``mapping`` carries the faces of ``a`` onto those of ``b``."""
    if sorted(mapping) != list(a.vertices) or sorted(mapping.values()) != list(b.vertices):
        raise AssertionError("witness is not a vertex bijection")
    image = {tuple(sorted(mapping[x] for x in f)) for f in a.faces}
    if image != set(b.faces):
        raise AssertionError("witness does not map faces onto faces")
