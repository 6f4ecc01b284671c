"""Closed degree-regular surfaces: reference triangulations and case analysis.

For degree below six there are exactly four closed regular triangulated
surfaces: the boundaries of the tetrahedron, octahedron and icosahedron,
and the six-vertex projective plane.  Degree six gives flat surfaces and
degree seven or more hyperbolic ones.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complex import SimplicialSurface
from .equivalence import equivalent
from .errors import InputContradictsLemma, NotClosed, NotRegular, UnsupportedInput

TETRAHEDRON = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]

# antipodal pairs (0,1), (2,3), (4,5); a face takes one vertex from each pair
OCTAHEDRON = [(a, b, c) for a in (0, 1) for b in (2, 3) for c in (4, 5)]

# Vertices 0..5 and 0'..5' (here 6..11).  0 has link 1-2-3-4-5; i' sits
# opposite i.  Faces read off the vertex links lk(1) = (2,0,5,3',4'),
# lk(2) = (3,0,1,4',5'), lk(3) = (4,0,2,5',1'), lk(4) = (5,0,3,1',2'),
# lk(5) = (1,0,4,2',3'), plus the cap around 0'.
ICOSAHEDRON = [
    (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 1, 5),
    (1, 5, 9), (1, 9, 10), (1, 2, 10),
    (2, 10, 11), (2, 3, 11),
    (3, 11, 7), (3, 4, 7),
    (4, 7, 8), (4, 5, 8),
    (5, 8, 9),
    (6, 7, 8), (6, 8, 9), (6, 9, 10), (6, 10, 11), (6, 7, 11),
]

# lk(0) = (1,2,3,4,5), lk(1) = (5,0,2,4,3), lk(4) = (5,0,3,1,2), lk(3) = (2,0,4,1,5)
RP2_6 = [
    (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 1, 5),
    (1, 2, 4), (1, 3, 4), (1, 3, 5), (2, 4, 5), (2, 3, 5),
]

REFERENCE_FACES = {
    "tetrahedron": TETRAHEDRON,
    "octahedron": OCTAHEDRON,
    "icosahedron": ICOSAHEDRON,
    "rp2_6": RP2_6,
}

CASES = ("sphere_d3", "sphere_d4", "sphere_d5", "projective_plane_d5", "flat_d6", "hyperbolic_dge7")

_CASE_OF_KIND = {
    "tetrahedron": "sphere_d3",
    "octahedron": "sphere_d4",
    "icosahedron": "sphere_d5",
    "rp2_6": "projective_plane_d5",
}


@dataclass(frozen=True)
class ReferenceSurface:
    kind: str
    surface: SimplicialSurface


def reference(kind: str) -> ReferenceSurface:
    try:
        faces = REFERENCE_FACES[kind]
    except KeyError:
        raise UnsupportedInput(f"unknown reference {kind!r}; choose from {sorted(REFERENCE_FACES)}")
    return ReferenceSurface(kind, SimplicialSurface(faces))


def torus_7() -> SimplicialSurface:
    """The 7-vertex 6-regular torus: faces ``{i, i+1, i+3}`` and ``{i, i+2, i+3}`` mod 7."""
    faces = []
    for i in range(7):
        faces.append((i, (i + 1) % 7, (i + 3) % 7))
        faces.append((i, (i + 2) % 7, (i + 3) % 7))
    return SimplicialSurface(faces)


@dataclass(frozen=True)
class Classification:
    case: str
    degree: int
    chi: int
    reference: str | None = None
    witness: dict[int, int] | None = None

    def line(self) -> str:
        return f"case={self.case} d={self.degree} chi={self.chi}"


def regular_degree(surface: SimplicialSurface) -> int:
    degrees = {surface.degree(v) for v in surface.vertices}
    if len(degrees) != 1:
        raise NotRegular(f"vertex degrees differ: {sorted(degrees)}")
    return degrees.pop()


def classify_closed(surface: SimplicialSurface) -> Classification:
    """Place a closed connected regular surface in its case.

    For degree < 6 an explicit isomorphism to the matching reference is
    returned as ``witness`` (input vertex -> reference vertex).
    """
    if not surface.is_closed:
        raise NotClosed("classification needs a closed surface")
    d = regular_degree(surface)
    chi = surface.euler_characteristic()
    if d >= 7:
        return Classification("hyperbolic_dge7", d, chi)
    if d == 6:
        return Classification("flat_d6", d, chi)
    if d == 3:
        kinds = ["tetrahedron"]
    elif d == 4:
        kinds = ["octahedron"]
    elif d == 5:
        kinds = ["icosahedron"] if chi == 2 else ["rp2_6"] if chi == 1 else []
    else:
        kinds = []
    for kind in kinds:
        ref = reference(kind)
        eq = equivalent(surface, ref.surface)
        if eq:
            return Classification(_CASE_OF_KIND[kind], d, chi, kind, eq.witness)
    raise InputContradictsLemma(
        f"closed {d}-regular surface with chi={chi} matches no reference triangulation")
