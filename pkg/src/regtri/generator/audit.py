"""Euler-characteristic audit for hypothetical sub-discs of a d-regular plane.

A disc whose boundary vertices (apart from three exceptional ones) all have
degree ``d-1`` or ``d-2`` and whose interior vertices have degree ``d`` would
have Euler characteristic strictly below 1 when ``d >= 7``.  Such a disc
therefore cannot exist, which is what rules out every alternative in the
layered construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..complex import SimplicialSurface, is_disc
from ..errors import NotADisc


@dataclass(frozen=True)
class DegreeProfile:
    d: int
    d_x: int
    d_v: int
    d_w: int
    m0: int = 0
    m1: int = 0
    m2: int = 0

    def __post_init__(self):
        if min(self.d_x, self.d_v, self.d_w) < 2:
            raise ValueError("exceptional boundary vertices have degree >= 2")
        if min(self.m0, self.m1, self.m2) < 0:
            raise ValueError("vertex counts must be non-negative")

    @property
    def exceptional_sum(self) -> int:
        return self.d_x + self.d_v + self.d_w

    @property
    def satisfies_hypothesis(self) -> bool:
        """At least four vertices, i.e. something besides the three exceptional ones."""
        return self.m0 + self.m1 + self.m2 >= 1


def forbidden_disk_chi(p: DegreeProfile) -> Fraction:
    """Exact ``f0 - f1 + f2`` of a disc with degree profile ``p``."""
    d = p.d
    return (Fraction(12 - p.exceptional_sum, 6)
            + p.m0 * Fraction(6 - d, 6)
            + p.m1 * Fraction(5 - d, 6)
            + p.m2 * Fraction(6 - d, 6))


def profile_counts(p: DegreeProfile) -> tuple[Fraction, Fraction, Fraction]:
    """Vertex, edge and face counts implied by ``p`` (edge/face by degree sums)."""
    d = p.d
    f0 = Fraction(3 + p.m0 + p.m1 + p.m2)
    f1 = Fraction(p.exceptional_sum + d * p.m0 + (d - 1) * p.m1 + (d - 2) * p.m2, 2)
    f2 = Fraction((p.d_x - 1) + (p.d_v - 1) + (p.d_w - 1)
                  + d * p.m0 + (d - 2) * p.m1 + (d - 3) * p.m2, 3)
    return f0, f1, f2


def degree_profile(disc: SimplicialSurface, d: int, exceptional) -> DegreeProfile:
    """Read the profile off an actual disc.

    Every non-exceptional vertex must be interior of degree ``d`` or on the
    boundary with degree ``d-1`` or ``d-2``; anything else raises ``ValueError``.
    """
    if not is_disc(disc):
        raise NotADisc("degree profiles are defined for triangulated discs")
    x, v, w = exceptional
    for u in (x, v, w):
        if not disc.is_boundary_vertex(u):
            raise ValueError(f"exceptional vertex {u} is not on the boundary")
    m = {0: 0, 1: 0, 2: 0}
    for u in disc.vertices:
        if u in (x, v, w):
            continue
        deg = disc.degree(u)
        if not disc.is_boundary_vertex(u):
            if deg != d:
                raise ValueError(f"interior vertex {u} has degree {deg}, not {d}")
            m[0] += 1
        elif deg in (d - 1, d - 2):
            m[d - deg] += 1
        else:
            raise ValueError(f"boundary vertex {u} has degree {deg}")
    return DegreeProfile(d, disc.degree(x), disc.degree(v), disc.degree(w), m[0], m[1], m[2])
