"""SVG and OFF export of realised surfaces.

Hyperbolic discs are drawn in the Poincare disk; with ``arcs=True`` each
edge becomes the circular arc orthogonal to the unit circle through its two
endpoints.  Spherical surfaces are shown in orthographic projection along
the z-axis, with back-hemisphere edges dashed.
"""

from __future__ import annotations

import numpy as np

from .models import EUCLIDEAN, HYPERBOLOID, SPHERICAL, poincare_array
from .realize import RealizedSurface

_COLLINEAR_TOL = 1e-9


def _planar(r: RealizedSurface) -> np.ndarray:
    if r.model == HYPERBOLOID:
        return poincare_array(r.coords)
    if r.model == SPHERICAL:
        return r.coords[:, :2].copy()
    return np.asarray(r.coords, dtype=float)


def geodesic_circle(a, b):
    """Centre and radius of the circle orthogonal to the unit circle through ``a`` and ``b``.

    Returns ``None`` when ``a``, ``b`` and the origin are collinear (the
    geodesic is then a diameter).
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    det = a[0] * b[1] - a[1] * b[0]
    if abs(det) < _COLLINEAR_TOL:
        return None
    # c . a = (|a|^2 + 1) / 2 and likewise for b
    rhs = np.array([(a @ a + 1.0) / 2.0, (b @ b + 1.0) / 2.0])
    c = np.linalg.solve(np.array([a, b]), rhs)
    return c, float(np.sqrt(c @ c - 1.0))


def render_svg(r: RealizedSurface, *, arcs: bool = False, size: int = 800,
               margin: int = 10) -> str:
    """SVG document with one ``<path>`` per edge.

    Coordinates are scaled so the unit disk (hyperbolic, spherical) or the
    bounding box (Euclidean) fills the canvas; the y-axis points up.
    """
    pts = _planar(r)
    if r.model == EUCLIDEAN:
        lo = pts.min(axis=0)
        hi = pts.max(axis=0)
        centre = (lo + hi) / 2.0
        half = max(float((hi - lo).max()) / 2.0, 1e-12)
    else:
        centre = np.zeros(2)
        half = 1.0
    scale = (size / 2.0 - margin) / half

    def screen(p):
        return size / 2.0 + scale * (p[0] - centre[0]), size / 2.0 - scale * (p[1] - centre[1])

    f = r.surface.f_vector()
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        f"<!-- regtri model={r.model} vertices={f.f0} edges={f.f1} faces={f.f2} -->",
        "<style>path{fill:none;stroke:#1f3b73;stroke-width:0.8}"
        "path.back{stroke:#9aa7c0;stroke-dasharray:3,3}"
        "circle.boundary{fill:none;stroke:#000;stroke-width:1}</style>",
    ]
    if r.model in (HYPERBOLOID, SPHERICAL):
        out.append(f'<circle class="boundary" cx="{size / 2:g}" cy="{size / 2:g}" '
                   f'r="{scale:.6f}"/>')
    for a, b in r.surface.edges:
        pa, pb = pts[r.index[a]], pts[r.index[b]]
        xa, ya = screen(pa)
        xb, yb = screen(pb)
        cls = ""
        if r.model == SPHERICAL and r.position(a)[2] + r.position(b)[2] < 0:
            cls = ' class="back"'
        seg = None
        if arcs and r.model == HYPERBOLOID:
            circle = geodesic_circle(pa, pb)
            if circle is not None:
                c, radius = circle
                xc, yc = screen(c)
                cross = (xa - xc) * (yb - yc) - (ya - yc) * (xb - xc)
                sweep = 1 if cross > 0 else 0
                rr = radius * scale
                seg = (f"M {xa:.4f} {ya:.4f} A {rr:.4f} {rr:.4f} 0 0 {sweep} "
                       f"{xb:.4f} {yb:.4f}")
        if seg is None:
            seg = f"M {xa:.4f} {ya:.4f} L {xb:.4f} {yb:.4f}"
        out.append(f'<path{cls} data-edge="{a}-{b}" d="{seg}"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def to_off(r: RealizedSurface) -> str:
    """OFF mesh; hyperbolic discs are written as their Poincare image in the z=0 plane."""
    s = r.surface
    if r.model == HYPERBOLOID:
        xyz = np.column_stack([poincare_array(r.coords), np.zeros(len(r.coords))])
    elif r.model == EUCLIDEAN:
        xyz = np.column_stack([r.coords, np.zeros(len(r.coords))])
    else:
        xyz = np.asarray(r.coords, dtype=float)
    f = s.f_vector()
    lines = ["OFF", f"{f.f0} {f.f2} 0"]
    lines += [" ".join(f"{x:.12g}" for x in row) for row in xyz]
    lines += ["3 " + " ".join(str(r.index[v]) for v in face) for face in s.faces]
    return "\n".join(lines) + "\n"
