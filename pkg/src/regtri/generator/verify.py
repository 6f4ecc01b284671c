"""Audit of the layered-disc invariants.

Every check is evaluated per layer and recorded, never raised: a failed
check carries the first counterexample found.  Property names:

``layers``  ``V_j`` is the set of vertices at graph distance ``j`` from the centre
``a``       the subcomplex on ``V_0..V_j`` is a disc with ``V_0..V_{j-1}`` inside it
``b``       its boundary vertex set is ``V_j``
``c``       the graph induced on ``V_j`` is a single cycle (``1 <= j < k``)
``d``       stars of ``V_0..V_{j-1}`` make up exactly the subcomplex on ``V_0..V_j``
``e``       non-adjacent vertices of ``V_{j-1}`` share no neighbour in ``V_j``
``f``       each vertex of ``V_j`` has one or two neighbours in ``V_{j-1}``
``g``       each vertex of ``V_j`` has degree 3 or 4 in ``X_j``
``labels``  stored A/B/C labels agree with the neighbour rule
``counts``  layer and A/B/C sizes agree with the recurrence
``regular`` interior vertices have degree ``d``
``edges``   common neighbours of every edge are exactly the apexes of its faces
``chi``     Euler characteristic is 1
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from ..complex import SimplicialSurface, is_disc
from ..errors import RegtriError
from .counts import layer_counts_recurrence
from .layered import LayeredDisk, compute_labels


@dataclass(frozen=True)
class CheckResult:
    prop: str
    layer: int | None
    passed: bool
    detail: str = ""

    def line(self) -> str:
        where = "-" if self.layer is None else str(self.layer)
        status = "pass" if self.passed else "FAIL"
        tail = f"  {self.detail}" if self.detail else ""
        return f"{self.prop:<8} layer={where:<3} {status}{tail}"


@dataclass
class VerificationReport:
    d: int
    radius: int
    results: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if not r.passed]

    def get(self, prop, layer=None) -> CheckResult:
        for r in self.results:
            if r.prop == prop and r.layer == layer:
                return r
        raise KeyError((prop, layer))

    def add(self, prop, layer, bad=None, detail=""):
        if bad is None:
            self.results.append(CheckResult(prop, layer, True))
        else:
            self.results.append(CheckResult(prop, layer, False, detail or str(bad)))

    def text(self) -> str:
        head = f"d={self.d} radius={self.radius} " + ("PASS" if self.passed else "FAIL")
        return "\n".join([head] + [r.line() for r in self.results])

    def tsv(self) -> str:
        rows = ["property\tlayer\tstatus\tdetail"]
        for r in self.results:
            rows.append(f"{r.prop}\t{'' if r.layer is None else r.layer}\t"
                        f"{'pass' if r.passed else 'fail'}\t{r.detail}")
        return "\n".join(rows)


def _bfs_dist(s: SimplicialSurface, center) -> dict[int, int]:
    dist = {center: 0}
    queue = deque([center])
    while queue:
        u = queue.popleft()
        for w in s.neighbors(u):
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def _is_single_cycle(s: SimplicialSurface, verts) -> str | None:
    vs = set(verts)
    if len(vs) < 3:
        return f"only {len(vs)} vertices"
    for v in sorted(vs):
        inside = [w for w in s.neighbors(v) if w in vs]
        if len(inside) != 2:
            return f"vertex {v} has {len(inside)} neighbours in the layer"
    start = min(vs)
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in s.neighbors(u):
            if w in vs and w not in seen:
                seen.add(w)
                stack.append(w)
    if seen != vs:
        return f"layer splits into several cycles (vertex {min(vs - seen)} unreached)"
    return None


def verify_layer_invariants(disk: LayeredDisk) -> VerificationReport:
    s = disk.surface
    d = disk.d
    k = disk.radius
    layers = [list(layer) for layer in disk.layers]
    rep = VerificationReport(d, k)
    layer_of = disk.layer_of()
    if len(layer_of) != sum(len(x) for x in layers):
        dup = sorted(v for v in layer_of if sum(v in x for x in layers) > 1)
        rep.add("layers", None, f"vertex {dup[0]} listed in two layers")
        return rep
    missing = sorted(set(s.vertices) - set(layer_of))
    if missing:
        rep.add("layers", None, f"vertex {missing[0]} is in no layer")
        return rep

    dist = _bfs_dist(s, disk.center)
    for j, layer in enumerate(layers):
        bad = next((v for v in sorted(layer) if dist.get(v) != j), None)
        rep.add("layers", j, bad, bad is not None and
                f"vertex {bad} at distance {dist.get(bad)}")

    inner: set[int] = set(layers[0])
    star_faces: set = set()
    for j in range(1, k + 1):
        star_faces.update(f for v in layers[j - 1] for f in s.faces_at(v))
        upto = inner | set(layers[j])
        faces = s.induced(upto)
        # (a) and (b)
        try:
            xj = SimplicialSurface(faces) if faces else None
        except RegtriError as exc:
            xj = None
            rep.add("a", j, "x", f"subcomplex is not a surface: {exc}")
        else:
            if xj is None or not is_disc(xj):
                rep.add("a", j, "x", "subcomplex is not a disc")
            else:
                missing_v = sorted(upto - set(xj.vertices))
                if missing_v:
                    rep.add("a", j, missing_v[0], f"vertex {missing_v[0]} lies in no face")
                else:
                    bad = next((v for v in sorted(inner) if xj.is_boundary_vertex(v)), None)
                    rep.add("a", j, bad, bad is not None and f"vertex {bad} should be interior")
        if xj is not None and is_disc(xj):
            bverts = set(xj.boundary_vertices)
            diff = sorted(bverts ^ set(layers[j]))
            rep.add("b", j, diff[0] if diff else None,
                    diff and f"vertex {diff[0]} on boundary xor in V_{j}")
        else:
            rep.add("b", j, "x", "no disc to take the boundary of")
        # (c): closing the previous layer
        if j >= 2:
            why = _is_single_cycle(s, layers[j - 1])
            rep.add("c", j - 1, why, why or "")
        # (d)
        diff_faces = sorted(star_faces ^ set(faces))
        rep.add("d", j, diff_faces[0] if diff_faces else None,
                diff_faces and f"face {diff_faces[0]} in exactly one of stars/induced")
        # (e) and (f)
        prev = set(layers[j - 1])
        bad_e = bad_f = None
        for u in sorted(layers[j]):
            below = sorted(w for w in s.neighbors(u) if w in prev)
            if bad_f is None and not 1 <= len(below) <= 2:
                bad_f = f"vertex {u} has {len(below)} neighbours in V_{j - 1}"
            if bad_e is None and j >= 2:
                for i1 in range(len(below)):
                    for i2 in range(i1 + 1, len(below)):
                        if not s.has_edge(below[i1], below[i2]):
                            bad_e = f"{below[i1]} and {below[i2]} share neighbour {u}"
        if j >= 2:
            rep.add("e", j, bad_e)
        rep.add("f", j, bad_f)
        # (g)
        bad_g = None
        if xj is not None:
            for u in sorted(layers[j]):
                if u in xj and xj.degree(u) not in (3, 4):
                    bad_g = f"vertex {u} has degree {xj.degree(u)} in X_{j}"
                    break
        else:
            bad_g = "X_j unavailable"
        rep.add("g", j, bad_g)
        inner = upto

    expected = compute_labels(s, layers)
    for j in range(2, k + 1):
        bad = next((v for v in sorted(layers[j]) if disk.labels.get(v) != expected[v]), None)
        rep.add("labels", j, bad, bad is not None and
                f"vertex {bad} labelled {disk.labels.get(bad)}, rule gives {expected[bad]}")

    if d >= 6:
        n = layer_counts_recurrence(d, k)
        for j in range(k + 1):
            bad = None
            if len(layers[j]) != n[j]:
                bad = f"|V_{j}| = {len(layers[j])}, expected {n[j]}"
            elif j >= 2:
                got = {c: sum(1 for v in layers[j] if disk.labels.get(v) == c) for c in "ABC"}
                if j == 2:
                    want = {"A": n[1], "B": 0, "C": (d - 5) * n[1]}
                else:
                    want = {"A": n[j - 1], "B": (d - 6) * n[j - 2],
                            "C": (d - 5) * (n[j - 1] - n[j - 2])}
                if got != want:
                    bad = f"(A,B,C) = {tuple(got.values())}, expected {tuple(want.values())}"
            rep.add("counts", j, bad)

    bad = next((v for v in s.interior_vertices if s.degree(v) != d), None)
    rep.add("regular", None, bad, bad is not None and
            f"interior vertex {bad} has degree {s.degree(bad)}")

    bad = None
    for a, b in s.edges:
        common = s.neighbors(a) & s.neighbors(b)
        if common != set(s.edge_apexes(a, b)):
            bad = f"edge {a}-{b} has common neighbours {sorted(common)}"
            break
    rep.add("edges", None, bad)

    chi = s.euler_characteristic()
    rep.add("chi", None, None if chi == 1 else chi, f"chi = {chi}")
    return rep
