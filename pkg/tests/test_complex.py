import pytest

from regtri.complex import (
    SimplicialSurface,
    boundary_cycle,
    common_neighbor_count,
    f_vector,
    is_d_regular,
    is_disc,
    link,
    star,
)
from regtri.errors import (
    BadLink,
    ClosedSurface,
    DegenerateFace,
    Disconnected,
    DuplicateFace,
    NonManifoldEdge,
    NotADisc,
    UnknownVertex,
)

from conftest import disk

TETRA = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]


def fan(n, center=0):
    """Star of a degree-n vertex: the centre and the cycle 1..n."""
    return SimplicialSurface([(center, i, i % n + 1) for i in range(1, n + 1)])


class TestConstruction:
    def test_faces_are_sorted_and_normalized(self):
        s = SimplicialSurface([(3, 1, 0), (2, 0, 1), (3, 2, 0), (1, 2, 3)])
        assert s.faces == ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3))
        assert s == SimplicialSurface(TETRA)
        assert hash(s) == hash(SimplicialSurface(TETRA))

    def test_face_order_does_not_matter(self):
        faces = disk(7, 2).surface.faces
        assert SimplicialSurface(reversed(faces)) == disk(7, 2).surface

    def test_non_manifold_edge(self):
        with pytest.raises(NonManifoldEdge):
            SimplicialSurface([(0, 1, 2), (0, 1, 3), (0, 1, 4)])

    def test_pinched_vertex(self):
        # two triangles meeting only at vertex 0
        with pytest.raises(BadLink):
            SimplicialSurface([(0, 1, 2), (0, 3, 4)])

    def test_duplicate_face(self):
        with pytest.raises(DuplicateFace):
            SimplicialSurface([(0, 1, 2), (2, 1, 0)])

    @pytest.mark.parametrize("face", [(0, 0, 1), (0, 1), (-1, 0, 1)])
    def test_degenerate_face(self, face):
        with pytest.raises(DegenerateFace):
            SimplicialSurface([face])

    def test_empty(self):
        with pytest.raises(BadLink):
            SimplicialSurface([])

    def test_sparse_ids_kept(self):
        s = SimplicialSurface([(10, 20, 30)])
        assert s.vertices == (10, 20, 30)
        c, mapping = s.compact()
        assert c.vertices == (0, 1, 2)
        assert mapping == {10: 0, 20: 1, 30: 2}


class TestQueries:
    def test_tetrahedron_links_are_3_cycles(self):
        s = SimplicialSurface(TETRA)
        for v in s.vertices:
            lk = link(s, v)
            assert lk.is_cycle and len(lk) == 3
        assert s.is_closed
        assert tuple(f_vector(s)) == (4, 6, 4)
        assert s.euler_characteristic() == 2

    def test_cycle_link_normal_form(self):
        s = fan(7)
        assert s.link(0).vertices == (1, 2, 3, 4, 5, 6, 7)
        assert s.link(4).kind == "path"
        assert s.link(4).vertices == (0, 3, 5) or s.link(4).vertices == (3, 0, 5)

    def test_path_link_starts_at_smaller_end(self):
        s = fan(7)
        assert s.link(1).vertices == (2, 0, 7)

    def test_unknown_vertex(self):
        with pytest.raises(UnknownVertex):
            fan(5).link(99)

    def test_star_keeps_ids(self):
        s = disk(7, 2).surface
        st = star(s, 3)
        assert 3 in st
        assert tuple(st.f_vector()) == (8, 14, 7)
        assert set(st.vertices) == {3} | set(s.neighbors(3))

    def test_degrees_and_boundary(self):
        s = fan(6)
        assert s.degree(0) == 6
        assert s.interior_vertices == [0]
        assert sorted(s.boundary_vertices) == [1, 2, 3, 4, 5, 6]
        assert is_d_regular(s, 6)
        assert not is_d_regular(s, 7)

    def test_common_neighbors(self):
        s = disk(7, 3).surface
        interior = [(a, b) for a, b in s.edges if not s.is_boundary_edge(a, b)]
        assert all(common_neighbor_count(s, a, b) == 2 for a, b in interior)
        boundary = s.boundary_edges
        assert all(common_neighbor_count(s, a, b) == 1 for a, b in boundary)

    def test_edge_apexes(self):
        s = SimplicialSurface(TETRA)
        assert s.edge_apexes(0, 1) == (2, 3)
        assert s.edge_apexes(1, 0) == (2, 3)


class TestTopology:
    def test_disc_detection(self):
        assert is_disc(fan(7))
        assert not is_disc(SimplicialSurface(TETRA))
        # annulus: strip of 8 triangles closed into a ring
        ring = [(i, (i + 1) % 4, 4 + i) for i in range(4)] + \
               [((i + 1) % 4, 4 + i, 4 + (i + 1) % 4) for i in range(4)]
        annulus = SimplicialSurface(ring)
        assert annulus.euler_characteristic() == 0
        assert not is_disc(annulus)

    def test_boundary_cycle_order(self):
        cyc = boundary_cycle(fan(6))
        assert cyc[0] == 1
        assert cyc in ([1, 2, 3, 4, 5, 6], [1, 6, 5, 4, 3, 2])
        s = disk(7, 3).surface
        cyc = boundary_cycle(s)
        assert len(cyc) == 56
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            assert s.is_boundary_edge(a, b)

    def test_boundary_cycle_errors(self):
        with pytest.raises(ClosedSurface):
            boundary_cycle(SimplicialSurface(TETRA))
        with pytest.raises(Disconnected):
            boundary_cycle(SimplicialSurface([(0, 1, 2), (3, 4, 5)]))
        ring = [(i, (i + 1) % 4, 4 + i) for i in range(4)] + \
               [((i + 1) % 4, 4 + i, 4 + (i + 1) % 4) for i in range(4)]
        with pytest.raises(NotADisc):
            boundary_cycle(SimplicialSurface(ring))

    def test_orientability(self, references):
        assert SimplicialSurface(TETRA).is_orientable()
        assert not references["rp2_6"].surface.is_orientable()
        assert disk(8, 3).surface.is_orientable()

    def test_components(self):
        s = SimplicialSurface([(0, 1, 2), (3, 4, 5)])
        assert not s.is_connected()
        assert s.components() == [[0, 1, 2], [3, 4, 5]]

    def test_induced(self):
        s = fan(7)
        assert s.induced([0, 1, 2, 3]) == [(0, 1, 2), (0, 2, 3)]
