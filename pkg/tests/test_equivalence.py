import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from regtri.classify import reference, torus_7
from regtri.complex import SimplicialSurface
from regtri.equivalence import (
    MAGIC,
    CanonicalCode,
    canonical_code,
    check_witness,
    equivalent,
    root_candidates,
)
from regtri.errors import Disconnected, RegtriError

from conftest import disk, shuffled


def brute_isomorphic(a: SimplicialSurface, b: SimplicialSurface) -> bool:
    """Backtracking search for a vertex bijection carrying faces onto faces."""
    if tuple(a.f_vector()) != tuple(b.f_vector()):
        return False
    va = sorted(a.vertices, key=lambda v: -a.degree(v))
    faces_b = set(b.faces)
    used = set()
    image = {}

    def ok(v):
        for f in a.faces_at(v):
            if all(x in image for x in f):
                if tuple(sorted(image[x] for x in f)) not in faces_b:
                    return False
        for w in a.neighbors(v):
            if w in image and not b.has_edge(image[v], image[w]):
                return False
        return True

    def search(i):
        if i == len(va):
            return True
        v = va[i]
        for w in b.vertices:
            if w in used or b.degree(w) != a.degree(v) or \
                    b.is_boundary_vertex(w) != a.is_boundary_vertex(v):
                continue
            image[v] = w
            used.add(w)
            if ok(v) and search(i + 1):
                return True
            del image[v]
            used.discard(w)
        return False

    return search(0)


def random_patch(rng: random.Random, size: int):
    """A connected patch of faces grown inside the 7-regular disc of radius 3."""
    s = disk(7, 3).surface
    start = rng.choice(s.faces)
    chosen = [start]
    have = {start}
    while len(chosen) < size:
        f = rng.choice(chosen)
        a, b, c = f
        nbrs = []
        for u, v in ((a, b), (b, c), (a, c)):
            for x in s.edge_apexes(u, v):
                g = tuple(sorted((u, v, x)))
                if g not in have:
                    nbrs.append(g)
        if not nbrs:
            continue
        g = rng.choice(nbrs)
        have.add(g)
        chosen.append(g)
    try:
        return SimplicialSurface(chosen)
    except RegtriError:
        return None


def test_code_format():
    code = canonical_code(reference("tetrahedron").surface)
    assert isinstance(code, CanonicalCode)
    assert code.data.startswith(MAGIC)
    assert int.from_bytes(code.data[3:7], "big") == 24
    assert len(code.data) == 7 + 4 * 24 * 3
    assert code.hex() == code.hex().lower()
    assert str(code) == code.hex()


def test_code_is_byte_stable():
    a = canonical_code(disk(7, 3).surface).data
    b = canonical_code(disk(7, 3).surface.relabel({v: v for v in disk(7, 3).surface.vertices})).data
    assert a == b


def test_relabelled_discs_are_equivalent(rng):
    s = disk(8, 3).surface
    t, mapping = shuffled(s, rng)
    eq = equivalent(s, t)
    assert eq
    check_witness(s, t, eq.witness)
    assert canonical_code(s) == canonical_code(t)


def test_inequivalent():
    eq = equivalent(reference("tetrahedron").surface, reference("octahedron").surface)
    assert not eq
    assert eq.witness is None
    assert not equivalent(disk(7, 2).surface, disk(8, 2).surface)
    assert not equivalent(reference("icosahedron").surface, reference("rp2_6").surface)


def test_mirror_images_are_equivalent():
    s = torus_7()
    mirror = s.relabel({v: (-v) % 7 for v in s.vertices})
    assert equivalent(s, mirror)


def test_disconnected_rejected():
    with pytest.raises(Disconnected):
        canonical_code(SimplicialSurface([(0, 1, 2), (3, 4, 5)]))


def test_bad_witness_detected():
    s = reference("octahedron").surface
    with pytest.raises(AssertionError):
        check_witness(s, s, {0: 0, 1: 2, 2: 1, 3: 3, 4: 4, 5: 5})


def test_pruning_is_label_independent(rng):
    s = disk(7, 3).surface
    t, mapping = shuffled(s, rng)
    assert sorted(mapping[v] for v in root_candidates(s)) == sorted(root_candidates(t))


@settings(max_examples=80, deadline=None)
@given(seed=st.integers(0, 10**6), size=st.integers(2, 9), size2=st.integers(2, 9))
def test_codes_agree_with_brute_force(seed, size, size2):
    rng = random.Random(seed)
    a = random_patch(rng, size)
    b = random_patch(rng, size2)
    if a is None or b is None or not a.is_connected() or not b.is_connected():
        return
    truth = brute_isomorphic(a, b)
    assert (canonical_code(a) == canonical_code(b)) == truth
    # pruning changes which flags are tried, never the verdict
    assert (canonical_code(a, prune=False) == canonical_code(b, prune=False)) == truth


@pytest.mark.parametrize("surface", [
    reference("tetrahedron").surface, reference("octahedron").surface,
    reference("icosahedron").surface, reference("rp2_6").surface, torus_7(),
    disk(6, 2).surface, disk(7, 2).surface,
], ids=["tetra", "octa", "icosa", "rp2_6", "torus7", "disk6_2", "disk7_2"])
def test_pruned_and_unpruned_both_invariant(surface, rng):
    full = canonical_code(surface, prune=False)
    pruned = canonical_code(surface)
    for _ in range(5):
        t, _ = shuffled(surface, rng)
        assert canonical_code(t, prune=False) == full
        assert canonical_code(t) == pruned


def test_pruned_and_unpruned_separate_the_same_pairs():
    pool = [reference(k).surface for k in ("tetrahedron", "octahedron", "icosahedron", "rp2_6")]
    pool += [torus_7(), disk(6, 2).surface, disk(7, 2).surface, disk(8, 2).surface]
    pruned = [canonical_code(s) for s in pool]
    full = [canonical_code(s, prune=False) for s in pool]
    for i in range(len(pool)):
        for j in range(len(pool)):
            assert (pruned[i] == pruned[j]) == (full[i] == full[j]) == (i == j)
