import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from regtri import triformat
from regtri.complex import SimplicialSurface
from regtri.equivalence import canonical_code
from regtri.errors import TriFormatError
from regtri.generator.layered import from_tri

from conftest import disk

GOOD = "regtri 1\nsurface closed\nvertices 4\nfaces 4\nf 0 1 2\nf 0 1 3\nf 0 2 3\nf 1 2 3\n"


def test_minimal_document():
    doc = triformat.loads(GOOD)
    assert doc.kind == "closed"
    assert doc.surface.f_vector().chi == 2
    assert triformat.dumps(doc.surface) == GOOD


def test_comments_allowed():
    text = "# a tetrahedron\n" + GOOD.replace("f 0 1 3\n", "f 0 1 3\n# middle\n")
    assert triformat.loads(text).surface == triformat.loads(GOOD).surface


@pytest.mark.parametrize("bad, fragment", [
    (GOOD.replace("regtri 1", "regtri 2"), "version"),
    (GOOD.replace("surface closed", "surface disk"), "declared disk"),
    (GOOD.replace("f 0 1 2", "f 0 2 1"), "strictly increasing"),
    (GOOD.replace("f 1 2 3", "f 1 2 4"), "out of range"),
    (GOOD.replace("faces 4", "faces 5"), "expected 5 face lines"),
    (GOOD + "colour 0 red\n", "unknown directive"),
    (GOOD + "layer 0 0 Z\n", "layer class"),
    (GOOD.replace("\n", "\r\n"), "LF"),
    (GOOD.replace("vertices 4", "vertices 5"), "every vertex"),
    (GOOD.replace("f 0 1 2", "f 0 1 x"), "non-negative integer"),
], ids=["version", "kind", "order", "range", "count", "directive", "class", "crlf", "unused",
        "token"])
def test_strict_parser(bad, fragment):
    with pytest.raises(TriFormatError, match=fragment):
        triformat.loads(bad)


def test_error_carries_line_number():
    with pytest.raises(TriFormatError) as info:
        triformat.loads(GOOD.replace("f 0 2 3", "f 3 2 0"))
    assert info.value.lineno == 7


def test_sparse_ids_rejected_by_writer():
    with pytest.raises(TriFormatError):
        triformat.dumps(SimplicialSurface([(1, 2, 3)]))


def test_layered_round_trip():
    d = disk(7, 3)
    text = d.to_tri()
    assert text.count("\nlayer ") == 85
    back = from_tri(text)
    assert back.layers[0] == d.layers[0]
    assert [sorted(x) for x in back.layers] == [sorted(x) for x in d.layers]
    assert back.labels == d.labels
    assert back.to_tri() == text


def test_deterministic_serialisation():
    from regtri.generator.layered import generate
    assert generate(8, 3).to_tri() == generate(8, 3).to_tri()


def test_file_helpers(tmp_path):
    path = tmp_path / "x.tri"
    triformat.write(path, disk(6, 2).surface)
    assert triformat.read(path).surface == disk(6, 2).surface


@settings(max_examples=25, deadline=None)
@given(d=st.integers(6, 10), k=st.integers(1, 3))
def test_round_trip_preserves_code(d, k):
    s = disk(d, k).surface
    assert canonical_code(triformat.loads(triformat.dumps(s)).surface) == canonical_code(s)
