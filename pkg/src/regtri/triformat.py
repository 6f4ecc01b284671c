"""Reader and writer for the line-oriented TRI text format.

::

    regtri 1
    surface closed|disk
    vertices N
    faces M
    f a b c            (M lines, 0-based ids, a < b < c)
    layer v k CLS      (optional, CLS one of A B C R)

Lines starting with ``#`` are comments.  Anything else is an error.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .complex import SimplicialSurface, is_disc
from .errors import RegtriError, TriFormatError

LAYER_CLASSES = ("A", "B", "C", "R")


@dataclass
class TriDocument:
    surface: SimplicialSurface
    kind: str
    layers: dict[int, tuple[int, str]] = field(default_factory=dict)


def dumps(surface: SimplicialSurface, layers=None) -> str:
    """Serialize ``surface`` (and optional ``{v: (k, cls)}`` annotations)."""
    if surface.vertices != tuple(range(surface.vertex_count)):
        raise TriFormatError("TRI needs dense vertex ids 0..N-1; call compact() first")
    if surface.is_closed:
        kind = "closed"
    elif is_disc(surface):
        kind = "disk"
    else:
        raise TriFormatError("TRI only stores closed surfaces and discs")
    out = ["regtri 1", f"surface {kind}", f"vertices {surface.vertex_count}",
           f"faces {len(surface.faces)}"]
    out.extend(f"f {a} {b} {c}" for a, b, c in surface.faces)
    if layers:
        for v in sorted(layers):
            k, cls = layers[v]
            if cls not in LAYER_CLASSES:
                raise TriFormatError(f"bad layer class {cls!r} for vertex {v}")
            out.append(f"layer {v} {k} {cls}")
    return "\n".join(out) + "\n"


def _int(tok: str, lineno: int, what: str) -> int:
    if not tok.isdigit():
        raise TriFormatError(f"{what} must be a non-negative integer, got {tok!r}", lineno)
    return int(tok)


def loads(text: str) -> TriDocument:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    body = [(i + 1, ln) for i, ln in enumerate(lines) if not ln.startswith("#")]
    if any(ln.endswith("\r") for _, ln in body):
        raise TriFormatError("lines must be LF-terminated")

    def expect(idx: int, keyword: str) -> list[str]:
        if idx >= len(body):
            raise TriFormatError(f"missing '{keyword}' line")
        lineno, ln = body[idx]
        toks = ln.split(" ")
        if toks[0] != keyword or len(toks) != 2:
            raise TriFormatError(f"expected '{keyword} <value>', got {ln!r}", lineno)
        return toks

    _, ver = expect(0, "regtri")
    if ver != "1":
        raise TriFormatError(f"unsupported version {ver!r}", body[0][0])
    _, kind = expect(1, "surface")
    if kind not in ("closed", "disk"):
        raise TriFormatError(f"surface must be 'closed' or 'disk', got {kind!r}", body[1][0])
    n = _int(expect(2, "vertices")[1], body[2][0], "vertex count")
    m = _int(expect(3, "faces")[1], body[3][0], "face count")

    faces = []
    idx = 4
    for _ in range(m):
        if idx >= len(body):
            raise TriFormatError(f"expected {m} face lines, found {len(faces)}")
        lineno, ln = body[idx]
        toks = ln.split(" ")
        if toks[0] != "f" or len(toks) != 4:
            raise TriFormatError(f"expected 'f a b c', got {ln!r}", lineno)
        a, b, c = (_int(t, lineno, "vertex id") for t in toks[1:])
        if not a < b < c:
            raise TriFormatError("face vertices must be strictly increasing", lineno)
        if c >= n:
            raise TriFormatError(f"vertex id {c} out of range (N={n})", lineno)
        faces.append((a, b, c))
        idx += 1

    layers: dict[int, tuple[int, str]] = {}
    for lineno, ln in body[idx:]:
        toks = ln.split(" ")
        if toks[0] != "layer":
            raise TriFormatError(f"unknown directive {toks[0]!r}", lineno)
        if len(toks) != 4:
            raise TriFormatError(f"expected 'layer v k CLS', got {ln!r}", lineno)
        v = _int(toks[1], lineno, "vertex id")
        k = _int(toks[2], lineno, "layer index")
        cls = toks[3]
        if cls not in LAYER_CLASSES:
            raise TriFormatError(f"layer class must be one of A B C R, got {cls!r}", lineno)
        if v >= n:
            raise TriFormatError(f"vertex id {v} out of range (N={n})", lineno)
        if v in layers:
            raise TriFormatError(f"vertex {v} annotated twice", lineno)
        layers[v] = (k, cls)

    try:
        surface = SimplicialSurface(faces)
    except RegtriError as exc:
        raise TriFormatError(f"invalid surface: {exc}") from exc
    if surface.vertices != tuple(range(n)):
        raise TriFormatError(f"faces do not use every vertex 0..{n - 1}")
    if kind == "closed" and not surface.is_closed:
        raise TriFormatError("declared closed but the surface has boundary")
    if kind == "disk" and not is_disc(surface):
        raise TriFormatError("declared disk but the surface is not a triangulated disc")
    return TriDocument(surface, kind, layers)


def read(path) -> TriDocument:
    with open(path, "r", encoding="ascii", newline="") as fh:
        return loads(fh.read())


def write(path, surface: SimplicialSurface, layers=None) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(dumps(surface, layers))
