import functools
import sys
import random

import pytest

from regtri.classify import reference
from regtri.generator.layered import generate


@functools.lru_cache(maxsize=None)
def disk(d, k):
    return generate(d, k)


@pytest.fixture
def rng():
    return random.Random(20261016)


def shuffled(surface, rng):
    """``surface`` with vertex ids permuted (and shifted away from 0..n-1)."""
    verts = list(surface.vertices)
    images = list(range(100, 100 + len(verts)))
    rng.shuffle(images)
    mapping = dict(zip(verts, images))
    return surface.relabel(mapping), mapping


@pytest.fixture(scope="session")
def references():
    return {k: reference(k) for k in ("tetrahedron", "octahedron", "icosahedron", "rp2_6")}


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
