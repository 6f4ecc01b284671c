"""Degree-regular triangulations of surfaces: construction, audit, classification, geometry."""

from .classify import Classification, ReferenceSurface, classify_closed, reference, torus_7
from .complex import FVector, Link, SimplicialSurface, boundary_cycle, is_disc
from .equivalence import CanonicalCode, canonical_code, equivalent
from .errors import RegtriError
from .generator.audit import DegreeProfile, forbidden_disk_chi
from .generator.counts import layer_counts_closed_form, layer_counts_recurrence
from .generator.layered import LayeredDisk, extend, generate, initial_disk, partition_sizes
from .generator.verify import verify_layer_invariants

__version__ = "0.1.0"

__all__ = [
    "CanonicalCode", "Classification", "DegreeProfile", "FVector", "LayeredDisk", "Link",
    "ReferenceSurface", "RegtriError", "SimplicialSurface", "boundary_cycle", "canonical_code",
    "classify_closed", "equivalent", "extend", "forbidden_disk_chi", "generate", "initial_disk",
    "is_disc", "layer_counts_closed_form", "layer_counts_recurrence", "partition_sizes",
    "reference", "torus_7", "verify_layer_invariants",
]
