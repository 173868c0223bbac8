"""conelab: exact wall-and-chamber geometry for signature (1, n) lattices.

Core objects: integral lattices with a chosen positive cone, wall vectors
of prescribed negative squares, the chamber decomposition of the cone, a
reflection walk onto nef isotropic classes, and cusps as orbits of rational
isotropic lines.  All structural decisions are made in exact arithmetic;
floats appear only in hyperbolic distances and rendering.
"""

from .catalog import catalog_names, get_lattice
from .cusps import CuspOrbit, canonical_cusp, cusp_orbits
from .enumeration import (
    NefCertificate,
    nef_certificate,
    separating_walls,
    vectors_of_square,
    walls_near,
    walls_through,
)
from .errors import ConelabError
from .geometry import (
    Chamber,
    ChamberGraph,
    WalkStep,
    WalkTrace,
    chamber_graph,
    chamber_of,
    hyperbolic_distance,
    nef_walk,
)
from .isotropic import enumerate_isotropic_lines, find_isotropic
from .lattice import (
    Lattice,
    inertia,
    load_lattice,
    primitivize,
    read_lattice_file,
    scan_key,
    sup_norm,
)
from .render import Scene, render_disk

__version__ = "0.1.0"

__all__ = [
    "Chamber",
    "ChamberGraph",
    "ConelabError",
    "CuspOrbit",
    "Lattice",
    "NefCertificate",
    "Scene",
    "WalkStep",
    "WalkTrace",
    "canonical_cusp",
    "catalog_names",
    "chamber_graph",
    "chamber_of",
    "cusp_orbits",
    "enumerate_isotropic_lines",
    "find_isotropic",
    "get_lattice",
    "hyperbolic_distance",
    "inertia",
    "load_lattice",
    "nef_certificate",
    "nef_walk",
    "primitivize",
    "read_lattice_file",
    "render_disk",
    "scan_key",
    "separating_walls",
    "sup_norm",
    "vectors_of_square",
    "walls_near",
    "walls_through",
    "__version__",
]
