"""Exact-arithmetic toolkit for generalized reflections, exterior powers of
reflection representations, and machine certification that those powers are
simple and pairwise non-isomorphic."""

from .scalars import QuadExt, Scalar, as_scalar, parse_scalar, render_scalar
from .linalg import (
    Matrix,
    Subspace,
    image,
    intersect,
    kernel,
    rref,
    solve_intertwiner,
    subspace_sum,
)
from .reflections import ReflectionData, fixes_vector, recognize_reflection
from .exterior import (
    EigenSplit,
    compound,
    eigen_split,
    exterior_subspace,
    minus_basis_from_any_extension,
    minus_intersection,
    wedge,
)
from .graphs import Graph, MoveStep, deletable_vertex, induced, is_connected, move_sequence
from .repkit import (
    Representation,
    SimplicityVerdict,
    det_twist,
    dual_rep,
    duality_intertwiner,
    exterior_rep,
    hom_dim,
    simplicity,
)
from .theoremlab import (
    HypothesisReport,
    TheoremReport,
    check_hypotheses,
    connected_basis_subset,
    steinberg_mode,
    verify_theorem,
)
from .catalog import CatalogEntry, entry, infinite_dihedral, list_entries

__all__ = [
    "QuadExt",
    "Scalar",
    "as_scalar",
    "parse_scalar",
    "render_scalar",
    "Matrix",
    "Subspace",
    "image",
    "intersect",
    "kernel",
    "rref",
    "solve_intertwiner",
    "subspace_sum",
    "ReflectionData",
    "fixes_vector",
    "recognize_reflection",
    "EigenSplit",
    "compound",
    "eigen_split",
    "exterior_subspace",
    "minus_basis_from_any_extension",
    "minus_intersection",
    "wedge",
    "Graph",
    "MoveStep",
    "deletable_vertex",
    "induced",
    "is_connected",
    "move_sequence",
    "Representation",
    "SimplicityVerdict",
    "det_twist",
    "dual_rep",
    "duality_intertwiner",
    "exterior_rep",
    "hom_dim",
    "simplicity",
    "HypothesisReport",
    "TheoremReport",
    "check_hypotheses",
    "connected_basis_subset",
    "steinberg_mode",
    "verify_theorem",
    "CatalogEntry",
    "entry",
    "infinite_dihedral",
    "list_entries",
    "__version__",
]

__version__ = "0.1.0"
