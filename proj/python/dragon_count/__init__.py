"""Exact tiling counts of dragon regions on the 3.4.6.4 lattice."""

from ._core import (
    GraphError,
    HypothesisViolation,
    PreconditionError,
    census,
    count,
    count_graph,
    count_weighted,
    derive_sides,
    export_graph,
    factorize23,
    formula,
    is_valid,
    kuo_check,
    lemma_identity,
    phi,
    psi,
    region_faces,
    render_svg,
    suite,
    sweep,
)

__all__ = [
    "GraphError",
    "HypothesisViolation",
    "PreconditionError",
    "census",
    "count",
    "count_graph",
    "count_weighted",
    "derive_sides",
    "export_graph",
    "factorize23",
    "formula",
    "is_valid",
    "kuo_check",
    "lemma_identity",
    "phi",
    "psi",
    "region_faces",
    "render_svg",
    "suite",
    "sweep",
]
