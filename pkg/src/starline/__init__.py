"""Exact star edge-coloring toolkit for subcubic multigraphs.

Submodules: multigraph (data model, codecs, canonical forms), density
(exact maximum average degree and girth), starcolor (verifier, exact
solver, criticality), structure (vertex classes, lemma predicates, cube
covers), discharge (charge ledger and audit), atlas (enumeration,
sweeps, cache), cli (command-line front end).
"""

from .density import girth, mad, mad_brute, mad_girth_bound
from .discharge import apply_rules, audit, initial_charges
from .multigraph import (
    FormatError,
    Multigraph,
    build,
    canonical_form,
    emit_edge_list,
    emit_graph6,
    parse_edge_list,
    parse_graph6,
)
from .starcolor import (
    EdgeColoring,
    Violation,
    emit_coloring,
    find_violation,
    is_star_coloring,
    is_star_critical,
    is_star_k_colorable,
    parse_coloring,
    star_chromatic_index,
)
from .structure import (
    ClassCounts,
    VertexProfile,
    check_counting_inequality,
    classify,
    covers_cube,
    lemma_audit,
    strip_ones,
    verify_cover,
)
from .atlas import enumerate_graphs, find_critical, load_cache, summary_text, sweep

__version__ = "0.1.0"

__all__ = [
    "FormatError",
    "Multigraph",
    "build",
    "canonical_form",
    "parse_edge_list",
    "emit_edge_list",
    "parse_graph6",
    "emit_graph6",
    "mad",
    "mad_brute",
    "girth",
    "mad_girth_bound",
    "EdgeColoring",
    "Violation",
    "parse_coloring",
    "emit_coloring",
    "find_violation",
    "is_star_coloring",
    "is_star_k_colorable",
    "star_chromatic_index",
    "is_star_critical",
    "VertexProfile",
    "ClassCounts",
    "classify",
    "strip_ones",
    "check_counting_inequality",
    "lemma_audit",
    "covers_cube",
    "verify_cover",
    "initial_charges",
    "apply_rules",
    "audit",
    "enumerate_graphs",
    "sweep",
    "summary_text",
    "load_cache",
    "find_critical",
    "__version__",
]
