"""Semi-transitive orientations: decision, verification, construction, replay.

An orientation of a graph is semi-transitive when it is acyclic and no
directed path of length >= 3 is shortcut by an arc between its endpoints
while two of its vertices stay nonadjacent.  This package decides whether
a graph admits such an orientation, verifies claimed orientations with
machine-checkable certificates, builds closed-form orientations for
several graph families, and replays case-analysis proof scripts.
"""

from .errors import (
    BadParameters,
    BoundExceeded,
    DoubleAssignment,
    FormatError,
    ImproperColoring,
    JumpOutOfRange,
    MissingEdge,
    NotAcyclic,
    NotAnEdge,
    OffsetOutOfRange,
    ParseError,
    SemitransError,
    StepRejected,
    TooLarge,
    UncoveredEdge,
)
from .families import (
    chvatal,
    circulant,
    complete,
    complete_bipartite,
    cycle,
    grotzsch,
    kneser,
    kneser83_sub16,
    mycielski,
    parse_family_spec,
    toeplitz,
    toft,
)
from .graphs import (
    Coloring,
    Graph,
    chromatic_number,
    degree_profile,
    delete_edge,
    girth,
    is_connected,
    is_proper,
    is_triangle_free,
    proper_coloring,
    read_edge_list,
    write_edge_list,
)
from .orientation import (
    DirectedCycle,
    Orientation,
    PartialOrientation,
    SemiTransitive,
    Shortcut,
    ShortcutCertificate,
    Verdict,
    check_semi_transitive,
    find_shortcut,
    find_shortcut_oracle,
    is_acyclic,
    make_orientation,
    peel,
    reach_closure,
    read_arc_list,
    read_orientation,
    topological_order,
    verdict_doc,
    verify_certificate,
    write_arc_list,
)
from .solver import (
    CycleCatalog,
    Contradiction,
    Sat,
    SolveStats,
    SolverConfig,
    Unknown,
    Unsat,
    count_st_orientations,
    enumerate_acyclic_orientations,
    lemma2_propagate,
    longest_directed_path,
    orient_by_coloring,
    short_cycles,
    solve,
    stats_doc,
)
from .constructions import fig4_orientation, lemma8_orientation, toft_orientation
from .proofscript import (
    Assumption,
    ReplayReport,
    Script,
    bundled_script_text,
    format_script,
    parse,
    replay,
    resolve_graph,
)
from .cli import export_dot, main

__version__ = "0.1.0"

__all__ = [
    "Assumption",
    "BadParameters",
    "BoundExceeded",
    "Coloring",
    "Contradiction",
    "CycleCatalog",
    "DirectedCycle",
    "DoubleAssignment",
    "FormatError",
    "Graph",
    "ImproperColoring",
    "JumpOutOfRange",
    "MissingEdge",
    "NotAcyclic",
    "NotAnEdge",
    "OffsetOutOfRange",
    "Orientation",
    "ParseError",
    "PartialOrientation",
    "ReplayReport",
    "Sat",
    "Script",
    "SemiTransitive",
    "SemitransError",
    "Shortcut",
    "ShortcutCertificate",
    "SolveStats",
    "SolverConfig",
    "StepRejected",
    "TooLarge",
    "UncoveredEdge",
    "Unknown",
    "Unsat",
    "Verdict",
    "bundled_script_text",
    "check_semi_transitive",
    "chromatic_number",
    "chvatal",
    "circulant",
    "complete",
    "complete_bipartite",
    "count_st_orientations",
    "cycle",
    "degree_profile",
    "delete_edge",
    "enumerate_acyclic_orientations",
    "export_dot",
    "fig4_orientation",
    "find_shortcut",
    "find_shortcut_oracle",
    "format_script",
    "girth",
    "grotzsch",
    "is_acyclic",
    "is_connected",
    "is_proper",
    "is_triangle_free",
    "kneser",
    "kneser83_sub16",
    "lemma2_propagate",
    "lemma8_orientation",
    "longest_directed_path",
    "main",
    "make_orientation",
    "mycielski",
    "orient_by_coloring",
    "parse",
    "parse_family_spec",
    "peel",
    "proper_coloring",
    "reach_closure",
    "read_arc_list",
    "read_edge_list",
    "read_orientation",
    "replay",
    "resolve_graph",
    "short_cycles",
    "solve",
    "stats_doc",
    "toeplitz",
    "toft",
    "toft_orientation",
    "topological_order",
    "verdict_doc",
    "verify_certificate",
    "write_arc_list",
    "write_edge_list",
]
