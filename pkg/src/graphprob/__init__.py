"""Exact workbench for operator distributions indexed by a directed multigraph.

The objects live over a finite directed multigraph: admissible edge words
form a partial monoid, each word carries a creation generator and its
adjoint, and the diagonal subalgebra spanned by vertex projections plays
the role of the scalars.  Two backends realize the same generators, one
by rewriting from the defining relations, one by acting on a truncated
path space, and every computation is exact over rational complex
coefficients.  Analyzers compare moments, cumulants, and structural
predictions across the two backends.
"""

from .algebra import (
    AlgebraElement,
    DiagonalElement,
    FaithfulnessReport,
    faithfulness_probe,
)
from .analyzers import (
    AuditReport,
    DecompositionReport,
    FreenessReport,
    RDiagonalReport,
    SemicircularReport,
    build_semicircular_system,
    check_freeness,
    check_r_diagonal,
    check_semicircular,
    claims_audit,
    decompose,
)
from .cumulants import (
    CumulantFunctional,
    CumulantSource,
    DressedTag,
    NCPartition,
    PairSource,
    catalan,
    cumulant_to_moment,
    dressed_tags,
    enumerate_nc,
    mixed_cumulant_scan,
    moment_to_cumulant,
    nested_evaluate,
)
from .errors import (
    ArityBoundError,
    BackendMismatchError,
    DepthError,
    DomainError,
    GraphSyntaxError,
)
from .graphs import (
    Edge,
    EdgeClasses,
    Graph,
    PathWord,
    classify_edges,
    concat,
    diagram_distinct,
    enumerate_paths,
    parse_graph,
    parse_word,
    primitive_root,
    strip_prefix,
)
from .operators import (
    AXIOMATIC,
    FOCK,
    Backend,
    GeneratorSymbol,
    Monomial,
    apply_generator_word,
    fock_apply,
    reduce_word,
    required_depth,
)
from .scalars import Scalar

__version__ = "0.1.0"

__all__ = [
    "AXIOMATIC",
    "AlgebraElement",
    "ArityBoundError",
    "AuditReport",
    "Backend",
    "BackendMismatchError",
    "CumulantFunctional",
    "CumulantSource",
    "DecompositionReport",
    "DepthError",
    "DiagonalElement",
    "DomainError",
    "DressedTag",
    "Edge",
    "EdgeClasses",
    "FOCK",
    "FaithfulnessReport",
    "FreenessReport",
    "GeneratorSymbol",
    "Graph",
    "GraphSyntaxError",
    "Monomial",
    "NCPartition",
    "PairSource",
    "PathWord",
    "RDiagonalReport",
    "Scalar",
    "SemicircularReport",
    "apply_generator_word",
    "build_semicircular_system",
    "catalan",
    "check_freeness",
    "check_r_diagonal",
    "check_semicircular",
    "claims_audit",
    "classify_edges",
    "concat",
    "cumulant_to_moment",
    "decompose",
    "diagram_distinct",
    "dressed_tags",
    "enumerate_nc",
    "enumerate_paths",
    "faithfulness_probe",
    "fock_apply",
    "mixed_cumulant_scan",
    "moment_to_cumulant",
    "nested_evaluate",
    "parse_graph",
    "parse_word",
    "primitive_root",
    "reduce_word",
    "required_depth",
    "strip_prefix",
    "__version__",
]
