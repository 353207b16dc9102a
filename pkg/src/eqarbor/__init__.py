"""Strong equitable vertex 2-arboricity of complete bipartite and tripartite graphs.

Closed-form values with explicit witness colorings, a composition-rule and an
explicit-graph verifier, and an exhaustive search oracle for small instances.
"""

from .closed_form import (
    ConditionReport,
    bipartite_b_condition,
    condition_a,
    condition_b,
    has_proper_equitable_coloring,
    p_value,
    p_value_detail,
    tripartite_b_condition,
    va2_bipartite,
    va2_tripartite,
)
from .construct import ArrangementPlan, algorithm_a, arrange, construct_pattern_witness
from .errors import (
    EqArborError,
    InstanceTooLarge,
    InvalidPart,
    MalformedColoring,
    MissingVertexAssignment,
    NoWitnessFound,
    PreconditionViolated,
    UnsupportedArity,
)
from .model import (
    CaseTag,
    ClassComposition,
    GraphSpec,
    OracleCertificate,
    TreeColoring,
    VaResult,
    Vertex,
    decompose_n,
    normalize,
)
from .oracle import brute_threshold, brute_va, exists_coloring
from .verify import (
    Failure,
    VerificationReport,
    composition_valid,
    composition_violation,
    verify_coloring,
    verify_explicit,
)

__version__ = "0.1.0"

__all__ = [
    "ArrangementPlan",
    "CaseTag",
    "ClassComposition",
    "ConditionReport",
    "EqArborError",
    "Failure",
    "GraphSpec",
    "InstanceTooLarge",
    "InvalidPart",
    "MalformedColoring",
    "MissingVertexAssignment",
    "NoWitnessFound",
    "OracleCertificate",
    "PreconditionViolated",
    "TreeColoring",
    "UnsupportedArity",
    "VaResult",
    "VerificationReport",
    "Vertex",
    "algorithm_a",
    "arrange",
    "bipartite_b_condition",
    "brute_threshold",
    "brute_va",
    "composition_valid",
    "composition_violation",
    "condition_a",
    "condition_b",
    "construct_pattern_witness",
    "decompose_n",
    "exists_coloring",
    "has_proper_equitable_coloring",
    "normalize",
    "p_value",
    "p_value_detail",
    "tripartite_b_condition",
    "va2_bipartite",
    "va2_tripartite",
    "verify_coloring",
    "verify_explicit",
]
