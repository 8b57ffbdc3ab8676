"""Radio labelings and exact radio numbers of diameter-3 Hamming graphs."""

from .exceptional import (
    FormulaDomainError,
    RnFormulaResult,
    RunSearchBudgetError,
    jump_lower_bound,
    labeling_22n,
    labeling_233,
    max_consecutive_run,
    ordering_22n,
    ordering_233,
    radio_number_formula,
)
from .graphs import (
    GraphError,
    HammingGraph,
    Vertex,
    format_graph,
    format_vertex,
    parse_graph,
    parse_vertex,
)
from .labeling import (
    GracefulReport,
    LabelingError,
    RadioLabeling,
    ValidationReport,
    Violation,
    check_graceful,
    read_labeling_csv,
    span_of_ordering,
    validate,
    verify_bijection,
    write_labeling_csv,
)
from .ordering import (
    ConstructionError,
    ConstructionParams,
    MatrixBlock,
    Seed,
    build_blocks,
    build_ordering,
    construction_params,
    seed,
)
from .solver import (
    SolveResult,
    SolverConfig,
    SolverError,
    minimal_remaining_increment,
    solve,
)

__version__ = "0.1.0"

__all__ = [
    "FormulaDomainError",
    "GraphError",
    "GracefulReport",
    "HammingGraph",
    "LabelingError",
    "MatrixBlock",
    "ConstructionError",
    "ConstructionParams",
    "RadioLabeling",
    "RnFormulaResult",
    "RunSearchBudgetError",
    "Seed",
    "SolveResult",
    "SolverConfig",
    "SolverError",
    "ValidationReport",
    "Vertex",
    "Violation",
    "build_blocks",
    "build_ordering",
    "check_graceful",
    "construction_params",
    "format_graph",
    "format_vertex",
    "jump_lower_bound",
    "labeling_22n",
    "labeling_233",
    "max_consecutive_run",
    "minimal_remaining_increment",
    "ordering_22n",
    "ordering_233",
    "parse_graph",
    "parse_vertex",
    "radio_number_formula",
    "read_labeling_csv",
    "seed",
    "solve",
    "span_of_ordering",
    "validate",
    "verify_bijection",
    "write_labeling_csv",
]
