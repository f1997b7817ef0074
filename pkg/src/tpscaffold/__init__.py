"""Exact rational tools for totally positive matrices.

Scaffolding graphs and path-sum reconstruction, deleting-derivations
elimination, minors via fraction-free elimination, bordering by outer rows
and columns, and interior line insertion.  Everything is exact: entries are
``fractions.Fraction`` and all objects are immutable, so values can be
shared freely across threads.
"""

from .bordering import (
    BorderSide,
    border,
    border_above,
    border_above_coefficient,
    border_below,
    border_below_coefficient,
    border_left,
    border_right,
    recover_border_params,
)
from .cauchon import (
    CauchonTrace,
    PartialTPResult,
    StepOrder,
    TraceStep,
    ZeroPivot,
    cauchon_trace,
    gamma_intermediate,
    gamma_scaffold,
    le_intermediate,
    le_scaffold,
    partial_tp_check,
    scaffold_entry_from_minors,
)
from .graph import (
    Orientation,
    Path,
    PathSystem,
    ScaffoldGraph,
    blocked_path_sum,
    blocked_path_sum_minor_ratio,
    build_graph,
    enumerate_paths,
    enumerate_paths_bounded,
    enumerate_vertex_disjoint_systems,
    lgv_minor,
    matrix_from_scaffold,
    path_vertices,
    path_weight,
    primary_path,
    system_weight,
    to_dot,
)
from .insertion import (
    InsertionSolution,
    InsertionSystem,
    SolutionCheck,
    affine_above_forms,
    build_insertion_system,
    insert_column,
    insert_row,
    scaffold_prefix_matrix,
    solution_from_prefix_weights,
    solve_strongly_positive,
    verify_solution,
)
from .matrix import (
    Matrix,
    MatrixFormatError,
    NotTotallyPositive,
    Rational,
    TPVerdict,
    det,
    format_matrix,
    format_matrix_json,
    is_totally_positive,
    leading_contiguous,
    leading_with_prefix,
    minor,
    parse_matrix,
    parse_matrix_json,
    submatrix,
    trailing_contiguous,
    trailing_with_suffix,
)

__version__ = "0.1.0"
