"""Exact combinatorics of charged bipartitions on the rank-e, level-2
setting: partitions, contents and the c-function, the two-row abacus with
e-period stripping, crystal operators, and the unitary-and-finite-dimensional
classifier with its verification harness.
"""

from .abacus import (
    Abacus,
    AbacusRow,
    EPeriod,
    PeriodDecomposition,
    abacus_to_bipartition,
    build_abacus,
    detect_violating_pair,
    first_e_period,
    is_totally_e_periodic,
    nonzero_columns_from_abacus,
    render_abacus,
)
from .classify import (
    CaseReport,
    ClassificationResult,
    Witness,
    check_griffeth_case,
    classify_theorem,
    fd_obstruction,
    verify_range,
)
from .crystal import (
    BoxRef,
    CrystalGraph,
    apply_e,
    apply_f,
    build_crystal_graph,
    crystal_to_dot,
    crystal_to_json,
    is_source_vertex,
    ordered_boxes,
)
from .fock import (
    ChargeSolution,
    CherednikParams,
    FockParams,
    c_function,
    content_sum,
    fock_to_cherednik,
    rational_str,
    solve_charge_for_zero_c,
    swap_components,
)
from .partitions import (
    Bipartition,
    Partition,
    enumerate_bipartitions,
    format_bipartition,
    format_partition,
    parse_bipartition,
    parse_partition,
    rectangle_dims,
    transpose,
)

__all__ = [name for name in dir() if not name.startswith("_")]
