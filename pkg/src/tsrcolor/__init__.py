"""Total colourings distinguishing vertex weights within a fixed distance.

A total colouring assigns a colour to every vertex and edge; a vertex's
weight is its own colour plus the colours of its incident edges. This
package builds colourings whose weights differ on every vertex pair at
distance at most r, using few colours relative to the maximum degree.
"""

from .errors import (
    DegenerateGraph,
    DuplicateEdge,
    EscalationCapExceeded,
    GraphError,
    InfeasibleTarget,
    InvalidArgs,
    LoopEdge,
    NoTrials,
    ParameterOutOfRange,
    ParseError,
    RadiusTooSmall,
    ResampleBudgetExceeded,
    SearchBudgetExceeded,
    TsrError,
    VertexOutOfRange,
)
from .graphs import (
    DegreePartition,
    Graph,
    build_graph,
    degree_partition,
    dr_upper_bounds,
    r_neighborhood,
)
from .ordering import (
    BackwardStats,
    EventFrequencies,
    LemmaReport,
    RandomOrdering,
    backward_stats,
    check_lemma_properties,
    chernoff_tail_bound,
    estimate_binomial_tail,
    estimate_event_frequency,
    f1_limit,
    f2_floor,
    f3_limit,
    i_threshold,
    resample_until_good,
    sample_ordering,
    tracked_vertices,
)
from .coloring import (
    AuditRecord,
    ColoringState,
    DeltaInterval,
    Params,
    SumInterval,
    TotalColoring,
    apply_target,
    availability_audit,
    choose_target,
    derive_params,
    edge_delta_interval,
    feasible_sum_interval,
    finalize_vertex_colors,
    init_state,
    run_algorithm,
    theorem_bounds,
)
from .verify import (
    VerifyReport,
    all_vertex_weights,
    check_palette,
    find_conflicts,
    verify_coloring,
    vertex_weight,
)
from .exact import is_colorable, min_strength
from .generators import (
    complete,
    cycle,
    generate_graph,
    gnp,
    path,
    regular,
    star,
)
from .fileio import (
    ColoringData,
    format_run_report,
    read_coloring,
    read_graph,
    read_run_report,
    write_coloring,
    write_graph,
    write_run_report,
)

__version__ = "0.1.0"
