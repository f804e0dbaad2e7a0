"""Analysis of homogeneous coupled cell networks with asymmetric inputs.

Networks are self-maps, one per edge type; on top of that sit fundamental
networks (Cayley graphs of the generated semigroup), network fibrations,
balanced colorings with their quotients, ring/depth architecture, and an
exhaustive theorem-checking harness.
"""

from .architecture import (
    AdjacencyMatrix,
    GroupStructureReport,
    RingDecomposition,
    RingLcmReport,
    SemiPeriod,
    adjacency_matrix,
    depth,
    group_structure,
    is_singular,
    loop_chain_classify,
    loop_chain_prediction,
    ring_decomposition,
    ring_lcm_check,
    semiperiod,
)
from .errors import (
    BudgetExceeded,
    CapExceeded,
    CellNetError,
    EmptyNetwork,
    MalformedNetwork,
    MultipleEdgeTypes,
    NotBackwardConnected,
    NotBalanced,
    NotClosed,
    OutOfRangeCell,
    SizeMismatch,
    TooLarge,
    TypeMismatch,
)
from .fibration import (
    Fibration,
    enumerate_fibrations,
    enumerate_fibrations_bruteforce,
    find_isomorphism,
    is_fibration,
    is_transitive_for,
    propagate_from_root,
    transitive_cells,
)
from .harness import (
    CheckResult,
    SweepReport,
    SweepSpec,
    check_network,
    enumerate_networks,
    sweep,
)
from .network import (
    Network,
    Word,
    backward_connected_cells,
    connected_components,
    evaluate_word,
    input_network,
    is_backward_connected_for,
    reaches,
    restrict_to_edge_type,
    sources,
    strongly_connected_components,
    union_subnetworks,
    validate,
)
from .semigroup import (
    DEFAULT_CAP,
    FundamentalNetwork,
    SemigroupElement,
    evaluation_fibration,
    fundamental_network,
    semigroup_closure,
    word_label,
)
from .synchrony import (
    Coloring,
    canonical_coloring,
    coloring_from_classes,
    enumerate_balanced_colorings,
    finest_balanced_coarsening,
    is_balanced,
    is_quotient_of,
    is_subnetwork_of,
    quotient,
    subnetwork_of_fundamental_criterion,
)

__all__ = [name for name in dir() if not name.startswith("_")]
