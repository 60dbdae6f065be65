"""marnet: algorithmic complexity of graphs at desk scale.

Estimates graph algorithmic complexity by enumerating small 2-D Turing
machines (coding-theorem tables) and decomposing adjacency matrices into
blocks (BDM), computes perturbation signatures and reprogrammability
indices, and generates maximal-algorithmic-randomness graphs by greedy
single-edge search.
"""

from .backend import active_backend
from .bdm import (
    BdmValue,
    BlockHistogram,
    NbdmValue,
    bdm,
    max_bdm,
    max_bdm_composition,
    min_bdm,
    min_bdm_uniform,
    nbdm,
)
from .ctm import (
    CtmTable,
    NoTableDataError,
    TableChecksumError,
    TableError,
    TableFormatError,
    TableVersionError,
    build_ctm_table,
    default_table,
    load_table,
    lookup,
    save_table,
)
from .dynamics import (
    ElementClassification,
    Signature,
    absolute_programmability,
    classify,
    contribution,
    relative_programmability,
    signature,
    signature_to_csv,
)
from .entropy import (
    EntropyReport,
    adjacency_entropy,
    binary_entropy,
    block_entropy,
    degree_entropy,
    entropy_report,
)
from .graphs import (
    ElementNotFoundError,
    Graph,
    GraphElement,
    GraphParseError,
    add_edge,
    complete_graph,
    cycle_graph,
    delete_edge,
    delete_element,
    delete_node,
    deserialize,
    empty_graph,
    erdos_renyi,
    erdos_renyi_gnm,
    from_edge_list_text,
    load_graph,
    rado_graph,
    save_graph,
    serialize,
    star_graph,
    to_edge_list_text,
)
from .machines import (
    HALT,
    RunResult,
    TuringMachine2D,
    machine_from_index,
    machine_space_size,
    run_machine,
)
from .marpa import (
    Deficiency,
    MarCandidate,
    MarConfig,
    MarStep,
    MarTrajectory,
    mar_ensemble,
    marpa_run,
    marpa_step,
    randomness_deficiency,
    trajectory_to_json,
)
from .records import ExperimentRecord

__version__ = "0.1.0"
