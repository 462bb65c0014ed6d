"""Exact toughness, connectivity, independence and claw certificates for
small graphs, plus generators for the bridged double-cycle family, a claim
ledger, and a census of regular graphs."""

from .formats import (
    EdgeListError,
    Graph6Error,
    ParseError,
    parse_edge_list,
    parse_graph6,
    serialize_edge_list,
    serialize_graph6,
    to_dot,
)
from .generators import (
    JmLabeling,
    LabeledGraph,
    build_jm,
    complete,
    cycle,
    cycle_power,
    line_graph,
    path,
    petersen,
    random_connected_graph,
    star,
)
from .graphs import (
    EnvelopeError,
    Graph,
    bits,
    complement,
    components,
    from_edges,
    mask_of,
    relabel,
)
from .invariants import (
    INFINITE,
    ConnectivityCertificate,
    StarInstance,
    ToughnessCertificate,
    claw_centers,
    connectivity,
    cutsets_of_size,
    independence_number,
    induced_stars,
    is_claw_free,
    is_t_tough,
    toughness,
    toughness_oracle,
)
from .search import (
    CensusResult,
    SearchSpec,
    canonical_form,
    enumerate_regular,
    labeled_regular_class_forms,
    run_census,
)
from .verify import CLAIM_IDS, ClaimReport, ledger_json, run_ledger

__version__ = "0.1.0"

__all__ = [
    "CLAIM_IDS",
    "CensusResult",
    "ClaimReport",
    "ConnectivityCertificate",
    "EdgeListError",
    "EnvelopeError",
    "Graph",
    "Graph6Error",
    "INFINITE",
    "JmLabeling",
    "LabeledGraph",
    "ParseError",
    "SearchSpec",
    "StarInstance",
    "ToughnessCertificate",
    "bits",
    "build_jm",
    "canonical_form",
    "claw_centers",
    "complement",
    "complete",
    "components",
    "connectivity",
    "cutsets_of_size",
    "cycle",
    "cycle_power",
    "enumerate_regular",
    "from_edges",
    "independence_number",
    "induced_stars",
    "is_claw_free",
    "is_t_tough",
    "labeled_regular_class_forms",
    "ledger_json",
    "line_graph",
    "mask_of",
    "parse_edge_list",
    "parse_graph6",
    "path",
    "petersen",
    "random_connected_graph",
    "relabel",
    "run_census",
    "run_ledger",
    "serialize_edge_list",
    "serialize_graph6",
    "star",
    "to_dot",
    "toughness",
    "toughness_oracle",
]
