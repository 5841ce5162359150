"""Graph algorithms on partially complemented adjacency lists."""

from .contraction import contract_partition, contract_set
from .graph_core import Graph, GenSpec, complement, degree_stats, generate
from .ledger import WorkLedger
from .matching_bipartite import build_bipartite_representative, hopcroft_karp, maximum_bipartite_matching
from .matching_general import find_ap_set, maximum_matching
from .pclist_core import (
    ModeError,
    PCList,
    build_in_representative,
    build_out_representative,
    build_plain,
    build_seidel_pclist,
    greedy_gale_berlekamp,
    represented_graph,
    stored_graph,
)
from .reachability import diameter, eccentricities, transitive_closure
from .traversal import connected_components, pclist_bfs, pclist_dfs

__version__ = "0.1.0"
