"""Maximum-clique solving by recursive graph decomposition (DBK: splitting,
bounds, k-core) with interchangeable subsolvers, including an emulated
quantum-annealer backend with parallel disjoint clique embeddings."""

__version__ = "0.1.0"

from .bounds import (
    BoundReport,
    bound_report,
    edge_count_upper_bound,
    greedy_clique_lower_bound,
    greedy_coloring_upper_bound,
    k_core,
    upper_bound,
)
from .engine import DbkConfig, DbkResult, SubgraphRecord, SubProblem, dbk_solve, split
from .exact import CliqueResult, max_clique_bruteforce, max_clique_exact
from .graph import (
    Graph,
    complement,
    generate_er,
    induced_subgraph,
    is_clique,
    is_connected,
    load_graph,
    lowest_degree_vertex,
    remove_vertex,
    save_graph,
)
from .metrics import (
    RunSummary,
    SubgraphRunRecord,
    TtsReport,
    gsp,
    gsp_histogram,
    summarize_run,
    tts_fixed,
    tts_opt,
)
from .qubo import (
    Ising,
    Qubo,
    build_mc_qubo,
    energy,
    extract_clique,
    ising_energy,
    qubo_to_ising,
)
from .seeds import derive_seed

__all__ = [
    "BoundReport",
    "CliqueResult",
    "DbkConfig",
    "DbkResult",
    "Graph",
    "Ising",
    "Qubo",
    "RunSummary",
    "SubProblem",
    "SubgraphRecord",
    "SubgraphRunRecord",
    "TtsReport",
    "bound_report",
    "build_mc_qubo",
    "complement",
    "dbk_solve",
    "derive_seed",
    "edge_count_upper_bound",
    "energy",
    "extract_clique",
    "generate_er",
    "greedy_clique_lower_bound",
    "greedy_coloring_upper_bound",
    "gsp",
    "gsp_histogram",
    "induced_subgraph",
    "is_clique",
    "is_connected",
    "ising_energy",
    "k_core",
    "load_graph",
    "lowest_degree_vertex",
    "max_clique_bruteforce",
    "max_clique_exact",
    "qubo_to_ising",
    "remove_vertex",
    "save_graph",
    "split",
    "summarize_run",
    "tts_fixed",
    "tts_opt",
    "upper_bound",
]
