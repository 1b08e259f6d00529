"""Inference of restricted regular expressions with interleaving (SIREs)
from positive examples."""
from .core import (Cpos, DuplicateSymbolError, ExampleSet, Factor, Op, Sire,
                   SireSyntaxError, format_sire, parse_sire)
from .orders import tran_reduction, transitive_closure
from .graphs import (BoundExceededError, CycleError, Digraph, UGraph,
                     all_source_sink_paths, approx_max_independent_set,
                     decompose_into_independent_sets, exact_max_independent_set,
                     topological_sort)
from .lang import (enumerate_chain_partitions, infer_operators, minimal_oracle,
                   sire_membership)
from .conminer import con_miner, con_miner_trace
from .condag import con_dag, con_dag_trace

__version__ = "0.1.0"

__all__ = [
    "Cpos", "DuplicateSymbolError", "ExampleSet", "Factor", "Op", "Sire",
    "SireSyntaxError", "format_sire", "parse_sire", "tran_reduction",
    "transitive_closure", "BoundExceededError", "CycleError", "Digraph", "UGraph",
    "all_source_sink_paths", "approx_max_independent_set",
    "decompose_into_independent_sets", "exact_max_independent_set",
    "topological_sort", "enumerate_chain_partitions", "infer_operators",
    "minimal_oracle", "sire_membership", "con_miner", "con_miner_trace",
    "con_dag", "con_dag_trace",
]
