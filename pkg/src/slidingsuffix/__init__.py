"""Suffix tree over a sliding byte window with O(1) leaf-pointer upkeep."""

from .window import TextWindow
from .tree import SlidingSuffixTree, Counters, MODES
from .matching import find_all, locate, collect_subtree_leaves
from .plp import fresh_index_pair, plp_query
from .oracle import naive_lrs, naive_suffix_tree, naive_occurrences, TreeSketch
from .verify import Lcg, VerifyConfig, run_verify, run_worstcase

__version__ = "0.1.0"

__all__ = [
    "TextWindow",
    "SlidingSuffixTree",
    "Counters",
    "MODES",
    "find_all",
    "locate",
    "collect_subtree_leaves",
    "fresh_index_pair",
    "plp_query",
    "naive_lrs",
    "naive_suffix_tree",
    "naive_occurrences",
    "TreeSketch",
    "Lcg",
    "VerifyConfig",
    "run_verify",
    "run_worstcase",
]
