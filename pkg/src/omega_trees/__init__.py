"""Computable tree calculus on the naturals.

Sequence coding, the Kleene-Brouwer ordering, tree combinators, the
ultrametric point space of a tree, Cantor-Bendixson analysis and measure for
automaton-presented trees, and admissible maps between finite linear orders.
"""
from ._kernels import BACKEND
from .automaton import Automaton
from .cbmeasure import (
    MeasureReport,
    ScatClass,
    ScatReport,
    binary_embedding,
    classify_states,
    complete_core,
    live_states,
    measure_body,
    perfect_kernel,
    positive_measure,
    scat_member,
    splitting_witness,
    to_dot,
    uncountable_states,
)
from .errors import ContractError, OmegaTreesError, UsageError
from .kborder import (
    KbComparison,
    branch_from_kb_descending,
    descending_chain_search,
    is_kb_descending,
    kb_cmp,
    kb_induced_map,
    kb_less,
    kb_order_of,
    kb_sort,
)
from .linorders import (
    LinOrder,
    admissible_check,
    brute_force_strongly_admissible,
    initial_similarity_check,
    solve_strongly_admissible,
    strongly_admissible_check,
)
from .seqcode import decode, encode, pair, pair_ext, unpair, unpair_ext, unzip_pad, zip_pad
from .space import Branch, DistResult, Node, dist, presentation, prod_iso, prod_iso_inv, rho, rho_inv, sum_iso, sum_iso_inv
from .trees import (
    AttTree,
    FiniteTree,
    LazyTree,
    ProductTree,
    RegularTree,
    ShiftClosure,
    SubTree,
    SumTree,
    Tree,
    bar_tree,
    chain_tree,
    elementwise_tree,
    interleave_unfold,
    section_report,
    sg_tree,
)

__version__ = "0.1.0"

__all__ = [
    "AttTree",
    "Automaton",
    "BACKEND",
    "Branch",
    "ContractError",
    "DistResult",
    "FiniteTree",
    "KbComparison",
    "LazyTree",
    "LinOrder",
    "MeasureReport",
    "Node",
    "OmegaTreesError",
    "ProductTree",
    "RegularTree",
    "ScatClass",
    "ScatReport",
    "ShiftClosure",
    "SubTree",
    "SumTree",
    "Tree",
    "UsageError",
    "__version__",
    "admissible_check",
    "bar_tree",
    "binary_embedding",
    "branch_from_kb_descending",
    "brute_force_strongly_admissible",
    "chain_tree",
    "classify_states",
    "complete_core",
    "decode",
    "descending_chain_search",
    "dist",
    "elementwise_tree",
    "encode",
    "initial_similarity_check",
    "interleave_unfold",
    "is_kb_descending",
    "kb_cmp",
    "kb_induced_map",
    "kb_less",
    "kb_order_of",
    "kb_sort",
    "live_states",
    "measure_body",
    "pair",
    "pair_ext",
    "perfect_kernel",
    "positive_measure",
    "presentation",
    "prod_iso",
    "prod_iso_inv",
    "rho",
    "rho_inv",
    "scat_member",
    "section_report",
    "sg_tree",
    "solve_strongly_admissible",
    "splitting_witness",
    "strongly_admissible_check",
    "sum_iso",
    "sum_iso_inv",
    "to_dot",
    "uncountable_states",
    "unpair",
    "unpair_ext",
    "unzip_pad",
    "zip_pad",
]
