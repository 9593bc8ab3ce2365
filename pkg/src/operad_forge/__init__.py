"""Operadic algebra of labelled rooted trees.

Grafting compositions of labelled rooted trees, the degree gradation
with its extremal-term operads, factorization into indecomposable
generators, and the exact generating series of those generators.
"""

from .trees import (
    Forest,
    LabelledRootedTree,
    TreeError,
    act,
    degree,
    enumerate_trees,
    epsilon,
    full_subtree,
    gap,
    in_vertices,
    order_relabel,
    parse_tree,
    render_tree,
    restrict,
    tree_from_json,
    tree_to_json,
)
from .prelie import (
    TreeSum,
    check_extremal_terms,
    check_pre_lie_relation,
    compose_pl,
    compose_pl_linear,
    degree_bounds,
    graft_compose,
    graft_maps,
    max_term,
    min_term,
    parse_tree_sum,
    pre_lie_associator,
)
from .set_operads import (
    Violation,
    check_axioms,
    compose_max,
    compose_min,
    compose_nap,
    f_max_map,
    f_min_map,
    f_nap_map,
)
from .freeness import (
    FreenessReport,
    OperationTree,
    Witness,
    count_indecomposables,
    decomposition_witnesses,
    evaluate,
    factorize,
    find_collision,
    indecomposables,
    is_indecomposable,
    operation_trees,
    split,
    verify_freeness,
)
from .series import (
    PowerSeries,
    SeriesError,
    cayley_series,
    compositional_inverse,
    generator_series,
    series_add,
    series_compose,
    series_mul,
    verify_functional_equation,
)

__all__ = [
    "Forest",
    "FreenessReport",
    "LabelledRootedTree",
    "OperationTree",
    "PowerSeries",
    "SeriesError",
    "TreeError",
    "TreeSum",
    "Violation",
    "Witness",
    "act",
    "cayley_series",
    "check_axioms",
    "check_extremal_terms",
    "check_pre_lie_relation",
    "compose_max",
    "compose_min",
    "compose_nap",
    "compose_pl",
    "compose_pl_linear",
    "compositional_inverse",
    "count_indecomposables",
    "decomposition_witnesses",
    "degree",
    "degree_bounds",
    "enumerate_trees",
    "epsilon",
    "evaluate",
    "f_max_map",
    "f_min_map",
    "f_nap_map",
    "factorize",
    "find_collision",
    "full_subtree",
    "gap",
    "generator_series",
    "graft_compose",
    "graft_maps",
    "in_vertices",
    "indecomposables",
    "is_indecomposable",
    "max_term",
    "min_term",
    "operation_trees",
    "order_relabel",
    "parse_tree",
    "parse_tree_sum",
    "pre_lie_associator",
    "render_tree",
    "restrict",
    "series_add",
    "series_compose",
    "series_mul",
    "split",
    "tree_from_json",
    "tree_to_json",
    "verify_freeness",
    "verify_functional_equation",
]

__version__ = "0.1.0"
