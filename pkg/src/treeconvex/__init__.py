"""Recognize tree convex set collections in linear time.

A collection of sets is tree convex when some tree on the union of its
elements makes every set a subtree. This holds exactly when the dual
hypergraph is alpha-acyclic, which maximum cardinality search decides in
linear time.
"""

from treeconvex.core import (
    Forest,
    Hypergraph,
    OpCounter,
    SetCollection,
    dual_hypergraph,
    intern,
    primal_hypergraph,
)
from treeconvex.errors import (
    BadConfigError,
    EmptySetError,
    NotAcyclicError,
    ParseError,
    TreeConvexError,
    UniverseTooLargeError,
    UnknownElementError,
)
from treeconvex.mcs import McsResult, gen_forest, instrumented_op_count, run_mcs
from treeconvex.recognize import (
    TreeConvexVerdict,
    is_tree_convex,
    join_components,
    row_convex_embed,
    tree_test,
)
from treeconvex.spanning import (
    WeightedItemGraph,
    build_item_graph,
    max_spanning_tree,
    spanning_tree_verdict,
)

__all__ = [
    "BadConfigError", "EmptySetError", "Forest", "Hypergraph", "McsResult",
    "NotAcyclicError", "OpCounter", "ParseError", "SetCollection",
    "TreeConvexError", "TreeConvexVerdict", "UniverseTooLargeError",
    "UnknownElementError", "WeightedItemGraph", "build_item_graph",
    "dual_hypergraph", "gen_forest", "instrumented_op_count", "intern",
    "is_tree_convex", "join_components", "max_spanning_tree",
    "primal_hypergraph", "row_convex_embed", "run_mcs",
    "spanning_tree_verdict", "tree_test",
]
