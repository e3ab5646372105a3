"""Tree convexity recognition through acyclicity of the dual hypergraph.

A collection is tree convex iff its dual hypergraph is alpha-acyclic. The
join forest of the dual has one node per element (dual edge ``i`` is
element ``i``), so relabelling it gives a witness forest directly.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from treeconvex.core import Forest, OpCounter, SetCollection, dual_hypergraph
from treeconvex.errors import UnknownElementError
from treeconvex.mcs import gen_forest, run_mcs


@dataclass(frozen=True)
class TreeConvexVerdict:
    convex: bool
    witness: Forest | None = None

    def __post_init__(self) -> None:
        if self.convex != (self.witness is not None):
            raise ValueError("a witness is present exactly when the verdict is convex")

    def __bool__(self) -> bool:
        return self.convex


def is_tree_convex(
    s: SetCollection,
    *,
    tree: bool = False,
    counter: OpCounter | None = None,
) -> TreeConvexVerdict:
    """Decide tree convexity of ``s`` in time linear in its total size.

    The witness is a forest on ``0..n-1``; with ``tree=True`` its components
    are chained together into one spanning tree.

    >>> from treeconvex.core import intern
    >>> is_tree_convex(intern(["abc", "abd", "acd"])).convex
    True
    >>> is_tree_convex(intern(["aef", "cde", "abc", "ace"])).convex
    False
    """
    if s.m == 0:
        return TreeConvexVerdict(True, Forest.on_range(s.universe_size))
    dual = dual_hypergraph(s, counter=counter)
    result = run_mcs(dual, counter=counter)
    if not result.acyclic:
        return TreeConvexVerdict(False)
    # Node ids of the join forest are dual edge indices, i.e. element ids.
    witness = gen_forest(dual, result)
    if counter is not None:
        counter.add(dual.num_edges)
    if tree:
        witness = join_components(witness)
    return TreeConvexVerdict(True, witness)


def join_components(forest: Forest) -> Forest:
    """Chain the components of ``forest`` by their smallest nodes into one tree.

    Safe for any forest a collection is convex with respect to: no set spans
    two components, so the new edges never enter an induced subgraph.
    """
    comps = forest.components()
    if len(comps) <= 1:
        return forest
    bridges = [(a[0], b[0]) for a, b in zip(comps, comps[1:])]
    return Forest(forest.nodes, forest.edges + tuple(bridges))


def tree_test(
    s: SetCollection,
    t: Forest,
    *,
    counter: OpCounter | None = None,
) -> bool:
    """True iff every set of ``s`` induces a connected subgraph of ``t``.

    Every forest edge is offered to every set (O(mn)) to build the induced
    subgraphs; each is then checked by BFS to reach its whole set.
    """
    nodes = t.nodes
    for members in s.sets:
        for e in members:
            if e not in nodes:
                raise UnknownElementError(
                    f"element {s.labels[e]!r} is not a node of the forest"
                )
    member_sets = [set(members) for members in s.sets]
    induced: list[dict[int, list[int]]] = [{} for _ in s.sets]
    for a, b in t.edges:
        for inside, adj in zip(member_sets, induced):
            if a in inside and b in inside:
                adj.setdefault(a, []).append(b)
                adj.setdefault(b, []).append(a)
    ops = len(t.edges) * len(member_sets)

    result = True
    for members, adj in zip(s.sets, induced):
        start = members[0]
        seen = {start}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in adj.get(u, ()):
                ops += 1
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        ops += 1
        if len(seen) != len(members):
            result = False
            break
    if counter is not None:
        counter.add(ops)
    return result


def row_convex_embed(n: int) -> Forest:
    """The chain 0-1-...-(n-1)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return Forest.on_range(n, [(i, i + 1) for i in range(n - 1)])
