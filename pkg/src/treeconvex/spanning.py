"""Maximum-spanning-tree baseline for tree convexity, O(m n^2).

Build the item graph weighting each pair of elements by how many sets hold
both, take a maximum spanning forest, and test the collection against it.
The pair enumeration is left unoptimised on purpose: this is the reference
the linear recognizer is benchmarked against.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from treeconvex.core import Forest, OpCounter, SetCollection
from treeconvex.recognize import TreeConvexVerdict, tree_test


@dataclass(frozen=True)
class WeightedItemGraph:
    """Nodes ``0..num_nodes-1``; ``weights[(a, b)]`` (a < b) counts sets containing both."""

    num_nodes: int
    weights: dict[tuple[int, int], int]

    def edges(self) -> list[tuple[tuple[int, int], int]]:
        return sorted(self.weights.items())


def build_item_graph(s: SetCollection, counter: OpCounter | None = None) -> WeightedItemGraph:
    weights: dict[tuple[int, int], int] = {}
    ops = 0
    for members in s.sets:
        size = len(members)
        for x in range(size):
            a = members[x]
            for y in range(x + 1, size):
                b = members[y]
                key = (a, b) if a < b else (b, a)
                weights[key] = weights.get(key, 0) + 1
                ops += 1
    if counter is not None:
        counter.add(ops)
    return WeightedItemGraph(s.universe_size, weights)


def max_spanning_tree(
    g: WeightedItemGraph,
    *,
    rng: random.Random | None = None,
    counter: OpCounter | None = None,
) -> Forest:
    """Kruskal on descending weight; one tree per connected component.

    Ties are broken by (smaller endpoint, larger endpoint) ascending, or
    uniformly at random when ``rng`` is given.
    """
    items = list(g.weights.items())
    if rng is None:
        items.sort(key=lambda kv: (-kv[1], kv[0]))
    else:
        rng.shuffle(items)
        items.sort(key=lambda kv: -kv[1])
    ops = len(items) * max(1, math.ceil(math.log2(len(items)))) if items else 0

    parent = list(range(g.num_nodes))
    chosen: list[tuple[int, int]] = []
    target = g.num_nodes - 1
    for (a, b), _w in items:
        ra = a
        while parent[ra] != ra:
            ra = parent[ra]
            ops += 1
        rb = b
        while parent[rb] != rb:
            rb = parent[rb]
            ops += 1
        ops += 1
        if ra == rb:
            continue
        parent[rb] = ra
        _compress(parent, a, ra)
        _compress(parent, b, ra)
        chosen.append((a, b))
        if len(chosen) == target:
            break
    if counter is not None:
        counter.add(ops)
    return Forest.on_range(g.num_nodes, chosen)


def _compress(parent: list[int], x: int, root: int) -> None:
    while parent[x] != root:
        parent[x], x = root, parent[x]


def spanning_tree_verdict(
    s: SetCollection,
    *,
    rng: random.Random | None = None,
    counter: OpCounter | None = None,
) -> TreeConvexVerdict:
    if s.m == 0:
        return TreeConvexVerdict(True, Forest.on_range(s.universe_size))
    tree = max_spanning_tree(build_item_graph(s, counter), rng=rng, counter=counter)
    if tree_test(s, tree, counter=counter):
        return TreeConvexVerdict(True, tree)
    return TreeConvexVerdict(False)
