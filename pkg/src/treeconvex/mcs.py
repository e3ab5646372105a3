"""Restricted maximum cardinality search on hypergraphs.

Decides alpha-acyclicity in time linear in the hypergraph size and, for
acyclic inputs, yields a join forest on the hyperedges.

Two fixes to the textbook bucket procedure are applied: the vertex rank
counter counts down from n, and the bucket cursor ``j`` is raised as soon
as an edge lands in a bucket above it, instead of blindly incrementing.

Edges are selected from the highest nonempty bucket. Within a bucket the
edge that entered it earliest is taken (FIFO), which is deterministic and
keeps every bucket operation O(1). Passing ``rng`` picks uniformly inside
the bucket instead; the verdict does not depend on the choice.
"""

from __future__ import annotations

import random
from collections import OrderedDict
from dataclasses import dataclass

from treeconvex.core import Forest, Hypergraph, OpCounter
from treeconvex.errors import NotAcyclicError


@dataclass(frozen=True)
class McsResult:
    """Mappings computed by the search. Selection indices are 1-based.

    alpha[v]        rank of vertex v, a bijection onto 1..n (first assigned gets n)
    beta_vertex[v]  index of the first selected edge containing v
    beta_edge[e]    index at which e was selected, None if never selected
    gamma[e]        see :func:`run_mcs`; None when undefined
    selection       selection[i-1] is the edge selected i-th
    """

    alpha: tuple[int, ...]
    beta_vertex: tuple[int, ...]
    beta_edge: tuple[int | None, ...]
    gamma: tuple[int | None, ...]
    selection: tuple[int, ...]
    acyclic: bool

    @property
    def k(self) -> int:
        return len(self.selection)


def run_mcs(
    h: Hypergraph,
    *,
    rng: random.Random | None = None,
    counter: OpCounter | None = None,
) -> McsResult:
    """Run the search over ``h`` and decide acyclicity.

    For an unselected edge, gamma is the largest beta over its vertices; for a
    selected edge, the largest beta among vertices assigned strictly before
    its selection. ``h`` is acyclic iff for every i and every edge s with
    gamma(s) = i, the vertices of s with beta < i all lie in the i-th
    selected edge.
    """
    nv = h.num_vertices
    edges = h.edges
    incidence = h.incidence
    ne = len(edges)
    ops = 0

    buckets: list[OrderedDict[int, None]] = [OrderedDict() for _ in range(max(nv, 1))]
    size = [0] * ne
    gamma: list[int | None] = [None] * ne
    beta_edge: list[int | None] = [None] * ne
    first = buckets[0]
    for e in range(ne):
        first[e] = None
    ops += nv + ne

    alpha = [0] * nv
    beta_vertex = [0] * nv
    selection: list[int] = []
    i = nv + 1
    j = 0 if ne else -1
    k = 0
    while j >= 0:
        bucket = buckets[j]
        if rng is None:
            chosen, _ = bucket.popitem(last=False)
        else:
            chosen = rng.choice(list(bucket))
            del bucket[chosen]
        k += 1
        beta_edge[chosen] = k
        selection.append(chosen)
        size[chosen] = -1
        ops += 1
        for v in edges[chosen]:
            ops += 1
            if alpha[v]:
                continue
            i -= 1
            alpha[v] = i
            beta_vertex[v] = k
            for f in incidence[v]:
                ops += 1
                sf = size[f]
                if sf < 0:
                    continue
                gamma[f] = k
                del buckets[sf][f]
                sf += 1
                if sf < len(edges[f]):
                    size[f] = sf
                    buckets[sf][f] = None
                    if j < sf:
                        j = sf
                else:
                    size[f] = -1
        while j >= 0 and not buckets[j]:
            j -= 1
            ops += 1

    acyclic, scan_ops = _check_selection(edges, selection, beta_vertex, gamma, nv)
    ops += scan_ops
    if counter is not None:
        counter.add(ops)
    return McsResult(
        alpha=tuple(alpha),
        beta_vertex=tuple(beta_vertex),
        beta_edge=tuple(beta_edge),
        gamma=tuple(gamma),
        selection=tuple(selection),
        acyclic=acyclic,
    )


def _check_selection(edges, selection, beta_vertex, gamma, nv) -> tuple[bool, int]:
    k = len(selection)
    by_gamma: list[list[int]] = [[] for _ in range(k + 1)]
    for e, g in enumerate(gamma):
        if g is not None:
            by_gamma[g].append(e)
    index = [0] * nv
    ops = len(gamma) + nv
    for i in range(1, k + 1):
        sel = edges[selection[i - 1]]
        for v in sel:
            index[v] = i
        ops += len(sel)
        for e in by_gamma[i]:
            for v in edges[e]:
                ops += 1
                if beta_vertex[v] < i and index[v] < i:
                    return False, ops
    return True, ops


def is_acyclic(h: Hypergraph) -> bool:
    return run_mcs(h).acyclic


def gen_forest(h: Hypergraph, result: McsResult) -> Forest:
    """Join forest on edge indices: link every edge F to the ``gamma(F)``-th selected edge."""
    if not result.acyclic:
        raise NotAcyclicError("join forest requested for a cyclic hypergraph")
    sel = result.selection
    links = [(f, sel[g - 1]) for f, g in enumerate(result.gamma) if g is not None]
    return Forest(frozenset(range(h.num_edges)), tuple(links))


def instrumented_op_count(h: Hypergraph) -> int:
    """Elementary steps taken by :func:`run_mcs` on ``h`` (deterministic)."""
    counter = OpCounter()
    run_mcs(h, counter=counter)
    return counter.ops
