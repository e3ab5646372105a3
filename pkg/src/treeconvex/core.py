"""Data model: set collections, hypergraphs (primal and dual) and forests.

Elements are interned to dense integer ids ``0..n-1`` in first-seen order;
the original labels are kept in :attr:`SetCollection.labels` so results can
be reported in the caller's vocabulary.
"""

from __future__ import annotations

from collections.abc import Hashable, Iterable, Sequence
from dataclasses import dataclass, field

from treeconvex.errors import EmptySetError

ElementId = int


@dataclass
class OpCounter:
    """Mutable tally of elementary steps, threaded through instrumented code."""

    ops: int = 0

    def add(self, n: int) -> None:
        self.ops += n


@dataclass(frozen=True)
class SetCollection:
    """An ordered list of nonempty sets over interned element ids.

    ``sets[i]`` keeps the elements of the i-th input set in first-seen order
    with duplicates removed. ``labels[e]`` is the external label of id ``e``.
    """

    sets: tuple[tuple[ElementId, ...], ...]
    labels: tuple[Hashable, ...]
    _index: dict[Hashable, ElementId] = field(
        default=None, init=False, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "_index", {lab: i for i, lab in enumerate(self.labels)}
        )

    @property
    def m(self) -> int:
        return len(self.sets)

    @property
    def universe_size(self) -> int:
        return len(self.labels)

    n = universe_size

    @property
    def problem_size(self) -> int:
        """Sum of set sizes, the measure the linear bound is stated in."""
        return sum(len(s) for s in self.sets)

    def id_of(self, label: Hashable) -> ElementId:
        return self._index[label]

    def has_label(self, label: Hashable) -> bool:
        return label in self._index

    def label_sets(self) -> list[list[Hashable]]:
        return [[self.labels[e] for e in s] for s in self.sets]


def intern(raw_sets: Iterable[Iterable[Hashable]]) -> SetCollection:
    """Map arbitrary labels to dense ids, keeping set order and first-seen order.

    Raises :class:`EmptySetError` if any set is empty. An empty outer
    iterable yields the empty collection (m = 0).
    """
    index: dict[Hashable, int] = {}
    labels: list[Hashable] = []
    sets: list[tuple[int, ...]] = []
    for pos, raw in enumerate(raw_sets):
        seen: dict[int, None] = {}
        for lab in raw:
            eid = index.get(lab)
            if eid is None:
                eid = index[lab] = len(labels)
                labels.append(lab)
            seen[eid] = None
        if not seen:
            raise EmptySetError(f"set {pos} is empty")
        sets.append(tuple(seen))
    return SetCollection(tuple(sets), tuple(labels))


@dataclass(frozen=True)
class Hypergraph:
    """Vertices ``0..num_vertices-1`` and a list of hyperedges.

    ``incidence[v]`` lists the indices of the edges containing ``v`` in
    increasing order.
    """

    num_vertices: int
    edges: tuple[tuple[int, ...], ...]
    incidence: tuple[tuple[int, ...], ...]

    @classmethod
    def from_edges(cls, num_vertices: int, edges: Iterable[Iterable[int]]) -> Hypergraph:
        frozen: list[tuple[int, ...]] = []
        incidence: list[list[int]] = [[] for _ in range(num_vertices)]
        for e, raw in enumerate(edges):
            edge = tuple(dict.fromkeys(raw))
            if not edge:
                raise EmptySetError(f"hyperedge {e} is empty")
            for v in edge:
                if not 0 <= v < num_vertices:
                    raise ValueError(f"vertex {v} of edge {e} out of range")
                incidence[v].append(e)
            frozen.append(edge)
        return cls(num_vertices, tuple(frozen), tuple(map(tuple, incidence)))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def size(self) -> int:
        return sum(len(e) for e in self.edges)


def primal_hypergraph(s: SetCollection) -> Hypergraph:
    """The hypergraph (U(S), S)."""
    return Hypergraph.from_edges(s.universe_size, s.sets)


def dual_hypergraph(s: SetCollection, counter: OpCounter | None = None) -> Hypergraph:
    """One vertex per set, one edge per element.

    Edge ``i`` is the set of indices of the sets containing element ``i``;
    this index correspondence is relied on when the join forest is mapped
    back to elements.
    """
    dual_edges: list[list[int]] = [[] for _ in range(s.universe_size)]
    for j, members in enumerate(s.sets):
        for e in members:
            dual_edges[e].append(j)
    if counter is not None:
        counter.add(s.problem_size + s.universe_size)
    # A dual vertex j lies in dual edge e exactly when e is in set j.
    incidence = tuple(tuple(sorted(members)) for members in s.sets)
    return Hypergraph(s.m, tuple(map(tuple, dual_edges)), incidence)


class _DisjointSets:
    __slots__ = ("parent",)

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        return True


@dataclass(frozen=True)
class Forest:
    """An undirected acyclic graph; edges are stored as sorted ``(a, b)`` with a < b."""

    nodes: frozenset[int]
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        norm = sorted({(min(a, b), max(a, b)) for a, b in self.edges})
        if len(norm) != len(self.edges):
            raise ValueError("duplicate forest edge")
        pos = {v: i for i, v in enumerate(sorted(self.nodes))}
        ds = _DisjointSets(len(pos))
        for a, b in norm:
            if a == b:
                raise ValueError(f"self-loop on {a}")
            if a not in pos or b not in pos:
                raise ValueError(f"edge ({a}, {b}) has an endpoint outside the node set")
            if not ds.union(pos[a], pos[b]):
                raise ValueError(f"edge ({a}, {b}) closes a cycle")
        object.__setattr__(self, "edges", tuple(norm))

    @classmethod
    def on_range(cls, n: int, edges: Iterable[tuple[int, int]] = ()) -> Forest:
        return cls(frozenset(range(n)), tuple(edges))

    def components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by smallest member."""
        order = sorted(self.nodes)
        pos = {v: i for i, v in enumerate(order)}
        ds = _DisjointSets(len(order))
        for a, b in self.edges:
            ds.union(pos[a], pos[b])
        groups: dict[int, list[int]] = {}
        for v in order:
            groups.setdefault(ds.find(pos[v]), []).append(v)
        return sorted(groups.values(), key=lambda g: g[0])

    def is_tree(self) -> bool:
        return len(self.edges) == max(len(self.nodes) - 1, 0)

    def relabel(self, mapping: Sequence[int] | dict[int, int]) -> Forest:
        return Forest(
            frozenset(mapping[v] for v in self.nodes),
            tuple((mapping[a], mapping[b]) for a, b in self.edges),
        )
