"""Exhaustive ground truth for small universes.

Every labelled tree on ``n`` nodes is produced by decoding all ``n**(n-2)``
Prüfer sequences, and a collection is tree convex iff one of them passes the
subtree test. Nothing here touches the search or spanning-tree code, so it
can serve as an independent check on both.
"""

from __future__ import annotations

from collections.abc import Iterator
from functools import lru_cache

import numpy as np

from treeconvex.core import Forest, SetCollection
from treeconvex.errors import UniverseTooLargeError

MAX_UNIVERSE = 9
_CACHE_LIMIT = 8
_CHUNK = 1 << 16


def _check_n(n: int) -> None:
    if n > MAX_UNIVERSE:
        raise UniverseTooLargeError(
            f"universe of size {n} exceeds the brute-force cap of {MAX_UNIVERSE}"
        )


def decode_prufer(seqs: np.ndarray, n: int) -> np.ndarray:
    """Decode Prüfer sequences, one per row, into edge arrays of shape (rows, n-1, 2).

    Repeatedly joins the smallest remaining leaf to the next sequence entry;
    the two nodes left at the end form the last edge.
    """
    rows = seqs.shape[0]
    degree = np.ones((rows, n), dtype=np.int16)
    r = np.arange(rows)
    for t in range(n - 2):
        np.add.at(degree, (r, seqs[:, t]), 1)
    out = np.empty((rows, n - 1, 2), dtype=np.int8)
    for t in range(n - 2):
        leaf = np.argmax(degree == 1, axis=1)
        parent = seqs[:, t]
        out[:, t, 0] = leaf
        out[:, t, 1] = parent
        degree[r, leaf] -= 1
        degree[r, parent] -= 1
    ones = degree == 1
    out[:, n - 2, 0] = np.argmax(ones, axis=1)
    out[:, n - 2, 1] = n - 1 - np.argmax(ones[:, ::-1], axis=1)
    return out


def _sequences(n: int, start: int, stop: int) -> np.ndarray:
    codes = np.arange(start, stop, dtype=np.int64)
    seqs = np.empty((stop - start, n - 2), dtype=np.int64)
    for t in range(n - 3, -1, -1):
        seqs[:, t] = codes % n
        codes //= n
    return seqs


@lru_cache(maxsize=None)
def _all_edges_cached(n: int) -> np.ndarray:
    return decode_prufer(_sequences(n, 0, n ** (n - 2)), n)


def _edge_chunks(n: int) -> Iterator[np.ndarray]:
    """Edge arrays (chunk, n-1, 2) covering every labelled tree on n >= 3 nodes."""
    total = n ** (n - 2)
    if n <= _CACHE_LIMIT:
        yield _all_edges_cached(n)
        return
    for start in range(0, total, _CHUNK):
        stop = min(total, start + _CHUNK)
        yield decode_prufer(_sequences(n, start, stop), n)


def all_trees(n: int) -> Iterator[Forest]:
    """Yield each labelled tree on nodes ``0..n-1`` exactly once (1 <= n <= 9)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    _check_n(n)
    if n == 1:
        yield Forest.on_range(1)
        return
    if n == 2:
        yield Forest.on_range(2, [(0, 1)])
        return
    for chunk in _edge_chunks(n):
        for edges in chunk.tolist():
            yield Forest.on_range(n, [tuple(e) for e in edges])


def brute_force_tree_convex(s: SetCollection) -> bool:
    """Search all trees on U(S) for one every set is a subtree of.

    Within a tree the induced subgraph of a set is a forest, so it is
    connected exactly when it has ``|set| - 1`` edges; that count is taken
    for all trees of a chunk at once.
    """
    n = s.universe_size
    _check_n(n)
    distinct = {frozenset(members) for members in s.sets if len(members) > 1}
    if n <= 2 or not distinct:
        return True
    sets = sorted(sorted(d) for d in distinct)
    member = np.zeros((len(sets), n), dtype=bool)
    for row, members in enumerate(sets):
        member[row, members] = True
    need = member.sum(axis=1) - 1

    for chunk in _edge_chunks(n):
        for lo in range(0, chunk.shape[0], _CHUNK):
            part = chunk[lo:lo + _CHUNK]
            a = part[:, :, 0]
            b = part[:, :, 1]
            # inside[t, e, s]: edge e of tree t has both endpoints in set s
            inside = member.T[a] & member.T[b]
            counts = inside.sum(axis=1)
            if np.any(np.all(counts == need, axis=1)):
                return True
    return False
