"""Text formats: native collections, CATS bid files, witness edge lists.

Native collection format::

    # comment
    a b c
    a b d e

One set per line, whitespace-separated labels. Zero-length lines are
skipped; a line holding only whitespace is an empty set and is rejected.

Witness format: one ``a b`` edge per line, endpoints in element-id order,
lines sorted by id pair.
"""

from __future__ import annotations

import logging

from treeconvex.core import Forest, SetCollection, intern
from treeconvex.errors import EmptySetError, ParseError, UnknownElementError

logger = logging.getLogger(__name__)


def _decode(text: bytes | str) -> str:
    if isinstance(text, bytes):
        try:
            return text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not valid UTF-8: {exc}") from None
    return text


def parse_collection(text: bytes | str) -> SetCollection:
    raw_sets: list[list[str]] = []
    for lineno, line in enumerate(_decode(text).splitlines(), start=1):
        if not line:
            continue
        stripped = line.strip()
        if stripped.startswith("#"):
            continue
        if not stripped:
            raise EmptySetError(f"line {lineno}: empty set")
        raw_sets.append(stripped.split())
    if not raw_sets:
        raise ParseError("no sets in input")
    return intern(raw_sets)


def serialize_collection(s: SetCollection) -> str:
    lines = []
    for labels in s.label_sets():
        tokens = [str(lab) for lab in labels]
        for tok in tokens:
            if not tok or tok.startswith("#") or any(c.isspace() for c in tok):
                raise ValueError(f"label {tok!r} cannot be written in the native format")
        lines.append(" ".join(tokens))
    return "".join(line + "\n" for line in lines)


_CATS_HEADERS = ("goods", "bids", "dummy")


def parse_cats(text: bytes | str) -> SetCollection:
    """Read a CATS bid file; one set per bid holding its real goods.

    Header lines ``goods N`` and ``bids M`` must precede the bids; ``dummy D``
    and unknown keys are accepted (the latter with a warning). Bid lines are
    ``<id> <price> <good> ... #``. Prices are ignored and goods numbered
    ``N`` or above (dummy goods) are dropped with a warning.
    """
    header: dict[str, int] = {}
    raw_sets: list[list[str]] = []
    dropped_dummies = 0
    for lineno, line in enumerate(_decode(text).splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("%"):
            continue
        tokens = stripped.split()
        head = tokens[0]
        if not _is_int(head):
            key = head.lower()
            if len(tokens) != 2 or not _is_int(tokens[1]):
                if key in _CATS_HEADERS:
                    raise ParseError(f"malformed header {stripped!r}", lineno)
                logger.warning("line %d: ignoring unrecognised header %r", lineno, stripped)
                continue
            if key not in _CATS_HEADERS:
                logger.warning("line %d: ignoring unrecognised header %r", lineno, stripped)
                continue
            if raw_sets:
                raise ParseError(f"header {key!r} after the first bid", lineno)
            value = int(tokens[1])
            if value < 0:
                raise ParseError(f"negative {key} count", lineno)
            header[key] = value
            continue

        if "goods" not in header or "bids" not in header:
            raise ParseError("bid line before the 'goods' and 'bids' headers", lineno)
        if tokens[-1] != "#":
            raise ParseError("bid line must end with '#'", lineno)
        if len(tokens) < 2:
            raise ParseError("bid line missing its price", lineno)
        try:
            float(tokens[1])
        except ValueError:
            raise ParseError(f"bad price {tokens[1]!r}", lineno) from None
        goods = tokens[2:-1]
        if not goods:
            raise EmptySetError(f"line {lineno}: bid {head} has no goods")
        if len(raw_sets) == header["bids"]:
            raise ParseError(f"more bid lines than the declared {header['bids']}", lineno)
        n_goods = header["goods"]
        real = []
        for tok in goods:
            if not _is_int(tok) or int(tok) < 0:
                raise ParseError(f"bad good {tok!r}", lineno)
            if int(tok) >= n_goods:
                dropped_dummies += 1
                continue
            real.append(str(int(tok)))
        if not real:
            raise EmptySetError(f"line {lineno}: bid {head} has only dummy goods")
        raw_sets.append(real)

    if "goods" not in header or "bids" not in header:
        raise ParseError("missing 'goods' or 'bids' header")
    if len(raw_sets) != header["bids"]:
        raise ParseError(f"declared {header['bids']} bids, found {len(raw_sets)}")
    if not raw_sets:
        raise ParseError("no bids in input")
    if dropped_dummies:
        logger.warning("dropped %d dummy good occurrence(s) numbered >= %d",
                       dropped_dummies, header["goods"])
    return intern(raw_sets)


def _is_int(tok: str) -> bool:
    try:
        int(tok)
    except ValueError:
        return False
    return True


def looks_like_cats(text: bytes | str) -> bool:
    for line in _decode(text).splitlines():
        stripped = line.strip()
        if not stripped or stripped.startswith("%"):
            continue
        tokens = stripped.split()
        return len(tokens) == 2 and tokens[0].lower() in _CATS_HEADERS
    return False


def format_witness(s: SetCollection, forest: Forest) -> str:
    return "".join(f"{s.labels[a]} {s.labels[b]}\n" for a, b in sorted(forest.edges))


def parse_witness(text: bytes | str, s: SetCollection) -> Forest:
    """Read an edge list against the labels of ``s``; nodes are all of U(S)."""
    edges = []
    for lineno, line in enumerate(_decode(text).splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = stripped.split()
        if len(tokens) != 2:
            raise ParseError("expected two labels per edge", lineno)
        ids = []
        for tok in tokens:
            if not s.has_label(tok):
                raise UnknownElementError(f"line {lineno}: unknown element {tok!r}")
            ids.append(s.id_of(tok))
        edges.append(tuple(ids))
    try:
        return Forest.on_range(s.universe_size, edges)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
