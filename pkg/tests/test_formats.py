import logging
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from treeconvex import EmptySetError, ParseError, UnknownElementError, intern, is_tree_convex
from treeconvex.formats import (
    format_witness,
    looks_like_cats,
    parse_cats,
    parse_collection,
    parse_witness,
    serialize_collection,
)
from treeconvex.oracle import brute_force_tree_convex

from oracles import FIG1A, FIG2A

CATS = Path(__file__).parent / "fixtures" / "cats"


def test_parse_fig2a():
    s = parse_collection(b"a b c\na b d e\nb c d\n")
    assert s.label_sets() == FIG2A


def test_parse_with_comment():
    s = parse_collection("# comment\n1 3\n1 5\n1 9\n")
    assert s.label_sets() == FIG1A


def test_parse_empty_input():
    with pytest.raises(ParseError):
        parse_collection("")
    with pytest.raises(ParseError):
        parse_collection("# only a comment\n\n")


def test_parse_whitespace_line_is_empty_set():
    with pytest.raises(EmptySetError, match="line 2"):
        parse_collection("a b\n   \nc\n")


def test_parse_bad_utf8():
    with pytest.raises(ParseError):
        parse_collection(b"a \xff\n")


tokens = st.text(alphabet="abcxyz0123456789_-.", min_size=1, max_size=4)


@given(st.lists(st.lists(tokens, min_size=1, max_size=5), min_size=1, max_size=6))
def test_round_trip(raw):
    s = parse_collection("\n".join(" ".join(x) for x in raw))
    again = parse_collection(serialize_collection(s))
    assert again == s


def test_serialize_rejects_unwritable_label():
    with pytest.raises(ValueError):
        serialize_collection(intern([["a b"]]))


def test_witness_round_trip():
    s = intern(FIG2A)
    w = is_tree_convex(s).witness
    text = format_witness(s, w)
    assert parse_witness(text, s) == w
    assert text == "".join(sorted(text.splitlines(keepends=True), key=lambda l: tuple(
        s.id_of(x) for x in l.split())))


def test_witness_unknown_label():
    with pytest.raises(UnknownElementError):
        parse_witness("a zzz\n", intern(FIG2A))


def test_cats_two_bids():
    s = parse_cats("goods 3\nbids 2\n0 1.5 0 1 #\n1 2.0 1 2 #\n")
    assert s.label_sets() == [["0", "1"], ["1", "2"]]


def test_cats_wellformed_fixture_drops_dummies(caplog):
    with caplog.at_level(logging.WARNING):
        s = parse_cats((CATS / "wellformed_convex.txt").read_bytes())
    assert s.m == 5
    assert s.universe_size == 6
    assert ["2", "3"] in s.label_sets()
    assert "dummy" in caplog.text


def test_cats_unknown_header_warns(caplog):
    with caplog.at_level(logging.WARNING):
        s = parse_cats((CATS / "unknown_header.txt").read_text())
    assert s.m == 2
    assert "price_model" in caplog.text


@pytest.mark.parametrize("name, error, line", [
    ("too_many_bids.txt", ParseError, 5),
    ("too_few_bids.txt", ParseError, None),
    ("missing_hash.txt", ParseError, 3),
    ("empty_bid.txt", EmptySetError, None),
])
def test_cats_malformed(name, error, line):
    with pytest.raises(error) as exc:
        parse_cats((CATS / name).read_text())
    if line is not None:
        assert exc.value.line == line


def test_cats_bid_before_header():
    with pytest.raises(ParseError):
        parse_cats("0 1.0 0 1 #\n")


def test_cats_bad_good_token():
    with pytest.raises(ParseError):
        parse_cats("goods 3\nbids 1\n0 1.0 0 x #\n")


@pytest.mark.parametrize("name, expected", [
    ("wellformed_convex.txt", True),
    ("wellformed_cyclic.txt", False),
    ("unknown_header.txt", True),
])
def test_cats_verdicts_match_oracle(name, expected):
    s = parse_cats((CATS / name).read_text())
    assert is_tree_convex(s).convex == brute_force_tree_convex(s) == expected


def test_looks_like_cats():
    assert looks_like_cats((CATS / "wellformed_convex.txt").read_text())
    assert not looks_like_cats("a b c\n")
