from __future__ import annotations

import json

import pytest
from hypothesis import given

from indecomp import ParseError
from indecomp.families import c3, order, w_odd
from indecomp.formats import (
    dump_census,
    dumps,
    load_census,
    loads,
    parse_arcs,
    parse_json,
    parse_triangle,
    sniff,
    to_arcs,
    to_json,
    to_triangle,
)

from conftest import tournaments


def test_triangle_layout():
    assert to_triangle(c3()) == "3\n101\n"
    assert to_triangle(order(1)) == "1\n\n"


def test_arcs_layout():
    assert to_arcs(c3()) == "3\n0 1\n1 2\n2 0\n"


def test_json_layout():
    data = json.loads(to_json(c3()))
    assert data == {"n": 3, "arcs": [[0, 1], [1, 2], [2, 0]]}


@given(tournaments())
def test_round_trip_every_format(T):
    for fmt in ("triangle", "arcs", "json"):
        text = dumps(T, fmt)
        assert loads(text) == T
        assert dumps(loads(text), fmt) == text


@pytest.mark.parametrize(
    "text, fmt",
    [("3\n101\n", "triangle"), ("3\n10x\n", "triangle"), ("1\n", "triangle"), ("3\n0 1\n1 2\n2 0\n", "arcs"), ('{"n": 1, "arcs": []}', "json"), ("census/v1 n=3 count=0\n", "census")],
)
def test_sniff(text, fmt):
    assert sniff(text) == fmt


def test_parse_errors_carry_position():
    with pytest.raises(ParseError) as info:
        parse_triangle("3\n10x\n")
    assert (info.value.line, info.value.column) == (2, 3)
    with pytest.raises(ParseError) as info:
        parse_triangle("three\n")
    assert info.value.line == 1
    with pytest.raises(ParseError, match="expected 3 bits"):
        parse_triangle("3\n10\n")
    with pytest.raises(ParseError) as info:
        parse_arcs("3\n0 1\n1 two\n")
    assert info.value.line == 3
    with pytest.raises(ParseError) as info:
        parse_json('{"n": 3,\n "arcs": [}')
    assert info.value.line == 2
    with pytest.raises(ParseError):
        parse_json('{"n": 3}')
    with pytest.raises(ParseError, match="no orientation"):
        parse_arcs("3\n0 1\n")


def test_census_file_round_trip():
    reps = [order(4), w_odd(2)]
    with pytest.raises(ParseError):
        load_census(dump_census(4, reps))
    text = dump_census(5, [w_odd(2), w_odd(2)])
    assert text.splitlines()[0] == "census/v1 n=5 count=2"
    assert load_census(text) == (5, [w_odd(2), w_odd(2)])
    with pytest.raises(ParseError, match="announces"):
        load_census("census/v1 n=3 count=2\n111\n")
    with pytest.raises(ParseError):
        loads(text)
