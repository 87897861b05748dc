from __future__ import annotations

import pytest

from indecomp import CapacityError, PreconditionError
from indecomp.core import dual, is_indecomposable
from indecomp.enumeration import (
    CACHE_ENV,
    PREDICATES,
    enumerate_census,
    extend_classes,
    filter_census,
    resolve_cache_dir,
)
from indecomp.families import b6, c3, d4, order, t4, t_odd, u_odd, w_odd
from indecomp.formats import dumps, loads
from indecomp.morphisms import are_isomorphic, canonical_form, embeds

from oracles import brute_canonical, labeled_tournaments, triangle

# Class counts of tournaments on 3..8 vertices; values come from this
# package's own run and agree with the labelled brute force up to order 5.
GOLDEN = {3: 2, 4: 4, 5: 12, 6: 56, 7: 456, 8: 6880}


def same_classes(found, expected):
    return len(found) == len(expected) and all(
        any(are_isomorphic(a, b) is not None for b in expected) for a in found
    )


@pytest.mark.parametrize("n", [3, 4, 5])
def test_labelled_oracle(n, cache_dir):
    codes = {brute_canonical(T) for T in labeled_tournaments(n)}
    census = enumerate_census(n, cache_dir)
    assert len(census) == len(codes)
    assert {triangle(T) for T in census} == codes


@pytest.mark.parametrize("n, count", sorted(GOLDEN.items()))
def test_golden_counts(n, count, cache_dir):
    assert len(enumerate_census(n, cache_dir)) == count


def test_order_three_and_four(census):
    assert same_classes(census[3].representatives, [order(3), c3()])
    assert same_classes(census[4].representatives, [order(4), t4(), d4(), dual(d4())])


def test_representatives_are_canonical_and_distinct(census):
    for c in census.values():
        codes = [canonical_form(T).code for T in c]
        assert codes == [triangle(T) for T in c]
        assert len(set(codes)) == len(codes)
        assert codes == sorted(codes)


def test_representatives_round_trip(census):
    for c in census.values():
        for T in c:
            assert loads(dumps(T)) == T


def test_five_vertex_indecomposables(census):
    indec = filter_census(census[5], "indecomposable")
    assert same_classes(indec.representatives, [t_odd(2), u_odd(2), w_odd(2)])
    assert indec.counts == {"all": 12, "indecomposable": 3}


def test_filters(census):
    crit = filter_census(census[7], "critical-tournament")
    assert same_classes(crit.representatives, [t_odd(3), u_odd(3), w_odd(3)])
    no_w5 = filter_census(filter_census(census[6], "omits-W5"), "indecomposable")
    assert same_classes(no_w5.representatives, [b6()])
    no_d4 = filter_census(filter_census(census[7], "omits-D4"), "indecomposable")
    assert same_classes(no_d4.representatives, [t_odd(3)])
    assert len(filter_census(census[6], "transitive")) == 1
    assert len(filter_census(census[5], "noncritical-indecomposable")) == 0
    free = filter_census(filter_census(census[7], "indecomposable"), "omits-U5-and-W5")
    assert same_classes(free.representatives, [t_odd(3)])


def test_unknown_predicate(census):
    with pytest.raises(PreconditionError, match="unknown predicate"):
        filter_census(census[3], "pretty")
    assert set(PREDICATES) == {
        "indecomposable",
        "critical-tournament",
        "noncritical-indecomposable",
        "omits-W5",
        "omits-D4",
        "omits-U5-and-W5",
        "transitive",
    }


def test_every_indecomposable_embeds_a_five_vertex_type(census):
    five = [t_odd(2), u_odd(2), w_odd(2)]
    for n in range(5, 8):
        for T in census[n]:
            if is_indecomposable(T):
                assert any(embeds(H, T) is not None for H in five)


def test_range_limits(cache_dir):
    with pytest.raises(CapacityError):
        enumerate_census(9, cache_dir)
    with pytest.raises(PreconditionError):
        enumerate_census(2, cache_dir)


def test_cache_files(tmp_path):
    first = enumerate_census(5, tmp_path)
    assert sorted(p.name for p in tmp_path.iterdir()) == [f"census-v1-n{k}.txt" for k in (3, 4, 5)]
    assert (tmp_path / "census-v1-n5.txt").read_text().startswith("census/v1 n=5 count=12\n")
    assert enumerate_census(5, tmp_path) == first


def test_corrupt_cache_is_rebuilt(tmp_path, caplog):
    enumerate_census(4, tmp_path)
    (tmp_path / "census-v1-n4.txt").write_text("garbage\n")
    assert len(enumerate_census(4, tmp_path)) == 4
    assert "ignoring unreadable census cache" in caplog.text
    assert (tmp_path / "census-v1-n4.txt").read_text().startswith("census/v1 n=4")


def test_no_cache(tmp_path, monkeypatch):
    monkeypatch.setenv(CACHE_ENV, str(tmp_path))
    assert len(enumerate_census(5, use_cache=False)) == 12
    assert list(tmp_path.iterdir()) == []


def test_cache_dir_resolution(tmp_path, monkeypatch):
    monkeypatch.setenv(CACHE_ENV, str(tmp_path / "env"))
    assert resolve_cache_dir() == tmp_path / "env"
    assert resolve_cache_dir(tmp_path / "arg") == tmp_path / "arg"
    monkeypatch.delenv(CACHE_ENV)
    assert resolve_cache_dir().name == "indecomp"


def test_parallel_extension_matches_serial(census):
    serial = extend_classes(census[5].representatives)
    parallel = extend_classes(census[5].representatives, jobs=2)
    assert serial == parallel == list(census[6].representatives)
