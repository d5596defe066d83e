"""Forest parsing, generators, matchings."""

import math
import random

import pytest

from seifert import (Forest, ForestError, disjoint_union, dynkin,
                     enumerate_matchings, parse_forest, path,
                     perfect_matching, relabel, remove_vertices, star)
from seifert.forest import matchings_by_size

from conftest import random_forest


def test_parse_round_trip():
    f = dynkin("E", 7)
    assert parse_forest(f.to_text()) == f


def test_parse_comments_and_blanks():
    f = parse_forest("# a tree\n\nv 3\ne 0 1\n# mid\ne 1 2\n")
    assert f == path(3)


@pytest.mark.parametrize("text", [
    "", "e 0 1", "v 3\ne 0 3", "v 3\ne 0 0", "v 2\nv 2", "v two",
    "v 3\ne 0 1\ne 0 1", "v 3\ne 0 1\ne 1 2\ne 0 2", "w 3",
])
def test_parse_rejects_bad_input(text):
    with pytest.raises(ForestError):
        parse_forest(text)


def test_forest_rejects_cycles_and_bad_labels():
    with pytest.raises(ForestError):
        Forest.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    with pytest.raises(ForestError):
        Forest.from_edges(2, [(0, 5)])
    with pytest.raises(ForestError):
        Forest.from_edges(2, [(1, 1)])


def test_dynkin_shapes():
    a5 = dynkin("A", 5)
    assert a5.sorted_edges == [(0, 1), (1, 2), (2, 3), (3, 4)]
    d4 = dynkin("D", 4)
    assert sorted(d4.degree(v) for v in range(4)) == [1, 1, 1, 3]
    e6 = dynkin("E", 6)
    assert sorted(e6.degree(v) for v in range(6)) == [1, 1, 1, 2, 2, 3]
    assert star(4) == dynkin("D", 4)
    with pytest.raises(ForestError):
        dynkin("E", 9)
    with pytest.raises(ForestError):
        dynkin("D", 3)
    with pytest.raises(ForestError):
        dynkin("F", 4)


def test_path_matching_count_is_fibonacci():
    # matchings of a path on n vertices: F(n+1) with F(1)=F(2)=1
    fib = [1, 1]
    while len(fib) < 12:
        fib.append(fib[-1] + fib[-2])
    for n in range(1, 10):
        assert len(enumerate_matchings(path(n))) == fib[n]


def test_star_matchings():
    # empty matching plus one per spoke
    assert len(enumerate_matchings(star(7))) == 7


def test_matchings_are_sorted_and_unique():
    f = dynkin("D", 6)
    ms = enumerate_matchings(f)
    assert ms[0].edges == ()
    keys = [m.edges for m in ms]
    assert keys == sorted(set(keys))
    grouped = matchings_by_size(f)
    assert sum(len(g) for g in grouped) == len(ms)


def test_perfect_matching_unique_and_correct():
    pm = perfect_matching(path(6))
    assert pm is not None and pm.edges == ((0, 1), (2, 3), (4, 5))
    assert perfect_matching(path(5)) is None
    assert perfect_matching(dynkin("D", 4)) is None
    assert perfect_matching(dynkin("E", 6)) is not None
    assert perfect_matching(Forest(0)) is not None  # empty matching


def test_perfect_matching_agrees_with_enumeration(rng):
    for _ in range(60):
        f = random_forest(rng, vmax=10)
        full = [m for m in enumerate_matchings(f)
                if 2 * len(m) == f.vertex_count]
        pm = perfect_matching(f)
        if full:
            assert len(full) == 1  # forests have at most one
            assert pm == full[0]
        else:
            assert pm is None


def test_remove_and_relabel():
    e6 = dynkin("E", 6)
    f = remove_vertices(e6, [5])
    assert f == path(5)
    g = relabel(path(3), [2, 1, 0])
    assert g == path(3)
    with pytest.raises(ForestError):
        relabel(path(3), [0, 0, 1])


def test_disjoint_union_counts():
    f = disjoint_union(path(3), star(4))
    assert f.vertex_count == 7
    assert len(f.components()) == 2
    assert f.degree(3) == 3
