import random

import pytest

from backbone import oracle
from backbone.graph import Graph
from backbone.merge import (MergeError, PatternGraph, PieceTuple, check_family_membership,
                            join_two, merge_components)
from helpers import complete, path, shifted

T1, T2 = complete(3), shifted(complete(3), 3)
K2 = PatternGraph(complete(2), 1)


def test_join_two_triangles():
    g = join_two(T1, T2, [(0, 3), (1, 4)], 2)
    assert oracle.brute_kappa(g) == 2


def test_join_two_k4s():
    a, b = complete(4), shifted(complete(4), 4)
    assert oracle.brute_kappa(join_two(a, b, [(0, 4), (1, 5), (2, 6)], 3)) == 3
    with pytest.raises(ValueError):
        join_two(a, b, [(0, 4), (1, 5)], 3)


def test_join_two_rejects_dependent_or_wrong_edges():
    with pytest.raises(ValueError):
        join_two(T1, T2, [(0, 3), (0, 4)], 2)
    with pytest.raises(ValueError):
        join_two(T1, T2, [(0, 1), (2, 3)], 2)
    with pytest.raises(ValueError):
        join_two(path(3), T2, [(0, 3), (1, 4)], 2)


def family_k2():
    x = PieceTuple((T1, T2), (), 2)
    r = PatternGraph(complete(2), 1)
    return x, r


def test_two_elements_cannot_meet_condition_iii_for_k2():
    # (iii) wants k distinct target elements; with two elements only one exists
    x, _ = family_k2()
    g = join_two(T1, T2, [(0, 3), (1, 4)], 2)
    report = check_family_membership(g, x, K2, 2)
    assert report.condition_i and not report.condition_ii
    assert report.condition_iii == {0: 1, 1: 1}


def test_membership_all_clear_with_three_elements():
    x = PieceTuple((T1, T2), (6,), 2)
    r = PatternGraph(complete(3), 2)
    g = Graph(range(7), [*T1.edges, *T2.edges, (0, 3), (1, 6), (4, 6)])
    assert check_family_membership(g, x, r, 2).all_clear
    assert oracle.brute_kappa(g) >= 2


def test_membership_deficit_with_one_bridge():
    x, _ = family_k2()
    g = Graph(range(6), [*T1.edges, *T2.edges, (0, 3)])
    report = check_family_membership(g, x, K2, 2)
    assert report.condition_i and not report.condition_ii
    assert report.condition_iii == {0: 1, 1: 1}


def test_membership_missing_pattern_edge():
    x, _ = family_k2()
    g = Graph(range(6), [*T1.edges, *T2.edges])
    report = check_family_membership(g, x, K2, 2)
    assert report.condition_ii == ((0, 1),)


def test_pattern_must_be_k_connected():
    with pytest.raises(ValueError):
        PatternGraph(path(3), 2)
    with pytest.raises(ValueError):
        PatternGraph(Graph([1, 2, 3], [(1, 2), (2, 3), (1, 3)]), 2)


def test_piece_tuple_checks():
    with pytest.raises(ValueError):
        PieceTuple((T1, T1), (), 2)
    with pytest.raises(ValueError):
        PieceTuple((path(3),), (), 2)
    with pytest.raises(ValueError):
        PieceTuple((T1,), (2,), 2)


def test_merge_two_triangles_and_a_singleton():
    x = PieceTuple((T1, T2), (6,), 2)
    r = PatternGraph(complete(3), 2)
    available = [(u, v) for u in range(7) for v in range(u + 1, 7)
                 if x.element_of()[u] != x.element_of()[v]]
    g = merge_components(x, r, available, 2)
    assert oracle.brute_kappa(g) >= 2
    assert check_family_membership(g, x, r, 2).all_clear


def test_merge_reduces_to_join_two():
    x = PieceTuple((T1, T2), (), 1)
    g = merge_components(x, K2, [(0, 3)], 1)
    assert g == join_two(T1, T2, [(0, 3)], 1)


def test_merge_reports_unmeetable_conditions():
    x = PieceTuple((T1, T2), (6,), 2)
    r = PatternGraph(complete(3), 2)
    with pytest.raises(MergeError) as info:
        merge_components(x, r, [(0, 3), (0, 6)], 2)
    assert info.value.condition == "ii"
    with pytest.raises(MergeError) as info:
        merge_components(x, r, [(0, 3), (0, 6), (3, 6)], 2)
    assert info.value.condition == "iii"


def test_random_members_are_k_connected():
    rng = random.Random(9)
    done = 0
    while done < 40:
        k = rng.choice((2, 3))
        t, s = rng.randint(1, 3), rng.randint(0, 3)
        if t + s <= k:
            continue
        pieces, nxt = [], 0
        for _ in range(t):
            size = rng.randint(k + 1, k + 2)
            pieces.append(shifted(complete(size), nxt))
            nxt += size
        singles = tuple(range(nxt, nxt + s))
        if nxt + s > 14:
            continue
        x = PieceTuple(tuple(pieces), singles, k)
        elem = x.element_of()
        n = nxt + s
        available = [(u, v) for u in range(n) for v in range(u + 1, n)
                     if elem[u] != elem[v] and rng.random() < 0.6]
        try:
            g = merge_components(x, PatternGraph(complete(t + s), k), available, k)
        except MergeError:
            continue
        assert oracle.brute_kappa(g) >= k
        done += 1
