import random
from itertools import combinations

import pytest

from cuspcoh.errors import InputError, ResourceError
from cuspcoh.graph import Graph
from cuspcoh.groups import GroupSpec, cayley_ball
from cuspcoh.metric import distance_table
from cuspcoh.rips import (ContractionFailure, RipsComplex, contract_to_basepoint, graph_rips,
                          hull_check)


def path(n):
    G = Graph()
    for i in range(n - 1):
        G.add_edge(i, i + 1)
    return G


def brute_cliques(points, d, D, cap):
    out = []
    for k in range(1, cap + 2):
        for s in combinations(sorted(points), k):
            if all(d(a, b) <= D for a, b in combinations(s, 2)):
                out.append(s)
    return sorted(out, key=lambda s: (len(s), s))


def test_rips_matches_brute_force():
    G = cayley_ball(GroupSpec.free_abelian(2), 2)
    d = distance_table(G)
    for D in (1, 2, 3):
        R = graph_rips(G, D)
        assert R.simplices() == brute_cliques(G.vertices(), d, D, 2)


def test_rips_on_line_ball():
    G = cayley_ball(GroupSpec.free(1), 3)
    R = graph_rips(G, 2)
    tri = R.complex().simplices(2)
    assert tri == sorted(tuple(sorted(t)) for t in
                         [("AAA", "AA", "A"), ("AA", "A", "e"), ("A", "e", "a"),
                          ("e", "a", "aa"), ("a", "aa", "aaa")])


def test_rips_cap():
    G = cayley_ball(GroupSpec.free(2), 2)
    with pytest.raises(ResourceError):
        graph_rips(G, 4, max_simplices=50).simplices()
    with pytest.raises(InputError):
        RipsComplex([1, 2], lambda a, b: abs(a - b), 0)


def test_contraction_on_path():
    G = path(8)
    R = graph_rips(G, 2)
    trace = contract_to_basepoint(G, R, [(5, 6)], 0)
    assert len(trace) == 4
    assert trace.path_of(6) == [6, 5, 4, 3, 2]
    assert all(distance_table(G)(0, v) <= 2 for v in trace.final)
    assert hull_check(trace, G, 0).ok


def test_contraction_requires_even_D():
    G = path(5)
    with pytest.raises(InputError):
        contract_to_basepoint(G, graph_rips(G, 3), [(3, 4)], 0)


def test_contraction_warns_below_threshold():
    G = path(6)
    with pytest.warns(RuntimeWarning):
        contract_to_basepoint(G, graph_rips(G, 2), [(4, 5)], 0, delta=1)


def test_hull_on_tree_subcomplexes():
    G = cayley_ball(GroupSpec.free(2), 4)
    d = distance_table(G)
    R = graph_rips(G, 2)
    rng = random.Random(0)
    V = G.vertices()
    moved = 0
    for _ in range(20):
        v = rng.choice(V)
        near = [w for w in V if 0 < d(v, w) <= 2]
        L = [(v, rng.choice(near))]
        tr = contract_to_basepoint(G, R, L, "e")
        moved += len(tr)
        assert hull_check(tr, G, "e").ok
    assert moved > 0


def test_failure_reports_pair():
    G = path(6)
    R = RipsComplex([0, 5], distance_table(G), 2)
    with pytest.raises(ContractionFailure):
        contract_to_basepoint(G, R, [(5,)], 0)
