import warnings
from collections import Counter

import pytest

from cuspcoh.cusped import (CuspedComplex, DepthVertex, build_cusped_graph, build_horoball,
                            depth, export_simplex_list, import_edge_list, import_simplex_list,
                            truncate_by_depth)
from cuspcoh.errors import UnsupportedError
from cuspcoh.graph import Graph
from cuspcoh.groups import GroupSpec, PeripheralSpec, export_edge_list

F2 = GroupSpec.free(2)


def path_graph(n):
    G = Graph()
    for i in range(n - 1):
        G.add_edge(i, i + 1)
    return G


def brute_horoball_edges(n, T):
    """Edges of the combinatorial horoball over a path by direct definition."""
    edges = set()
    for t in range(T + 1):
        for i in range(n):
            if t < T:
                edges.add(frozenset({(t, i), (t + 1, i)}))
            for j in range(i + 1, n):
                if j - i <= 2 ** t:
                    edges.add(frozenset({(t, i), (t, j)}))
    return edges


def test_horoball_matches_definition():
    for n, T in [(5, 2), (8, 3), (2, 1)]:
        H = build_horoball(path_graph(n), T)
        got = {frozenset({(u.depth, u.base), (v.depth, v.base)}) for u, v in H.edges()}
        assert got == brute_horoball_edges(n, T)


def test_horoball_small_counts():
    H = build_horoball(path_graph(2), 1)
    assert len(H) == 4 and H.num_edges() == 4
    top = [v for v in build_horoball(path_graph(5), 2).vertices() if v.depth == 2]
    H5 = build_horoball(path_graph(5), 2)
    assert all(H5.has_edge(u, v) for u in top for v in top if u != v)


def test_cusped_graph_hand_count():
    per = PeripheralSpec.parse(F2, [("P", ["a"])])
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        G = build_cusped_graph(F2, per, 2, 1)
    assert len(G) == 34 and G.num_edges() == 46
    kinds = Counter(G.edge_kind.values())
    assert kinds == {"cayley": 16, "vertical": 17, "horizontal": 13}
    assert G.is_connected()


def test_cusped_graph_commutator_trace():
    per = PeripheralSpec.parse(F2, [("P", ["abAB"])])
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        G = build_cusped_graph(F2, per, 4, 2)
    trace = G.meta["registry"]["0:e"]
    assert len(trace.members) == 3


def test_depth_labels_round_trip():
    v = DepthVertex(3, "0:b", "ba")
    assert DepthVertex.from_label(v.label()) == v
    assert depth(v) == 3 and depth("ab") == 0


def test_cusped_complex_small():
    per = PeripheralSpec.parse(F2, [("P", ["a"])])
    C = CuspedComplex(F2, per, 1, 1)
    X = C.materialize()
    assert X.counts() == [8, 11, 4]
    assert sum(1 for v in X.vertices() if v.depth == 1) == 3


def test_cusped_complex_strip_triangles():
    per = PeripheralSpec.parse(F2, [("P", ["abAB"])])
    C = CuspedComplex(F2, per, 4, 1)
    X = C.materialize()
    strip = [s for s in X.simplices(2) if any(v.coset == "0:e" for v in s)]
    # the axis of abAB through e has 8 edges inside the ball, two triangles each
    assert len(strip) == 2 * 8 * 1


def test_cusped_complex_is_simply_connected_locally():
    per = PeripheralSpec.parse(F2, [("P", ["a"])])
    X = CuspedComplex(F2, per, 2, 2).materialize()
    from cuspcoh.homology import homology, AbelianGroup
    assert homology(X, 0) == AbelianGroup(1)
    assert homology(X, 1) == AbelianGroup()


def test_unsupported_shapes():
    S = GroupSpec.surface(2)
    with pytest.raises(UnsupportedError):
        CuspedComplex(S, PeripheralSpec.parse(S, []), 2, 2)
    Z2 = GroupSpec.free_abelian(2)
    with pytest.raises(UnsupportedError):
        CuspedComplex(Z2, PeripheralSpec.parse(Z2, [("P", ["a"])]), 2, 2)


def test_truncation_modes():
    H = build_horoball(path_graph(2), 2)
    assert len(truncate_by_depth(H, 2, ">=")) == 2
    assert len(truncate_by_depth(H, 1, "<=")) == 4


def test_simplex_list_round_trip():
    per = PeripheralSpec.parse(F2, [("P", ["a"])])
    X = CuspedComplex(F2, per, 2, 1).materialize()
    Y = import_simplex_list(export_simplex_list(X))
    assert Y == X


def test_edge_list_round_trip():
    per = PeripheralSpec.parse(F2, [("P", ["a"])])
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        G = build_cusped_graph(F2, per, 2, 1)
    H = import_edge_list(export_edge_list(G))
    assert set(H.vertices()) == set(G.vertices())
    assert H.edges() == G.edges()
    assert H.edge_kind == G.edge_kind
