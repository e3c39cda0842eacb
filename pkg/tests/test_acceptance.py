"""Acceptance suite: one recorded PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py -v``; the summary lines appear
at the end of the terminal report.
"""
import random
import warnings
from functools import lru_cache

import pytest
from conftest import record

from cuspcoh.compact import (ExhaustionSchedule, FiniteExhaustion, boundary_dim_estimate,
                             boundary_of, coboundary_of, cylinder_vanishing_test, hc_pro_system,
                             les_check, line_complex, local_homology_probe, pro_classify)
from cuspcoh.cusped import CuspedComplex, DepthVertex, build_cusped_graph
from cuspcoh.groups import GroupSpec, PeripheralSpec, cayley_ball
from cuspcoh.homology import (SimplicialComplex, determinant, identity, matmul,
                              smith_normal_form)
from cuspcoh.metric import (BoundaryProxy, complement_components, delta_estimate,
                            ends_profile, gromov_geodesic_gaps, random_triples)
from cuspcoh.rips import ContractionFailure, contract_to_basepoint, graph_rips, hull_check

F2 = GroupSpec.free(2)
PAIRS = {
    "punctured-torus": [("P", ["abAB"])],
    "pants": [("A", ["a"]), ("B", ["b"]), ("C", ["ab"])],
    "rel-a": [("P", ["a"])],
}
SCHEDULE = ExhaustionSchedule.upto(6)


def cusped(name, R=8, T=8):
    return CuspedComplex(F2, PeripheralSpec.parse(F2, PAIRS[name]), R, T)


@lru_cache(maxsize=None)
def system(name, k, R=8, T=8):
    if name == "line":
        return hc_pro_system(line_complex(R), k, SCHEDULE)
    return hc_pro_system(cusped(name, R, T), k, SCHEDULE)


def verdict(name, k, R=8, T=8):
    return str(pro_classify(system(name, k, R, T)))


def tree_exhaustion(R):
    G = cayley_ball(F2, R)
    X = SimplicialComplex([(v,) for v in G.vertices()] + G.edges())
    return FiniteExhaustion(X, basepoint="e", extent=R)


def quiet_cusped_graph(name, R, T):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return build_cusped_graph(F2, PeripheralSpec.parse(F2, PAIRS[name]), R, T)


# 1 -------------------------------------------------------------------------

def bfs_counts(G, radii):
    return [len(complement_components(G, "e", n)) for n in radii]


def test_c01_ends_verdicts():
    radii = range(1, 6)
    z = ends_profile(cayley_ball(GroupSpec.free(1), 7), "e", radii)
    z2 = ends_profile(cayley_ball(GroupSpec.free_abelian(2), 7), "e", radii)
    f2 = ends_profile(cayley_ball(F2, 6), "e", radii)
    ok = (z["verdict"] == "2 ends" and z2["verdict"] == "1 end" and f2["verdict"] == "growing"
          and f2["counts"] == bfs_counts(cayley_ball(F2, 6), radii))
    record(1, ok, f"Z {z['verdict']}, Z2 {z2['verdict']}, F2 {f2['verdict']} "
                  f"counts {f2['counts']}")
    assert ok


@pytest.mark.xfail(strict=True, reason="BFS oracle gives 4*3^(n-1) components, not 2*3^(n-1)")
def test_c01_stated_free_pattern():
    counts = bfs_counts(cayley_ball(F2, 6), range(1, 6))
    stated = [2 * 3 ** (n - 1) for n in range(1, 6)]
    ok = counts == stated
    record(1, ok, f"stated pattern {stated} vs oracle {counts}")
    assert ok


# 2 -------------------------------------------------------------------------

def test_c02_line():
    v1, v0 = verdict("line", 1), verdict("line", 0)
    tors = any(g.torsion for g in system("line", 1).stages)
    ok = v1 == "stable(1)" and v0 == "pro-trivial" and not tors
    record(2, ok, f"k=1 {v1}, k=0 {v0}")
    assert ok


# 3, 4, 5 -------------------------------------------------------------------

def test_c03_punctured_torus():
    v1, v2 = verdict("punctured-torus", 1), verdict("punctured-torus", 2)
    ok = v1 == "pro-trivial" and v2 == "stable(1)"
    record(3, ok, f"k=1 {v1}, k=2 {v2} (R=T=8, radii 1-6, window 3)")
    assert ok


def test_c04_pants():
    v1, v2 = verdict("pants", 1), verdict("pants", 2)
    ok = v1 == "pro-trivial" and v2 == "stable(1)"
    record(4, ok, f"k=1 {v1}, k=2 {v2}")
    assert ok


def test_c05_rel_a():
    v1, v2 = verdict("rel-a", 1), verdict("rel-a", 2)
    ok = v1 == "growing" and v2 == "pro-trivial"
    record(5, ok, f"k=1 {v1}, k=2 {v2}")
    assert ok


# 6 -------------------------------------------------------------------------

def test_c06_dimension():
    torus = {k: pro_classify(system("punctured-torus", k)) for k in range(3)}
    line = {k: pro_classify(system("line", k)) for k in range(2)}
    X = tree_exhaustion(7)
    sched = ExhaustionSchedule.upto(5)
    tree = {k: pro_classify(hc_pro_system(X, k, sched)) for k in range(2)}
    got = [boundary_dim_estimate(v)["estimate"] for v in (torus, line, tree)]
    ok = got == [1, 0, 0]
    record(6, ok, f"estimates torus {got[0]}, line {got[1]}, F2 {got[2]}")
    assert ok


# 7 -------------------------------------------------------------------------

def random_pair(rng):
    X = SimplicialComplex()
    while True:
        s = tuple(sorted(rng.sample(range(8), rng.choice([2, 3, 3]))))
        Y = SimplicialComplex(X.all_simplices() + [s])
        if len(Y) > 40:
            break
        X = Y
    cells = [s for s in X.all_simplices() if rng.random() < 0.3]
    return X, SimplicialComplex(cells)


def test_c07_les():
    tri = SimplicialComplex([(0, 1), (1, 2), (0, 2)])
    worked = [(tri, tri), (SimplicialComplex([(0, 1)]), SimplicialComplex([(0,)])),
              (tri, SimplicialComplex([(0,)]))]
    rng = random.Random(7)
    pairs = worked + [random_pair(rng) for _ in range(25)]
    fails = sum(not les_check(X, F).exact for X, F in pairs)
    record(7, fails == 0, f"{len(pairs)} pairs, {fails} inexact")
    assert fails == 0


# 8 -------------------------------------------------------------------------

def test_c08_cylinders():
    shapes = {"point": [(0,)], "two points": [(0,), (1,)],
              "hollow triangle": [(0, 1), (1, 2), (0, 2)]}
    bad = []
    for name, cells in shapes.items():
        for k, v in cylinder_vanishing_test(SimplicialComplex(cells), 8, SCHEDULE).items():
            if v.classification != "pro-trivial":
                bad.append(f"{name} k={k} {v}")
    record(8, not bad, "all pro-trivial over 6 stages" if not bad else "; ".join(bad))
    assert not bad


# 9 -------------------------------------------------------------------------

def test_c09_snf():
    rng = random.Random(9)
    bad = 0
    for _ in range(200):
        m, n = rng.randint(1, 30), rng.randint(1, 30)
        A = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(m)]
        sf = smith_normal_form(A, inverses=True)
        d = sf.diagonal
        good = (matmul(matmul(sf.U, A), sf.V) == sf.S
                and matmul(sf.U, sf.Uinv) == identity(m)
                and matmul(sf.V, sf.Vinv) == identity(n)
                and abs(determinant(sf.U)) == 1 and abs(determinant(sf.V)) == 1
                and all(b % a == 0 for a, b in zip(d, d[1:])))
        bad += not good
    small = smith_normal_form([[2, 0], [0, 3]]).diagonal
    ok = bad == 0 and small == [1, 6]
    record(9, ok, f"200 random matrices, {bad} failures; diag(2,3) -> diag{tuple(small)}")
    assert ok


# 10 ------------------------------------------------------------------------

def hull_trials(G, x0, D, delta, n, seed):
    from cuspcoh.metric import distance_table
    rng = random.Random(seed)
    d = distance_table(G)
    V = G.vertices()
    R = graph_rips(G, D)
    violations = moves = 0
    for _ in range(n):
        L = []
        for _ in range(rng.randint(1, 4)):
            v = rng.choice(V)
            s = [v]
            near = [w for w in V if w != v and d(v, w) <= D]
            rng.shuffle(near)
            for w in near[:6]:
                if len(s) < 3 and all(d(w, u) <= D for u in s):
                    s.append(w)
            L.append(tuple(s))
        try:
            tr = contract_to_basepoint(G, R, L, x0, 0, delta)
        except ContractionFailure:
            violations += 1
            continue
        moves += len(tr)
        violations += not hull_check(tr, G, x0, 0, delta).ok
    return violations, moves


def test_c10_hull():
    graphs = [("Z", cayley_ball(GroupSpec.free(1), 20), "e"),
              ("F2", cayley_ball(F2, 5), "e"),
              ("cusped", quiet_cusped_graph("rel-a", 5, 4), DepthVertex(0, "", "bbbbb"))]
    notes, total = [], 0
    for name, G, x0 in graphs:
        delta = delta_estimate(G, samples=2000, seed=1, triangle_samples=2000).delta_thin
        D = max(2, 4 * delta)
        D += D % 2
        v, m = hull_trials(G, x0, D, delta, 50, seed=10)
        total += v
        notes.append(f"{name} D={D} moves={m} violations={v}")
    record(10, total == 0, ", ".join(notes))
    assert total == 0


# 11 ------------------------------------------------------------------------

def test_c11_gromov():
    from cuspcoh.cusped import build_horoball
    graphs = {"Z": cayley_ball(GroupSpec.free(1), 12), "F2": cayley_ball(F2, 4),
              "horoball": build_horoball(cayley_ball(GroupSpec.free(1), 16), 5),
              "rel-a": quiet_cusped_graph("rel-a", 4, 4),
              "punctured-torus": quiet_cusped_graph("punctured-torus", 4, 3)}
    notes, total = [], 0
    for name, G in graphs.items():
        delta = delta_estimate(G, samples=2000, seed=1, triangle_samples=2000).delta_thin
        gaps = gromov_geodesic_gaps(G, random_triples(G, 500, seed=11))
        bad = sum(g > delta for g in gaps)
        total += bad
        notes.append(f"{name} max {max(gaps)} <= {delta}" if not bad else f"{name} {bad} over")
    record(11, total == 0, ", ".join(notes))
    assert total == 0


# 12 ------------------------------------------------------------------------

def test_c12_regularity():
    from cuspcoh.compact import regularity_probe
    C = cusped("punctured-torus")
    radii, status = [], []
    for t in range(3, C.T - 1):
        e = tuple(sorted((C.vertex(t, "0:e", 0), C.vertex(t, "0:e", 1))))
        tri = C.triangles_at(C.vertex(t, "0:e", 0))[0]
        for mode, c in (("cochain", coboundary_of(C, e)), ("chain", boundary_of(tri))):
            rep = regularity_probe(C, c, mode, max_radius=3)
            status.append(rep.status)
            if rep.found:
                radii.append(rep.primitive_radius)
    M = max(radii) if radii else None
    ok = all(s == "found" for s in status)
    record(12, ok, f"depths 3..{C.T - 2}, {len(status)} probes, measured M = {M}")
    assert ok


# 13 ------------------------------------------------------------------------

def test_c13_compliant_gaps():
    G = cayley_ball(GroupSpec.free(1), 12)
    line = local_homology_probe(G, BoundaryProxy("conical", "e", period="a"),
                                [(1, 2), (2, 4), (3, 6)], D=2)
    H = quiet_cusped_graph("rel-a", 3, 16)
    delta = delta_estimate(H, samples=3000, seed=0, triangle_samples=1000).delta_thin
    z = BoundaryProxy("parabolic", DepthVertex(0, "", "e"), coset="0:e")
    gaps = [(1, 2 + 4 * delta), (2, 4 + 4 * delta)]
    cusp = local_homology_probe(H, z, gaps, D=4 * delta, delta=delta)
    rows = line + cusp
    ok = all(r["compliant"] and r["status"] == "vanishes" for r in rows)
    record(13, ok, f"compliant gaps vanish: line {len(line)}, cusped graph {len(cusp)} "
                   f"(delta {delta}, D {4 * delta})")
    assert ok


@pytest.mark.xfail(strict=True, reason="V-sets in a tree are subtrees, so every reduced H0 "
                                       "map vanishes; the stated negative control cannot fail")
def test_c13_negative_control_tree():
    G = cayley_ball(F2, 6)
    z = BoundaryProxy("conical", "e", period="a")
    rows = local_homology_probe(G, z, [(n, n + 1) for n in range(1, 4)], D=1)
    failing = [r for r in rows if not r["compliant"] and r["h0_zero"] is False]
    ok = bool(failing)
    record(13, ok, f"F2 tree negative control: {len(failing)} of {len(rows)} gaps "
                   f"keep reduced H0 nonzero")
    assert ok


# 14 ------------------------------------------------------------------------

def test_c14_guard_soundness():
    changed = []
    for name in ("line", "punctured-torus", "pants", "rel-a"):
        degrees = (0, 1) if name == "line" else (1, 2)
        for k in degrees:
            a, b = system(name, k), system(name, k, 10, 10)
            same = (a.stages == b.stages and a.image_ranks == b.image_ranks
                    and str(pro_classify(a)) == str(pro_classify(b)))
            if not same:
                changed.append(f"{name} k={k}")
    record(14, not changed, "R, T + 2: no stage, map rank or verdict changed"
           if not changed else "changed: " + ", ".join(changed))
    assert not changed
