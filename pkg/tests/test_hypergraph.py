"""Hypergraph data model, partial-hypergraph operations, canonical codes."""

import itertools
import json

import pytest

from hypertree_spectra import (
    Hypergraph,
    automorphism_count,
    build_Ra,
    canonical_code,
    common_vertex,
    connected_components,
    degree,
    delete_edge,
    delete_edge_closed,
    delete_vertex,
    disjoint_union,
    enumerate_hypertrees,
    find_path,
    from_json,
    hyperstar,
    is_connected,
    is_isomorphic,
    is_pendent_edge,
    relabel,
    single_edge,
    to_json,
    validate,
    vertex_kind,
)

PATH3_R3 = build_Ra(2, 3)  # three 3-edges in a chain


def test_construction_normalizes():
    H = Hypergraph(3, 5, [(4, 2, 0), (1, 3, 2)])
    assert H.edges == ((0, 2, 4), (1, 2, 3))
    assert H.m == 2


def test_construction_rejects_duplicates_and_bad_ids():
    with pytest.raises(ValueError):
        Hypergraph(3, 5, [(0, 1, 2), (2, 1, 0)])
    with pytest.raises(ValueError):
        Hypergraph(3, 3, [(0, 1, 5)])
    with pytest.raises(ValueError):
        Hypergraph(1, 3, [(0,)])


def test_validate_single_edge():
    report = validate(single_edge(3))
    assert report.uniform and report.linear and report.connected and report.acyclic
    assert report.is_hypertree
    assert report.violations == ()


def test_validate_flags_nonlinear():
    H = Hypergraph(3, 4, [(0, 1, 2), (0, 1, 3)])
    report = validate(H)
    assert not report.linear
    assert not report.is_hypertree
    assert any("share" in v for v in report.violations)


def test_validate_flags_disconnected():
    H = Hypergraph(3, 6, [(0, 1, 2), (3, 4, 5)])
    report = validate(H)
    assert not report.connected
    assert report.acyclic
    assert not report.is_hypertree


def test_validate_flags_nonuniform():
    H = Hypergraph(3, 4, [(0, 1, 2, 3)])
    report = validate(H)
    assert not report.uniform


def test_degree_and_kinds():
    star = hyperstar(3, 2)
    assert degree(star, 0) == 3
    assert vertex_kind(star, 0) == "intersection"
    edge = single_edge(3)
    assert degree(edge, 1) == 1
    assert vertex_kind(edge, 1) == "core"
    # middle edge of the 3-edge path shares vertices 0 and 1 with the others
    assert degree(PATH3_R3, 0) == 2
    assert vertex_kind(PATH3_R3, 0) == "intersection"
    with pytest.raises(ValueError):
        degree(star, 99)


def test_pendent_edges():
    assert is_pendent_edge(PATH3_R3, (0, 3, 4))
    assert not is_pendent_edge(PATH3_R3, (0, 1, 2))
    # an isolated edge has r core vertices, hence is not pendent
    assert not is_pendent_edge(single_edge(3), (0, 1, 2))


def test_delete_edge_keeps_vertices():
    P4 = Hypergraph(2, 4, [(0, 1), (1, 2), (2, 3)])
    result = delete_edge(P4, (1, 2))
    assert result.n == 4
    assert result.m == 2
    assert not is_connected(result)
    with pytest.raises(ValueError):
        delete_edge(P4, (0, 3))


def test_delete_vertex_star_center():
    star = hyperstar(3, 2)
    result = delete_vertex(star, 0)
    assert result.hypergraph.n == 3
    assert result.hypergraph.m == 0
    assert result.vertex_map == {1: 0, 2: 1, 3: 2}


def test_delete_edge_closed_middle():
    result = delete_edge_closed(PATH3_R3, (0, 1, 2))
    assert result.hypergraph.n == 4
    assert result.hypergraph.m == 0


def test_deletion_invariants():
    for H in enumerate_hypertrees(4, 3):
        for e in H.edges:
            assert delete_edge(H, e).n == H.n
            assert delete_edge(H, e).m == H.m - 1
            assert delete_edge_closed(H, e).hypergraph.n == H.n - H.r


def test_hypertree_vertex_count_identity():
    for m in range(1, 6):
        for r in (2, 3, 4):
            for H in enumerate_hypertrees(m, r):
                assert H.n == H.m * (H.r - 1) + 1


def test_disjoint_union():
    a = single_edge(3)
    two = disjoint_union(a, a)
    assert two.n == 6 and two.m == 2
    assert not is_connected(two)
    empty = Hypergraph(3, 0, ())
    assert disjoint_union(a, empty) == a
    assert disjoint_union(empty, a) == a
    with pytest.raises(ValueError):
        disjoint_union(a, single_edge(4))


def test_find_path():
    # extreme core vertices of the 3-edge path sit in the two pendent edges
    path = find_path(PATH3_R3, 3, 5)
    assert path is not None
    edges_used = [x for x in path if isinstance(x, tuple)]
    assert len(edges_used) == 3
    assert path[0] == 3 and path[-1] == 5
    assert find_path(PATH3_R3, 2, 2) == [2]
    disconnected = Hypergraph(3, 6, [(0, 1, 2), (3, 4, 5)])
    assert find_path(disconnected, 0, 3) is None


def test_common_vertex():
    star = hyperstar(3, 2)
    assert common_vertex(star, star.edges) == 0
    assert common_vertex(star, [star.edges[0]]) == 0
    disconnected = Hypergraph(3, 6, [(0, 1, 2), (3, 4, 5)])
    assert common_vertex(disconnected, disconnected.edges) is None
    with pytest.raises(ValueError):
        common_vertex(star, [])


def test_helly_property_exhaustive():
    """Every pairwise-intersecting edge family of a hypertree has a common vertex."""
    for r, m_max in [(2, 5), (3, 5), (4, 5)]:
        for m in range(1, m_max + 1):
            for H in enumerate_hypertrees(m, r):
                for size in range(1, H.m + 1):
                    for family in itertools.combinations(H.edges, size):
                        intersecting = all(
                            set(a) & set(b)
                            for a, b in itertools.combinations(family, 2)
                        )
                        if intersecting:
                            assert common_vertex(H, family) is not None


def test_canonical_code_relabel_invariance(rng):
    pool = [H for m in range(1, 6) for H in enumerate_hypertrees(m, 3)]
    pool += [H for m in range(1, 6) for H in enumerate_hypertrees(m, 2)]
    trials = 0
    while trials < 120:
        H = pool[rng.randrange(len(pool))]
        perm = list(range(H.n))
        rng.shuffle(perm)
        assert canonical_code(relabel(H, perm)) == canonical_code(H)
        trials += 1


def test_canonical_code_separates():
    assert canonical_code(hyperstar(3, 3)) != canonical_code(PATH3_R3)
    a, b = single_edge(3), hyperstar(2, 3)
    assert canonical_code(disjoint_union(a, b)) == canonical_code(disjoint_union(b, a))


def test_canonical_code_rejects_cycles():
    triangle = Hypergraph(2, 3, [(0, 1), (1, 2), (0, 2)])
    with pytest.raises(ValueError):
        canonical_code(triangle)


def test_is_isomorphic():
    P4 = Hypergraph(2, 4, [(0, 1), (1, 2), (2, 3)])
    Q4 = Hypergraph(2, 4, [(2, 0), (0, 3), (3, 1)])
    assert is_isomorphic(P4, Q4)
    assert not is_isomorphic(P4, hyperstar(3, 2))


def test_automorphism_count():
    # K_{1,3}: 3! leaf swaps
    assert automorphism_count(hyperstar(3, 2)) == 6
    # P4: the flip
    assert automorphism_count(Hypergraph(2, 4, [(0, 1), (1, 2), (2, 3)])) == 2
    # single 3-edge: all 3! vertex swaps
    assert automorphism_count(single_edge(3)) == 6
    # S_3^3: permute edges (3!) and swap the two cores inside each (2^3)
    assert automorphism_count(hyperstar(3, 3)) == 48


def test_connected_components():
    H = Hypergraph(3, 8, [(0, 1, 2), (4, 5, 6)])
    assert connected_components(H) == [[0, 1, 2], [3], [4, 5, 6], [7]]


def test_json_round_trip():
    H = PATH3_R3
    text = to_json(H)
    data = json.loads(text)
    assert data["edges"] == sorted(data["edges"])
    assert from_json(text) == H
    # readers accept any edge order
    shuffled = dict(data)
    shuffled["edges"] = list(reversed(data["edges"]))
    assert from_json(json.dumps(shuffled)) == H


def test_hypertree_paths_unique():
    """On a hypertree the edge sequence between two vertices is unique:
    the BFS path must match exhaustive search exactly."""

    def all_edge_paths(H, u, v):
        found = []

        def walk(at, used_edges, used_vertices, trail):
            if at == v:
                found.append(tuple(trail))
                return
            for e in H.edges:
                if at in e and e not in used_edges:
                    for w in e:
                        if w != at and w not in used_vertices:
                            walk(w, used_edges | {e}, used_vertices | {w}, trail + [e])

        walk(u, frozenset(), frozenset({u}), [])
        return found

    for m in range(2, 5):
        for H in enumerate_hypertrees(m, 3):
            for u in range(H.n):
                for v in range(u + 1, H.n):
                    exhaustive = all_edge_paths(H, u, v)
                    assert len(exhaustive) == 1, (H.edges, u, v)
                    bfs = find_path(H, u, v)
                    assert tuple(x for x in bfs if isinstance(x, tuple)) == exhaustive[0]
