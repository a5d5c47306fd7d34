from __future__ import annotations

import random

import pytest

from fermionant import (
    CapacityError,
    Digraph,
    Multigraph,
    PlaneGraph,
    circuit_partition_poly,
    martin_rhs,
    tutte,
    tutte_diagonal,
    tutte_subgraph_sum,
)

from conftest import cycle_graph, k4, loop_plane, path_graph, single_edge_plane, triangle_plane


def test_tutte_base_cases():
    assert tutte(Multigraph(2, ((0, 1),))).coeffs == {(1, 0): 1}
    assert tutte(Multigraph(1, ((0, 0),))).coeffs == {(0, 1): 1}
    assert tutte(Multigraph(3, ())).coeffs == {(0, 0): 1}


def test_tutte_triangle_and_digon():
    assert tutte(cycle_graph(3)).coeffs == {(2, 0): 1, (1, 0): 1, (0, 1): 1}
    assert tutte(Multigraph(2, ((0, 1), (0, 1)))).coeffs == {(1, 0): 1, (0, 1): 1}


def test_subgraph_sum_equals_deletion_contraction(multigraph_fixtures):
    for g in multigraph_fixtures:
        if g.num_edges <= 8:
            assert tutte(g) == tutte_subgraph_sum(g), g.edges


def test_tutte_at_two_two_counts_subsets(multigraph_fixtures):
    for g in multigraph_fixtures:
        if g.num_edges <= 10:
            assert tutte(g)(2, 2) == 2**g.num_edges


def test_tutte_of_tree_and_diagonal():
    tree = path_graph(5)
    assert tutte(tree).coeffs == {(4, 0): 1}
    assert tutte_diagonal(tree, 3) == 3**4
    assert tutte_diagonal(cycle_graph(3), -1) == -1
    assert tutte_diagonal(k4(), 2) == 2**6


def test_diagonal_matches_full_polynomial(multigraph_fixtures):
    for g in multigraph_fixtures[:60]:
        if g.num_edges <= 8:
            for x in (-2, -1, 0, 2, 3):
                assert tutte_diagonal(g, x) == tutte(g)(x, x)


def test_deletion_contraction_consistency():
    rng = random.Random(9)
    from fermionant.graphpoly import _bridges

    for trial in range(30):
        n = rng.randint(3, 5)
        edges = tuple(
            (rng.randrange(n), rng.randrange(n)) for _ in range(rng.randint(2, 7))
        )
        g = Multigraph(n, edges)
        bridges = _bridges(n, list(edges))
        candidates = [
            e for e in range(len(edges)) if edges[e][0] != edges[e][1] and e not in bridges
        ]
        if not candidates:
            continue
        e = rng.choice(candidates)
        u, v = edges[e]
        rest = edges[:e] + edges[e + 1 :]
        deleted = Multigraph(n, rest)
        lo, hi = min(u, v), max(u, v)
        contracted_edges = tuple(
            (a if a != hi else lo, b if b != hi else lo) for a, b in rest
        )
        contracted_edges = tuple(
            (a - 1 if a > hi else a, b - 1 if b > hi else b) for a, b in contracted_edges
        )
        contracted = Multigraph(n - 1, contracted_edges)
        assert tutte(g) == tutte(deleted) + tutte(contracted)


def test_tutte_capacity():
    big = Multigraph(2, ((0, 1),) * 15)
    with pytest.raises(CapacityError):
        tutte(big)
    with pytest.raises(CapacityError):
        tutte_subgraph_sum(Multigraph(2, ((0, 1),) * 17))
    assert tutte(big, max_edges=15)(1, 1) is not None


def test_circuit_poly_examples():
    for m in (1, 2, 5):
        arcs = tuple((i, (i + 1) % m) for i in range(m))
        assert circuit_partition_poly(Digraph(m, arcs)).coeffs == (0, 1)
    two_loops = Digraph(1, ((0, 0), (0, 0)))
    assert circuit_partition_poly(two_loops).coeffs == (0, 1, 1)
    disjoint = Digraph(6, ((0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)))
    assert circuit_partition_poly(disjoint).coeffs == (0, 0, 1)
    assert circuit_partition_poly(Digraph(3, ())).coeffs == (1,)


def test_circuit_poly_rejects_unbalanced():
    with pytest.raises(ValueError, match="vertex 0 is not Eulerian"):
        circuit_partition_poly(Digraph(2, ((0, 1),)))
    with pytest.raises(CapacityError):
        circuit_partition_poly(Digraph(1, ((0, 0),) * 12), max_systems=1000)


def test_circuit_poly_shape_properties():
    from fermionant import generate_eulerian_digraph

    for seed in range(80):
        d = generate_eulerian_digraph(seed, 8)
        j = circuit_partition_poly(d)
        assert j.degree <= d.num_arcs
        assert all(c >= 0 for c in j.coeffs)
        assert sum(c for c in j.coeffs) > 0


def test_martin_rhs_examples():
    assert martin_rhs(single_edge_plane()).coeffs == (0, 1, 1)
    one_vertex = martin_rhs(PlaneGraph(Multigraph(1, ()), ((),)))
    assert one_vertex.coeffs == (0, 1)
    assert martin_rhs(triangle_plane()).coeffs == (0, 3, 4, 1)
    assert martin_rhs(loop_plane()).coeffs == (0, 1, 1)
