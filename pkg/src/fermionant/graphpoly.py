"""Tutte polynomial, circuit-partition polynomial, and the bridge between
them for plane graphs.

The Tutte polynomial is computed two ways: a spanning-subgraph sum

    T(G; x, y) = sum over S subset of E of
                 (x-1)^(c(S) - c(G)) * (y-1)^(c(S) + |S| - |V|)

used as the oracle, and the usual deletion-contraction recursion.  c counts
connected components, isolated vertices included; c(S) + |S| - |V| is the
total excess of the spanning subgraph (V, S), the number of independent
cycles in it.

The circuit-partition polynomial j(G; z) of an Eulerian digraph is the
generating function sum of r_t z^t, where r_t counts the transition systems
(one bijection from in-arcs to out-arcs at every vertex) whose induced arc
decomposition has exactly t closed walks.  r_1 is the number of Eulerian
circuits.  An arcless digraph yields the constant 1 (empty product).

For a plane graph G with directed medial G_m these meet in Martin's
identity:  j(G_m; z) = z^(c(G)) * T(G; z+1, z+1), valid when G has no
isolated vertices.  ``martin_rhs`` builds the right-hand side.
"""

from __future__ import annotations

import itertools
from math import comb, factorial

from .errors import CapacityError
from .graphs import Digraph, Multigraph, PlaneGraph, connected_components
from .polynomials import BivarPolynomial, UniPolynomial

SUBGRAPH_SUM_DEFAULT_MAX_EDGES = 16
TUTTE_DEFAULT_MAX_EDGES = 14
TRANSITION_DEFAULT_MAX_SYSTEMS = 10**7


def _component_count(num_vertices: int, edges: list[tuple[int, int]]) -> int:
    parent = list(range(num_vertices))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    count = num_vertices
    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            count -= 1
    return count


def tutte_subgraph_sum(
    graph: Multigraph, *, max_edges: int = SUBGRAPH_SUM_DEFAULT_MAX_EDGES
) -> BivarPolynomial:
    """The spanning-subgraph sum, expanded exactly into the (x, y) basis.
    Enumerates all 2^|E| subsets; the independent oracle for ``tutte``."""
    m = graph.num_edges
    if m > max_edges:
        raise CapacityError(f"subgraph sum limited to {max_edges} edges, got {m}")
    n = graph.num_vertices
    edges = list(graph.edges)
    c_full = _component_count(n, edges)
    # tally subsets by exponent pair, then expand the binomials once
    tally: dict[tuple[int, int], int] = {}
    for mask in range(1 << m):
        subset = [edges[i] for i in range(m) if mask >> i & 1]
        c = _component_count(n, subset)
        key = (c - c_full, c + len(subset) - n)
        tally[key] = tally.get(key, 0) + 1
    coeffs: dict[tuple[int, int], int] = {}
    for (a, b), count in tally.items():
        for i in range(a + 1):
            xa = comb(a, i) * (-1) ** (a - i)
            for j in range(b + 1):
                term = count * xa * comb(b, j) * (-1) ** (b - j)
                key = (i, j)
                coeffs[key] = coeffs.get(key, 0) + term
    return BivarPolynomial(coeffs)


def _bridges(num_vertices: int, edges: list[tuple[int, int]]) -> set[int]:
    """Ids of bridge edges.  An edge is a bridge iff it is not a loop and
    removing it separates its endpoints."""
    out = set()
    for eid, (u, v) in enumerate(edges):
        if u == v:
            continue
        rest = [e for i, e in enumerate(edges) if i != eid]
        parent = list(range(num_vertices))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in rest:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
        if find(u) != find(v):
            out.add(eid)
    return out


def tutte(graph: Multigraph, *, max_edges: int = TUTTE_DEFAULT_MAX_EDGES) -> BivarPolynomial:
    """Tutte polynomial by deletion-contraction.

    Recurses on the highest-id edge that is neither a loop nor a bridge;
    once only loops and bridges remain the value is x^bridges * y^loops.
    Deterministic, no isomorphism caching.
    """
    if graph.num_edges > max_edges:
        raise CapacityError(
            f"deletion-contraction limited to {max_edges} edges, got {graph.num_edges}"
        )

    def rec(n: int, edges: list[tuple[int, int]]) -> BivarPolynomial:
        loops = sum(1 for u, v in edges if u == v)
        bridges = _bridges(n, edges)
        pick = -1
        for eid in range(len(edges) - 1, -1, -1):
            u, v = edges[eid]
            if u != v and eid not in bridges:
                pick = eid
                break
        if pick < 0:
            return BivarPolynomial.monomial(len(bridges), loops)
        u, v = edges[pick]
        deleted = edges[:pick] + edges[pick + 1 :]
        lo, hi = min(u, v), max(u, v)

        def relabel(w: int) -> int:
            if w == hi:
                return lo
            return w - 1 if w > hi else w

        contracted = [(relabel(a), relabel(b)) for a, b in deleted]
        return rec(n, deleted) + rec(n - 1, contracted)

    return rec(graph.num_vertices, list(graph.edges))


def tutte_diagonal(
    graph: Multigraph, x: int, *, max_edges: int = SUBGRAPH_SUM_DEFAULT_MAX_EDGES
) -> int:
    """T(G; x, x) computed directly from the one-variable subgraph sum

        sum over S of (x-1)^(c(S) + l(S) - c(G)),  l(S) = c(S) + |S| - |V|,

    as an oracle independent of both Tutte routes."""
    m = graph.num_edges
    if m > max_edges:
        raise CapacityError(f"diagonal sum limited to {max_edges} edges, got {m}")
    n = graph.num_vertices
    edges = list(graph.edges)
    c_full = _component_count(n, edges)
    base = x - 1
    total = 0
    powers: dict[int, int] = {}
    for mask in range(1 << m):
        subset = [edges[i] for i in range(m) if mask >> i & 1]
        c = _component_count(n, subset)
        e = 2 * c + len(subset) - n - c_full
        if e not in powers:
            powers[e] = base**e
        total += powers[e]
    return total


def circuit_partition_poly(
    graph: Digraph, *, max_systems: int = TRANSITION_DEFAULT_MAX_SYSTEMS
) -> UniPolynomial:
    """Generating function of transition systems by circuit count.

    Requires in-degree = out-degree at every vertex.  Enumerates the product
    of per-vertex bijections; the product of degree factorials is capped at
    ``max_systems``.
    """
    n = graph.num_vertices
    arcs = graph.arcs
    in_arcs: list[list[int]] = [[] for _ in range(n)]
    out_arcs: list[list[int]] = [[] for _ in range(n)]
    for aid, (u, v) in enumerate(arcs):
        out_arcs[u].append(aid)
        in_arcs[v].append(aid)
    systems = 1
    for v in range(n):
        if len(in_arcs[v]) != len(out_arcs[v]):
            raise ValueError(
                f"vertex {v} is not Eulerian: in-degree {len(in_arcs[v])}"
                f" != out-degree {len(out_arcs[v])}"
            )
        systems *= factorial(len(in_arcs[v]))
        if systems > max_systems:
            raise CapacityError(
                f"transition-system count exceeds {max_systems} at vertex {v}"
            )
    if not arcs:
        return UniPolynomial.constant(1)

    active = [v for v in range(n) if in_arcs[v]]
    counts = [0] * (len(arcs) + 1)
    succ = [0] * len(arcs)
    choices = [itertools.permutations(out_arcs[v]) for v in active]
    for assignment in itertools.product(*choices):
        for vi, perm in enumerate(assignment):
            ins = in_arcs[active[vi]]
            for pos, a in enumerate(ins):
                succ[a] = perm[pos]
        seen = [False] * len(arcs)
        circuits = 0
        for a in range(len(arcs)):
            if not seen[a]:
                circuits += 1
                b = a
                while not seen[b]:
                    seen[b] = True
                    b = succ[b]
        counts[circuits] += 1
    return UniPolynomial(tuple(counts))


def martin_rhs(plane: PlaneGraph, *, max_edges: int = TUTTE_DEFAULT_MAX_EDGES) -> UniPolynomial:
    """z^(c(G)) * T(G; z+1, z+1), the Tutte side of Martin's identity."""
    t = tutte(plane.graph, max_edges=max_edges)
    c, _ = connected_components(plane.graph)
    z_plus_1 = UniPolynomial((1, 1))
    return t.substitute_diagonal(z_plus_1).shift(c)
