"""Graph constructions: directed medial graph, line digraph, bicycle space.

The directed medial G_m of a plane graph places one vertex on every edge of
G and, for each face walk e_1 ... e_l (traced with bounded faces encircled
counterclockwise), adds the arcs e_i -> e_(i+1 mod l).  Every medial vertex
then has in-degree and out-degree exactly 2, and the arc count is twice the
edge count of G.  A bridge appears twice in the same walk, producing loops
at its medial vertex.

The line digraph G_e of a digraph has one vertex per arc of G, with an arc
from (u, v) to (u', v') whenever v = u', i.e. whenever the two could be
walked consecutively.  Transition systems of an Eulerian G correspond to
permutations of V(G_e) with nonzero weight in the adjacency matrix of G_e,
circuits matching permutation cycles, which yields

    Ferm_k(A(G_e)) = (-1)^(number of arcs of G) * j(G; -k).

The sign is +1 for every medial graph (2|E| arcs), giving the unsigned form
for plane graphs.

The bicycle space of a multigraph is the GF(2) intersection of the cycle
space and the cut (star) space; its dimension controls the Tutte value at
(-1, -1).  All ranks are computed on edge-indexed bitmasks.
"""

from __future__ import annotations

from .graphs import Digraph, Multigraph, PlaneGraph, adjacency_matrix, connected_components, faces
from .transforms_util import gf2_rank


def medial(plane: PlaneGraph) -> Digraph:
    """Directed medial graph; one vertex per edge of the input, arcs along
    face walks.  Rejects edgeless input (no medial vertices)."""
    g = plane.graph
    if g.num_edges == 0:
        raise ValueError("medial graph requires at least one edge")
    arcs = []
    for walk in faces(plane):
        length = len(walk)
        for i in range(length):
            arcs.append((walk[i][0], walk[(i + 1) % length][0]))
    arcs.sort()
    return Digraph(g.num_edges, tuple(arcs))


def line_digraph(graph: Digraph) -> Digraph:
    """One vertex per arc; arc a -> b whenever head(a) = tail(b)."""
    arcs = graph.arcs
    out = []
    for a, (_, head) in enumerate(arcs):
        for b, (tail, _) in enumerate(arcs):
            if head == tail:
                out.append((a, b))
    return Digraph(len(arcs), tuple(out))


def _forest_and_fundamental_cycles(graph: Multigraph) -> tuple[list[int], list[int]]:
    """Edge ids of a spanning forest and the fundamental-cycle bitmasks of
    the remaining edges (bit i = edge i)."""
    n = graph.num_vertices
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    adjacency: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    tree: list[int] = []
    non_tree: list[int] = []
    for eid, (u, v) in enumerate(graph.edges):
        ru, rv = find(u), find(v)
        if u != v and ru != rv:
            parent[ru] = rv
            tree.append(eid)
            adjacency[u].append((v, eid))
            adjacency[v].append((u, eid))
        else:
            non_tree.append(eid)

    # tree-path masks from each vertex to its component root
    root_path: list[int | None] = [None] * n
    for start in range(n):
        if root_path[start] is not None:
            continue
        root_path[start] = 0
        stack = [start]
        while stack:
            x = stack.pop()
            for y, eid in adjacency[x]:
                if root_path[y] is None:
                    root_path[y] = root_path[x] ^ (1 << eid)
                    stack.append(y)

    cycles = []
    for eid in non_tree:
        u, v = graph.edges[eid]
        mask = 1 << eid
        if u != v:
            mask ^= root_path[u] ^ root_path[v]
        cycles.append(mask)
    return tree, cycles


def _star_masks(graph: Multigraph) -> list[int]:
    """Vertex-star cut vectors, omitting one vertex per component.  Loops
    vanish over GF(2) (both ends at the same vertex)."""
    _, labels = connected_components(graph)
    first_of_component: set[int] = set()
    chosen: set[int] = set()
    for v in range(graph.num_vertices):
        if labels[v] not in first_of_component:
            first_of_component.add(labels[v])
            chosen.add(v)
    stars = []
    for v in range(graph.num_vertices):
        if v in chosen:
            continue
        mask = 0
        for eid, (a, b) in enumerate(graph.edges):
            if (a == v) != (b == v):
                mask ^= 1 << eid
        stars.append(mask)
    return stars


def bicycle_dimension(graph: Multigraph) -> int:
    """Dimension over GF(2) of cycle space intersect cut space, via
    dim U + dim W - dim(U + W) with the standard bases."""
    n = graph.num_vertices
    m = graph.num_edges
    c, _ = connected_components(graph)
    dim_cycle = m - n + c
    dim_cut = n - c
    _, cycles = _forest_and_fundamental_cycles(graph)
    stars = _star_masks(graph)
    stacked_rank = gf2_rank(cycles + stars)
    return dim_cycle + dim_cut - stacked_rank


def ferm2_medial_closed_form(plane: PlaneGraph) -> int:
    """Closed form for Ferm_2 of the adjacency matrix of the line digraph of
    the medial graph:

        (-2)^(components of G) * (-1)^(edges of G) * (-2)^(bicycle dimension)

    It equals the directly computed fermionant whenever every component of G
    contains an edge (the medial graph never sees isolated vertices)."""
    g = plane.graph
    if g.num_edges == 0:
        raise ValueError("medial graph requires at least one edge")
    c, _ = connected_components(g)
    dim_b = bicycle_dimension(g)
    return (-2) ** c * (-1) ** g.num_edges * (-2) ** dim_b


def medial_line_adjacency(plane: PlaneGraph):
    """Adjacency matrix of line_digraph(medial(G)); the matrix whose
    fermionant the plane-graph identities are about."""
    return adjacency_matrix(line_digraph(medial(plane)))
