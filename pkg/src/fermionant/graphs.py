r"""Multigraphs, digraphs, and combinatorial planar embeddings.

A PlaneGraph is a multigraph plus a rotation system: for each vertex, the
cyclic counterclockwise order of its incident half-edges.  Each edge e
contributes half-edges (e, 0) at its first endpoint and (e, 1) at its
second; a loop contributes both at the same vertex.

Face traversal follows the fixed successor rule: a dart (a directed
traversal of an edge, named by the half-edge it departs from) arrives at a
vertex on the opposite half-edge, and the walk continues along the next
half-edge counterclockwise from the arrival.  With counterclockwise
rotations this traces every bounded face with its interior on the left and
the unbounded face the other way round, e.g. for a triangle embedded with
vertices in counterclockwise position::

        2            rotation at 1 is [edge 12, edge 01]; the dart 0->1
       / \           arrives on edge 01's half-edge at 1 and departs on
      0---1          edge 12, so the walk 0->1->2->0 encloses the inside.

Every half-edge lies on exactly one face walk, so walk lengths sum to twice
the edge count, and each component that has edges satisfies the planarity
relation  vertices - edges + faces = 2.  (With all edges in one component
this is the familiar |V| - |E| + |F| = 1 + components, isolated vertices
included.)  Constructors reject rotation systems that violate it.

All graph values are immutable; operations are pure functions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import FormatError
from .matrixfn import Matrix

HalfEdge = tuple[int, int]  # (edge_id, end) with end in {0, 1}


@dataclass(frozen=True)
class Multigraph:
    """Undirected multigraph; loops and parallel edges allowed.  The index
    of an edge in ``edges`` is its id."""

    num_vertices: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "edges", tuple((u, v) for u, v in self.edges))
        if self.num_vertices < 0:
            raise ValueError("num_vertices must be nonnegative")
        for eid, (u, v) in enumerate(self.edges):
            if not (0 <= u < self.num_vertices and 0 <= v < self.num_vertices):
                raise ValueError(
                    f"edge {eid} endpoints ({u}, {v}) out of range for {self.num_vertices} vertices"
                )

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        """Loops count twice."""
        return sum((u == v) + (w == v) for u, w in self.edges)

    def is_loop(self, edge_id: int) -> bool:
        u, v = self.edges[edge_id]
        return u == v


@dataclass(frozen=True)
class Digraph:
    """Directed multigraph; arcs are (tail, head), loops and parallel arcs
    allowed.  The index of an arc in ``arcs`` is its id."""

    num_vertices: int
    arcs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "arcs", tuple((u, v) for u, v in self.arcs))
        if self.num_vertices < 0:
            raise ValueError("num_vertices must be nonnegative")
        for aid, (u, v) in enumerate(self.arcs):
            if not (0 <= u < self.num_vertices and 0 <= v < self.num_vertices):
                raise ValueError(
                    f"arc {aid} endpoints ({u}, {v}) out of range for {self.num_vertices} vertices"
                )

    @property
    def num_arcs(self) -> int:
        return len(self.arcs)

    def out_degree(self, v: int) -> int:
        return sum(1 for u, _ in self.arcs if u == v)

    def in_degree(self, v: int) -> int:
        return sum(1 for _, w in self.arcs if w == v)


def _half_edges_of(graph: Multigraph) -> list[tuple[HalfEdge, int]]:
    """All (half-edge, vertex it belongs to) pairs."""
    out = []
    for eid, (u, v) in enumerate(graph.edges):
        out.append(((eid, 0), u))
        out.append(((eid, 1), v))
    return out


@dataclass(frozen=True)
class PlaneGraph:
    """A multigraph with a counterclockwise rotation system.

    ``rotations[v]`` lists the half-edges incident to v in counterclockwise
    cyclic order.  Validation checks that the rotation lists partition the
    half-edges, that each half-edge sits at its own endpoint, and that every
    component with edges is planar under the face count."""

    graph: Multigraph
    rotations: tuple[tuple[HalfEdge, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(
            self,
            "rotations",
            tuple(tuple((e, s) for e, s in rot) for rot in self.rotations),
        )
        g = self.graph
        if len(self.rotations) != g.num_vertices:
            raise FormatError(
                f"expected one rotation per vertex ({g.num_vertices}), got {len(self.rotations)}"
            )
        owner = {he: v for he, v in _half_edges_of(g)}
        seen: set[HalfEdge] = set()
        for v, rot in enumerate(self.rotations):
            for he in rot:
                if he not in owner:
                    raise FormatError(f"rotation at vertex {v} names unknown half-edge {he}")
                if owner[he] != v:
                    raise FormatError(
                        f"rotation at vertex {v} lists half-edge {he} belonging to vertex {owner[he]}"
                    )
                if he in seen:
                    raise FormatError(f"half-edge {he} duplicated (vertex {v})")
                seen.add(he)
        missing = set(owner) - seen
        if missing:
            he = min(missing)
            raise FormatError(
                f"half-edge {he} missing from the rotation at vertex {owner[he]}"
            )
        # per-component planarity: V - E + F = 2 wherever there are edges
        walks = faces(self)
        comp_count, labels = connected_components(g)
        v_of = [0] * comp_count
        e_of = [0] * comp_count
        f_of = [0] * comp_count
        for v in range(g.num_vertices):
            v_of[labels[v]] += 1
        for u, _ in g.edges:
            e_of[labels[u]] += 1
        for walk in walks:
            eid = walk[0][0]
            f_of[labels[g.edges[eid][0]]] += 1
        for c in range(comp_count):
            if e_of[c] and v_of[c] - e_of[c] + f_of[c] != 2:
                raise FormatError(
                    f"rotation system is not planar on the component of vertex "
                    f"{labels.index(c)}: V-E+F = {v_of[c]}-{e_of[c]}+{f_of[c]} != 2"
                )

    @property
    def num_vertices(self) -> int:
        return self.graph.num_vertices

    @property
    def num_edges(self) -> int:
        return self.graph.num_edges


def faces(plane: PlaneGraph) -> list[tuple[HalfEdge, ...]]:
    """Face walks of the embedding, each a cyclic dart sequence.

    A dart is named by the half-edge it departs from: (e, s) traverses edge
    e from endpoint s to endpoint 1-s.  Every half-edge appears in exactly
    one walk.  Walks are normalized to start at their smallest dart and the
    list is sorted, so the output is canonical.
    """
    g = plane.graph
    succ_rotation: dict[HalfEdge, HalfEdge] = {}
    for rot in plane.rotations:
        d = len(rot)
        for i, he in enumerate(rot):
            succ_rotation[he] = rot[(i + 1) % d]

    def next_dart(dart: HalfEdge) -> HalfEdge:
        eid, s = dart
        arrival = (eid, 1 - s)
        return succ_rotation[arrival]

    walks = []
    visited: set[HalfEdge] = set()
    for eid in range(g.num_edges):
        for s in (0, 1):
            start = (eid, s)
            if start in visited:
                continue
            walk = []
            d = start
            while True:
                walk.append(d)
                visited.add(d)
                d = next_dart(d)
                if d == start:
                    break
            k = walk.index(min(walk))
            walks.append(tuple(walk[k:] + walk[:k]))
    walks.sort()
    return walks


def connected_components(graph: Multigraph | Digraph) -> tuple[int, list[int]]:
    """Component count (isolated vertices included) and a vertex labeling
    with labels 0..count-1 in order of first appearance.  Arc direction is
    ignored for digraphs."""
    n = graph.num_vertices
    pairs = graph.edges if isinstance(graph, Multigraph) else graph.arcs
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in pairs:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    labels = [-1] * n
    count = 0
    for v in range(n):
        r = find(v)
        if labels[r] == -1:
            labels[r] = count
            count += 1
        labels[v] = labels[r]
    return count, labels


def adjacency_matrix(graph: Multigraph | Digraph) -> Matrix:
    """Multiplicity-counting adjacency matrix.  For a digraph, entry (u, v)
    is the number of arcs u -> v (loops on the diagonal); for a multigraph,
    entry (u, v) is the number of edges between u and v and the diagonal
    counts loops once."""
    n = graph.num_vertices
    m = [[0] * n for _ in range(n)]
    if isinstance(graph, Digraph):
        for u, v in graph.arcs:
            m[u][v] += 1
    else:
        for u, v in graph.edges:
            if u == v:
                m[u][u] += 1
            else:
                m[u][v] += 1
                m[v][u] += 1
    return Matrix(tuple(tuple(r) for r in m))
