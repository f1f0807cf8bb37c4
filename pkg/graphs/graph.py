from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Hashable, Iterable, List, Sequence, Tuple

import networkx as nx

from utils.exceptions import GraphError

Vertex = Hashable
Edge = Tuple[Vertex, Vertex]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with a fixed dense vertex order.

    ``vertices`` fixes the dense index of every vertex; every deterministic
    ordering in the package falls back to it. ``edges`` holds each edge once,
    endpoints ordered by dense index.
    """
    vertices: Tuple[Vertex, ...]
    edges: Tuple[Edge, ...]
    index: Dict[Vertex, int] = field(compare=False, repr=False)
    adjacency: Dict[Vertex, Tuple[Vertex, ...]] = field(compare=False, repr=False)
    _nbr_sets: Dict[Vertex, FrozenSet[Vertex]] = field(compare=False, repr=False)

    @property
    def n(self):
        return len(self.vertices)

    @property
    def m(self):
        return len(self.edges)

    def __contains__(self, v):
        return v in self.index

    def __len__(self):
        return len(self.vertices)

    def neighbors(self, v):
        return self.adjacency[v]

    def neighbor_set(self, v):
        return self._nbr_sets[v]

    def closed_neighborhood(self, v):
        return self._nbr_sets[v] | {v}

    def has_edge(self, u, v):
        return v in self._nbr_sets.get(u, ())

    def degree(self, v):
        return len(self.adjacency[v])

    def sort_key(self, v):
        return self.index[v]

    def sorted(self, vs):
        return sorted(vs, key=self.index.__getitem__)

    def to_networkx(self):
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edges)
        return g


def build_graph(vertex_ids: Sequence[Vertex], edge_pairs: Iterable[Sequence[Vertex]]) -> Graph:
    """Build a graph; duplicate edges are dropped, self-loops rejected."""
    vertices = []
    index = {}
    for v in vertex_ids:
        if v in index:
            raise GraphError('duplicate vertex %r' % (v,))
        index[v] = len(vertices)
        vertices.append(v)

    nbrs = {v: set() for v in vertices}
    for pair in edge_pairs:
        u, v = tuple(pair)
        if u == v:
            raise GraphError('self-loop at %r' % (u,))
        for x in (u, v):
            if x not in index:
                raise GraphError('edge endpoint %r is not a vertex' % (x,))
        nbrs[u].add(v)
        nbrs[v].add(u)

    edges = []
    for u in vertices:
        for v in nbrs[u]:
            if index[u] < index[v]:
                edges.append((u, v))
    edges.sort(key=lambda e: (index[e[0]], index[e[1]]))

    adjacency = {v: tuple(sorted(nbrs[v], key=index.__getitem__)) for v in vertices}
    nbr_sets = {v: frozenset(nbrs[v]) for v in vertices}
    return Graph(tuple(vertices), tuple(edges), index, adjacency, nbr_sets)


def empty_graph() -> Graph:
    return build_graph([], [])


def connected_components(g: Graph) -> List[FrozenSet[Vertex]]:
    """Components ordered by their least dense index."""
    comps = [frozenset(c) for c in nx.connected_components(g.to_networkx())]
    comps.sort(key=lambda c: min(g.index[v] for v in c))
    return comps


def induced_subgraph(g: Graph, vs: Iterable[Vertex]) -> Graph:
    keep = set(vs)
    for v in keep:
        if v not in g:
            raise GraphError('unknown vertex %r' % (v,))
    vertices = [v for v in g.vertices if v in keep]
    edges = [(u, v) for u, v in g.edges if u in keep and v in keep]
    return build_graph(vertices, edges)
