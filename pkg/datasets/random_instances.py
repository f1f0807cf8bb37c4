"""Seeded random sunflower instances.

``gen_random_yes`` draws unit intervals on a grid of quarters and reads each
graph off as an intersection graph, so the instance is unit-representable by
construction. ``gen_random_any`` perturbs such an instance with edges inside
single graphs, after which its status is unknown.
"""
import heapq
import itertools
import logging
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from graphs.graph import build_graph
from graphs.sunflower import SunflowerInstance
from models.sunflower_proper import SimultaneousRepresentation

logger = logging.getLogger(__name__)

GRID = 4


def _left_endpoints(rng: np.random.Generator, count: int, span: int) -> List[Fraction]:
    return [Fraction(int(x), GRID) for x in rng.integers(0, span * GRID, size=count)]


def _unit_edges(vertices: Sequence[str], left: Dict[str, Fraction]) -> List[Tuple[str, str]]:
    """Pairs of unit intervals that meet, by sweep over left endpoints."""
    order = sorted(vertices, key=lambda v: (left[v], v))
    active = []
    edges = []
    for v in order:
        while active and active[0][0] < left[v]:
            heapq.heappop(active)
        edges.extend((u, v) for _, u in active)
        heapq.heappush(active, (left[v] + 1, v))
    return edges


def _span(n_shared: int, n_private: int, spread: Optional[int]) -> int:
    if spread is not None:
        return max(1, spread)
    return max(1, (n_shared + n_private) // 2)


def gen_random_yes(seed: int, n_shared: int, n_private_per_graph: int, k: int,
                   with_certificate: bool = False, spread: Optional[int] = None):
    """Unit-YES sunflower instance; with ``with_certificate`` also returns the
    generating representation.

    ``spread`` is the length of the line the left endpoints are drawn from; by
    default about two vertices of every graph share a unit of length.
    """
    if k < 1 or n_shared < 0 or n_private_per_graph < 0:
        raise ValueError('need k >= 1 and non-negative vertex counts')
    rng = np.random.default_rng(seed)
    span = _span(n_shared, n_private_per_graph, spread)

    shared = ['s%d' % t for t in range(n_shared)]
    left = dict(zip(shared, _left_endpoints(rng, n_shared, span)))
    private = []
    for i in range(k):
        names = ['g%d_%d' % (i + 1, t) for t in range(n_private_per_graph)]
        left.update(zip(names, _left_endpoints(rng, n_private_per_graph, span)))
        private.append(names)

    shared_edges = frozenset(frozenset(e) for e in _unit_edges(shared, left))
    graphs = []
    for names in private:
        vertices = shared + names
        graphs.append(build_graph(vertices, _unit_edges(vertices, left)))
    inst = SunflowerInstance(tuple(graphs), tuple(shared), shared_edges,
                             name='random-yes-%d' % seed)
    logger.debug('random instance %s: %d vertices per graph, span %d',
                 inst.name, n_shared + n_private_per_graph, span)
    if not with_certificate:
        return inst
    rep = SimultaneousRepresentation({v: (l, l + 1) for v, l in left.items()},
                                     tuple(g.vertices for g in graphs), 'unit')
    return inst, rep


def gen_random_any(seed: int, n_shared: int, n_private: int, k: int, extra_edges: int = 1,
                   spread: Optional[int] = None) -> SunflowerInstance:
    """``gen_random_yes`` plus ``extra_edges`` random edges, each inside one
    graph and touching one of its private vertices so that S stays induced."""
    base = gen_random_yes(seed, n_shared, n_private, k, spread=spread)
    rng = np.random.default_rng([seed, 1])
    shared = base.shared
    edge_sets = [set(g.edges) for g in base.graphs]
    for _ in range(extra_edges):
        i = int(rng.integers(0, k))
        g = base.graphs[i]
        candidates = [(u, v) for u, v in itertools.combinations(g.vertices, 2)
                      if (u not in shared or v not in shared) and (u, v) not in edge_sets[i]]
        if not candidates:
            continue
        edge_sets[i].add(candidates[int(rng.integers(0, len(candidates)))])
    graphs = tuple(build_graph(g.vertices, sorted(edges, key=lambda e: (g.index[e[0]], g.index[e[1]])))
                   for g, edges in zip(base.graphs, edge_sets))
    return SunflowerInstance(graphs, base.shared_vertices, base.shared_edges,
                             name='random-any-%d' % seed)
