"""Chain-bar conflicts.

A bar is an independent set met in increasing block order of one graph; a
relaxed chain is a path in the union graph. A pair of shared vertices joined
by a relaxed chain of size c and a bar of size at least c cannot be drawn
with unit intervals in the given enumeration. Bars are counted greedily from
per-graph tables, so every query is cheap once the tables exist.
"""
import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple, Union

import networkx as nx

from graphs.graph import Vertex
from graphs.sunflower import SunflowerInstance, union_graph
from models.proper_interval import StraightEnumeration
from utils.exceptions import PreconditionError

logger = logging.getLogger(__name__)

UNION = 'union'


@dataclass(frozen=True)
class Conflict:
    u: Vertex
    v: Vertex
    chain: Tuple[Vertex, ...]
    bar: Tuple[Vertex, ...]
    chain_graph: Union[str, int]
    bar_graph: int

    def to_json(self):
        return {
            'u': self.u,
            'v': self.v,
            'chain': list(self.chain),
            'bar': list(self.bar),
            'chain_graph': self.chain_graph,
            'bar_graph': self.bar_graph,
        }


class BarTable:
    """Greedy bar counts for one straight enumeration.

    ``right[b]`` is the largest bar starting in block b and staying inside
    its component to the right, ``left[b]`` the mirror image; the greedy
    choice of the nearest non-adjacent block is optimal for both.
    """

    def __init__(self, sigma: StraightEnumeration):
        self.sigma = sigma
        n = len(sigma.blocks)
        reach, lreach = sigma.reach, sigma.left_reach
        self.right = [1] * n
        self.left = [1] * n
        for s, e in sigma.spans:
            for b in range(e - 1, s - 1, -1):
                nxt = reach[b] + 1
                if nxt < e:
                    self.right[b] = 1 + self.right[nxt]
            for b in range(s, e):
                nxt = lreach[b] - 1
                if nxt >= s:
                    self.left[b] = 1 + self.left[nxt]
        # prefix[c] = maximum independent set sizes of components before c
        self.prefix = [0]
        for s, e in sigma.spans:
            self.prefix.append(self.prefix[-1] + (self.right[s] if e > s else 0))

    def between(self, c: int, d: int) -> int:
        """Independent vertices in the components strictly between c < d."""
        return self.prefix[d] - self.prefix[c + 1]

    def inside(self, a: int, b: int) -> int:
        """Largest bar from block a to block b of one component, a < b."""
        reach = self.sigma.reach
        if reach[a] >= b:
            return 0
        count, cur = 1, a
        while True:
            nxt = reach[cur] + 1
            if nxt < b and reach[nxt] < b:
                count += 1
                cur = nxt
            else:
                return count + 1

    def inside_witness(self, a: int, b: int) -> List[int]:
        reach = self.sigma.reach
        picks, cur = [a], a
        while True:
            nxt = reach[cur] + 1
            if nxt < b and reach[nxt] < b:
                picks.append(nxt)
                cur = nxt
            else:
                picks.append(b)
                return picks

    def rightward(self, b: int, e: int) -> List[int]:
        reach = self.sigma.reach
        picks = [b]
        while reach[picks[-1]] + 1 < e:
            picks.append(reach[picks[-1]] + 1)
        return picks

    def leftward(self, b: int, s: int) -> List[int]:
        lreach = self.sigma.left_reach
        picks = [b]
        while lreach[picks[-1]] - 1 >= s:
            picks.append(lreach[picks[-1]] - 1)
        return picks[::-1]


def _tables(se) -> List[BarTable]:
    cached = getattr(se, '_bar_tables', None)
    if cached is None:
        cached = [BarTable(sigma) for sigma in se.enumerations]
        object.__setattr__(se, '_bar_tables', cached)
    return cached


def shortest_chain(inst: SunflowerInstance, u: Vertex, v: Vertex, star=None) -> Optional[int]:
    """Size of a shortest relaxed (u, v)-chain, or None if there is none."""
    for x in (u, v):
        if not inst.is_shared(x):
            raise PreconditionError('%r is not a shared vertex' % (x,))
    if u == v:
        return 1
    star = star if star is not None else union_graph(inst).to_networkx()
    try:
        return nx.shortest_path_length(star, u, v) + 1
    except nx.NetworkXNoPath:
        return None


def max_bar(inst: SunflowerInstance, i: int, se, u: Vertex, v: Vertex,
            flip_u: bool = False, flip_v: bool = False) -> Optional[int]:
    """Largest (u, v)-bar in graph ``i`` after optionally reversing the
    components of u and v; None unless u comes strictly before v."""
    sigma = se[i]
    for x in (u, v):
        if x not in sigma.graph:
            raise PreconditionError('%r is not a vertex of G_%d' % (x, i + 1))
    table = _tables(se)[i]
    bu, bv = sigma.block_of[u], sigma.block_of[v]
    cu, cv = sigma.component_of_block[bu], sigma.component_of_block[bv]
    if cu == cv:
        if flip_u != flip_v:
            raise PreconditionError('u and v share a component; flips must agree')
        if (bu < bv) == flip_u or bu == bv:
            return None
        count = table.inside(min(bu, bv), max(bu, bv))
        return count or None
    if cu > cv:
        return None
    r = table.left[bu] if flip_u else table.right[bu]
    l = table.right[bv] if flip_v else table.left[bv]
    return r + table.between(cu, cv) + l


def _bar_witness(se, i, u, v, size) -> Tuple[Vertex, ...]:
    sigma = se[i]
    table = _tables(se)[i]
    bu, bv = sigma.block_of[u], sigma.block_of[v]
    cu, cv = sigma.component_of_block[bu], sigma.component_of_block[bv]
    if cu == cv:
        blocks = table.inside_witness(bu, bv)
    else:
        blocks = table.rightward(bu, sigma.spans[cu][1])
        for c in range(cu + 1, cv):
            s, e = sigma.spans[c]
            blocks.extend(table.rightward(s, e))
        blocks.extend(table.leftward(bv, sigma.spans[cv][0]))
    seq = [min(sigma.blocks[b], key=sigma.graph.index.__getitem__) for b in blocks]
    seq[0], seq[-1] = u, v
    if len(seq) > size:
        seq = seq[:size - 1] + [v]
    return tuple(seq)


def find_relaxed_conflict(inst: SunflowerInstance, se) -> Optional[Conflict]:
    """First relaxed conflict over shared pairs in shared order, or None."""
    shared = sorted(inst.shared_vertices, key=se.shared_rank().__getitem__)
    if len(shared) < 2:
        return None
    star = union_graph(inst).to_networkx()
    for a, u in enumerate(shared):
        dist = nx.single_source_shortest_path_length(star, u)
        for v in shared[a + 1:]:
            if v not in dist:
                continue
            chain = dist[v] + 1
            for i, sigma in enumerate(se.enumerations):
                first, second = (u, v) if sigma.block_of[u] <= sigma.block_of[v] else (v, u)
                bar = max_bar(inst, i, se, first, second)
                if bar is not None and bar >= chain:
                    path = nx.shortest_path(star, first, second)
                    witness = Conflict(first, second, tuple(path),
                                       _bar_witness(se, i, first, second, chain), UNION, i)
                    logger.debug('relaxed conflict at (%r, %r): chain %d, bar %d in G_%d',
                                 first, second, chain, bar, i + 1)
                    return witness
    return None
