"""Single-graph proper interval machinery.

Recognition runs three lexicographic BFS sweeps per component (plain, then
two ``+`` sweeps that break ties toward the end of the previous sweep) and
accepts the last sweep only if every closed neighbourhood is consecutive in
it. Blocks are the classes of vertices with equal closed neighbourhoods.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from graphs.graph import Graph, Vertex, connected_components
from pqtree import P, PQTree, Q, leaf, make_node, reduce_all, universal_tree
from utils.exceptions import InternalInvariantError, PQTreeError, PreconditionError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BlockPartition:
    blocks: Tuple[FrozenSet[Vertex], ...]
    block_of: Dict[Vertex, int] = field(compare=False, repr=False)

    def __len__(self):
        return len(self.blocks)


def compute_blocks(g: Graph) -> BlockPartition:
    by_nbhd = {}
    for v in g.vertices:
        by_nbhd.setdefault(g.closed_neighborhood(v), []).append(v)
    # dict keeps first-seen order, so blocks come out ordered by least index
    blocks = tuple(frozenset(vs) for vs in by_nbhd.values())
    block_of = {v: b for b, blk in enumerate(blocks) for v in blk}
    return BlockPartition(blocks, block_of)


@dataclass(frozen=True)
class StraightEnumeration:
    """Ordered blocks of a graph; ``spans`` gives each component's
    half-open block range, components left to right."""
    graph: Graph
    blocks: Tuple[FrozenSet[Vertex], ...]
    spans: Tuple[Tuple[int, int], ...]

    def __len__(self):
        return len(self.blocks)

    @cached_property
    def block_of(self) -> Dict[Vertex, int]:
        return {v: b for b, blk in enumerate(self.blocks) for v in blk}

    @cached_property
    def reach(self) -> Tuple[int, ...]:
        """Index of the last block adjacent to each block."""
        bo = self.block_of
        out = []
        for b, blk in enumerate(self.blocks):
            rep = next(iter(blk))
            out.append(max([b] + [bo[w] for w in self.graph.neighbors(rep)]))
        return tuple(out)

    @cached_property
    def left_reach(self) -> Tuple[int, ...]:
        bo = self.block_of
        out = []
        for b, blk in enumerate(self.blocks):
            rep = next(iter(blk))
            out.append(min([b] + [bo[w] for w in self.graph.neighbors(rep)]))
        return tuple(out)

    @cached_property
    def component_of_block(self) -> Tuple[int, ...]:
        out = [0] * len(self.blocks)
        for c, (s, e) in enumerate(self.spans):
            for b in range(s, e):
                out[b] = c
        return tuple(out)

    @property
    def components(self) -> List[FrozenSet[Vertex]]:
        return [frozenset().union(*self.blocks[s:e]) for s, e in self.spans]

    def component_index(self, v) -> int:
        return self.component_of_block[self.block_of[v]]

    def vertex_order(self) -> Tuple[Vertex, ...]:
        out = []
        for blk in self.blocks:
            out.extend(self.graph.sorted(blk))
        return tuple(out)

    def key(self) -> Tuple:
        g = self.graph
        return tuple(tuple(sorted(g.index[v] for v in blk)) for blk in self.blocks)

    def reversed(self) -> 'StraightEnumeration':
        return enumeration_from_blocks(self.graph, self.blocks[::-1])

    def reverse_span(self, c: int) -> 'StraightEnumeration':
        s, e = self.spans[c]
        blocks = self.blocks[:s] + self.blocks[s:e][::-1] + self.blocks[e:]
        return StraightEnumeration(self.graph, blocks, self.spans)

    def reverse_component(self, vertices) -> 'StraightEnumeration':
        anchor = next(iter(vertices))
        return self.reverse_span(self.component_index(anchor))

    def restrict(self, sub: Graph) -> 'StraightEnumeration':
        """The enumeration induced on an induced subgraph."""
        order = [v for v in self.vertex_order() if v in sub]
        return enumeration_from_order(sub, order)

    def is_valid(self) -> bool:
        g = self.graph
        seen = [v for blk in self.blocks for v in blk]
        if len(seen) != g.n or set(seen) != set(g.vertices):
            return False
        if any(not blk for blk in self.blocks):
            return False
        nb = [g.closed_neighborhood(next(iter(blk))) for blk in self.blocks]
        for blk, n in zip(self.blocks, nb):
            if any(g.closed_neighborhood(v) != n for v in blk):
                return False
        if len(set(nb)) != len(nb):
            return False
        if not verify_fine_enumeration(g, self.vertex_order()):
            return False
        return self.spans == _spans(g, self.blocks)


def _spans(g: Graph, blocks) -> Tuple[Tuple[int, int], ...]:
    block_of = {v: b for b, blk in enumerate(blocks) for v in blk}
    spans = []
    start = 0
    reach = -1
    for b, blk in enumerate(blocks):
        # a component ends where nothing to the left reaches block b
        if b > start and reach < b:
            spans.append((start, b))
            start = b
        for v in blk:
            for w in g.neighbors(v):
                reach = max(reach, block_of[w])
        reach = max(reach, b)
    if blocks:
        spans.append((start, len(blocks)))
    return tuple(spans)


def enumeration_from_blocks(g: Graph, blocks) -> StraightEnumeration:
    blocks = tuple(blocks)
    return StraightEnumeration(g, blocks, _spans(g, blocks))


@dataclass(frozen=True)
class IntervalRepresentation:
    """Closed intervals with exact rational endpoints."""
    intervals: Dict[Vertex, Tuple[Fraction, Fraction]]

    def left(self, v) -> Fraction:
        return self.intervals[v][0]

    def right(self, v) -> Fraction:
        return self.intervals[v][1]

    @property
    def vertices(self):
        return tuple(self.intervals)


def _lex_bfs(g: Graph, start: Sequence[Vertex]) -> List[Vertex]:
    """One lexicographic BFS sweep over the vertices in ``start``.

    Ties go to the earliest vertex of ``start``; a ``+`` sweep passes the
    previous sweep reversed.
    """
    rank = {v: i for i, v in enumerate(start)}
    nbrs = {v: sorted((w for w in g.neighbors(v) if w in rank), key=rank.__getitem__)
            for v in start}

    # cells form a doubly linked list; each cell keeps its members in rank order
    members = {0: dict.fromkeys(start)}
    nxt, prv = {0: None}, {0: None}
    head = 0
    cell_of = {v: 0 for v in start}
    fresh = 1
    out = []

    while head is not None:
        cell = members[head]
        v = next(iter(cell))
        del cell[v]
        del cell_of[v]
        out.append(v)
        if not cell:
            head = _unlink(head, members, nxt, prv, head)

        split = {}
        for w in nbrs[v]:
            c = cell_of.get(w)
            if c is None:
                continue
            new = split.get(c)
            if new is None:
                new = fresh
                fresh += 1
                split[c] = new
                members[new] = {}
                prv[new], nxt[new] = prv[c], c
                if prv[c] is not None:
                    nxt[prv[c]] = new
                prv[c] = new
                if head == c:
                    head = new
            del members[c][w]
            members[new][w] = None
            cell_of[w] = new
        for c in split:
            if not members[c]:
                head = _unlink(c, members, nxt, prv, head)
    return out


def _unlink(c, members, nxt, prv, head):
    p, n = prv[c], nxt[c]
    if p is not None:
        nxt[p] = n
    if n is not None:
        prv[n] = p
    del members[c], nxt[c], prv[c]
    return n if head == c else head


def _consecutive(g: Graph, order: Sequence[Vertex]) -> bool:
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        ps = [pos[w] for w in g.neighbors(v)]
        if not ps:
            continue
        ps.append(pos[v])
        if max(ps) - min(ps) + 1 != len(ps):
            return False
    return True


def _group_blocks(g: Graph, order: Sequence[Vertex]) -> List[FrozenSet[Vertex]]:
    blocks = []
    current, key = [], None
    for v in order:
        n = g.closed_neighborhood(v)
        if current and n != key:
            blocks.append(frozenset(current))
            current = []
        current.append(v)
        key = n
    if current:
        blocks.append(frozenset(current))
    return blocks


def enumeration_from_order(g: Graph, order: Sequence[Vertex]) -> StraightEnumeration:
    """Group a fine enumeration of ``g`` into its straight enumeration."""
    order = list(order)
    if len(order) != g.n or set(order) != set(g.vertices):
        raise PreconditionError('order is not a permutation of the vertices')
    if not _consecutive(g, order):
        raise PreconditionError('order is not a fine enumeration')
    blocks = _group_blocks(g, order)
    keys = [g.closed_neighborhood(next(iter(b))) for b in blocks]
    if len(set(keys)) != len(keys):
        raise InternalInvariantError('twins split across a fine enumeration')
    return enumeration_from_blocks(g, blocks)


def _canonical(g: Graph, blocks: List[FrozenSet[Vertex]]) -> List[FrozenSet[Vertex]]:
    def key(seq):
        least = min((v for b in seq for v in b), key=g.index.__getitem__)
        p = next(i for i, b in enumerate(seq) if least in b)
        return p, tuple(min(g.index[v] for v in b) for b in seq)

    rev = blocks[::-1]
    return rev if key(rev) < key(blocks) else blocks


def straight_enumeration(g: Graph) -> Optional[StraightEnumeration]:
    """Straight enumeration in canonical orientation, or None when ``g`` is
    not a proper interval graph."""
    blocks = []
    for comp in connected_components(g):
        start = g.sorted(comp)
        sweep = _lex_bfs(g, start)
        sweep = _lex_bfs(g, sweep[::-1])
        sweep = _lex_bfs(g, sweep[::-1])
        if not _consecutive(g, sweep):
            logger.debug('component of %d vertices is not proper interval', len(comp))
            return None
        comp_blocks = _group_blocks(g, sweep)
        keys = [g.closed_neighborhood(next(iter(b))) for b in comp_blocks]
        if len(set(keys)) != len(keys):
            raise InternalInvariantError('twins split across a fine enumeration')
        blocks.extend(_canonical(g, comp_blocks))
    return enumeration_from_blocks(g, blocks)


def is_proper_interval(g: Graph) -> bool:
    return straight_enumeration(g) is not None


def verify_fine_enumeration(g: Graph, sigma: Sequence[Vertex]) -> bool:
    sigma = list(sigma)
    if len(sigma) != g.n or set(sigma) != set(g.vertices):
        raise PreconditionError('order is not a permutation of the vertices')
    return _consecutive(g, sigma)


def verify_four_vertex_condition(g: Graph, sigma: Sequence[Vertex]) -> bool:
    """No v <= u < x <= w with vw an edge and ux a non-edge."""
    sigma = list(sigma)
    if len(sigma) != g.n or set(sigma) != set(g.vertices):
        raise PreconditionError('order is not a permutation of the vertices')
    pos = {v: i for i, v in enumerate(sigma)}
    for a, b in g.edges:
        p, q = sorted((pos[a], pos[b]))
        window = sigma[p:q + 1]
        for i, u in enumerate(window):
            for x in window[i + 1:]:
                if not g.has_edge(u, x):
                    return False
    return True


def representation_from_straight_enumeration(se: StraightEnumeration) -> IntervalRepresentation:
    """Block b gets [b, reach(b) + (b + 1) / (m + 1)] for m blocks.

    The fractional part keeps right endpoints strictly increasing while never
    reaching the next non-adjacent block.
    """
    m = len(se.blocks)
    intervals = {}
    for b, blk in enumerate(se.blocks):
        l = Fraction(b)
        r = Fraction(se.reach[b]) + Fraction(b + 1, m + 1)
        for v in blk:
            intervals[v] = (l, r)
    return IntervalRepresentation({v: intervals[v] for v in se.graph.vertices})


def enumeration_from_representation(g: Graph, rep: IntervalRepresentation) -> StraightEnumeration:
    order = sorted(g.vertices, key=lambda v: (rep.left(v), rep.right(v), g.index[v]))
    return enumeration_from_order(g, order)


def fine_enum_pqtree(g: Graph) -> Optional[PQTree]:
    """Tree whose consistent orders are exactly the fine enumerations of ``g``."""
    if g.n == 0:
        raise PQTreeError('empty graph has no fine enumeration tree')
    se = straight_enumeration(g)
    if se is None:
        return None
    comps = []
    for s, e in se.spans:
        blocks = [make_node(P, [leaf(v) for v in g.sorted(se.blocks[b])]) for b in range(s, e)]
        comps.append(make_node(Q, blocks))
    return PQTree(make_node(P, comps))


def neighborhood_pqtree(g: Graph) -> Optional[PQTree]:
    if g.n == 0:
        raise PQTreeError('empty graph has no fine enumeration tree')
    t = reduce_all(universal_tree(g.vertices), [g.closed_neighborhood(v) for v in g.vertices])
    return None if t.is_null else t
