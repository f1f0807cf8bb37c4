"""Partial orders as reachability bitsets, and the order induced by a
simultaneous enumeration."""
from dataclasses import dataclass
from functools import cached_property
from typing import FrozenSet, Iterator, List, Sequence, Tuple

from graphs.graph import Vertex
from graphs.sunflower import SunflowerInstance
from utils.exceptions import PreconditionError


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class PartialOrder:
    """Strict partial order kept transitively closed.

    ``desc[i]`` holds the strict successors of vertex ``i`` as a bitset and
    ``anc[i]`` its strict predecessors.
    """

    def __init__(self, vertices: Sequence[Vertex]):
        self.vertices = tuple(vertices)
        self.index = {v: i for i, v in enumerate(self.vertices)}
        self.desc = [0] * len(self.vertices)
        self.anc = [0] * len(self.vertices)

    def copy(self) -> 'PartialOrder':
        other = PartialOrder.__new__(PartialOrder)
        other.vertices = self.vertices
        other.index = self.index
        other.desc = list(self.desc)
        other.anc = list(self.anc)
        return other

    def __len__(self):
        return len(self.vertices)

    def less(self, u, v) -> bool:
        return bool(self.desc[self.index[u]] >> self.index[v] & 1)

    def leq(self, u, v) -> bool:
        return u == v or self.less(u, v)

    def comparable(self, u, v) -> bool:
        return self.leq(u, v) or self.less(v, u)

    def add(self, u, v) -> bool:
        """Add u < v and close transitively; False if it already held."""
        a, b = self.index[u], self.index[v]
        if a == b or self.desc[b] >> a & 1:
            raise PreconditionError('ordering %r before %r closes a cycle' % (u, v))
        if self.desc[a] >> b & 1:
            return False
        below = self.anc[a] | (1 << a)
        above = self.desc[b] | (1 << b)
        for i in iter_bits(below):
            self.desc[i] |= above
        for i in iter_bits(above):
            self.anc[i] |= below
        return True

    def pairs(self) -> List[Tuple[Vertex, Vertex]]:
        return [(self.vertices[i], self.vertices[j])
                for i in range(len(self.vertices)) for j in iter_bits(self.desc[i])]

    def is_linear(self) -> bool:
        n = len(self.vertices)
        full = (1 << n) - 1
        return all((self.desc[i] | self.anc[i] | (1 << i)) == full for i in range(n))


def chain_order(vertices: Sequence[Vertex], sequence: Sequence[Vertex]) -> PartialOrder:
    """The linear order ``sequence`` over ``vertices``."""
    order = PartialOrder(vertices)
    n = len(sequence)
    tail = 0
    for p in range(n - 1, -1, -1):
        a = order.index[sequence[p]]
        order.desc[a] = tail
        tail |= 1 << a
    head = 0
    for p in range(n):
        a = order.index[sequence[p]]
        order.anc[a] = head
        head |= 1 << a
    return order


@dataclass
class InducedPartialOrder:
    """The order induced by an enumeration plus, per graph, its vertices in
    that order (the order is linear on every graph's vertex set)."""
    order: PartialOrder
    lines: Tuple[Tuple[Vertex, ...], ...]

    def leq(self, u, v) -> bool:
        return self.order.leq(u, v)


def graph_lines(inst: SunflowerInstance, se) -> Tuple[Tuple[Vertex, ...], ...]:
    """Each graph's vertices in block order; inside a block, shared vertices
    by their rank across graphs, then private ones by index."""
    rank = se.shared_rank()
    lines = []
    for sigma in se.enumerations:
        line = []
        for blk in sigma.blocks:
            line.extend(sorted((v for v in blk if v in rank), key=rank.__getitem__))
            line.extend(sigma.graph.sorted(v for v in blk if v not in rank))
        lines.append(tuple(line))
    return tuple(lines)


def induced_partial_order(inst: SunflowerInstance, se) -> InducedPartialOrder:
    lines = graph_lines(inst, se)
    order = PartialOrder(tuple(inst.vertex_order))
    for line in lines:
        for u, v in zip(line, line[1:]):
            if order.less(v, u):
                raise PreconditionError('enumeration orders %r and %r both ways' % (u, v))
            order.add(u, v)
    return InducedPartialOrder(order, lines)


@dataclass
class EdgeClassification:
    inst: SunflowerInstance
    lines: Tuple[Tuple[Vertex, ...], ...]
    E: FrozenSet[Tuple[Vertex, Vertex]]

    @cached_property
    def F(self) -> FrozenSet[Tuple[Vertex, Vertex]]:
        """Ordered non-edges inside single graphs; quadratic, small inputs only."""
        out = set()
        for g, line in zip(self.inst.graphs, self.lines):
            for a, u in enumerate(line):
                for x in line[a + 1:]:
                    if not g.has_edge(u, x):
                        out.add((u, x))
        return frozenset(out)


def classify_edges(inst: SunflowerInstance, alpha: InducedPartialOrder) -> EdgeClassification:
    edges = set()
    for g, line in zip(inst.graphs, alpha.lines):
        pos = {v: p for p, v in enumerate(line)}
        for a, b in g.edges:
            edges.add((a, b) if pos[a] < pos[b] else (b, a))
    return EdgeClassification(inst, alpha.lines, frozenset(edges))


def is_left_closed(order: PartialOrder, edges: EdgeClassification) -> bool:
    """vw in E, ux in F and x <= w imply u < v."""
    for v, w in edges.E:
        for u, x in edges.F:
            if order.leq(x, w) and not order.less(u, v):
                return False
    return True
