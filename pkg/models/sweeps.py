"""Scouting, zipping and the sandwich graph.

All three work on the per-graph lines of an induced partial order. Scouting
walks the order from the right and adds only the pairs every left-closed
extension must contain; it repeats until a full sweep adds nothing. Zipping
then linearises the result from the left, adding the pairs that keep the
growing prefix left-closed. The sandwich graph joins every pair spanned by an
edge of some member graph.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from graphs.graph import Graph, Vertex, build_graph
from graphs.sunflower import SunflowerInstance
from models.conflicts import Conflict, find_relaxed_conflict
from models.orders import EdgeClassification, InducedPartialOrder, PartialOrder, chain_order
from models.proper_interval import IntervalRepresentation, verify_fine_enumeration
from utils.exceptions import InternalInvariantError, PreconditionError

logger = logging.getLogger(__name__)


class _Line:
    """One graph's vertices in order with first/last neighbour positions."""

    def __init__(self, g: Graph, line: Sequence[Vertex]):
        self.graph = g
        self.lin = tuple(line)
        self.pos = {v: q for q, v in enumerate(self.lin)}
        self.fpos = []
        self.lpos = []
        for q, v in enumerate(self.lin):
            ps = [self.pos[w] for w in g.neighbors(v)] + [q]
            self.fpos.append(min(ps))
            self.lpos.append(max(ps))
        # next position at or after q holding a vertex with an earlier neighbour
        n = len(self.lin)
        self.early = [n] * (n + 1)
        for q in range(n - 1, -1, -1):
            self.early[q] = q if self.fpos[q] < q else self.early[q + 1]

    def __len__(self):
        return len(self.lin)

    def __contains__(self, v):
        return v in self.pos

    def first_above(self, order: PartialOrder, x) -> int:
        """Least position q with x <= lin[q]; those positions form a suffix."""
        lo, hi = 0, len(self.lin)
        while lo < hi:
            mid = (lo + hi) // 2
            if order.leq(x, self.lin[mid]):
                hi = mid
            else:
                lo = mid + 1
        return lo


def _lines(inst: SunflowerInstance, alpha: InducedPartialOrder) -> List[_Line]:
    return [_Line(g, line) for g, line in zip(inst.graphs, alpha.lines)]


@dataclass
class ScoutState:
    order: PartialOrder
    processed: List[Vertex] = field(default_factory=list)
    added: List[Tuple[Vertex, Vertex]] = field(default_factory=list)
    conflict: Optional[Conflict] = None
    sweeps: int = 0


@dataclass
class ZipState:
    sequence: Tuple[Vertex, ...]
    order: PartialOrder
    added: List[Tuple[Vertex, Vertex]] = field(default_factory=list)


def _scout_sweep(inst, lines, order: PartialOrder, state: ScoutState) -> Optional[Tuple[Vertex, Vertex]]:
    n = len(order)
    done = 0
    members = [[j for j, ln in enumerate(lines) if v in ln] for v in order.vertices]
    state.processed = []
    for _ in range(n):
        x = next(a for a in range(n) if not done >> a & 1 and order.desc[a] & ~done == 0)
        xv = order.vertices[x]
        for i in members[x]:
            li = lines[i]
            f = li.fpos[li.pos[xv]]
            if f == 0:
                continue
            u = li.lin[f - 1]
            for j, lj in enumerate(lines):
                if j == i or not len(lj):
                    continue
                q = lj.early[lj.first_above(order, xv)]
                if q >= len(lj):
                    continue
                v = lj.lin[lj.fpos[q]]
                if v == u or order.less(v, u):
                    logger.debug('scout: %r must precede %r but follows it', u, v)
                    return u, v
                if order.add(u, v):
                    state.added.append((u, v))
                    logger.debug('scout at %r: added %r < %r (G_%d, G_%d)', xv, u, v, i + 1, j + 1)
        done |= 1 << x
        state.processed.append(xv)
    return None


def scout(inst: SunflowerInstance, se, alpha: InducedPartialOrder,
          edges: EdgeClassification) -> ScoutState:
    """Extend ``alpha`` to a left-closed partial order, or report the
    conflict that makes this impossible.

    Sweeps repeat until no pair is added; a pair forced both ways is
    reported as the relaxed conflict ``find_relaxed_conflict`` finds for ``se``.
    """
    lines = _lines(inst, alpha)
    state = ScoutState(alpha.order.copy())
    while True:
        before = len(state.added)
        state.sweeps += 1
        breach = _scout_sweep(inst, lines, state.order, state)
        if breach is not None:
            conflict = find_relaxed_conflict(inst, se)
            if conflict is None:
                raise InternalInvariantError('scout ordered %r before %r both ways without a conflict' % breach)
            state.conflict = conflict
            return state
        if len(state.added) == before:
            return state


def zip_order(inst: SunflowerInstance, alpha: InducedPartialOrder, tau: PartialOrder,
              edges: EdgeClassification) -> ZipState:
    """Linearise a left-closed order greedily from the left."""
    lines = _lines(inst, alpha)
    order = tau.copy()
    n = len(order)
    members = [[j for j, ln in enumerate(lines) if v in ln] for v in order.vertices]
    remaining = (1 << n) - 1
    last = [None] * len(lines)
    sequence = []
    added = []
    while remaining:
        a = next(a for a in range(n) if remaining >> a & 1 and order.anc[a] & remaining == 0)
        u = order.vertices[a]
        remaining &= ~(1 << a)
        sequence.append(u)
        for j in members[a]:
            last[j] = lines[j].pos[u]

        ys = []
        for j, q in enumerate(last):
            if q is None:
                continue
            y = lines[j].lin[lines[j].lpos[q]]
            if remaining >> order.index[y] & 1:
                ys.append(y)
        for i in members[a]:
            li = lines[i]
            nxt = li.lpos[li.pos[u]] + 1
            if nxt >= len(li):
                continue
            z = li.lin[nxt]
            for y in ys:
                if y == z or order.less(z, y):
                    raise InternalInvariantError('zip cannot place %r before %r' % (y, z))
                if order.add(y, z):
                    added.append((y, z))
                    logger.debug('zip after %r: added %r < %r', u, y, z)
    return ZipState(tuple(sequence), chain_order(order.vertices, sequence), added)


def sandwich_graph(inst: SunflowerInstance, sequence: Sequence[Vertex],
                   edges: EdgeClassification) -> Graph:
    """Graph on the vertices in ``sequence`` order joining u and x whenever
    some ordered edge (v, w) has v <= u < x <= w."""
    pos = {v: p for p, v in enumerate(sequence)}
    n = len(sequence)
    reach = list(range(n))
    for v, w in edges.E:
        reach[pos[v]] = max(reach[pos[v]], pos[w])
    for p in range(1, n):
        reach[p] = max(reach[p], reach[p - 1])
    pairs = [(sequence[p], sequence[q]) for p in range(n) for q in range(p + 1, reach[p] + 1)]
    return build_graph(sequence, pairs)


def unit_representation_from_fine_enum(h: Graph, tau: Sequence[Vertex]) -> IntervalRepresentation:
    """Unit intervals [l, l + 1] for a fine enumeration, left to right.

    Each left endpoint lies strictly above the previous one and above the last
    non-neighbour's plus one, and at most one above the first neighbour's; the
    midpoint of that range is taken.
    """
    tau = list(tau)
    if not verify_fine_enumeration(h, tau):
        raise PreconditionError('order is not a fine enumeration of the graph')
    pos = {v: p for p, v in enumerate(tau)}
    left: Dict[Vertex, Fraction] = {}
    for p, x in enumerate(tau):
        if p == 0:
            left[x] = Fraction(0)
            continue
        first = min([pos[w] for w in h.neighbors(x)] + [p])
        lower = left[tau[p - 1]]
        if first > 0:
            lower = max(lower, 1 + left[tau[first - 1]])
        if first < p:
            upper = 1 + left[tau[first]]
            if not lower < upper:
                raise InternalInvariantError('no room for %r between %s and %s' % (x, lower, upper))
            left[x] = (lower + upper) / 2
        else:
            left[x] = lower + 1
    return IntervalRepresentation({v: (left[v], left[v] + 1) for v in h.vertices})
