"""Exact verification of interval representations."""
import heapq
from dataclasses import dataclass
from typing import Tuple

from graphs.sunflower import SunflowerInstance
from utils.exceptions import PreconditionError

MISSING_EDGE = 'missing-edge'
EXTRA_EDGE = 'extra-edge'
CONTAINMENT = 'containment'
NON_UNIT_LENGTH = 'non-unit-length'
SHARED_MISMATCH = 'shared-mismatch'


@dataclass(frozen=True)
class CheckReport:
    mode: str
    failures: Tuple[Tuple[str, Tuple], ...] = ()

    @property
    def ok(self):
        return not self.failures

    def kinds(self):
        return sorted({kind for kind, _ in self.failures})

    def to_json(self):
        return {
            'ok': self.ok,
            'mode': self.mode,
            'failures': [{'kind': kind, 'vertices': list(vs)} for kind, vs in self.failures],
        }


def _intersecting_pairs(g, intervals):
    """Pairs of ``g``'s vertices whose closed intervals meet, by sweep."""
    order = sorted(g.vertices, key=lambda v: (intervals[v][0], g.index[v]))
    active = []
    out = set()
    for v in order:
        l, _ = intervals[v]
        while active and active[0][0] < l:
            heapq.heappop(active)
        for _, _, u in active:
            out.add(frozenset((u, v)))
        heapq.heappush(active, (intervals[v][1], g.index[v], v))
    return out


def check_representation(inst: SunflowerInstance, rep, mode: str = 'proper') -> CheckReport:
    if mode not in ('proper', 'unit'):
        raise ValueError('unknown mode %r' % (mode,))
    intervals = rep.intervals
    for v in inst.vertex_order:
        if v not in intervals:
            raise PreconditionError('representation misses vertex %r' % (v,))
        l, r = intervals[v]
        if l > r:
            raise PreconditionError('interval of %r is empty' % (v,))

    failures = []
    for i, g in enumerate(inst.graphs):
        if i < len(rep.per_graph) and set(rep.per_graph[i]) != set(g.vertices):
            failures.append((SHARED_MISMATCH, tuple(sorted(set(rep.per_graph[i]) ^ set(g.vertices), key=str))))
        meet = _intersecting_pairs(g, intervals)
        for u, v in g.edges:
            if frozenset((u, v)) not in meet:
                failures.append((MISSING_EDGE, (u, v)))
        for pair in sorted(meet, key=lambda p: sorted(g.index[x] for x in p)):
            u, v = sorted(pair, key=g.index.__getitem__)
            if not g.has_edge(u, v):
                failures.append((EXTRA_EDGE, (u, v)))
        if mode == 'proper':
            failures.extend(_containments(g, intervals))

    if len(rep.per_graph) != inst.k:
        failures.append((SHARED_MISMATCH, ()))
    if mode == 'unit':
        for v in inst.sorted(inst.vertex_order):
            l, r = intervals[v]
            if r - l != 1:
                failures.append((NON_UNIT_LENGTH, (v,)))
    return CheckReport(mode, tuple(failures))


def _containments(g, intervals):
    order = sorted(g.vertices, key=lambda v: (intervals[v][0], -intervals[v][1], g.index[v]))
    out = []
    best = None
    for v in order:
        l, r = intervals[v]
        if best is not None:
            bl, br = intervals[best]
            if br > r or (br == r and bl < l):
                out.append((CONTAINMENT, (best, v)))
        if best is None or r > intervals[best][1]:
            best = v
    return out
