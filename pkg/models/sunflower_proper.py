"""Simultaneous proper interval recognition for sunflower instances.

Every graph's fine enumerations are a PQ-tree; projecting those trees to the
shared vertices and intersecting them leaves exactly the shared orders that
all graphs can extend. Any such order is turned back into one straight
enumeration per graph, and a merge of per-graph endpoint orders yields the
representation.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from graphs.graph import Vertex
from graphs.sunflower import SunflowerInstance, shared_graph, validate_sunflower
from models.proper_interval import (IntervalRepresentation, StraightEnumeration,
                                    enumeration_from_order, enumeration_from_representation,
                                    fine_enum_pqtree, straight_enumeration)
from pqtree import PQTree, intersect, pick_order, projection
from utils.exceptions import (InternalInvariantError, InvalidInstanceError, NotSunflowerError,
                              PreconditionError)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SimultaneousEnumeration:
    instance: SunflowerInstance
    enumerations: Tuple[StraightEnumeration, ...]

    def __getitem__(self, i) -> StraightEnumeration:
        return self.enumerations[i]

    def __len__(self):
        return len(self.enumerations)

    def key(self):
        return tuple(se.key() for se in self.enumerations)

    def replace(self, i, se: StraightEnumeration) -> 'SimultaneousEnumeration':
        items = list(self.enumerations)
        items[i] = se
        return SimultaneousEnumeration(self.instance, tuple(items))

    def position_tuple(self, v) -> Tuple[int, ...]:
        """Block index of a shared vertex in every graph."""
        return tuple(se.block_of[v] for se in self.enumerations)

    def shared_rank(self) -> Dict[Vertex, int]:
        """Shared vertices ranked by their block positions, ties by index."""
        inst = self.instance
        order = sorted(inst.shared_vertices, key=lambda v: (self.position_tuple(v), inst.sort_key(v)))
        return {v: r for r, v in enumerate(order)}


@dataclass(frozen=True)
class SimultaneousRepresentation:
    """One interval per vertex; shared vertices appear once."""
    intervals: Dict[Vertex, Tuple[Fraction, Fraction]]
    per_graph: Tuple[Tuple[Vertex, ...], ...]
    mode: str = 'proper'

    def view(self, i) -> IntervalRepresentation:
        return IntervalRepresentation({v: self.intervals[v] for v in self.per_graph[i]})


@dataclass(frozen=True)
class ProperResult:
    yes: bool
    enumeration: Optional[SimultaneousEnumeration] = None
    tree: Optional[PQTree] = None
    shared_order: Tuple[Vertex, ...] = ()
    reason: str = ''


def check_instance(inst: SunflowerInstance):
    if not inst.sunflower:
        raise NotSunflowerError('not a sunflower instance%s' % ('' if inst.name is None else ': %s' % inst.name))
    report = validate_sunflower(inst)
    if not report.ok:
        raise InvalidInstanceError('; '.join(report.messages()), report)


def is_simultaneous_enumeration(inst: SunflowerInstance, se: SimultaneousEnumeration) -> bool:
    if len(se) != inst.k:
        return False
    for g, sigma in zip(inst.graphs, se.enumerations):
        if sigma.graph != g or not sigma.is_valid():
            return False
    # pairwise consistency holds iff the position tuples form a chain
    tuples = sorted(se.position_tuple(v) for v in inst.shared_vertices)
    for a, b in zip(tuples, tuples[1:]):
        if any(x > y for x, y in zip(a, b)):
            return False
    return True


def compatible(se: StraightEnumeration, zeta: Sequence[Vertex]) -> bool:
    zeta = list(zeta)
    if len(set(zeta)) != len(zeta):
        raise PreconditionError('shared order repeats a vertex')
    for v in zeta:
        if v not in se.graph:
            raise PreconditionError('shared order has vertex %r outside the graph' % (v,))
    blocks = [se.block_of[v] for v in zeta]
    return all(a <= b for a, b in zip(blocks, blocks[1:]))


def extract_shared_order(t: PQTree) -> Tuple[Vertex, ...]:
    return pick_order(t)


def _compatible_enumeration(se: StraightEnumeration, zpos: Dict[Vertex, int]) -> StraightEnumeration:
    """Reorder and orient the components of ``se`` to follow the shared order."""
    keyed = []
    for c, (s, e) in enumerate(se.spans):
        shared = [v for b in range(s, e) for v in se.blocks[b] if v in zpos]
        blocks = list(se.blocks[s:e])
        if shared:
            first = min(shared, key=zpos.__getitem__)
            last = max(shared, key=zpos.__getitem__)
            if se.block_of[first] > se.block_of[last]:
                blocks.reverse()
            keyed.append(((0, zpos[first]), blocks))
        else:
            keyed.append(((1, c), blocks))
    keyed.sort(key=lambda kb: kb[0])
    out = []
    for _, blocks in keyed:
        out.extend(blocks)
    return StraightEnumeration(se.graph, tuple(out), _relative_spans(keyed))


def _relative_spans(keyed):
    spans, start = [], 0
    for _, blocks in keyed:
        spans.append((start, start + len(blocks)))
        start += len(blocks)
    return tuple(spans)


def recognize_proper(inst: SunflowerInstance) -> ProperResult:
    check_instance(inst)
    canonical = []
    trees = []
    for i, g in enumerate(inst.graphs):
        se = straight_enumeration(g)
        if se is None:
            logger.debug('G_%d is not a proper interval graph', i + 1)
            return ProperResult(False, reason='G_%d is not a proper interval graph' % (i + 1))
        canonical.append(se)
        if inst.shared_vertices:
            trees.append(fine_enum_pqtree(g))

    if not inst.shared_vertices:
        return ProperResult(True, SimultaneousEnumeration(inst, tuple(canonical)))

    shared = inst.shared
    t = projection(trees[0], shared)
    for tree in trees[1:]:
        t = intersect(t, projection(tree, shared))
        if t.is_null:
            return ProperResult(False, tree=t, reason='no shared order extends to every graph')

    zeta = extract_shared_order(t)
    zpos = {v: p for p, v in enumerate(zeta)}
    sigmas = []
    for i, se in enumerate(canonical):
        sigma = _compatible_enumeration(se, zpos)
        if not compatible(sigma, zeta):
            raise InternalInvariantError('G_%d enumeration does not follow the shared order' % (i + 1))
        sigmas.append(sigma)
    return ProperResult(True, SimultaneousEnumeration(inst, tuple(sigmas)), t, zeta)


def shared_enumeration(se: SimultaneousEnumeration) -> StraightEnumeration:
    """Straight enumeration of S induced by the simultaneous enumeration."""
    inst = se.instance
    s_graph = shared_graph(inst)
    rank = se.shared_rank()
    result = None
    for i, sigma in enumerate(se.enumerations):
        order = sorted(inst.shared_vertices, key=lambda v: (sigma.block_of[v], rank[v]))
        try:
            induced = enumeration_from_order(s_graph, order)
        except PreconditionError as e:
            raise InternalInvariantError('G_%d induces no enumeration of S: %s' % (i + 1, e))
        if result is None:
            result = induced
        elif induced.blocks != result.blocks:
            raise InternalInvariantError('G_%d induces a different order on S' % (i + 1))
    if result is None:
        return enumeration_from_order(s_graph, [])
    return result


def _endpoint_order(sigma: StraightEnumeration, rank) -> List[Tuple[str, Vertex]]:
    """Endpoints of one graph: per block position, its left endpoints, then the
    right endpoints of every block whose reach ends there."""
    ending = {}
    for b, r in enumerate(sigma.reach):
        ending.setdefault(r, []).append(b)
    out = []
    for p, blk in enumerate(sigma.blocks):
        for v in sorted(blk, key=rank):
            out.append(('x', v))
        for b in ending.get(p, ()):
            for v in sorted(sigma.blocks[b], key=rank):
                out.append(('y', v))
    return out


def build_simultaneous_representation(inst: SunflowerInstance, se: SimultaneousEnumeration,
                                      mode: str = 'proper') -> SimultaneousRepresentation:
    if not is_simultaneous_enumeration(inst, se):
        raise PreconditionError('not a simultaneous enumeration of the instance')
    shared_rank = se.shared_rank()
    n_shared = len(shared_rank)

    def rank(v):
        if v in shared_rank:
            return 0, shared_rank[v]
        return 1, inst.sort_key(v)

    common = None
    segments = []
    for i, sigma in enumerate(se.enumerations):
        order = _endpoint_order(sigma, rank)
        marks = [m for m in order if m[1] in shared_rank]
        if common is None:
            common = marks
        elif marks != common:
            raise InternalInvariantError('G_%d orders the shared endpoints differently' % (i + 1))
        segs = [[]]
        for m in order:
            if m[1] in shared_rank:
                segs.append([])
            else:
                segs[-1].append(m)
        segments.append(segs)

    merged = []
    for s in range(2 * n_shared + 1):
        for segs in segments:
            merged.extend(segs[s])
        if s < 2 * n_shared:
            merged.append(common[s])

    coord = {m: Fraction(p) for p, m in enumerate(merged)}
    intervals = {v: (coord[('x', v)], coord[('y', v)]) for v in inst.vertex_order}
    per_graph = tuple(g.vertices for g in inst.graphs)
    return SimultaneousRepresentation(intervals, per_graph, mode)


def simultaneous_enumeration_from_representation(inst: SunflowerInstance,
                                                 rep: SimultaneousRepresentation) -> SimultaneousEnumeration:
    sigmas = tuple(enumeration_from_representation(g, rep.view(i)) for i, g in enumerate(inst.graphs))
    return SimultaneousEnumeration(inst, sigmas)


def restrict_enumeration(se: SimultaneousEnumeration, sub: SunflowerInstance) -> SimultaneousEnumeration:
    sigmas = tuple(sigma.restrict(g) for sigma, g in zip(se.enumerations, sub.graphs))
    return SimultaneousEnumeration(sub, sigmas)
