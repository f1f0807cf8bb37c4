"""Degrees of freedom among simultaneous enumerations.

A component is loose when its shared vertices lie in one block of S, and
independent when they even lie in one of its own blocks. A component
oriented at an S-block B separates two vertices of B; all components
oriented at B flip together, and when all of them are loose they form a
reversible part. Up to full reversal, every simultaneous enumeration of a
connected instance comes from flipping independent components and
reversible parts.
"""
import itertools
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Tuple

from graphs.graph import Vertex
from graphs.sunflower import SunflowerInstance, shared_graph
from models.proper_interval import BlockPartition, compute_blocks
from models.sunflower_proper import SimultaneousEnumeration
from utils.exceptions import CapExceededError, PreconditionError

ComponentId = Tuple[int, Vertex]


@dataclass(frozen=True)
class ComponentInfo:
    cid: ComponentId
    vertices: FrozenSet[Vertex]
    shared: FrozenSet[Vertex]
    n_blocks: int
    s_blocks: FrozenSet[int]
    oriented_at: FrozenSet[int]
    loose: bool
    independent: bool

    @property
    def graph(self):
        return self.cid[0]

    @property
    def private(self):
        return self.vertices - self.shared

    @property
    def flippable(self):
        # reversing a single-block component changes nothing
        return self.independent and self.n_blocks > 1


@dataclass(frozen=True)
class ComponentClassification:
    components: Dict[ComponentId, ComponentInfo]
    s_blocks: BlockPartition
    oriented: Dict[int, Tuple[ComponentId, ...]]
    reversible_parts: Dict[int, Tuple[ComponentId, ...]]

    def independent(self) -> List[ComponentId]:
        return [cid for cid, info in self.components.items() if info.flippable]

    def part_of(self, cid: ComponentId):
        for b, members in self.reversible_parts.items():
            if cid in members:
                return b
        return None

    def free_choices(self) -> List[Tuple[str, object]]:
        out = [('component', cid) for cid in self.independent()]
        out.extend(('part', b) for b in sorted(self.reversible_parts))
        return out


def _component_id(inst: SunflowerInstance, i, vertices) -> ComponentId:
    return i, min(vertices, key=inst.graphs[i].index.__getitem__)


def classify_components(inst: SunflowerInstance, se: SimultaneousEnumeration) -> ComponentClassification:
    sb = compute_blocks(shared_graph(inst))
    shared = inst.shared
    components = {}
    oriented = {}
    for i, sigma in enumerate(se.enumerations):
        for c, (s, e) in enumerate(sigma.spans):
            vertices = frozenset().union(*sigma.blocks[s:e])
            mine = vertices & shared
            cid = _component_id(inst, i, vertices)
            touched = frozenset(sb.block_of[v] for v in mine)
            at = set()
            for b in touched:
                members = [v for v in mine if sb.block_of[v] == b]
                if len({sigma.block_of[v] for v in members}) > 1:
                    at.add(b)
                    oriented.setdefault(b, []).append(cid)
            loose = len(touched) <= 1
            independent = loose and len({sigma.block_of[v] for v in mine}) <= 1
            components[cid] = ComponentInfo(cid, vertices, mine, e - s, touched,
                                            frozenset(at), loose, independent)

    oriented = {b: tuple(members) for b, members in sorted(oriented.items())}
    parts = {b: members for b, members in oriented.items()
             if all(components[cid].loose for cid in members)}
    return ComponentClassification(components, sb, oriented, parts)


def _flip(se: SimultaneousEnumeration, cid: ComponentId) -> SimultaneousEnumeration:
    i, v = cid
    return se.replace(i, se[i].reverse_component([v]))


def reverse_part(se: SimultaneousEnumeration, classification: ComponentClassification,
                 part: int) -> SimultaneousEnumeration:
    if part not in classification.reversible_parts:
        raise PreconditionError('unknown reversible part %r' % (part,))
    for cid in classification.reversible_parts[part]:
        se = _flip(se, cid)
    return se


def reverse_independent(se: SimultaneousEnumeration, classification: ComponentClassification,
                        graph_index: int, cid: ComponentId) -> SimultaneousEnumeration:
    info = classification.components.get(cid)
    if info is None or info.graph != graph_index:
        raise PreconditionError('unknown component %r of G_%d' % (cid, graph_index + 1))
    if not info.independent:
        raise PreconditionError('component %r of G_%d is not independent' % (cid, graph_index + 1))
    return _flip(se, cid)


def reverse_all(se: SimultaneousEnumeration) -> SimultaneousEnumeration:
    return SimultaneousEnumeration(se.instance, tuple(sigma.reversed() for sigma in se.enumerations))


def apply_choices(se: SimultaneousEnumeration, classification: ComponentClassification,
                  chosen) -> SimultaneousEnumeration:
    for kind, ref in chosen:
        if kind == 'component':
            se = _flip(se, ref)
        else:
            se = reverse_part(se, classification, ref)
    return se


def enumerate_space(inst: SunflowerInstance, se: SimultaneousEnumeration,
                    cap: int = 64) -> List[SimultaneousEnumeration]:
    """Every enumeration reachable from ``se`` or its reversal by flips,
    deduplicated, first occurrence kept. Expects a union-connected instance."""
    classification = classify_components(inst, se)
    free = classification.free_choices()
    total = 2 ** (len(free) + 1)
    if total > cap:
        raise CapExceededError('enumeration space has %d members before dedup (cap %d)' % (total, cap), cap)

    seen = set()
    out = []
    for base in (se, reverse_all(se)):
        for mask in itertools.product((False, True), repeat=len(free)):
            chosen = [c for c, on in zip(free, mask) if on]
            candidate = apply_choices(base, classification, chosen)
            key = candidate.key()
            if key not in seen:
                seen.add(key)
                out.append(candidate)
    return out
