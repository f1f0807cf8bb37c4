from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Tuple

from graphs.graph import Graph, Vertex, build_graph, connected_components, induced_subgraph


@dataclass(frozen=True)
class SunflowerInstance:
    """k graphs pairwise sharing exactly the graph S = (V_S, E_S).

    ``sunflower`` is False only for the reduction gadgets, which violate the
    shared-intersection rule on purpose and are refused by the recognizers.
    """
    graphs: Tuple[Graph, ...]
    shared_vertices: Tuple[Vertex, ...] = ()
    shared_edges: FrozenSet[FrozenSet[Vertex]] = frozenset()
    name: Optional[str] = None
    sunflower: bool = True
    _order: Dict[Vertex, int] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        order = {}
        for g in self.graphs:
            for v in g.vertices:
                order.setdefault(v, len(order))
        object.__setattr__(self, '_order', order)
        object.__setattr__(self, 'shared_edges', frozenset(frozenset(e) for e in self.shared_edges))

    @property
    def k(self):
        return len(self.graphs)

    @property
    def shared(self) -> FrozenSet[Vertex]:
        return frozenset(self.shared_vertices)

    @property
    def vertex_order(self) -> Dict[Vertex, int]:
        return self._order

    def is_shared(self, v):
        return v in self.shared

    def sort_key(self, v):
        return self._order[v]

    def sorted(self, vs):
        return sorted(vs, key=self._order.__getitem__)


@dataclass(frozen=True)
class Violation:
    rule: str
    message: str
    items: Tuple = ()


@dataclass(frozen=True)
class ValidationReport:
    violations: Tuple[Violation, ...] = ()

    @property
    def ok(self):
        return not self.violations

    def messages(self):
        return [v.message for v in self.violations]

    def to_json(self):
        return {
            'ok': self.ok,
            'violations': [
                {'rule': v.rule, 'message': v.message, 'items': [list(x) if isinstance(x, (tuple, frozenset)) else x for x in v.items]}
                for v in self.violations
            ],
        }


def _edge_set(g: Graph):
    return {frozenset(e) for e in g.edges}


def validate_sunflower(inst: SunflowerInstance) -> ValidationReport:
    """Check every instance rule and collect all violations."""
    out = []
    shared = inst.shared
    if inst.k == 0:
        out.append(Violation('no-graphs', 'instance has no graphs'))
        return ValidationReport(tuple(out))

    if len(shared) != len(inst.shared_vertices):
        out.append(Violation('duplicate-shared', 'shared vertex listed twice'))

    for e in sorted(inst.shared_edges, key=lambda e: sorted(map(str, e))):
        if not e <= shared:
            out.append(Violation('shared-edge-endpoint',
                                 'shared edge %s has an endpoint outside V_S' % sorted(map(str, e)),
                                 (tuple(e),)))

    edge_sets = [_edge_set(g) for g in inst.graphs]
    for i, g in enumerate(inst.graphs):
        missing = [v for v in inst.shared_vertices if v not in g]
        if missing:
            out.append(Violation('shared-missing',
                                 'shared vertices %s missing from G_%d' % (missing, i + 1),
                                 tuple(missing)))
        absent = [tuple(e) for e in inst.shared_edges if e <= shared and e not in edge_sets[i]]
        if absent:
            out.append(Violation('shared-edge-missing',
                                 'shared edges %s missing from G_%d' % (absent, i + 1),
                                 tuple(absent)))
        extra = [e for e in g.edges if e[0] in shared and e[1] in shared
                 and frozenset(e) not in inst.shared_edges]
        if extra:
            out.append(Violation('not-induced',
                                 'S not induced in G_%d: edges %s' % (i + 1, extra),
                                 tuple(extra)))

    for i in range(inst.k):
        for j in range(i + 1, inst.k):
            gi, gj = inst.graphs[i], inst.graphs[j]
            common = [v for v in gi.vertices if v in gj and v not in shared]
            if common:
                out.append(Violation('pairwise-vertex',
                                     'pairwise intersection exceeds S: G_%d and G_%d share %s' % (i + 1, j + 1, common),
                                     tuple(common)))
            both = sorted(tuple(inst.sorted(e)) for e in edge_sets[i] & edge_sets[j]
                          if e not in inst.shared_edges)
            if both:
                out.append(Violation('pairwise-edge',
                                     'G_%d and G_%d share edges outside E_S: %s' % (i + 1, j + 1, both),
                                     tuple(both)))
    return ValidationReport(tuple(out))


def instance_order(inst: SunflowerInstance) -> Tuple[Vertex, ...]:
    return tuple(sorted(inst.vertex_order, key=inst.vertex_order.__getitem__))


def graphs_containing(inst: SunflowerInstance, v: Vertex) -> Tuple[int, ...]:
    return tuple(i for i, g in enumerate(inst.graphs) if v in g)


def shared_graph(inst: SunflowerInstance) -> Graph:
    vs = inst.sorted(inst.shared_vertices)
    return build_graph(vs, [tuple(inst.sorted(e)) for e in inst.shared_edges])


def union_graph(inst: SunflowerInstance) -> Graph:
    """G* on V_1 ∪ ... ∪ V_k, vertices in instance order."""
    edges = set()
    for g in inst.graphs:
        edges.update(g.edges)
    vertices = instance_order(inst)
    return build_graph(vertices, sorted(edges, key=lambda e: (inst.sort_key(e[0]), inst.sort_key(e[1]))))


def restrict_instance(inst: SunflowerInstance, vs, name=None) -> SunflowerInstance:
    keep = set(vs)
    graphs = tuple(induced_subgraph(g, [v for v in g.vertices if v in keep]) for g in inst.graphs)
    shared = tuple(v for v in inst.shared_vertices if v in keep)
    shared_edges = frozenset(e for e in inst.shared_edges if e <= keep)
    return SunflowerInstance(graphs, shared, shared_edges, name if name is not None else inst.name, inst.sunflower)


def split_by_components(inst: SunflowerInstance) -> List[SunflowerInstance]:
    """One sub-instance per connected component of the union graph."""
    comps = connected_components(union_graph(inst))
    if len(comps) == 1:
        return [inst]
    parts = []
    for t, comp in enumerate(comps):
        name = None if inst.name is None else '%s#%d' % (inst.name, t)
        parts.append(restrict_instance(inst, comp, name))
    return parts
