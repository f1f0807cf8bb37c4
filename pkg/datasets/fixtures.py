"""Small named instances reconstructed from worked examples.

Each builder returns a fresh ``SunflowerInstance``; the ``*_enumeration``
helpers return the simultaneous enumeration shown alongside an instance.
"""
from fractions import Fraction
from typing import Sequence

from graphs.graph import build_graph
from graphs.sunflower import SunflowerInstance
from models.proper_interval import enumeration_from_order
from models.sunflower_proper import SimultaneousEnumeration, SimultaneousRepresentation


def _path(vertices):
    return build_graph(vertices, zip(vertices, vertices[1:]))


def enumeration_of(inst: SunflowerInstance, orders: Sequence[Sequence]) -> SimultaneousEnumeration:
    """Simultaneous enumeration from one fine enumeration per graph."""
    return SimultaneousEnumeration(inst, tuple(enumeration_from_order(g, order)
                                               for g, order in zip(inst.graphs, orders)))


def squeezed_path() -> SunflowerInstance:
    """Proper but not unit: the long path must fit inside the short one."""
    g1 = _path(['s1', 'a', 'b', 'c', 's2'])
    g2 = _path(['s1', 'd', 's2'])
    return SunflowerInstance((g1, g2), ('s1', 's2'), name='squeezed-path')


def squeezed_path_representation() -> SimultaneousRepresentation:
    f = Fraction
    intervals = {
        's1': (f(0), f(2)), 'a': (f(1), f(4)), 'b': (f(3), f(6)),
        'c': (f(5), f(8)), 's2': (f(7), f(9)), 'd': (f(2), f(7)),
    }
    return SimultaneousRepresentation(intervals, (('s1', 'a', 'b', 'c', 's2'), ('s1', 'd', 's2')), 'proper')


def squeezed_path_enumeration(inst=None) -> SimultaneousEnumeration:
    inst = inst or squeezed_path()
    return enumeration_of(inst, [['s1', 'a', 'b', 'c', 's2'], ['s1', 'd', 's2']])


def shared_triangle() -> SunflowerInstance:
    """Two graphs around the shared triangle 1, 2, 3."""
    shared = [('1', '2'), ('1', '3'), ('2', '3')]
    g1 = build_graph(['1', '2', '3', 'a'], shared + [('2', 'a'), ('3', 'a')])
    g2 = build_graph(['1', '2', '3', 'b'], shared + [('1', 'b')])
    return SunflowerInstance((g1, g2), ('1', '2', '3'), frozenset(frozenset(e) for e in shared), name='shared-triangle')


def edgeless_bar() -> SunflowerInstance:
    """A path against an edgeless graph on as many vertices."""
    g1 = _path(['s1', 'a', 'b', 'c', 's2'])
    g2 = build_graph(['s1', 'd', 'e', 'f', 's2'], [])
    return SunflowerInstance((g1, g2), ('s1', 's2'), name='edgeless-bar')


def edgeless_bar_enumeration(inst=None) -> SimultaneousEnumeration:
    inst = inst or edgeless_bar()
    return enumeration_of(inst, [['s1', 'a', 'b', 'c', 's2'], ['s1', 'd', 'e', 'f', 's2']])


def threaded_bar() -> SunflowerInstance:
    """The edgeless graph of ``edgeless_bar`` threaded into one path, so the
    union stays connected and the bar cannot be split off."""
    g1 = _path(['s1', 'a', 'b', 'c', 's2'])
    g2 = _path(['s1', 'x1', 'd', 'x2', 'e', 'x3', 'f', 'x4', 's2'])
    return SunflowerInstance((g1, g2), ('s1', 's2'), name='threaded-bar')


def threaded_bar_enumeration(inst=None) -> SimultaneousEnumeration:
    inst = inst or threaded_bar()
    return enumeration_of(inst, [['s1', 'a', 'b', 'c', 's2'],
                                 ['s1', 'x1', 'd', 'x2', 'e', 'x3', 'f', 'x4', 's2']])


def offset_paths() -> SunflowerInstance:
    g1 = _path(['s1', 'a1', 'b1', 's2'])
    g2 = _path(['s1', 'd2', 's2'])
    return SunflowerInstance((g1, g2), ('s1', 's2'), name='offset-paths')


def offset_paths_enumeration(inst=None) -> SimultaneousEnumeration:
    inst = inst or offset_paths()
    return enumeration_of(inst, [['s1', 'a1', 'b1', 's2'], ['s1', 'd2', 's2']])


def reversible_part() -> SunflowerInstance:
    """Shared edge uv; each graph hangs one private vertex off a different
    end, so both components orient the single shared block."""
    g1 = build_graph(['u', 'v', 'p'], [('u', 'v'), ('v', 'p')])
    g2 = build_graph(['u', 'v', 'q'], [('u', 'v'), ('u', 'q')])
    return SunflowerInstance((g1, g2), ('u', 'v'), frozenset([frozenset(('u', 'v'))]), name='reversible-part')


def opposite_orders() -> SunflowerInstance:
    """G_1 puts v between u and w, G_2 puts u between v and w."""
    g1 = _path(['u', 'x', 'v', 'y', 'w'])
    g2 = _path(['v', 'z', 'u', 't', 'w'])
    return SunflowerInstance((g1, g2), ('u', 'v', 'w'), name='opposite-orders')


def claw() -> SunflowerInstance:
    g = build_graph(['c', '1', '2', '3'], [('c', '1'), ('c', '2'), ('c', '3')])
    return SunflowerInstance((g,), g.vertices, frozenset(frozenset(e) for e in g.edges), name='claw')


def disjoint_copies(inst: SunflowerInstance, suffixes=('_0', '_1')) -> SunflowerInstance:
    """Vertex-disjoint union of renamed copies of ``inst``, graph by graph."""
    graphs = []
    for g in inst.graphs:
        vertices = [v + s for s in suffixes for v in g.vertices]
        edges = [(u + s, v + s) for s in suffixes for u, v in g.edges]
        graphs.append(build_graph(vertices, edges))
    shared = tuple(v + s for s in suffixes for v in inst.shared_vertices)
    shared_edges = frozenset(frozenset(x + s for x in e) for s in suffixes for e in inst.shared_edges)
    return SunflowerInstance(tuple(graphs), shared, shared_edges, name=inst.name)


FIXTURES = {
    'squeezed-path': squeezed_path,
    'shared-triangle': shared_triangle,
    'edgeless-bar': edgeless_bar,
    'threaded-bar': threaded_bar,
    'offset-paths': offset_paths,
    'reversible-part': reversible_part,
    'opposite-orders': opposite_orders,
    'claw': claw,
}
