from fractions import Fraction

import pytest
from hypothesis import given, settings

from datasets.fixtures import threaded_bar_enumeration, offset_paths_enumeration
from graphs.graph import build_graph
from models.conflicts import find_relaxed_conflict
from models.orders import PartialOrder, chain_order, classify_edges, induced_partial_order, is_left_closed
from models.proper_interval import straight_enumeration
from models.sweeps import sandwich_graph, scout, unit_representation_from_fine_enum, zip_order
from strategies import st_unit_graphs
from utils.exceptions import PreconditionError


def _sweep(inst, se):
    alpha = induced_partial_order(inst, se)
    edges = classify_edges(inst, alpha)
    return alpha, edges, scout(inst, se, alpha, edges)


def test_partial_order_closure():
    order = PartialOrder(('a', 'b', 'c'))
    assert order.add('a', 'b')
    assert order.add('b', 'c')
    assert order.less('a', 'c')
    assert not order.add('a', 'c')
    assert order.is_linear()
    with pytest.raises(PreconditionError):
        order.add('c', 'a')
    assert chain_order(('a', 'b', 'c'), ('c', 'a', 'b')).less('c', 'b')


def test_offset_paths_scout_and_zip(offset):
    se = offset_paths_enumeration(offset)
    alpha, edges, state = _sweep(offset, se)
    assert state.conflict is None
    assert state.sweeps >= 1
    assert ('d2', 's2') in edges.E
    assert ('a1', 's2') in edges.F
    # d2 meets s2 while a1 does not, so a1 starts first
    assert state.order.less('a1', 'd2')
    assert is_left_closed(state.order, edges)

    zipped = zip_order(offset, alpha, state.order, edges)
    assert zipped.sequence[0] == 's1'
    assert zipped.sequence[-1] == 's2'
    assert zipped.order.is_linear()
    assert is_left_closed(zipped.order, edges)

    h = sandwich_graph(offset, zipped.sequence, edges)
    for g in offset.graphs:
        for u in g.vertices:
            for v in g.vertices:
                if u != v:
                    assert h.has_edge(u, v) == g.has_edge(u, v)


def test_threaded_bar_scout_reports_conflict(threaded):
    se = threaded_bar_enumeration(threaded)
    _, _, state = _sweep(threaded, se)
    assert state.conflict is not None
    assert state.conflict.bar_graph == 1
    assert state.conflict == find_relaxed_conflict(threaded, se)


def test_unit_placement_on_a_path():
    h = build_graph(['a', 'b', 'c'], [('a', 'b'), ('b', 'c')])
    rep = unit_representation_from_fine_enum(h, ['a', 'b', 'c'])
    f = Fraction
    assert rep.intervals == {'a': (f(0), f(1)), 'b': (f(1, 2), f(3, 2)), 'c': (f(5, 4), f(9, 4))}
    with pytest.raises(PreconditionError):
        unit_representation_from_fine_enum(h, ['a', 'c', 'b'])


@given(st_unit_graphs(max_n=8))
@settings(max_examples=200, deadline=None)
def test_unit_placement_realises_any_proper_graph(g):
    se = straight_enumeration(g)
    rep = unit_representation_from_fine_enum(g, se.vertex_order())
    for u in g.vertices:
        lu, ru = rep.intervals[u]
        assert ru - lu == 1
        for v in g.vertices:
            if u != v:
                lv, rv = rep.intervals[v]
                assert (max(lu, lv) <= min(ru, rv)) == g.has_edge(u, v)
