import itertools

import pytest
from hypothesis import given, settings

from graphs.graph import build_graph
from models.proper_interval import (compute_blocks, enumeration_from_order, enumeration_from_representation,
                                    fine_enum_pqtree, is_proper_interval, neighborhood_pqtree,
                                    representation_from_straight_enumeration, straight_enumeration,
                                    verify_fine_enumeration, verify_four_vertex_condition)
from pqtree import enumerate_orders
from strategies import st_graphs, st_unit_graphs
from utils.exceptions import PQTreeError, PreconditionError


def _path(vs):
    return build_graph(vs, zip(vs, vs[1:]))


def _fine_orders(g):
    return {o for o in itertools.permutations(g.vertices) if verify_fine_enumeration(g, o)}


def _intervals_meet(a, b):
    return max(a[0], b[0]) <= min(a[1], b[1])


def test_blocks_group_twins():
    g = build_graph(['a', 'b', 'c'], [('a', 'b'), ('b', 'c'), ('a', 'c')])
    assert compute_blocks(g).blocks == (frozenset('abc'),)
    p = _path(['a', 'b', 'c'])
    assert len(compute_blocks(p)) == 3


def test_path_enumeration():
    se = straight_enumeration(_path(['a', 'b', 'c', 'd']))
    assert se.blocks == tuple(frozenset(v) for v in 'abcd')
    assert se.spans == ((0, 4),)
    assert se.reach == (1, 2, 3, 3)
    assert se.is_valid()
    assert se.reversed().blocks == se.blocks[::-1]


def test_claw_is_not_proper(claw):
    g = claw.graphs[0]
    assert straight_enumeration(g) is None
    assert not is_proper_interval(g)
    assert fine_enum_pqtree(g) is None
    assert neighborhood_pqtree(g) is None


def test_components_get_their_own_spans():
    g = build_graph(['a', 'b', 'c', 'd', 'e', 'f'], [('a', 'b'), ('b', 'c'), ('d', 'e'), ('e', 'f')])
    se = straight_enumeration(g)
    assert se.spans == ((0, 3), (3, 6))
    assert [len(c) for c in se.components] == [3, 3]
    assert se.component_index('e') == 1
    flipped = se.reverse_component(['d'])
    assert flipped.blocks[:3] == se.blocks[:3]
    assert flipped.blocks[3:] == se.blocks[3:][::-1]
    assert flipped.is_valid()


def test_enumeration_from_order_errors():
    g = _path(['a', 'b', 'c'])
    with pytest.raises(PreconditionError):
        enumeration_from_order(g, ['a', 'b'])
    with pytest.raises(PreconditionError):
        enumeration_from_order(g, ['a', 'c', 'b'])
    with pytest.raises(PreconditionError):
        verify_fine_enumeration(g, ['a', 'a', 'b'])


def test_empty_graph_has_no_tree():
    with pytest.raises(PQTreeError):
        fine_enum_pqtree(build_graph([], []))


@given(st_graphs())
@settings(max_examples=300, deadline=None)
def test_recognition_matches_permutations(g):
    fine = _fine_orders(g)
    se = straight_enumeration(g)
    assert (se is not None) == bool(fine)
    if se is not None:
        assert se.is_valid()
        assert se.vertex_order() in fine


@given(st_graphs())
@settings(max_examples=200, deadline=None)
def test_four_vertex_condition_is_fine_enumeration(g):
    for order in itertools.permutations(g.vertices):
        assert verify_four_vertex_condition(g, order) == verify_fine_enumeration(g, order)


@given(st_graphs())
@settings(max_examples=200, deadline=None)
def test_trees_hold_exactly_the_fine_enumerations(g):
    fine = _fine_orders(g)
    for build in (fine_enum_pqtree, neighborhood_pqtree):
        t = build(g)
        if t is None:
            assert not fine
        else:
            assert set(enumerate_orders(t, cap=720)) == fine


@given(st_unit_graphs())
@settings(max_examples=200, deadline=None)
def test_unit_graphs_are_proper(g):
    assert is_proper_interval(g)


@given(st_graphs())
@settings(max_examples=200, deadline=None)
def test_representation_realises_the_graph(g):
    se = straight_enumeration(g)
    if se is None:
        return
    rep = representation_from_straight_enumeration(se)
    for u, v in itertools.combinations(g.vertices, 2):
        assert _intervals_meet(rep.intervals[u], rep.intervals[v]) == g.has_edge(u, v)
    # proper: no interval strictly inside another
    for u, v in itertools.permutations(g.vertices, 2):
        (lu, ru), (lv, rv) = rep.intervals[u], rep.intervals[v]
        if (lu, ru) != (lv, rv):
            assert not (lu <= lv and rv <= ru)
    assert enumeration_from_representation(g, rep).blocks == se.blocks
