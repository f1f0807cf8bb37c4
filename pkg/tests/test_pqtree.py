import itertools

import pytest
from hypothesis import given, settings
from hypothesis.strategies import data, integers, sampled_from, sets

from pqtree import (NULL, P, Q, PQTree, consistent, count_orders, enumerate_orders, intersect, leaf,
                    make_node, pick_order, projection, reduce, reduce_all, render, universal_tree)
from strategies import st_constraints
from utils.exceptions import CapExceededError, PQTreeError


def _consecutive(order, c):
    pos = sorted(order.index(x) for x in c)
    return pos[-1] - pos[0] + 1 == len(pos)


def _brute(ground, constraints):
    return {o for o in itertools.permutations(ground) if all(_consecutive(o, c) for c in constraints)}


def test_render_and_count():
    t = PQTree(make_node(P, [leaf(1), make_node(Q, [leaf(2), leaf(3), leaf(4)])]))
    assert render(t) == 'P(1, Q(2, 3, 4))'
    assert count_orders(t) == 4
    assert len(set(enumerate_orders(t))) == 4
    assert render(NULL) == 'NULL'
    assert count_orders(NULL) == 0


def test_two_child_q_node_is_stored_as_p():
    node = make_node(Q, [leaf('a'), leaf('b')])
    assert node.kind == P
    assert make_node(P, [leaf('a')]) == leaf('a')


def test_universal_tree():
    t = universal_tree('abc')
    assert count_orders(t) == 6
    assert t.ground == frozenset('abc')
    with pytest.raises(PQTreeError):
        universal_tree([])
    with pytest.raises(PQTreeError):
        universal_tree('aab')


def test_reduce_builds_q_nodes():
    t = reduce_all(universal_tree('abcd'), ['ab', 'bc', 'cd'])
    assert set(enumerate_orders(t)) == {tuple('abcd'), tuple('dcba')}
    assert consistent(t, 'abcd')
    assert not consistent(t, 'acbd')


def test_reduce_to_null():
    t = reduce_all(universal_tree('abcd'), ['ab', 'bc', 'ca', 'cd', 'bd'])
    assert t.is_null
    assert reduce(t, 'ab').is_null
    with pytest.raises(PQTreeError):
        pick_order(t)
    assert not consistent(t, 'abcd')


def test_reduce_outside_ground_set():
    with pytest.raises(PQTreeError):
        reduce(universal_tree('abc'), 'az')


def test_trivial_constraints_leave_the_tree():
    t = universal_tree('abc')
    assert reduce(t, 'a') == t
    assert reduce(t, 'abc') == t


def test_enumerate_orders_cap():
    with pytest.raises(CapExceededError):
        enumerate_orders(universal_tree(range(8)), cap=5040)


def test_consistent_wants_a_permutation():
    with pytest.raises(PQTreeError):
        consistent(universal_tree('abc'), 'ab')


@given(st_constraints())
@settings(max_examples=200, deadline=None)
def test_reduce_matches_brute_force(case):
    ground, constraints = case
    t = reduce_all(universal_tree(ground), constraints)
    expected = _brute(ground, constraints)
    if t.is_null:
        assert not expected
    else:
        orders = enumerate_orders(t, cap=720)
        assert len(orders) == len(set(orders)) == count_orders(t)
        assert set(orders) == expected
        assert all(consistent(t, o) for o in orders)
        assert pick_order(t) in expected


@given(st_constraints(min_n=3))
@settings(max_examples=100, deadline=None)
def test_projection_matches_brute_force(case):
    ground, constraints = case
    t = reduce_all(universal_tree(ground), constraints)
    if t.is_null:
        return
    sub = ground[::2]
    expected = {tuple(x for x in o if x in sub) for o in enumerate_orders(t, cap=720)}
    assert set(enumerate_orders(projection(t, sub), cap=720)) == expected


@given(st_constraints(max_constraints=3), st_constraints(max_constraints=3))
@settings(max_examples=100, deadline=None)
def test_intersect_matches_brute_force(a, b):
    ground, first = a
    other, second = b
    if other != ground:
        second = [c for c in second if c <= frozenset(ground)]
    t1 = reduce_all(universal_tree(ground), first)
    t2 = reduce_all(universal_tree(ground), second)
    expected = _brute(ground, first) & _brute(ground, second)
    both = intersect(t1, t2)
    assert set(enumerate_orders(both, cap=720)) == expected


def test_projection_errors():
    t = universal_tree('abc')
    with pytest.raises(PQTreeError):
        projection(NULL, 'a')
    with pytest.raises(PQTreeError):
        projection(t, '')
    with pytest.raises(PQTreeError):
        projection(t, 'az')


def test_intersect_different_grounds():
    with pytest.raises(PQTreeError):
        intersect(universal_tree('ab'), universal_tree('abc'))
    assert intersect(NULL, universal_tree('ab')).is_null


@pytest.mark.slow
@given(st_constraints(max_n=7, max_constraints=5), st_constraints(max_n=7, max_constraints=3), data())
@settings(max_examples=1000, deadline=None)
def test_operations_on_reduced_trees(a, b, extra):
    ground, constraints = a
    split = extra.draw(integers(min_value=0, max_value=len(constraints)))
    # reducing in two rounds matches reducing at once
    t = reduce_all(reduce_all(universal_tree(ground), constraints[:split]), constraints[split:])
    expected = _brute(ground, constraints)
    assert set(enumerate_orders(t, cap=5040)) == expected
    if t.is_null:
        return

    sub = extra.draw(sets(sampled_from(ground), min_size=1))
    projected = {tuple(x for x in o if x in sub) for o in expected}
    assert set(enumerate_orders(projection(t, sub), cap=5040)) == projected

    other = [c for c in b[1] if c <= frozenset(ground)]
    both = intersect(t, reduce_all(universal_tree(ground), other))
    assert set(enumerate_orders(both, cap=5040)) == expected & _brute(ground, other)
