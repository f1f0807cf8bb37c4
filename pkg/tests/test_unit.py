import pytest
from hypothesis import given, settings

from datasets import BetweennessInstance, gen_betweenness_proper, gen_random_any, gen_random_yes
from datasets.fixtures import disjoint_copies, squeezed_path_enumeration
from graphs.graph import build_graph
from graphs.sunflower import SunflowerInstance
from metrics.checker import check_representation
from metrics.oracle import brute_force_unit
from models.enum_space import classify_components
from models.proper_interval import is_proper_interval
from models.sunflower_proper import recognize_proper
from models.sunflower_unit import (build_2sat, build_unit_representation, conflict_certificates,
                                   quotient_indistinguishable, realizes, recognize_unit)
from solver.two_sat import solve_2sat
from strategies import st_graphs, st_near_unit_graphs, st_small_instances, whole_instance
from utils.exceptions import NotSunflowerError, PreconditionError


def _assert_unit(inst):
    result = recognize_unit(inst)
    assert result.yes, result.reason
    rep = build_unit_representation(inst, result.enumeration)
    assert rep.mode == 'unit'
    report = check_representation(inst, rep, 'unit')
    assert report.ok, report.to_json()
    return result, rep


def test_squeezed_path_is_proper_but_not_unit(squeezed):
    result = recognize_unit(squeezed)
    assert not result.yes
    assert result.proper.yes
    assert result.reason == 'every simultaneous enumeration has a conflict'
    assert not brute_force_unit(squeezed)


def test_offset_paths(offset):
    result, rep = _assert_unit(offset)
    assert realizes(offset, rep, result.enumeration)
    assert brute_force_unit(offset)


@pytest.mark.parametrize('name', ['triangle', 'edgeless'])
def test_unit_fixtures(name, request):
    _assert_unit(request.getfixturevalue(name))


def test_threaded_bar_is_not_unit(threaded):
    result = recognize_unit(threaded)
    assert not result.yes
    assert result.proper.yes
    se = result.proper.enumeration
    f = build_2sat(threaded, se, classify_components(threaded, se))
    assert f.empty_clause
    assert solve_2sat(f) is None


def test_proper_failures_carry_over(opposite, claw):
    assert recognize_unit(opposite).reason == 'no shared order extends to every graph'
    assert not recognize_unit(claw).yes


def test_disjoint_copies(squeezed, offset):
    _assert_unit(disjoint_copies(offset))
    assert not recognize_unit(disjoint_copies(squeezed)).yes


def test_copies_are_laid_out_apart(offset):
    twice = disjoint_copies(offset)
    result = recognize_unit(twice)
    rep = build_unit_representation(twice, result.enumeration, gap=3)
    first = max(rep.intervals[v + '_0'][1] for v in offset.vertex_order)
    second = min(rep.intervals[v + '_1'][0] for v in offset.vertex_order)
    assert second - first == 3


def test_quotient_merges_twins(squeezed, triangle):
    reduced, rep = quotient_indistinguishable(squeezed)
    assert reduced == squeezed
    assert all(rep[v] == v for v in squeezed.vertex_order)

    reduced, rep = quotient_indistinguishable(triangle)
    assert rep['3'] == '2'
    assert set(reduced.vertex_order) == {'1', '2', 'a', 'b'}

    triangle = build_graph(['x', 'y', 'z'], [('x', 'y'), ('y', 'z'), ('x', 'z')])
    reduced, rep = quotient_indistinguishable(whole_instance(triangle))
    assert reduced.shared_vertices == ('x',)
    assert set(rep.values()) == {'x'}


def test_private_twin_of_a_shared_vertex():
    g2 = build_graph(['s', 't'], [])
    between = build_graph(['s', 't', 'p'], [('s', 'p'), ('t', 'p')])
    _, rep = quotient_indistinguishable(SunflowerInstance((between, g2), ('s', 't')))
    assert rep['p'] == 'p'

    pendant = build_graph(['s', 'p', 't'], [('s', 'p')])
    reduced, rep = quotient_indistinguishable(SunflowerInstance((pendant, g2), ('s', 't')))
    assert rep['p'] == 's'
    assert 'p' not in reduced.vertex_order
    # the merged private vertex takes its twin's interval back
    _, layout = _assert_unit(SunflowerInstance((pendant, g2), ('s', 't')))
    assert layout.intervals['p'] == layout.intervals['s']


def test_gadgets_are_refused():
    inst = gen_betweenness_proper(BetweennessInstance(('a', 'b', 'c'), (('a', 'b', 'c'),)))
    with pytest.raises(NotSunflowerError):
        recognize_unit(inst)


def test_representation_needs_a_simultaneous_enumeration(squeezed):
    se = squeezed_path_enumeration(squeezed)
    with pytest.raises(PreconditionError):
        build_unit_representation(squeezed, se.replace(0, se[0].reversed()))


def test_conflict_certificates(squeezed, offset):
    found = conflict_certificates(squeezed)
    assert len(found) == 2
    assert all(conflict.u in ('s1', 's2') for _, conflict in found)
    assert conflict_certificates(offset) == []


@given(st_graphs())
@settings(max_examples=100, deadline=None)
def test_single_graph_unit_iff_proper(g):
    assert recognize_unit(whole_instance(g)).yes == is_proper_interval(g)


@given(st_small_instances(max_shared=4, max_private=4, max_extra=0))
@settings(max_examples=60, deadline=None)
def test_random_yes_instances(shape):
    inst = gen_random_yes(shape['seed'], shape['n_shared'], shape['n_private'], shape['k'])
    _assert_unit(inst)


@given(st_small_instances())
@settings(max_examples=60, deadline=None)
def test_agrees_with_brute_force(shape):
    inst = gen_random_any(**shape)
    result = recognize_unit(inst)
    assert result.yes == brute_force_unit(inst)
    if result.yes:
        _assert_unit(inst)


@pytest.mark.slow
@given(st_small_instances(max_extra=3))
@settings(max_examples=1000, deadline=None)
def test_agrees_with_brute_force_at_length(shape):
    inst = gen_random_any(**shape)
    assert recognize_unit(inst).yes == brute_force_unit(inst)
    assert recognize_proper(inst).yes or not brute_force_unit(inst)


@pytest.mark.slow
@given(st_near_unit_graphs(max_n=30))
@settings(max_examples=300, deadline=None)
def test_large_single_graph_unit_iff_proper(g):
    inst = whole_instance(g)
    expected = is_proper_interval(g)
    assert recognize_proper(inst).yes == expected
    assert recognize_unit(inst).yes == expected
    if expected:
        _assert_unit(inst)
