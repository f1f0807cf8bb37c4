import pytest
from hypothesis import given, settings

from builder import random_betweenness
from datasets import (BetweennessInstance, gen_betweenness_proper, gen_betweenness_unit, gen_random_any,
                      gen_random_yes, place_betweenness_unit)
from graphs.sunflower import validate_sunflower
from metrics.checker import check_representation
from strategies import st_small_instances

TRIPLE = BetweennessInstance(('a', 'b', 'c'), (('a', 'b', 'c'),))


def test_random_yes_is_deterministic():
    assert gen_random_yes(7, 3, 2, 2) == gen_random_yes(7, 3, 2, 2)
    assert gen_random_any(7, 3, 2, 2, 2) == gen_random_any(7, 3, 2, 2, 2)


def test_random_yes_shape():
    inst = gen_random_yes(3, 4, 2, 3)
    assert inst.k == 3
    assert inst.shared_vertices == ('s0', 's1', 's2', 's3')
    assert all(g.n == 6 for g in inst.graphs)
    assert inst.name == 'random-yes-3'
    assert validate_sunflower(inst).ok


def test_without_private_vertices_every_graph_is_s():
    inst = gen_random_yes(5, 4, 0, 3)
    assert all(g == inst.graphs[0] for g in inst.graphs)
    assert {frozenset(e) for e in inst.graphs[0].edges} == set(inst.shared_edges)


def test_bad_shapes():
    with pytest.raises(ValueError):
        gen_random_yes(0, 2, 2, 0)
    with pytest.raises(ValueError):
        gen_random_yes(0, -1, 2, 2)


@given(st_small_instances(max_shared=5, max_private=5, max_k=4))
@settings(max_examples=100, deadline=None)
def test_generating_representation_is_a_certificate(shape):
    inst, rep = gen_random_yes(shape['seed'], shape['n_shared'], shape['n_private'], shape['k'],
                               with_certificate=True)
    assert validate_sunflower(inst).ok
    assert check_representation(inst, rep, 'unit').ok


@given(st_small_instances())
@settings(max_examples=100, deadline=None)
def test_perturbed_instances_stay_sunflowers(shape):
    inst = gen_random_any(**shape)
    assert validate_sunflower(inst).ok
    base = gen_random_yes(shape['seed'], shape['n_shared'], shape['n_private'], shape['k'])
    assert sum(g.m for g in inst.graphs) <= sum(g.m for g in base.graphs) + shape['extra_edges']
    if shape['extra_edges'] == 0:
        assert inst.graphs == base.graphs


def test_proper_gadget():
    inst = gen_betweenness_proper(TRIPLE)
    assert not inst.sunflower
    assert inst.k == 2
    assert inst.graphs[0].m == 0
    assert inst.graphs[1].vertices == ('a', 'x1', 'b', 'y1', 'c')


def test_unit_gadget():
    inst = gen_betweenness_unit(TRIPLE)
    assert not inst.sunflower
    # G_0 plus 2n - 1 graphs per triple
    assert inst.k == 1 + 5
    assert all(g.n == 7 for g in inst.graphs[1:])


def test_unit_gadget_placement():
    inst = gen_betweenness_unit(TRIPLE)
    rep = place_betweenness_unit(TRIPLE, ('a', 'b', 'c'))
    assert check_representation(inst, rep, 'unit').ok
    with pytest.raises(ValueError):
        place_betweenness_unit(TRIPLE, ('b', 'a', 'c'))


def test_unit_gadget_placement_two_triples():
    bw = BetweennessInstance(('a', 'b', 'c', 'd'), (('a', 'b', 'c'), ('b', 'c', 'd')))
    rep = place_betweenness_unit(bw, ('a', 'b', 'c', 'd'))
    assert check_representation(gen_betweenness_unit(bw), rep, 'unit').ok


def test_betweenness_validation():
    with pytest.raises(ValueError):
        BetweennessInstance(('a', 'a'))
    with pytest.raises(ValueError):
        BetweennessInstance(('a', 'b', 'c'), (('a', 'b', 'z'),))
    with pytest.raises(ValueError):
        BetweennessInstance(('a', 'b', 'c'), (('a', 'a', 'b'),))


def test_random_betweenness():
    bw = random_betweenness(4, 5, 3)
    assert bw == random_betweenness(4, 5, 3)
    assert len(bw.triples) == 3
    assert all(len(set(t)) == 3 for t in bw.triples)
    with pytest.raises(ValueError):
        random_betweenness(0, 2, 1)
