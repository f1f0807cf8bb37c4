import json
from fractions import Fraction

import pytest

from datasets import BetweennessInstance
from datasets.fixtures import squeezed_path_representation
from models.sunflower_proper import SimultaneousRepresentation
from utils.exceptions import InvalidInstanceError, SchemaError
from utils.io import (dump_json, format_fraction, parse_betweenness, parse_fraction, parse_instance,
                      parse_representation, representation_to_json, serialize_betweenness, serialize_instance,
                      serialize_representation)

SQUEEZED = {
    'shared_vertices': ['s1', 's2'],
    'shared_edges': [],
    'graphs': [
        {'vertices': ['s1', 'a', 'b', 'c', 's2'],
         'edges': [['s1', 'a'], ['a', 'b'], ['b', 'c'], ['c', 's2']]},
        {'vertices': ['s1', 'd', 's2'], 'edges': [['s1', 'd'], ['d', 's2']]},
    ],
    'name': 'squeezed-path',
}


def _bytes(obj):
    return json.dumps(obj).encode('utf-8')


def test_parse_squeezed_path(squeezed):
    inst = parse_instance(_bytes(SQUEEZED))
    assert inst == squeezed
    assert serialize_instance(inst) == dump_json(SQUEEZED)


def test_canonical_json():
    assert dump_json({'b': 1, 'a': [1, 2]}) == b'{"a":[1,2],"b":1}\n'


def test_single_graph_is_its_own_shared_graph():
    inst = parse_instance(_bytes({'graphs': [{'vertices': ['a', 'b'], 'edges': [['a', 'b']]}]}))
    assert inst.shared_vertices == ('a', 'b')
    assert inst.shared_edges == frozenset([frozenset(('a', 'b'))])


@pytest.mark.parametrize('data', [
    b'{"graphs": [',
    b'\xff\xfe',
    b'[]',
    b'{"graphs": []}',
    b'{"graphs": [{"vertices": ["a", "a"]}]}',
    b'{"graphs": [{"vertices": ["a"], "edges": [["a", "z"]]}]}',
    b'{"graphs": [{"vertices": ["a"], "edges": [["a"]]}]}',
    b'{"graphs": [{"vertices": [1]}]}',
    b'{"graphs": [{"vertices": ["a"]}], "sunflower": "yes"}',
    b'{"graphs": [{"vertices": ["a"]}], "name": 3}',
])
def test_schema_errors(data):
    with pytest.raises(SchemaError):
        parse_instance(data)


def test_invalid_sunflower_carries_its_report():
    obj = dict(SQUEEZED, shared_vertices=['s1', 's2', 'b'])
    with pytest.raises(InvalidInstanceError) as info:
        parse_instance(_bytes(obj))
    assert {v.rule for v in info.value.report.violations} == {'shared-missing'}


def test_gadget_flag_skips_validation():
    obj = dict(SQUEEZED, shared_vertices=['s1', 's2', 'b'], sunflower=False)
    inst = parse_instance(_bytes(obj))
    assert not inst.sunflower
    assert b'"sunflower":false' in serialize_instance(inst)


def test_fractions():
    assert format_fraction(0) == '0/1'
    assert format_fraction(Fraction(6, 4)) == '3/2'
    assert parse_fraction('3/2') == Fraction(3, 2)
    assert parse_fraction('2') == 2
    for bad in ('x', '1/0', 1):
        with pytest.raises(SchemaError):
            parse_fraction(bad)


def test_representation_codec():
    rep = SimultaneousRepresentation({'u': (Fraction(1, 2), Fraction(3, 2)), 'v': (Fraction(0), Fraction(1))},
                                     (('u', 'v'),), 'unit')
    data = serialize_representation(rep)
    assert b'"u":{"l":"1/2","r":"3/2"}' in data
    assert b'"v":{"l":"0/1","r":"1/1"}' in data
    assert parse_representation(data) == rep
    fig = squeezed_path_representation()
    assert parse_representation(serialize_representation(fig)) == fig


@pytest.mark.parametrize('obj', [
    {'intervals': []},
    {'intervals': {'a': {'l': '0/1'}}},
    {'intervals': {'a': {'l': '0/1', 'r': '1/1'}}, 'mode': 'interval'},
    {'intervals': {'a': {'l': '0/1', 'r': '1/1'}}, 'per_graph': 'a'},
])
def test_representation_schema_errors(obj):
    with pytest.raises(SchemaError):
        parse_representation(_bytes(obj))


def test_betweenness_codec():
    bw = BetweennessInstance(('a', 'b', 'c'), (('a', 'b', 'c'),))
    assert parse_betweenness(serialize_betweenness(bw)) == bw
    with pytest.raises(SchemaError):
        parse_betweenness(b'{"ground": ["a", "b"], "triples": [["a", "b", "c"]]}')
    with pytest.raises(SchemaError):
        parse_betweenness(b'{"ground": "abc"}')


def test_representation_lists_each_graph_view():
    rep = squeezed_path_representation()
    assert set(representation_to_json(rep)) == {'mode', 'intervals', 'per_graph'}
    doc = {'mode': 'unit',
           'intervals': {'a': {'l': '0/1', 'r': '1/1'}, 'b': {'l': '1/2', 'r': '3/2'}, 'c': {'l': '2/1', 'r': '3/1'}},
           'per_graph': [['a', 'b'], ['b', 'c']]}
    parsed = parse_representation(_bytes(doc))
    assert parsed.per_graph == (('a', 'b'), ('b', 'c'))
    assert json.loads(serialize_representation(parsed)) == doc
