"""JSON codecs for instances, representations and betweenness inputs.

Vertex ids are strings on the wire. Interval endpoints are written as
normalised ``"p/q"`` strings so that rationals survive exactly.
"""
import json
from fractions import Fraction

from datasets.betweenness import BetweennessInstance
from graphs.graph import build_graph
from graphs.sunflower import SunflowerInstance, validate_sunflower
from models.sunflower_proper import SimultaneousRepresentation
from utils.exceptions import GraphError, InvalidInstanceError, SchemaError


def load_json(data):
    if isinstance(data, (bytes, bytearray)):
        try:
            data = data.decode('utf-8')
        except UnicodeDecodeError as e:
            raise SchemaError('input is not UTF-8: %s' % e)
    try:
        return json.loads(data)
    except json.JSONDecodeError as e:
        raise SchemaError('malformed JSON: %s' % e)


def dump_json(obj) -> bytes:
    """Canonical one-line JSON: sorted keys, no spaces, trailing newline."""
    return (json.dumps(obj, sort_keys=True, separators=(',', ':')) + '\n').encode('utf-8')


def _names(value, what):
    if not isinstance(value, list) or not all(isinstance(v, str) for v in value):
        raise SchemaError('%s must be a list of strings' % what)
    return value


def _pairs(value, what):
    if not isinstance(value, list):
        raise SchemaError('%s must be a list of pairs' % what)
    for e in value:
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(v, str) for v in e)):
            raise SchemaError('%s entry %r is not a pair of strings' % (what, e))
    return [tuple(e) for e in value]


def instance_from_json(obj) -> SunflowerInstance:
    if not isinstance(obj, dict):
        raise SchemaError('instance must be a JSON object')
    graphs = obj.get('graphs')
    if not isinstance(graphs, list) or not graphs:
        raise SchemaError('"graphs" must be a non-empty list')
    built = []
    for i, g in enumerate(graphs):
        if not isinstance(g, dict):
            raise SchemaError('graph %d must be an object' % (i + 1))
        vertices = _names(g.get('vertices', []), 'G_%d vertices' % (i + 1))
        if len(set(vertices)) != len(vertices):
            raise SchemaError('G_%d lists a vertex twice' % (i + 1))
        try:
            built.append(build_graph(vertices, _pairs(g.get('edges', []), 'G_%d edges' % (i + 1))))
        except GraphError as e:
            raise SchemaError('G_%d: %s' % (i + 1, e))

    if len(built) == 1 and 'shared_vertices' not in obj:
        # a single graph is its own shared graph
        shared, shared_edges = list(built[0].vertices), list(built[0].edges)
    else:
        shared = _names(obj.get('shared_vertices', []), '"shared_vertices"')
        shared_edges = _pairs(obj.get('shared_edges', []), '"shared_edges"')
    name = obj.get('name')
    if name is not None and not isinstance(name, str):
        raise SchemaError('"name" must be a string')
    sunflower = obj.get('sunflower', True)
    if not isinstance(sunflower, bool):
        raise SchemaError('"sunflower" must be a boolean')

    inst = SunflowerInstance(tuple(built), tuple(shared), frozenset(frozenset(e) for e in shared_edges),
                             name, sunflower)
    if sunflower:
        report = validate_sunflower(inst)
        if not report.ok:
            raise InvalidInstanceError('; '.join(report.messages()), report)
    return inst


def parse_instance(data) -> SunflowerInstance:
    return instance_from_json(load_json(data))


def instance_to_json(inst: SunflowerInstance):
    obj = {
        'shared_vertices': list(inst.sorted(inst.shared_vertices)),
        'shared_edges': sorted(list(inst.sorted(e)) for e in inst.shared_edges),
        'graphs': [{'vertices': list(g.vertices), 'edges': [list(e) for e in g.edges]}
                   for g in inst.graphs],
    }
    if inst.name is not None:
        obj['name'] = inst.name
    if not inst.sunflower:
        obj['sunflower'] = False
    return obj


def serialize_instance(inst: SunflowerInstance) -> bytes:
    return dump_json(instance_to_json(inst))


def format_fraction(x) -> str:
    x = Fraction(x)
    return '%d/%d' % (x.numerator, x.denominator)


def parse_fraction(s) -> Fraction:
    if not isinstance(s, str):
        raise SchemaError('endpoint %r must be a "p/q" string' % (s,))
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise SchemaError('bad endpoint %r' % (s,))


def representation_to_json(rep: SimultaneousRepresentation):
    return {
        'mode': rep.mode,
        'intervals': {str(v): {'l': format_fraction(l), 'r': format_fraction(r)}
                      for v, (l, r) in sorted(rep.intervals.items(), key=lambda kv: str(kv[0]))},
        'per_graph': [list(vs) for vs in rep.per_graph],
    }


def serialize_representation(rep: SimultaneousRepresentation) -> bytes:
    return dump_json(representation_to_json(rep))


def representation_from_json(obj) -> SimultaneousRepresentation:
    if not isinstance(obj, dict) or not isinstance(obj.get('intervals'), dict):
        raise SchemaError('representation must have an "intervals" object')
    mode = obj.get('mode', 'proper')
    if mode not in ('proper', 'unit'):
        raise SchemaError('unknown mode %r' % (mode,))
    intervals = {}
    for v, iv in obj['intervals'].items():
        if not isinstance(iv, dict) or 'l' not in iv or 'r' not in iv:
            raise SchemaError('interval of %r needs "l" and "r"' % (v,))
        intervals[v] = (parse_fraction(iv['l']), parse_fraction(iv['r']))
    graphs = obj.get('per_graph', [sorted(intervals)])
    if not isinstance(graphs, list):
        raise SchemaError('"per_graph" must be a list')
    per_graph = tuple(tuple(_names(vs, 'representation graph')) for vs in graphs)
    return SimultaneousRepresentation(intervals, per_graph, mode)


def parse_representation(data) -> SimultaneousRepresentation:
    return representation_from_json(load_json(data))


def parse_betweenness(data) -> BetweennessInstance:
    obj = load_json(data)
    if not isinstance(obj, dict):
        raise SchemaError('betweenness input must be a JSON object')
    ground = _names(obj.get('ground'), '"ground"')
    triples = obj.get('triples', [])
    if not isinstance(triples, list):
        raise SchemaError('"triples" must be a list')
    for t in triples:
        if not (isinstance(t, list) and len(t) == 3 and all(isinstance(x, str) for x in t)):
            raise SchemaError('triple %r is not three strings' % (t,))
    try:
        return BetweennessInstance(tuple(ground), tuple(tuple(t) for t in triples))
    except ValueError as e:
        raise SchemaError(str(e))


def serialize_betweenness(bw) -> bytes:
    return dump_json({'ground': list(bw.ground), 'triples': [list(t) for t in bw.triples]})


def read_bytes(path) -> bytes:
    with open(path, 'rb') as f:
        return f.read()


def write_bytes(path, data: bytes):
    with open(path, 'wb') as f:
        f.write(data)
