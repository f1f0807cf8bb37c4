import io
import json

import pytest

from datasets import BetweennessInstance, fixtures
from main import EXIT_CAP, EXIT_INVALID, EXIT_NO, EXIT_YES, output_path, run_cli
from utils.io import parse_instance, read_bytes, serialize_betweenness, serialize_instance, write_bytes


def run(*argv):
    out = io.StringIO()
    code = run_cli([str(a) for a in argv], stdout=out)
    return code, [json.loads(line) for line in out.getvalue().splitlines()]


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, build in fixtures.FIXTURES.items():
        paths[name] = tmp_path / ('%s.json' % name)
        write_bytes(paths[name], serialize_instance(build()))
    return paths


def test_recognize_proper(files):
    code, lines = run('recognize', '--mode', 'proper', files['squeezed-path'])
    assert code == EXIT_YES
    assert lines[0]['result'] == 'yes'
    assert lines[0]['mode'] == 'proper'
    assert set(lines[0]['certificate']['representation']['intervals']) == {'s1', 'a', 'b', 'c', 's2', 'd'}


def test_recognize_unit_no(files):
    code, lines = run('recognize', '--mode', 'unit', files['squeezed-path'])
    assert code == EXIT_NO
    assert lines == [{'result': 'no', 'mode': 'unit',
                      'certificate': {'reason': 'every simultaneous enumeration has a conflict'}}]


def test_explain_lists_conflicts(files):
    code, lines = run('recognize', '--mode', 'unit', '--explain', files['squeezed-path'])
    assert code == EXIT_NO
    conflicts = lines[0]['certificate']['conflicts']
    assert len(conflicts) == 2
    assert conflicts[0]['chain_graph'] == 'union'


def test_explain_respects_the_cap(files):
    code, lines = run('recognize', '--mode', 'unit', '--explain', '--set', 'enum_space.cap=1', files['squeezed-path'])
    assert code == EXIT_CAP
    assert lines[0]['result'] == 'error'
    assert lines[0]['error'] == 'CapExceededError'


def test_one_line_per_file(files):
    code, lines = run('recognize', '--mode', 'unit', files['squeezed-path'], files['offset-paths'], files['claw'])
    assert code == EXIT_NO
    assert [line['result'] for line in lines] == ['no', 'yes', 'no']


def test_emitted_representation_checks_out(files, tmp_path):
    rep, svg = tmp_path / 'rep.json', tmp_path / 'rep.svg'
    code, _ = run('recognize', '--mode', 'unit', files['offset-paths'],
                  '--emit-representation', rep, '--emit-svg', svg, '--emit-certificate', tmp_path / 'cert.json')
    assert code == EXIT_YES
    assert read_bytes(svg).startswith(b'<?xml')
    assert 'representation' in json.loads(read_bytes(tmp_path / 'cert.json'))

    code, lines = run('oracle', '--mode', 'unit', files['offset-paths'], '--representation', rep)
    assert code == EXIT_YES
    assert lines[0]['ok']

    proper = tmp_path / 'proper.json'
    assert run('recognize', '--mode', 'proper', files['squeezed-path'], '--emit-representation', proper)[0] == EXIT_YES
    code, lines = run('oracle', '--mode', 'unit', files['squeezed-path'], '--representation', proper)
    assert code == EXIT_NO
    assert {f['kind'] for f in lines[0]['failures']} == {'non-unit-length'}


def test_emit_paths_per_input(files, tmp_path):
    template = tmp_path / '{name}.rep.json'
    code, _ = run('recognize', '--mode', 'proper', files['squeezed-path'], files['offset-paths'],
                  '--emit-representation', template)
    assert code == EXIT_YES
    assert (tmp_path / 'squeezed-path.rep.json').exists()
    assert (tmp_path / 'offset-paths.rep.json').exists()
    assert output_path('out.json', 'dir/inst.json', many=True) == 'out_inst.json'
    assert output_path('out.json', 'dir/inst.json', many=False) == 'out.json'


def test_logs_dir(files, tmp_path):
    code, _ = run('recognize', '--mode', 'proper', '--logs_dir', tmp_path / 'logs', '--name', 'run1',
                  files['shared-triangle'])
    assert code == EXIT_YES
    log = (tmp_path / 'logs' / 'run1' / 'verdicts.txt').read_text()
    assert 'result: yes' in log


def test_invalid_inputs(files, tmp_path):
    broken = tmp_path / 'broken.json'
    broken.write_bytes(b'{"graphs": [')
    code, lines = run('recognize', '--mode', 'proper', broken)
    assert code == EXIT_INVALID
    assert lines[0]['result'] == 'error'
    assert lines[0]['error'] == 'SchemaError'

    bad = tmp_path / 'bad.json'
    bad.write_bytes(b'{"shared_vertices": ["s", "t"], "graphs": [{"vertices": ["s", "t"]}, {"vertices": ["s"]}]}')
    code, lines = run('validate', files['squeezed-path'], bad, broken)
    assert code == EXIT_INVALID
    assert [line['ok'] for line in lines] == [True, False, False]
    assert lines[1]['violations'][0]['rule'] == 'shared-missing'
    assert lines[2]['violations'][0]['rule'] == 'schema'
    assert lines[1]['file'] == str(bad)


def test_oracle(files):
    assert run('oracle', '--mode', 'proper', files['squeezed-path'])[0] == EXIT_YES
    code, lines = run('oracle', '--mode', 'unit', files['squeezed-path'])
    assert code == EXIT_NO
    assert lines[0]['oracle'] == 'brute-force'
    assert run('oracle', '--mode', 'unit', files['threaded-bar'])[0] == EXIT_CAP


def test_gadgets(files, tmp_path):
    bw = tmp_path / 'bw.json'
    write_bytes(bw, serialize_betweenness(BetweennessInstance(('a', 'b', 'c'), (('a', 'b', 'c'), ('b', 'c', 'a')))))
    gadget = tmp_path / 'gadget.json'
    assert run('gen', 'betweenness', '--input', bw, '--out', gadget)[0] == EXIT_YES
    assert not parse_instance(read_bytes(gadget)).sunflower

    code, lines = run('oracle', '--mode', 'proper', gadget)
    assert code == EXIT_NO
    assert lines[0]['oracle'] == 'general'
    code, lines = run('recognize', '--mode', 'proper', gadget)
    assert code == EXIT_INVALID
    assert lines[0]['error'] == 'NotSunflowerError'


def test_gen_and_render(tmp_path):
    inst, rep, svg = tmp_path / 'inst.json', tmp_path / 'rep.json', tmp_path / 'out.svg'
    code, _ = run('gen', 'random', '--seed', 3, '--n_shared', 3, '--n_private', 2, '--k', 2,
                  '--out', inst, '--emit-representation', rep)
    assert code == EXIT_YES
    assert parse_instance(read_bytes(inst)).k == 2
    assert run('oracle', '--mode', 'unit', inst, '--representation', rep)[0] == EXIT_YES
    assert run('render', rep, inst, '--out', svg)[0] == EXIT_YES
    assert b'<svg' in read_bytes(svg)


def test_bench():
    code, lines = run('bench', '--mode', 'proper', '--sizes', 8, 16, '--trials', 1)
    assert code == EXIT_YES
    assert lines[0]['sizes'] == [8, 16]
    assert len(lines[0]['medians']) == 2
    assert len(lines[0]['growth']) == 1


def test_usage_errors(files):
    assert run()[0] == EXIT_INVALID
    assert run('frobnicate')[0] == EXIT_INVALID
    assert run('recognize', files['squeezed-path'])[0] == EXIT_INVALID
