"""Command-line entry point.

    python main.py recognize --mode unit squeezed.json
    python main.py validate broken.json
    python main.py oracle --mode proper small.json
    python main.py gen random --seed 3 --out inst.json
    python main.py render rep.json inst.json --out rep.svg
    python main.py bench --mode proper

Exit codes: 0 YES (or success), 1 NO, 2 invalid input, 3 internal error,
4 oracle cap exceeded. Verdicts go to stdout, one JSON line per input file;
everything else goes to stderr.
"""
import os
import sys
import time

from omegaconf import OmegaConf
from termcolor import cprint

import builder
from graphs.sunflower import validate_sunflower
from metrics.checker import check_representation
from metrics.general_oracle import general_simultaneous_representable
from metrics.oracle import brute_force_proper, brute_force_unit
from models.base_model import create_model
from options.gen_options import BenchOptions, GenOptions
from options.recognize_options import OracleOptions, RecognizeOptions, RenderOptions, ValidateOptions
from utils.exceptions import CapExceededError, GraphError, InvalidInstanceError, SchemaError
from utils.io import (dump_json, instance_from_json, load_json, parse_instance, parse_representation,
                      read_bytes, serialize_instance, serialize_representation, write_bytes)
from utils.render import render_svg
from utils.util import instance_name
from utils.visualizer import Visualizer

EXIT_YES = 0
EXIT_NO = 1
EXIT_INVALID = 2
EXIT_INTERNAL = 3
EXIT_CAP = 4


def exit_code(error: BaseException) -> int:
    if isinstance(error, (SchemaError, InvalidInstanceError, GraphError)):
        return EXIT_INVALID
    if isinstance(error, CapExceededError):
        return EXIT_CAP
    return EXIT_INTERNAL


def _emit(stdout, obj):
    stdout.write(dump_json(obj).decode('utf-8'))


def _cfg(opt, key, default):
    value = OmegaConf.select(opt.cfg, key)
    return default if value is None else value


def output_path(template, source, many):
    """``template`` for a single input; with several inputs the file stem of
    ``source`` replaces ``{name}`` or is appended before the extension."""
    stem = instance_name(source)
    if '{name}' in template:
        return template.replace('{name}', stem)
    if not many:
        return template
    root, ext = os.path.splitext(template)
    return '%s_%s%s' % (root, stem, ext)


def validate_main(opt, stdout):
    code = EXIT_YES
    for path in opt.inputs:
        try:
            obj = load_json(read_bytes(path))
            if isinstance(obj, dict) and obj.get('sunflower', True) is not False:
                # parse without the check, then report every violation at once
                inst = instance_from_json(dict(obj, sunflower=False))
                report = validate_sunflower(inst).to_json()
            else:
                instance_from_json(obj)
                report = {'ok': True, 'violations': []}
        except (SchemaError, GraphError) as e:
            report = {'ok': False, 'violations': [{'rule': 'schema', 'message': str(e), 'items': []}]}
        _emit(stdout, dict(report, file=path))
        if not report['ok']:
            code = EXIT_INVALID
    return code


def recognize_main(opt, stdout):
    model = create_model(opt)
    visualizer = Visualizer(opt)
    visualizer.setup_io()
    many = len(opt.inputs) > 1
    codes = []
    for path in opt.inputs:
        start = time.time()
        try:
            inst = parse_instance(read_bytes(path))
            result = model.recognize(inst)
            rep = model.build_representation(inst, result) if result.yes else None
            certificate = model.certificate(inst, result, rep)
        except Exception as e:
            visualizer.print_error(path, e)
            _emit(stdout, {'result': 'error', 'mode': opt.mode, 'error': type(e).__name__, 'message': str(e)})
            codes.append(exit_code(e))
            continue
        verdict = model.verdict(inst, result, certificate)
        _emit(stdout, verdict)
        visualizer.print_verdict(path, verdict, time.time() - start)

        if opt.emit_certificate:
            write_bytes(output_path(opt.emit_certificate, path, many), dump_json(certificate))
        if rep is not None and opt.emit_representation:
            write_bytes(output_path(opt.emit_representation, path, many), serialize_representation(rep))
        if rep is not None and opt.emit_svg:
            svg = render_svg(rep, inst, scale=_cfg(opt, 'render.scale', 100),
                             colors=tuple(_cfg(opt, 'render.colors', ('tab:green', 'tab:red', 'tab:blue'))))
            write_bytes(output_path(opt.emit_svg, path, many), svg)
        codes.append(EXIT_YES if result.yes else EXIT_NO)
    return max(codes)


def oracle_main(opt, stdout):
    inst = parse_instance(read_bytes(opt.input))
    if opt.representation is not None:
        rep = parse_representation(read_bytes(opt.representation))
        report = check_representation(inst, rep, opt.mode)
        _emit(stdout, report.to_json())
        return EXIT_YES if report.ok else EXIT_NO

    if inst.sunflower:
        cap = _cfg(opt, 'oracle.max_combinations', 200000)
        max_vertices = _cfg(opt, 'oracle.max_vertices', 10)
        decide = brute_force_proper if opt.mode == 'proper' else brute_force_unit
        yes = decide(inst, cap, max_vertices)
        kind = 'brute-force'
    else:
        yes = general_simultaneous_representable(inst.graphs, opt.mode, _cfg(opt, 'oracle.max_conflicts', 200000))
        kind = 'general'
    _emit(stdout, {'result': 'yes' if yes else 'no', 'mode': opt.mode, 'certificate': None, 'oracle': kind})
    return EXIT_YES if yes else EXIT_NO


def gen_main(opt, stdout):
    inst, rep = builder.get_instance(opt)
    write_bytes(opt.out, serialize_instance(inst))
    if rep is not None and opt.emit_representation:
        write_bytes(opt.emit_representation, serialize_representation(rep))
    cprint('[*] %s instance written to %s' % (opt.family, opt.out), 'blue', file=sys.stderr)
    return EXIT_YES


def render_main(opt, stdout):
    rep = parse_representation(read_bytes(opt.representation))
    inst = parse_instance(read_bytes(opt.instance))
    svg = render_svg(rep, inst, scale=_cfg(opt, 'render.scale', 100),
                     colors=tuple(_cfg(opt, 'render.colors', ('tab:green', 'tab:red', 'tab:blue'))))
    write_bytes(opt.out, svg)
    return EXIT_YES


def bench_main(opt, stdout):
    from tools.benchmark import run_benchmark

    sizes = opt.sizes or list(_cfg(opt, 'bench.%s.sizes' % opt.mode, [200, 400, 800]))
    trials = opt.trials or _cfg(opt, 'bench.trials', 5)
    report = run_benchmark(opt.mode, sizes, trials, k=_cfg(opt, 'bench.k', 3),
                           shared_fraction=_cfg(opt, 'bench.shared_fraction', 0.25), seed=opt.seed)
    _emit(stdout, report)
    return EXIT_YES


COMMANDS = {
    'validate': (ValidateOptions, validate_main),
    'recognize': (RecognizeOptions, recognize_main),
    'oracle': (OracleOptions, oracle_main),
    'gen': (GenOptions, gen_main),
    'render': (RenderOptions, render_main),
    'bench': (BenchOptions, bench_main),
}


def run_cli(argv=None, stdout=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    stdout = stdout or sys.stdout
    if not argv or argv[0] not in COMMANDS:
        cprint('usage: main.py {%s} ...' % ','.join(COMMANDS), 'red', file=sys.stderr)
        return EXIT_INVALID
    options, handler = COMMANDS[argv[0]]
    try:
        opt = options().parse_and_setup(argv[1:])
    except SystemExit as e:
        # argparse exits 2 on bad usage and 0 on --help
        return e.code if isinstance(e.code, int) else EXIT_INVALID
    try:
        return handler(opt, stdout)
    except Exception as e:
        cprint('[*] %s: %s' % (type(e).__name__, e), 'red', file=sys.stderr)
        return exit_code(e)


if __name__ == '__main__':
    sys.exit(run_cli())
