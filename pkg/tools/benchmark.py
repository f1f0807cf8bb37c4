"""Runtime growth of the recognizers on random unit-YES instances.

For every size the median wall time over ``trials`` seeded instances is
taken; the growth factor of a step is the ratio of consecutive medians.

    python tools/benchmark.py --mode proper --sizes 1000 2000 4000
"""
import os
import sys
import time

import numpy as np
from termcolor import cprint
from tqdm import tqdm

current_dir = os.path.dirname(os.path.realpath(__file__))
sys.path.append(os.path.dirname(current_dir))

from datasets.random_instances import gen_random_yes
from models.sunflower_proper import recognize_proper
from models.sunflower_unit import recognize_unit

RECOGNIZERS = {'proper': recognize_proper, 'unit': recognize_unit}


def instance_shape(n_vertices, k, shared_fraction):
    """Shared and per-graph private counts giving ``n_vertices`` in total."""
    n_shared = max(1, int(round(n_vertices * shared_fraction)))
    n_private = max(0, (n_vertices - n_shared) // k)
    return n_shared, n_private


def run_benchmark(mode, sizes, trials=5, k=3, shared_fraction=0.25, seed=0, progress=True):
    recognize = RECOGNIZERS[mode]
    medians = []
    pbar = tqdm(total=len(sizes) * trials, disable=not progress, file=sys.stderr)
    for size in sizes:
        n_shared, n_private = instance_shape(size, k, shared_fraction)
        times = []
        for t in range(trials):
            inst = gen_random_yes(seed + t, n_shared, n_private, k)
            start = time.perf_counter()
            result = recognize(inst)
            times.append(time.perf_counter() - start)
            if not result.yes:
                raise RuntimeError('generated unit-YES instance was rejected (size %d, seed %d)' % (size, seed + t))
            pbar.update(1)
        medians.append(float(np.median(times)))
    pbar.close()
    growth = [b / a if a > 0 else float('inf') for a, b in zip(medians, medians[1:])]
    return {'mode': mode, 'sizes': list(sizes), 'medians': medians, 'growth': growth}


if __name__ == '__main__':
    import argparse
    import json

    parser = argparse.ArgumentParser(formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    parser.add_argument('--mode', choices=sorted(RECOGNIZERS), default='proper')
    parser.add_argument('--sizes', type=int, nargs='+', default=[1000, 2000, 4000])
    parser.add_argument('--trials', type=int, default=5)
    parser.add_argument('--seed', type=int, default=0)
    args = parser.parse_args()

    report = run_benchmark(args.mode, args.sizes, args.trials, seed=args.seed)
    cprint('[*] worst growth per doubling: %.2f' % max(report['growth'], default=0.0), 'blue', file=sys.stderr)
    print(json.dumps(report, sort_keys=True))
