"""Write a directory of seeded random instances, one JSON file per seed.

    python tools/gen_instances.py --out data/random --count 100 --extra_edges 1
"""
import argparse
import os
import sys

from tqdm import tqdm

current_dir = os.path.dirname(os.path.realpath(__file__))
sys.path.append(os.path.dirname(current_dir))

from datasets.random_instances import gen_random_any, gen_random_yes
from utils.io import serialize_instance, serialize_representation, write_bytes
from utils.util import mkdirs


def write_batch(out, count, n_shared, n_private, k, extra_edges=0, first_seed=0, progress=True):
    """Instances ``<seed>.json``; unperturbed ones also get ``<seed>.rep.json``."""
    mkdirs(out)
    paths = []
    for seed in tqdm(range(first_seed, first_seed + count), disable=not progress, file=sys.stderr):
        path = os.path.join(out, '%d.json' % seed)
        if extra_edges:
            write_bytes(path, serialize_instance(gen_random_any(seed, n_shared, n_private, k, extra_edges)))
        else:
            inst, rep = gen_random_yes(seed, n_shared, n_private, k, with_certificate=True)
            write_bytes(path, serialize_instance(inst))
            write_bytes(os.path.join(out, '%d.rep.json' % seed), serialize_representation(rep))
        paths.append(path)
    return paths


if __name__ == '__main__':
    parser = argparse.ArgumentParser(formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    parser.add_argument('--out', type=str, required=True)
    parser.add_argument('--count', type=int, default=100)
    parser.add_argument('--first_seed', type=int, default=0)
    parser.add_argument('--n_shared', type=int, default=3)
    parser.add_argument('--n_private', type=int, default=2)
    parser.add_argument('--k', type=int, default=2)
    parser.add_argument('--extra_edges', type=int, default=0)
    args = parser.parse_args()
    write_batch(args.out, args.count, args.n_shared, args.n_private, args.k, args.extra_edges, args.first_seed)
