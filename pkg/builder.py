import numpy as np
from omegaconf import OmegaConf

import datasets
from utils.io import parse_betweenness, read_bytes


def _cfg(opt, key, default):
    value = OmegaConf.select(opt.cfg, key) if getattr(opt, 'cfg', None) is not None else None
    return default if value is None else value


def _pick(flag, opt, key, default):
    return flag if flag is not None else _cfg(opt, key, default)


def random_betweenness(seed, n_ground, n_triples) -> datasets.BetweennessInstance:
    """Triples of distinct elements drawn uniformly from ``n_ground`` names."""
    if n_ground < 3 and n_triples > 0:
        raise ValueError('triples need a ground set of at least three elements')
    rng = np.random.default_rng(seed)
    ground = tuple('a%d' % t for t in range(n_ground))
    triples = []
    for _ in range(n_triples):
        a, b, c = rng.choice(n_ground, size=3, replace=False)
        triples.append((ground[a], ground[b], ground[c]))
    return datasets.BetweennessInstance(ground, tuple(triples))


def get_betweenness(opt) -> datasets.BetweennessInstance:
    if opt.input is not None:
        return parse_betweenness(read_bytes(opt.input))
    return random_betweenness(opt.seed, opt.n_ground, opt.n_triples)


def get_instance(opt):
    """The instance asked for by ``gen`` options, with its generating
    representation when one is known."""
    if opt.family == 'betweenness':
        bw = get_betweenness(opt)
        gadget = _pick(opt.gadget, opt, 'gen.betweenness.gadget', 'proper')
        if gadget == 'proper':
            return datasets.gen_betweenness_proper(bw), None
        return datasets.gen_betweenness_unit(bw), None
    elif opt.family == 'random':
        n_shared = _pick(opt.n_shared, opt, 'gen.random.n_shared', 3)
        n_private = _pick(opt.n_private, opt, 'gen.random.n_private', 3)
        k = _pick(opt.k, opt, 'gen.random.k', 2)
        extra = _pick(opt.extra_edges, opt, 'gen.random.extra_edges', 0)
        spread = _cfg(opt, 'gen.random.spread', None)
        if extra:
            return datasets.gen_random_any(opt.seed, n_shared, n_private, k, extra, spread=spread), None
        return datasets.gen_random_yes(opt.seed, n_shared, n_private, k, with_certificate=True, spread=spread)
    else:
        raise ValueError('unknown instance family %r' % (opt.family,))
