"""Betweenness gadgets.

A betweenness instance asks for a linear order of a ground set in which the
middle element of every triple lies between the other two. Each triple is
encoded by graphs that meet in more than a common shared graph, so the
results are general simultaneous instances flagged ``sunflower=False``.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Sequence, Tuple

from graphs.graph import build_graph
from graphs.sunflower import SunflowerInstance
from models.sunflower_proper import SimultaneousRepresentation


@dataclass(frozen=True)
class BetweennessInstance:
    ground: Tuple[str, ...]
    triples: Tuple[Tuple[str, str, str], ...] = ()

    def __post_init__(self):
        if len(set(self.ground)) != len(self.ground):
            raise ValueError('ground set lists an element twice')
        known = set(self.ground)
        for t in self.triples:
            if len(t) != 3 or len(set(t)) != 3:
                raise ValueError('triple %r needs three distinct elements' % (t,))
            if not set(t) <= known:
                raise ValueError('triple %r leaves the ground set' % (t,))

    @property
    def n(self):
        return len(self.ground)

    def satisfied_by(self, order: Sequence[str]) -> bool:
        pos = {a: p for p, a in enumerate(order)}
        return all(pos[a] < pos[b] < pos[c] or pos[c] < pos[b] < pos[a] for a, b, c in self.triples)


def _fresh(name, taken):
    while name in taken:
        name += "'"
    taken.add(name)
    return name


def gen_betweenness_proper(bw: BetweennessInstance) -> SunflowerInstance:
    """G_0 is the edgeless graph on the ground set; triple (a, b, c) adds the
    induced path a x b y c on two fresh vertices."""
    taken = set(bw.ground)
    graphs = [build_graph(bw.ground, [])]
    for i, (a, b, c) in enumerate(bw.triples, 1):
        x, y = _fresh('x%d' % i, taken), _fresh('y%d' % i, taken)
        graphs.append(build_graph([a, x, b, y, c], [(a, x), (x, b), (b, y), (y, c)]))
    return SunflowerInstance(tuple(graphs), name='betweenness-proper', sunflower=False)


def _chains(bw: BetweennessInstance):
    taken = set(bw.ground)
    length = 2 * bw.n
    out = []
    for i, _ in enumerate(bw.triples, 1):
        xs = [_fresh('x%d_%d' % (i, j), taken) for j in range(1, length + 1)]
        ys = [_fresh('y%d_%d' % (i, j), taken) for j in range(1, length + 1)]
        out.append((xs, ys))
    return out


def gen_betweenness_unit(bw: BetweennessInstance) -> SunflowerInstance:
    """Each triple (a, b, c) becomes the paths a x^1 .. x^2n b and
    c y^1 .. y^2n b for n = |A|, cut into 2n - 1 graphs that each carry one
    link of both chains together with a, b and c."""
    graphs = [build_graph(bw.ground, [])]
    length = 2 * bw.n
    for (a, b, c), (xs, ys) in zip(bw.triples, _chains(bw)):
        for j in range(length - 1):
            vertices = [a, b, c, xs[j], xs[j + 1], ys[j], ys[j + 1]]
            edges = [(xs[j], xs[j + 1]), (ys[j], ys[j + 1])]
            if j == 0:
                edges += [(a, xs[0]), (c, ys[0])]
            if j == length - 2:
                edges += [(xs[-1], b), (ys[-1], b)]
            graphs.append(build_graph(vertices, edges))
    return SunflowerInstance(tuple(graphs), name='betweenness-unit', sunflower=False)


def _walk(start: Fraction, end: Fraction, count: int, mu: Fraction):
    """Left endpoints of ``count`` chain vertices leading from ``start`` to
    ``end``: the first two near ``start``, the last two near ``end``."""
    s = 1 if end > start else -1
    first = [start + s * Fraction(3, 4), start + s * (1 + mu)]
    last = [end - s * (1 + mu), end - s * Fraction(3, 4)]
    gaps = count - 3
    step = (last[0] - first[1]) / gaps
    middle = [first[1] + step * t for t in range(1, gaps)]
    return first + middle + last


def place_betweenness_unit(bw: BetweennessInstance, order: Sequence[str]) -> SimultaneousRepresentation:
    """Unit intervals for the unit gadget of ``bw`` from a betweenness order.

    Ground elements sit 2 + 1/n apart; chain vertices step in from both ends
    so that each one only meets its chain neighbours.
    """
    if sorted(order) != sorted(bw.ground):
        raise ValueError('order is not a permutation of the ground set')
    if not bw.satisfied_by(order):
        raise ValueError('order violates a triple')
    inst = gen_betweenness_unit(bw)
    n = bw.n
    spacing = 2 + Fraction(1, n)
    mu = Fraction(1, 4 * n)
    left: Dict[str, Fraction] = {a: p * spacing for p, a in enumerate(order)}
    for (a, b, c), (xs, ys) in zip(bw.triples, _chains(bw)):
        for chain, start in ((xs, a), (ys, c)):
            for v, l in zip(chain, _walk(left[start], left[b], len(chain), mu)):
                left[v] = l
    intervals = {v: (left[v], left[v] + 1) for v in inst.sorted(left)}
    return SimultaneousRepresentation(intervals, tuple(g.vertices for g in inst.graphs), 'unit')
