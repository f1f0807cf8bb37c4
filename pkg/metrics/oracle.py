"""Brute-force ground truth for small sunflower instances.

Everything here follows the definitions directly: straight enumerations are
found by trying block orders, shared orders by trying permutations, chains by
breadth-first search inside single graphs and bars by exhaustive search over
increasing independent sequences. Only the graph layer is shared with the
recognizers. Inputs beyond the vertex cap are refused, never sampled.
"""
import itertools
import logging
from collections import deque
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from graphs.graph import Graph
from graphs.sunflower import SunflowerInstance, split_by_components, union_graph
from models.conflicts import Conflict
from utils.exceptions import CapExceededError, NotSunflowerError

logger = logging.getLogger(__name__)

MAX_VERTICES = 10
MAX_COMBINATIONS = 200000

BlockOrder = Tuple[FrozenSet, ...]


def _check_size(inst: SunflowerInstance, max_vertices):
    if not inst.sunflower:
        raise NotSunflowerError('brute-force sunflower oracles refuse gadget instances')
    n = len(inst.vertex_order)
    if n > max_vertices:
        raise CapExceededError('%d vertices exceed the oracle cap of %d' % (n, max_vertices), max_vertices)


def _twin_classes(g: Graph) -> List[FrozenSet]:
    classes = {}
    for v in g.vertices:
        classes.setdefault(g.closed_neighborhood(v), []).append(v)
    return [frozenset(vs) for vs in classes.values()]


def _adjacent(g: Graph, a: FrozenSet, b: FrozenSet) -> bool:
    return g.has_edge(next(iter(a)), next(iter(b)))


def brute_force_straight_enumerations(g: Graph, cap: int = MAX_COMBINATIONS) -> List[BlockOrder]:
    """All orders of the twin classes in which every closed neighbourhood is
    consecutive, by backtracking on the three-block condition."""
    classes = _twin_classes(g)
    found = []
    seq = []
    used = [False] * len(classes)
    visited = [0]

    def ok(new):
        # p < q < new with p ~ new forces p ~ q and q ~ new
        for p in range(len(seq)):
            if _adjacent(g, seq[p], new):
                for q in range(p + 1, len(seq)):
                    if not (_adjacent(g, seq[p], seq[q]) and _adjacent(g, seq[q], new)):
                        return False
        return True

    def extend():
        visited[0] += 1
        if visited[0] > cap:
            raise CapExceededError('straight enumeration search exceeds %d steps' % cap, cap)
        if len(seq) == len(classes):
            found.append(tuple(seq))
            return
        for c, blk in enumerate(classes):
            if not used[c] and ok(blk):
                used[c] = True
                seq.append(blk)
                extend()
                seq.pop()
                used[c] = False

    extend()
    return found


def _positions(order: BlockOrder) -> Dict:
    return {v: p for p, blk in enumerate(order) for v in blk}


def _consistent(shared, pa, pb) -> bool:
    for u, v in itertools.combinations(shared, 2):
        a, b = pa[u] - pa[v], pb[u] - pb[v]
        if a * b < 0:
            return False
    return True


def brute_force_space(inst: SunflowerInstance, cap: int = MAX_COMBINATIONS,
                      max_vertices: int = MAX_VERTICES) -> List[Tuple[BlockOrder, ...]]:
    """Every simultaneous enumeration, as per-graph block orders."""
    _check_size(inst, max_vertices)
    options = [brute_force_straight_enumerations(g, cap) for g in inst.graphs]
    positions = [[_positions(o) for o in opts] for opts in options]
    shared = inst.sorted(inst.shared_vertices)
    out = []
    chosen = []

    def pick(i):
        if len(out) > cap:
            raise CapExceededError('more than %d simultaneous enumerations' % cap, cap)
        if i == len(options):
            out.append(tuple(options[j][c] for j, c in enumerate(chosen)))
            return
        for c, pos in enumerate(positions[i]):
            if all(_consistent(shared, positions[j][chosen[j]], pos) for j in range(i)):
                chosen.append(c)
                pick(i + 1)
                chosen.pop()

    pick(0)
    return out


def space_keys(inst: SunflowerInstance, space) -> set:
    """Index keys of block orders, comparable with enumeration keys."""
    out = set()
    for orders in space:
        out.add(tuple(tuple(tuple(sorted(g.index[v] for v in blk)) for blk in order)
                      for g, order in zip(inst.graphs, orders)))
    return out


def brute_force_proper(inst: SunflowerInstance, cap: int = MAX_COMBINATIONS,
                       max_vertices: int = MAX_VERTICES) -> bool:
    """Whether some order of the shared vertices extends to a straight
    enumeration of every graph."""
    _check_size(inst, max_vertices)
    shared = inst.sorted(inst.shared_vertices)
    count = 1
    for t in range(2, len(shared) + 1):
        count *= t
    if count > cap:
        raise CapExceededError('%d shared orders exceed the cap of %d' % (count, cap), cap)
    positions = [[_positions(o) for o in brute_force_straight_enumerations(g, cap)] for g in inst.graphs]
    if any(not pos for pos in positions):
        return False
    for zeta in itertools.permutations(shared):
        if all(any(all(pos[a] <= pos[b] for a, b in zip(zeta, zeta[1:])) for pos in opts)
               for opts in positions):
            return True
    return False


def _bfs_distance(g: Graph, u, v) -> Optional[int]:
    seen = {u: 0}
    todo = deque([u])
    while todo:
        x = todo.popleft()
        if x == v:
            return seen[x]
        for w in g.neighbors(x):
            if w not in seen:
                seen[w] = seen[x] + 1
                todo.append(w)
    return None


def _bfs_path(g: Graph, u, v):
    parent = {u: None}
    todo = deque([u])
    while todo:
        x = todo.popleft()
        for w in g.neighbors(x):
            if w not in parent:
                parent[w] = x
                todo.append(w)
    path = [v]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    return tuple(path[::-1])


def _max_bar(g: Graph, order: BlockOrder, u, v) -> Tuple[int, Tuple]:
    """Largest increasing independent sequence from u to v, by search over
    successors with the best continuation memoised per vertex."""
    pos = _positions(order)
    line = [x for blk in order for x in g.sorted(blk)]
    memo = {}

    def best(x):
        if x == v:
            return 1, (v,)
        if x in memo:
            return memo[x]
        result = (0, ())
        for y in line:
            if pos[x] < pos[y] <= pos[v] and not g.has_edge(x, y):
                size, tail = best(y)
                if size and size + 1 > result[0]:
                    result = (size + 1, (x,) + tail)
        memo[x] = result
        return result

    if pos[u] >= pos[v]:
        return 0, ()
    return best(u)


def _orders_of(se) -> Sequence[BlockOrder]:
    if hasattr(se, 'enumerations'):
        return [sigma.blocks for sigma in se.enumerations]
    return se


def brute_force_conflict(inst: SunflowerInstance, se, max_vertices: int = MAX_VERTICES) -> Optional[Conflict]:
    """A chain-bar conflict with chain and bar each inside a single graph."""
    _check_size(inst, max_vertices)
    orders = _orders_of(se)
    shared = inst.sorted(inst.shared_vertices)
    for u, v in itertools.combinations(shared, 2):
        chains = [(_bfs_distance(g, u, v), i) for i, g in enumerate(inst.graphs)]
        chains = [(d + 1, i) for d, i in chains if d is not None]
        if not chains:
            continue
        chain, ci = min(chains)
        for j, (g, order) in enumerate(zip(inst.graphs, orders)):
            pos = _positions(order)
            a, b = (u, v) if pos[u] <= pos[v] else (v, u)
            size, bar = _max_bar(g, order, a, b)
            if size >= chain >= 2:
                path = _bfs_path(inst.graphs[ci], a, b)
                bar = bar[:chain - 1] + (b,)
                return Conflict(a, b, path, bar, ci, j)
    return None


def brute_force_unit(inst: SunflowerInstance, cap: int = MAX_COMBINATIONS,
                     max_vertices: int = MAX_VERTICES) -> bool:
    """Whether every union component has a conflict-free simultaneous
    enumeration."""
    _check_size(inst, max_vertices)
    for part in split_by_components(inst):
        space = brute_force_space(part, cap, max_vertices)
        if not any(brute_force_conflict(part, orders, max_vertices) is None for orders in space):
            logger.debug('component of %d vertices has no conflict-free enumeration',
                         len(union_graph(part).vertices))
            return False
    return True
