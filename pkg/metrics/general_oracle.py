"""Exact representability for general simultaneous instances.

Every pair of vertices that meet in some graph gets an orientation literal,
and each orientation switches on difference constraints between endpoints.
Strict bounds are scaled so that with V variables a strict inequality costs
one unit (an epsilon of 1 / (V + 1) suffices), which keeps every bound
integral: a feasible orientation then has an integer solution within
V * (V + 2), so the CP-SAT model over bounded integers is exact. The
orientation it returns is confirmed by a negative-cycle check in networkx.
"""
import itertools
import logging
from typing import Dict, Sequence, Tuple

import networkx as nx
from ortools.sat.python import cp_model

from graphs.graph import Graph
from utils.exceptions import CapExceededError

logger = logging.getLogger(__name__)

MAX_CONFLICTS = 200000


def _orientation_edges(mode, index, u, v, adjacent, scale):
    """Constraint edges for u placed before v, endpoints scaled by ``scale``
    so that a strict bound costs exactly one unit. (i, j, w) reads
    x_j - x_i <= w."""
    if mode == 'unit':
        lu, lv = index[u], index[v]
        edges = [(lv, lu, -1)]
        if adjacent:
            edges.append((lu, lv, scale))
        else:
            edges.append((lv, lu, -scale - 1))
        return edges
    lu, ru = 2 * index[u], 2 * index[u] + 1
    lv, rv = 2 * index[v], 2 * index[v] + 1
    edges = [(lv, lu, -1), (rv, ru, -1)]
    if adjacent:
        edges.append((ru, lv, 0))
    else:
        edges.append((lv, ru, -1))
    return edges


def general_simultaneous_representable(graphs: Sequence[Graph], mode: str = 'proper',
                                       cap: int = MAX_CONFLICTS) -> bool:
    """Whether the graphs have simultaneous proper (or unit) interval
    representations giving each vertex one interval.

    ``cap`` bounds the solver's conflicts; an undecided search raises
    ``CapExceededError``.
    """
    if mode not in ('proper', 'unit'):
        raise ValueError('unknown mode %r' % (mode,))
    vertices = []
    index = {}
    for g in graphs:
        for v in g.vertices:
            if v not in index:
                index[v] = len(vertices)
                vertices.append(v)

    relation: Dict[Tuple, bool] = {}
    for g in graphs:
        for u, v in itertools.combinations(g.vertices, 2):
            key = (u, v) if index[u] < index[v] else (v, u)
            adjacent = g.has_edge(u, v)
            if relation.setdefault(key, adjacent) != adjacent:
                logger.debug('%r and %r are adjacent in one graph only', *key)
                return False
    pairs = sorted(relation, key=lambda p: (index[p[0]], index[p[1]]))

    n_vars = len(vertices) if mode == 'unit' else 2 * len(vertices)
    scale = n_vars + 1
    model = cp_model.CpModel()
    x = [model.NewIntVar(0, n_vars * (scale + 1), 'x%d' % i) for i in range(n_vars)]
    if mode == 'proper':
        for i in range(len(vertices)):
            # l <= r
            model.Add(x[2 * i] <= x[2 * i + 1])
    before = []
    for a, b in pairs:
        lit = model.NewBoolVar('%s<%s' % (a, b))
        for i, j, w in _orientation_edges(mode, index, a, b, relation[(a, b)], scale):
            model.Add(x[j] - x[i] <= w).OnlyEnforceIf(lit)
        for i, j, w in _orientation_edges(mode, index, b, a, relation[(a, b)], scale):
            model.Add(x[j] - x[i] <= w).OnlyEnforceIf(lit.Not())
        before.append(lit)

    solver = cp_model.CpSolver()
    solver.parameters.num_workers = 1
    solver.parameters.max_number_of_conflicts = cap
    status = solver.Solve(model)
    logger.debug('general oracle: %d pairs, solver status %d', len(pairs), status)
    if status == cp_model.INFEASIBLE:
        return False
    if status not in (cp_model.OPTIMAL, cp_model.FEASIBLE):
        raise CapExceededError('orientation search undecided after %d conflicts' % cap, cap)
    orientation = [(a, b) if solver.BooleanValue(lit) else (b, a) for (a, b), lit in zip(pairs, before)]
    return _confirm(mode, index, relation, orientation, scale, n_vars)


def _confirm(mode, index, relation, orientation, scale, n_vars) -> bool:
    dg = nx.DiGraph()
    dg.add_nodes_from(range(n_vars))
    edges = []
    if mode == 'proper':
        edges.extend((2 * i + 1, 2 * i, 0) for i in range(n_vars // 2))
    for u, v in orientation:
        key = (u, v) if index[u] < index[v] else (v, u)
        edges.extend(_orientation_edges(mode, index, u, v, relation[key], scale))
    for i, j, w in edges:
        if dg.has_edge(i, j):
            w = min(w, dg[i][j]['weight'])
        dg.add_edge(i, j, weight=w)
    return not nx.negative_edge_cycle(dg, weight='weight')


def betweenness_satisfiable(bw) -> bool:
    """Exhaustive search over all orders of the ground set."""
    return any(bw.satisfied_by(order) for order in itertools.permutations(bw.ground))
