"""Template reduction: restrict a PQ-tree to orders where a set is consecutive.

Works top-down: locate the pertinent root (deepest node whose leaves cover
the constraint), then rebuild it from the partial sequences of its children.
A partial sequence is a child list ordered from the empty side to the full
side. Any failed template means the constraint cannot be satisfied.
"""
from typing import Iterable, List

from pqtree.tree import LEAF, NULL, P, Q, PQNode, PQTree, make_node
from utils.exceptions import PQTreeError

EMPTY, PARTIAL, FULL = 0, 1, 2


class _Fail(Exception):
    pass


def _status(node: PQNode, s) -> int:
    hit = len(node.leaves & s)
    if hit == 0:
        return EMPTY
    if hit == len(node.leaves):
        return FULL
    return PARTIAL


def _group(nodes: List[PQNode]) -> PQNode:
    return make_node(P, nodes)


def _partial_sequence(node: PQNode, s) -> List[PQNode]:
    statuses = [_status(c, s) for c in node.children]
    if node.kind == P:
        partials = [c for c, st in zip(node.children, statuses) if st == PARTIAL]
        if len(partials) > 1:
            raise _Fail()
        empties = [c for c, st in zip(node.children, statuses) if st == EMPTY]
        fulls = [c for c, st in zip(node.children, statuses) if st == FULL]
        seq = []
        if empties:
            seq.append(_group(empties))
        if partials:
            seq.extend(_partial_sequence(partials[0], s))
        if fulls:
            seq.append(_group(fulls))
        return seq

    children = list(node.children)
    if not _q_pattern(statuses):
        statuses.reverse()
        children.reverse()
        if not _q_pattern(statuses):
            raise _Fail()
    seq = []
    for c, st in zip(children, statuses):
        if st == PARTIAL:
            seq.extend(_partial_sequence(c, s))
        else:
            seq.append(c)
    return seq


def _q_pattern(statuses) -> bool:
    # E* Pa? F*
    i, n = 0, len(statuses)
    while i < n and statuses[i] == EMPTY:
        i += 1
    if i < n and statuses[i] == PARTIAL:
        i += 1
    while i < n and statuses[i] == FULL:
        i += 1
    return i == n


def _reduce_root(node: PQNode, s) -> PQNode:
    statuses = [_status(c, s) for c in node.children]
    if all(st == FULL for st in statuses):
        return node

    if node.kind == P:
        empties = [c for c, st in zip(node.children, statuses) if st == EMPTY]
        fulls = [c for c, st in zip(node.children, statuses) if st == FULL]
        partials = [c for c, st in zip(node.children, statuses) if st == PARTIAL]
        if len(partials) > 2:
            raise _Fail()
        if not partials:
            return make_node(P, empties + [_group(fulls)])
        seq = list(_partial_sequence(partials[0], s))
        if fulls:
            seq.append(_group(fulls))
        if len(partials) == 2:
            seq.extend(reversed(_partial_sequence(partials[1], s)))
        q = make_node(Q, seq)
        return make_node(P, empties + [q]) if empties else q

    touched = [i for i, st in enumerate(statuses) if st != EMPTY]
    a, b = touched[0], touched[-1]
    if b - a + 1 != len(touched):
        raise _Fail()
    for i in range(a + 1, b):
        if statuses[i] != FULL:
            raise _Fail()
    seq = list(node.children[:a])
    if statuses[a] == PARTIAL:
        seq.extend(_partial_sequence(node.children[a], s))
    else:
        seq.append(node.children[a])
    seq.extend(node.children[a + 1:b])
    if statuses[b] == PARTIAL:
        seq.extend(reversed(_partial_sequence(node.children[b], s)))
    else:
        seq.append(node.children[b])
    seq.extend(node.children[b + 1:])
    return make_node(Q, seq)


def _reduce_node(node: PQNode, s) -> PQNode:
    anchor = next(iter(s))
    for i, c in enumerate(node.children):
        if anchor in c.leaves:
            if s <= c.leaves and c.kind != LEAF:
                new_child = _reduce_node(c, s)
                if new_child is c:
                    return node
                children = node.children[:i] + (new_child,) + node.children[i + 1:]
                return make_node(node.kind, children)
            break
    return _reduce_root(node, s)


def reduce(t: PQTree, c: Iterable) -> PQTree:
    """Keep exactly the consistent orders in which ``c`` is consecutive."""
    if t.is_null:
        return t
    s = frozenset(c)
    if not s <= t.ground:
        raise PQTreeError('constraint has elements outside the ground set: %s'
                          % sorted(map(str, s - t.ground)))
    if len(s) <= 1 or s == t.ground:
        return t
    try:
        root = _reduce_node(t.root, s)
    except _Fail:
        return NULL
    return PQTree(root)


def reduce_all(t: PQTree, constraints: Iterable[Iterable]) -> PQTree:
    for c in constraints:
        t = reduce(t, c)
        if t.is_null:
            break
    return t
