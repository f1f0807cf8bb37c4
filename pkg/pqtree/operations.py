import logging
from typing import Iterable

from pqtree.reduce import reduce
from pqtree.tree import NULL, Q, PQTree, make_node
from utils.exceptions import PQTreeError

logger = logging.getLogger(__name__)


def projection(t: PQTree, sub: Iterable) -> PQTree:
    """Restriction of every consistent order of ``t`` to ``sub``."""
    if t.is_null:
        raise PQTreeError('cannot project the NULL tree')
    keep = frozenset(sub)
    if not keep:
        raise PQTreeError('projection onto an empty set')
    if not keep <= t.ground:
        raise PQTreeError('projection set is not inside the ground set')

    def prune(node):
        if not (node.leaves & keep):
            return None
        if node.is_leaf:
            return node
        children = [c for c in (prune(c) for c in node.children) if c is not None]
        return make_node(node.kind, children)

    return PQTree(prune(t.root))


def _constraints(t: PQTree):
    for node in t.root.inner_nodes():
        yield node.leaves
        if node.kind == Q:
            for a, b in zip(node.children, node.children[1:]):
                yield a.leaves | b.leaves


def intersect(t1: PQTree, t2: PQTree) -> PQTree:
    """Tree whose consistent orders are those of both ``t1`` and ``t2``."""
    if t1.is_null or t2.is_null:
        return NULL
    if t1.ground != t2.ground:
        raise PQTreeError('intersecting trees over different ground sets')
    out = t1
    for c in _constraints(t2):
        out = reduce(out, c)
        if out.is_null:
            logger.debug('intersection became NULL at constraint of size %d', len(c))
            return NULL
    return out
