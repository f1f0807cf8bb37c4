"""PQ-tree values.

Nodes are immutable; every operation returns a new tree. A P-node allows any
permutation of its children, a Q-node only the given order or its reverse.
Normalized trees have no inner node with one child and no Q-node with two
children (those are stored as P-nodes).
"""
import itertools
import math
from dataclasses import dataclass, field
from typing import FrozenSet, Hashable, Iterable, List, Optional, Sequence, Tuple

from utils.exceptions import CapExceededError, PQTreeError

LEAF, P, Q = 'leaf', 'P', 'Q'


@dataclass(frozen=True)
class PQNode:
    kind: str
    children: Tuple['PQNode', ...] = ()
    label: Hashable = None
    leaves: FrozenSet = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.kind == LEAF:
            leaves = frozenset((self.label,))
        else:
            leaves = frozenset().union(*(c.leaves for c in self.children))
        object.__setattr__(self, 'leaves', leaves)

    @property
    def is_leaf(self):
        return self.kind == LEAF

    def frontier(self):
        if self.kind == LEAF:
            return [self.label]
        out = []
        for c in self.children:
            out.extend(c.frontier())
        return out

    def inner_nodes(self):
        if self.kind == LEAF:
            return
        yield self
        for c in self.children:
            yield from c.inner_nodes()

    def __str__(self):
        if self.kind == LEAF:
            return str(self.label)
        return '%s(%s)' % (self.kind, ', '.join(str(c) for c in self.children))


def leaf(label) -> PQNode:
    return PQNode(LEAF, (), label)


def make_node(kind, children: Sequence[PQNode]) -> PQNode:
    """Build an inner node in normal form."""
    children = tuple(children)
    if not children:
        raise PQTreeError('inner node without children')
    if len(children) == 1:
        return children[0]
    if kind == Q and len(children) == 2:
        kind = P
    return PQNode(kind, children)


@dataclass(frozen=True)
class PQTree:
    root: Optional[PQNode]

    @property
    def is_null(self):
        return self.root is None

    @property
    def ground(self) -> FrozenSet:
        return frozenset() if self.root is None else self.root.leaves

    def __str__(self):
        return render(self)


NULL = PQTree(None)


def universal_tree(ground: Iterable) -> PQTree:
    items = list(ground)
    if not items:
        raise PQTreeError('empty ground set')
    if len(set(items)) != len(items):
        raise PQTreeError('ground set has repeated elements')
    return PQTree(make_node(P, [leaf(x) for x in items]))


def normalize(t: PQTree) -> PQTree:
    if t.is_null:
        return t

    def walk(node):
        if node.is_leaf:
            return node
        return make_node(node.kind, [walk(c) for c in node.children])

    return PQTree(walk(t.root))


def render(t: PQTree) -> str:
    return 'NULL' if t.is_null else str(t.root)


def pick_order(t: PQTree) -> Tuple:
    if t.is_null:
        raise PQTreeError('NULL tree has no consistent order')
    return tuple(t.root.frontier())


frontier = pick_order


def consistent(t: PQTree, sigma: Sequence) -> bool:
    sigma = tuple(sigma)
    if t.is_null:
        return False
    if len(set(sigma)) != len(sigma) or set(sigma) != t.ground:
        raise PQTreeError('order is not a permutation of the ground set')
    pos = {x: i for i, x in enumerate(sigma)}

    def span(node):
        # (lo, hi) of the node's leaf positions, or None when not consecutive
        if node.is_leaf:
            p = pos[node.label]
            return p, p
        spans = []
        for c in node.children:
            s = span(c)
            if s is None:
                return None
            spans.append(s)
        lo = min(s[0] for s in spans)
        hi = max(s[1] for s in spans)
        if hi - lo + 1 != len(node.leaves):
            return None
        if node.kind == Q:
            starts = [s[0] for s in spans]
            if starts != sorted(starts) and starts != sorted(starts, reverse=True):
                return None
        return lo, hi

    return span(t.root) is not None


def count_orders(t: PQTree) -> int:
    if t.is_null:
        return 0

    def count(node):
        if node.is_leaf:
            return 1
        own = math.factorial(len(node.children)) if node.kind == P else 2
        for c in node.children:
            own *= count(c)
        return own

    return count(t.root)


def enumerate_orders(t: PQTree, cap: int = 5040) -> List[Tuple]:
    """All consistent orders; refuses trees with more than ``cap`` of them."""
    if t.is_null:
        return []
    total = count_orders(t)
    if total > cap:
        raise CapExceededError('tree has %d consistent orders (cap %d)' % (total, cap), cap)

    def orders(node):
        if node.is_leaf:
            return [(node.label,)]
        child_orders = [orders(c) for c in node.children]
        if node.kind == P:
            arrangements = itertools.permutations(range(len(node.children)))
        else:
            n = len(node.children)
            arrangements = [tuple(range(n)), tuple(reversed(range(n)))]
        out = []
        for arr in arrangements:
            for combo in itertools.product(*(child_orders[i] for i in arr)):
                out.append(tuple(itertools.chain.from_iterable(combo)))
        return out

    return orders(t.root)
