from pqtree.tree import (LEAF, NULL, P, Q, PQNode, PQTree, consistent, count_orders,
                         enumerate_orders, frontier, leaf, make_node, normalize, pick_order,
                         render, universal_tree)
from pqtree.reduce import reduce, reduce_all
from pqtree.operations import intersect, projection
