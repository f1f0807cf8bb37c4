"""2-SAT through the implication graph.

Literals are non-zero integers: ``v + 1`` for variable ``v`` and its negation
for the complement. A formula is unsatisfiable iff some literal shares a
strongly connected component with its complement; otherwise a literal is set
true when its component comes after its complement's in topological order.
"""
import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, Hashable, List, Optional, Tuple

import networkx as nx

logger = logging.getLogger(__name__)


@dataclass
class TwoSatFormula:
    variables: List[Hashable] = field(default_factory=list)
    clauses: List[Tuple[int, int]] = field(default_factory=list)
    # set when a forbidden combination involved no free variable at all
    empty_clause: bool = False

    def variable(self, ref: Hashable) -> int:
        """Positive literal of ``ref``, declaring it on first use."""
        try:
            return self.variables.index(ref) + 1
        except ValueError:
            self.variables.append(ref)
            return len(self.variables)

    def literal(self, ref: Hashable, value: bool) -> int:
        lit = self.variables.index(ref) + 1
        return lit if value else -lit

    def add_clause(self, a: int, b: Optional[int] = None):
        n = len(self.variables)
        for lit in (a, b):
            if lit is not None and not (lit != 0 and abs(lit) <= n):
                raise ValueError('literal %r references no declared variable' % (lit,))
        clause = (a, a if b is None else b)
        if clause not in self.clauses and clause[::-1] not in self.clauses:
            self.clauses.append(clause)

    def satisfied_by(self, assignment: Dict[Hashable, bool]) -> bool:
        if self.empty_clause:
            return False

        def value(lit):
            v = assignment[self.variables[abs(lit) - 1]]
            return v if lit > 0 else not v

        return all(value(a) or value(b) for a, b in self.clauses)


def implication_graph(f: TwoSatFormula) -> nx.DiGraph:
    g = nx.DiGraph()
    for v in range(1, len(f.variables) + 1):
        g.add_node(v)
        g.add_node(-v)
    for a, b in f.clauses:
        g.add_edge(-a, b)
        g.add_edge(-b, a)
    return g


def solve_2sat(f: TwoSatFormula) -> Optional[Dict[Hashable, bool]]:
    """A satisfying assignment keyed by variable, or None when unsatisfiable."""
    if f.empty_clause:
        return None
    g = implication_graph(f)
    cond = nx.condensation(g)
    comp = cond.graph['mapping']
    for v in range(1, len(f.variables) + 1):
        if comp[v] == comp[-v]:
            logger.debug('2-SAT: x%d and its complement are equivalent', v)
            return None
    topo = {c: i for i, c in enumerate(nx.lexicographical_topological_sort(cond))}
    return {ref: topo[comp[i + 1]] > topo[comp[-(i + 1)]] for i, ref in enumerate(f.variables)}


def solve_exhaustive(f: TwoSatFormula) -> Optional[Dict[Hashable, bool]]:
    """Reference solver trying every assignment in order."""
    if f.empty_clause:
        return None
    for values in itertools.product((False, True), repeat=len(f.variables)):
        assignment = dict(zip(f.variables, values))
        if f.satisfied_by(assignment):
            return assignment
    return None
