"""Simultaneous unit interval recognition for sunflower instances.

A sunflower instance is a simultaneous unit interval graph iff one of its
simultaneous enumerations has no chain-bar conflict. Every such enumeration
is reached from the proper recognizer's output by reversing independent
components and reversible parts, and a conflict between two shared vertices
only depends on how their own two components are oriented. So each conflict
forbids one combination of at most two reversal decisions, which is a 2-SAT
clause.

A conflict-free enumeration is then realised by scouting, zipping and unit
placement on the sandwich graph, one union component at a time.
"""
import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Hashable, List, Optional, Tuple

import networkx as nx

from graphs.graph import Vertex
from graphs.sunflower import SunflowerInstance, restrict_instance, split_by_components, union_graph
from models.conflicts import Conflict, find_relaxed_conflict, max_bar
from models.enum_space import ComponentClassification, apply_choices, classify_components, enumerate_space
from models.orders import classify_edges, induced_partial_order
from models.proper_interval import enumeration_from_blocks, enumeration_from_representation
from models.sunflower_proper import (ProperResult, SimultaneousEnumeration, SimultaneousRepresentation,
                                     check_instance, is_simultaneous_enumeration, recognize_proper,
                                     restrict_enumeration)
from models.sweeps import sandwich_graph, scout, unit_representation_from_fine_enum, zip_order
from solver.two_sat import TwoSatFormula, solve_2sat
from utils.exceptions import InternalInvariantError, PreconditionError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class UnitResult:
    yes: bool
    enumeration: Optional[SimultaneousEnumeration] = None
    proper: Optional[ProperResult] = None
    formulas: Tuple[TwoSatFormula, ...] = ()
    reason: str = ''


def quotient_indistinguishable(inst: SunflowerInstance) -> Tuple[SunflowerInstance, Dict[Vertex, Vertex]]:
    """Merge vertices with equal closed neighbourhoods in every graph that
    holds both; the least-index vertex of each class represents it.

    A private vertex only meets shared vertices in its own graph, so it is
    merged into a shared vertex exactly when the two are twins there.
    """
    shared = inst.sorted(inst.shared_vertices)
    rep = {}
    by_key = {}
    for v in shared:
        key = ('S',) + tuple(g.closed_neighborhood(v) for g in inst.graphs)
        rep[v] = by_key.setdefault(key, v)
    twin_of = []
    for g in inst.graphs:
        seen = {}
        for s in shared:
            seen.setdefault(g.closed_neighborhood(s), rep[s])
        twin_of.append(seen)
    for v in inst.sorted(inst.vertex_order):
        if v in rep:
            continue
        h = next(i for i, g in enumerate(inst.graphs) if v in g)
        nbhd = inst.graphs[h].closed_neighborhood(v)
        if nbhd in twin_of[h]:
            rep[v] = twin_of[h][nbhd]
        else:
            rep[v] = by_key.setdefault(('P', h, nbhd), v)
    keep = [v for v in inst.sorted(rep) if rep[v] == v]
    if len(keep) < len(rep):
        logger.debug('quotient merged %d vertices', len(rep) - len(keep))
    return restrict_instance(inst, keep), rep


def _variable(classification: ComponentClassification, cid) -> Optional[Hashable]:
    if classification.components[cid].flippable:
        return 'component', cid
    part = classification.part_of(cid)
    return None if part is None else ('part', part)


def build_2sat(inst: SunflowerInstance, se: SimultaneousEnumeration,
               classification: ComponentClassification) -> TwoSatFormula:
    """One clause per combination of reversal decisions that yields a
    relaxed conflict. Every pair of shared vertices is scanned."""
    f = TwoSatFormula()
    for ref in classification.free_choices():
        f.variable(ref)
    owner = {}
    for cid, info in classification.components.items():
        for v in info.vertices:
            owner[info.graph, v] = cid

    rank = se.shared_rank()
    shared = sorted(inst.shared_vertices, key=rank.__getitem__)
    star = union_graph(inst).to_networkx()
    for a, u in enumerate(shared):
        dist = nx.single_source_shortest_path_length(star, u)
        for v in shared[a + 1:]:
            if v not in dist:
                continue
            chain = dist[v] + 1
            for j in range(inst.k):
                cu, cv = owner[j, u], owner[j, v]
                xu, xv = _variable(classification, cu), _variable(classification, cv)
                together = cu == cv or (xu is not None and xu == xv)
                flips_u = (False, True) if xu is not None else (False,)
                flips_v = (False, True) if xv is not None else (False,)
                if together:
                    combos = [(fl, fl) for fl in flips_u]
                else:
                    combos = list(itertools.product(flips_u, flips_v))
                for fu, fv in combos:
                    bar = max_bar(inst, j, se, u, v, fu, fv)
                    if bar is None:
                        bar = max_bar(inst, j, se, v, u, fv, fu)
                    if bar is None or bar < chain:
                        continue
                    lits = []
                    if xu is not None:
                        lits.append(f.literal(xu, not fu))
                    if xv is not None and xv != xu:
                        lits.append(f.literal(xv, not fv))
                    if not lits:
                        logger.debug('unavoidable conflict at (%r, %r) in G_%d', u, v, j + 1)
                        f.empty_clause = True
                    else:
                        f.add_clause(*lits)
    logger.debug('2-SAT formula: %d variables, %d clauses', len(f.variables), len(f.clauses))
    return f


def recognize_unit(inst: SunflowerInstance) -> UnitResult:
    check_instance(inst)
    proper = recognize_proper(inst)
    if not proper.yes:
        return UnitResult(False, proper=proper, reason=proper.reason)

    parts = split_by_components(inst)
    blocks = [[] for _ in inst.graphs]
    formulas = []
    for part in parts:
        se = restrict_enumeration(proper.enumeration, part)
        if len(part.shared_vertices) > 1:
            classification = classify_components(part, se)
            f = build_2sat(part, se, classification)
            formulas.append(f)
            assignment = solve_2sat(f)
            if assignment is None:
                return UnitResult(False, proper=proper, formulas=tuple(formulas),
                                  reason='every simultaneous enumeration has a conflict')
            chosen = [ref for ref in f.variables if assignment[ref]]
            se = apply_choices(se, classification, chosen)
            conflict = find_relaxed_conflict(part, se)
            if conflict is not None:
                raise InternalInvariantError('satisfying reversals left a conflict', conflict)
        for i, sigma in enumerate(se.enumerations):
            blocks[i].extend(sigma.blocks)

    sigmas = tuple(enumeration_from_blocks(g, b) for g, b in zip(inst.graphs, blocks))
    return UnitResult(True, SimultaneousEnumeration(inst, sigmas), proper, tuple(formulas))


def _layout_order(se: SimultaneousEnumeration, parts) -> List[int]:
    """Union components in an order every graph's enumeration agrees with."""
    part_of = {v: t for t, part in enumerate(parts) for v in part.vertex_order}
    dag = nx.DiGraph()
    dag.add_nodes_from(range(len(parts)))
    for sigma in se.enumerations:
        seq = [part_of[next(iter(blk))] for blk in sigma.blocks]
        for a, b in zip(seq, seq[1:]):
            if a != b:
                dag.add_edge(a, b)
    if not nx.is_directed_acyclic_graph(dag):
        logger.debug('graphs interleave union components; laying them out by index')
        return list(range(len(parts)))
    return list(nx.lexicographical_topological_sort(dag))


def _unit_component(part: SunflowerInstance, se: SimultaneousEnumeration):
    reduced, rep = quotient_indistinguishable(part)
    rse = restrict_enumeration(se, reduced)
    alpha = induced_partial_order(reduced, rse)
    edges = classify_edges(reduced, alpha)
    state = scout(reduced, rse, alpha, edges)
    if state.conflict is not None:
        raise InternalInvariantError('enumeration has a conflict', state.conflict)
    zipped = zip_order(reduced, alpha, state.order, edges)
    h = sandwich_graph(reduced, zipped.sequence, edges)
    local = unit_representation_from_fine_enum(h, zipped.sequence)
    return {v: local.intervals[rep[v]] for v in part.vertex_order}


def build_unit_representation(inst: SunflowerInstance, se: SimultaneousEnumeration,
                              gap=Fraction(1)) -> SimultaneousRepresentation:
    """Unit representation realising a conflict-free enumeration; union
    components are laid out left to right, ``gap`` apart."""
    if not is_simultaneous_enumeration(inst, se):
        raise PreconditionError('not a simultaneous enumeration of the instance')
    gap = Fraction(gap)
    parts = split_by_components(inst)
    intervals = {}
    offset = Fraction(0)
    for t in _layout_order(se, parts):
        part = parts[t]
        local = _unit_component(part, restrict_enumeration(se, part))
        shift = offset - min(l for l, _ in local.values())
        for v, (l, r) in local.items():
            intervals[v] = (l + shift, r + shift)
        offset = max(r for _, r in intervals.values()) + gap
    ordered = {v: intervals[v] for v in inst.sorted(intervals)}
    per_graph = tuple(g.vertices for g in inst.graphs)
    return SimultaneousRepresentation(ordered, per_graph, 'unit')


def realizes(inst: SunflowerInstance, rep: SimultaneousRepresentation, se: SimultaneousEnumeration) -> bool:
    """Whether each graph's left-endpoint order groups into its blocks."""
    for i, g in enumerate(inst.graphs):
        try:
            sigma = enumeration_from_representation(g, rep.view(i))
        except PreconditionError:
            return False
        if sigma.blocks != se[i].blocks:
            return False
    return True


def conflict_certificates(inst: SunflowerInstance, cap: int = 64) -> List[Tuple[SimultaneousEnumeration, Conflict]]:
    """Every enumeration of the first union component whose enumerations
    all conflict, each with its relaxed conflict; empty when there is none."""
    proper = recognize_proper(inst)
    if not proper.yes:
        return []
    for part in split_by_components(inst):
        se = restrict_enumeration(proper.enumeration, part)
        found = []
        for candidate in enumerate_space(part, se, cap):
            conflict = find_relaxed_conflict(part, candidate)
            if conflict is None:
                break
            found.append((candidate, conflict))
        else:
            if found:
                return found
    return []
