from dataclasses import replace
from fractions import Fraction

import pytest

from datasets.fixtures import squeezed_path_representation
from metrics.checker import (CONTAINMENT, EXTRA_EDGE, MISSING_EDGE, NON_UNIT_LENGTH, SHARED_MISMATCH,
                             check_representation)
from utils.exceptions import PreconditionError


def _moved(rep, v, interval):
    intervals = dict(rep.intervals)
    intervals[v] = tuple(Fraction(x) for x in interval)
    return replace(rep, intervals=intervals)


def test_squeezed_path_representation(squeezed):
    rep = squeezed_path_representation()
    report = check_representation(squeezed, rep, 'proper')
    assert report.ok
    assert report.to_json() == {'ok': True, 'mode': 'proper', 'failures': []}


def test_squeezed_path_is_not_unit_length(squeezed):
    report = check_representation(squeezed, squeezed_path_representation(), 'unit')
    assert report.kinds() == [NON_UNIT_LENGTH]


def test_missing_edge(squeezed):
    rep = _moved(squeezed_path_representation(), 'a', (1, 2))
    kinds = check_representation(squeezed, rep, 'proper').kinds()
    assert MISSING_EDGE in kinds


def test_extra_edge_only_within_one_graph(squeezed):
    # d overlaps a, b and c, but they never share a graph
    rep = _moved(squeezed_path_representation(), 'a', (0, 5))
    kinds = check_representation(squeezed, rep, 'proper').kinds()
    assert EXTRA_EDGE in kinds
    assert (EXTRA_EDGE, ('a', 'c')) in check_representation(squeezed, rep, 'proper').failures


def test_containment(squeezed):
    rep = _moved(squeezed_path_representation(), 'd', (2, 9))
    report = check_representation(squeezed, rep, 'proper')
    assert report.failures == ((CONTAINMENT, ('d', 's2')),)
    # a plain interval model is fine without the proper condition
    assert check_representation(squeezed, rep, 'unit').kinds() == [NON_UNIT_LENGTH]


def test_shared_mismatch(squeezed):
    rep = replace(squeezed_path_representation(), per_graph=(('s1', 'a', 'b', 'c', 's2'),))
    assert SHARED_MISMATCH in check_representation(squeezed, rep, 'proper').kinds()


def test_preconditions(squeezed):
    rep = squeezed_path_representation()
    intervals = dict(rep.intervals)
    del intervals['d']
    with pytest.raises(PreconditionError):
        check_representation(squeezed, replace(rep, intervals=intervals))
    with pytest.raises(PreconditionError):
        check_representation(squeezed, _moved(rep, 'd', (3, 2)))
    with pytest.raises(ValueError):
        check_representation(squeezed, rep, 'interval')
