# -*- coding: utf-8 -*-
"""
Worked examples of two and three qubit states and their Majorana spinors.

Each row gives a symmetric state with its Majorana polynomial (up to scale),
its spinors, and the symmetrised product of the spinors written out in the
qubit basis. :func:`check_rows` recomputes all three from the state.
"""
import math
import collections

import numpy as np

from . import tolerances
from .state import (
    SymmetricState, FullState, expand_to_full, symmetrize, distance,
    _aligned_distance)
from .constellation import (
    MajoranaConstellation, constellation_distance, majorana_points,
    majorana_polynomial)

Row = collections.namedtuple('Row', 'label state polynomial spinors expansion')

def _qubits(**amplitudes):
    """A state from keyword bitstrings, e.g. ``_qubits(q00=1, q11=1)``."""
    n = len(next(iter(amplitudes))) - 1
    vector = np.zeros(2 ** n, dtype=complex)
    for name, amplitude in amplitudes.items():
        vector[int(name[1:], 2)] = amplitude
    return FullState(vector)

_HALF = math.sqrt(0.5)
_OMEGA = np.exp(2j * math.pi / 3.0)

ROWS = (
    Row('|1,1> + |1,-1>', SymmetricState([1, 0, 1]),
        (1, 0, 1),
        ((1, 1j), (1, -1j)),
        _qubits(q00=1, q11=1)),
    Row('|1,1> - |1,-1>', SymmetricState([1, 0, -1]),
        (-1, 0, 1),
        ((1, 1), (1, -1)),
        _qubits(q00=1, q11=-1)),
    Row('|1,0>', SymmetricState([0, 1, 0]),
        (0, 1, 0),
        ((1, 0), (0, 1)),
        _qubits(q01=1, q10=1)),
    Row('|3/2,3/2> + |3/2,-3/2>', SymmetricState([1, 0, 0, 1]),
        (1, 0, 0, -1),
        tuple((1, _OMEGA ** r) for r in range(3)),
        _qubits(q000=1, q111=1)),
    Row('|3/2,3/2> - |3/2,-3/2>', SymmetricState([1, 0, 0, -1]),
        (1, 0, 0, 1),
        tuple((1, _OMEGA ** r * np.exp(-1j * math.pi / 3.0))
            for r in range(3)),
        _qubits(q000=1, q111=-1)),
    Row('|3/2,1/2> + |3/2,-1/2>', SymmetricState([0, 1, 1, 0]),
        (0, -1, 1, 0),
        ((_HALF, _HALF), (1, 0), (0, 1)),
        _qubits(q001=1, q010=1, q100=1, q011=1, q101=1, q110=1)),
    Row('|3/2,1/2> - |3/2,-1/2>', SymmetricState([0, 1, -1, 0]),
        (0, 1, 1, 0),
        ((_HALF, -_HALF), (1, 0), (0, 1)),
        _qubits(q001=1, q010=1, q100=1, q011=-1, q101=-1, q110=-1)),
    Row('|3/2,-1/2>', SymmetricState([0, 0, 1, 0]),
        (0, 0, 1, 0),
        ((1, 0), (0, 1), (0, 1)),
        _qubits(q011=1, q101=1, q110=1)),
    )
"""The examples, one row per state, with both signs of the
|3/2,1/2> +- |3/2,-1/2> example given separately."""

RowCheck = collections.namedtuple(
    'RowCheck', 'label polynomial_error points_error expansion_error')

def _direction_error(found, expected):
    found = np.asarray(found, dtype=complex)
    expected = np.asarray(expected, dtype=complex)
    return _aligned_distance(found / np.linalg.norm(found),
        expected / np.linalg.norm(expected))

def check_row(row, cluster_tol=tolerances.CLUSTER_TOLERANCE):
    """Recompute a row, returning the error of each column."""
    polynomial_error = _direction_error(
        majorana_polynomial(row.state), row.polynomial)
    expected = MajoranaConstellation.from_spinors(row.spinors, cluster_tol)
    points_error = constellation_distance(
        majorana_points(row.state, cluster_tol), expected)
    expansion_error = max(
        distance(symmetrize(row.spinors), row.expansion),
        distance(expand_to_full(row.state), row.expansion))
    return RowCheck(row.label, polynomial_error, points_error, expansion_error)

def check_rows(cluster_tol=tolerances.CLUSTER_TOLERANCE):
    return [check_row(row, cluster_tol) for row in ROWS]

def passed(check, tolerance=tolerances.TOLERANCE):
    """Whether every error of a row check is within the tolerance."""
    return max(check.polynomial_error, check.points_error,
        check.expansion_error) <= tolerance
