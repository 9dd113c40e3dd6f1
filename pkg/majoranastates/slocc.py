# -*- coding: utf-8 -*-
"""
Entanglement families of symmetric states under identical local operations.

An invertible 2x2 matrix applied to every qubit moves each Majorana point by
the same Mobius map. Distinct points stay distinct and coincident points stay
coincident, so the multiplicities of the constellation, its degeneracy
configuration, label a family of states that such operations cannot leave.
For up to three distinct points the family is a single SLOCC class; beyond
that it holds a continuum of classes, which :func:`same_family` does not try
to separate.
"""
import logging
import warnings
import collections

import numpy as np

from . import tolerances
from .errors import IllConditionedWarning
from .state import apply_local, project_to_symmetric
from .constellation import majorana_points, state_from_constellation

log = logging.getLogger(__name__)

class DegeneracyConfiguration(collections.namedtuple(
        'DegeneracyConfiguration', 'multiplicities')):
    """The sorted multiplicities n1 >= n2 >= ... of a Majorana constellation.

    Any sequence of positive integers can be given; it is sorted on
    construction. The string form is the family label, e.g. ``D_{2,1}``."""
    __slots__ = ()

    def __new__(Class, multiplicities):
        multiplicities = tuple(sorted(
            (int(m) for m in multiplicities), reverse=True))
        if not multiplicities or multiplicities[-1] < 1:
            raise ValueError('multiplicities must be positive integers')
        return super(DegeneracyConfiguration, Class).__new__(
            Class, multiplicities)

    @property
    def n(self):
        """The number of qubits."""
        return sum(self.multiplicities)

    @property
    def diversity(self):
        """The number of distinct Majorana points."""
        return len(self.multiplicities)

    @property
    def label(self):
        return 'D_{{{0}}}'.format(','.join(map(str, self.multiplicities)))

    def __str__(self):
        return self.label

class LocalOperation(collections.namedtuple('LocalOperation', 'matrix')):
    """An invertible 2x2 matrix to be applied identically to every qubit.

    The matrix is held as a tuple of row tuples. A matrix whose condition
    number is beyond floating point precision counts as singular."""
    __slots__ = ()

    def __new__(Class, matrix):
        array = np.array(matrix, dtype=complex)
        if array.shape != (2, 2):
            raise ValueError('a local operation is a 2x2 matrix')
        if not np.all(np.isfinite(array)):
            raise ValueError('local operation has non-finite entries')
        if np.linalg.det(array) == 0 or \
                np.linalg.cond(array) > 1.0 / np.finfo(float).eps:
            raise ValueError('local operation is singular')
        return super(LocalOperation, Class).__new__(
            Class, tuple(tuple(complex(x) for x in row) for row in array))

    @property
    def array(self):
        """The matrix as a new numpy array."""
        return np.array(self.matrix)

    @property
    def determinant(self):
        return complex(np.linalg.det(self.array))

    @property
    def condition(self):
        """The 2-norm condition number of the matrix."""
        return float(np.linalg.cond(self.array))

    def inverse(self):
        return LocalOperation(np.linalg.inv(self.array))

def _operation(matrix):
    if isinstance(matrix, LocalOperation):
        return matrix
    return LocalOperation(matrix)

def _check_condition(operation):
    condition = operation.condition
    if condition > tolerances.CONDITION_WARNING:
        log.warning('local operation has condition number %.3g', condition)
        warnings.warn(
            'local operation is ill-conditioned (condition number '
            '{0:.3g}); results may be inaccurate'.format(condition),
            IllConditionedWarning, stacklevel=3)

def classify(state, tolerance=tolerances.CLUSTER_TOLERANCE):
    """The degeneracy configuration of a symmetric state.

    Points of the Majorana constellation closer than the chordal
    ``tolerance`` are counted as one point."""
    configuration = DegeneracyConfiguration(
        majorana_points(state, cluster_tol=tolerance).multiplicities)
    log.debug('classified %d qubit state as %s', state.n, configuration)
    return configuration

def apply_ilo(state, matrix, cluster_tol=tolerances.CLUSTER_TOLERANCE):
    """Apply the same invertible operation to every qubit of the state.

    Arguments:

    ``matrix``
        A :class:`LocalOperation` or anything convertible to one. Operations
        with a condition number above
        :data:`~majoranastates.tolerances.CONDITION_WARNING` give an
        :class:`~majoranastates.errors.IllConditionedWarning` but are still
        applied.

    The constellation is transformed point by point and the renormalised
    state rebuilt from it.
    """
    operation = _operation(matrix)
    _check_condition(operation)
    constellation = majorana_points(state, cluster_tol=cluster_tol)
    return state_from_constellation(constellation.mobius(operation.array))

def apply_ilo_dense(state, matrix):
    """Apply the operation through the full 2^N dimensional tensor power.

    Gives the same state as :func:`apply_ilo`, at exponential cost."""
    operation = _operation(matrix)
    _check_condition(operation)
    return project_to_symmetric(apply_local(state, operation.array))[0]

def same_family(first, second, tolerance=tolerances.CLUSTER_TOLERANCE):
    """Check whether two states have the same degeneracy configuration.

    This is necessary for SLOCC equivalence and, for configurations with
    at most three distinct points, sufficient. With four or more distinct
    points equal configurations do not imply equivalence."""
    if first.n != second.n:
        raise ValueError('states have different qubit counts')
    return classify(first, tolerance) == classify(second, tolerance)

def degeneracy_configurations(n):
    """Every degeneracy configuration of n qubits.

    These are the partitions of n, from the product family ``D_{n}`` down
    to ``D_{1,...,1}``."""
    if n < 1:
        raise ValueError('a state needs at least one qubit')

    def _partitions(remaining, largest):
        if remaining == 0:
            yield ()
            return
        for part in range(min(remaining, largest), 0, -1):
            for rest in _partitions(remaining - part, part):
                yield (part,) + rest

    return [DegeneracyConfiguration(parts) for parts in _partitions(n, n)]
