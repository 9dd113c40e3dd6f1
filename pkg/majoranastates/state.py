# -*- coding: utf-8 -*-
"""
Pure states of N qubits and the basis changes between them.

Symmetric states are held as their N+1 Dicke-basis coefficients, general
states as their 2^N computational-basis amplitudes. The Dicke coefficient
``c[l]`` multiplies the equal superposition of all bitstrings with ``l``
qubits in |1>, and qubit 1 is the most significant bit of a computational
index, so ``|0,1,1>`` is amplitude 3 of a three qubit state.

All state classes are immutable, normalised, and carry a canonical global
phase: the first component larger than
:data:`~majoranastates.tolerances.PHASE_CUTOFF` is real and positive.
"""
import math
import cmath
import functools
import itertools
import collections

import numpy as np
from scipy.special import comb

from . import tolerances
from .errors import NumericalError

# ----------------------------------------------------------------------------
# Internals.
# ----------------------------------------------------------------------------

def _canonical(vector, cutoff=tolerances.PHASE_CUTOFF):
    """Normalise the given vector and rotate it into the canonical phase."""
    vector = np.array(vector, dtype=complex).ravel()
    norm = np.linalg.norm(vector)
    if not (norm > 0.0 and np.isfinite(norm)):
        raise NumericalError('cannot normalise a zero or non-finite vector')
    vector /= norm
    magnitudes = np.abs(vector)
    candidates = np.flatnonzero(magnitudes > cutoff)
    first = candidates[0] if len(candidates) else int(np.argmax(magnitudes))
    vector *= magnitudes[first] / vector[first]
    vector[first] = magnitudes[first]
    return vector

def _root_binomials(n):
    """The square roots of the binomial coefficients C(n, 0..n)."""
    return np.sqrt(comb(n, np.arange(n + 1)))

@functools.lru_cache(maxsize=None)
def _weights(n):
    """Hamming weight of every computational index of n qubits."""
    indices = np.arange(2 ** n)
    weights = np.zeros(2 ** n, dtype=int)
    for bit in range(n):
        weights += (indices >> bit) & 1
    weights.setflags(write=False)
    return weights

@functools.lru_cache(maxsize=None)
def dicke_columns(k):
    """The k qubit Dicke states as the columns of a 2^k x (k+1) matrix."""
    weights = _weights(k)
    columns = np.zeros((2 ** k, k + 1))
    columns[np.arange(2 ** k), weights] = 1.0
    columns /= _root_binomials(k)
    columns.setflags(write=False)
    return columns

def _full(state):
    """A computational-basis view of either kind of state."""
    if isinstance(state, SymmetricState):
        return expand_to_full(state)
    return state

def _aligned_distance(u, v):
    """min over phases of |e^(i phi) u - v| for unit vectors u and v."""
    inner = np.vdot(u, v)
    phase = inner / abs(inner) if abs(inner) > 0.0 else 1.0
    return float(np.linalg.norm(phase * u - v))

# ----------------------------------------------------------------------------
# Single qubit states.
# ----------------------------------------------------------------------------

class Spinor(collections.namedtuple('Spinor', 'a b')):
    """The single qubit state a|0> + b|1>.

    The components are normalised and phase-canonical on construction, so
    two spinors that differ by a global phase compare equal."""
    __slots__ = ()

    def __new__(Class, a, b):
        a, b = _canonical((a, b))
        return super(Spinor, Class).__new__(Class, complex(a), complex(b))

    @classmethod
    def from_angles(Class, alpha, beta):
        """The spinor pointing along the sphere direction (alpha, beta).

        This is cos(beta/2) e^(-i alpha/2) |0> + sin(beta/2) e^(i alpha/2) |1>,
        so beta = 0 is |0> and beta = pi is |1>."""
        return Class(
            math.cos(beta / 2.0) * cmath.exp(-0.5j * alpha),
            math.sin(beta / 2.0) * cmath.exp(0.5j * alpha))

    @property
    def angles(self):
        """The (alpha, beta) sphere direction; alpha is 0 at the poles."""
        beta = 2.0 * math.atan2(abs(self.b), abs(self.a))
        if min(abs(self.a), abs(self.b)) <= tolerances.PHASE_CUTOFF:
            return 0.0, beta
        alpha = (cmath.phase(self.b) - cmath.phase(self.a)) % (2.0 * math.pi)
        return alpha, beta

    @property
    def vector(self):
        return np.array([self.a, self.b])

    def is_approximately(self, other, tolerance=tolerances.TOLERANCE):
        """Check if the given spinor is the same state up to a phase."""
        other = np.asarray(other, dtype=complex)
        return _aligned_distance(
            self.vector, other / np.linalg.norm(other)) <= tolerance

# ----------------------------------------------------------------------------
# Many qubit states.
# ----------------------------------------------------------------------------

class SymmetricState(collections.namedtuple('SymmetricState', 'coefficients')):
    """A permutation-symmetric state of N qubits.

    The N+1 coefficients are the amplitudes on the Dicke states, ``c[l]``
    being the amplitude on the Dicke state with ``l`` excitations. Any
    non-zero sequence can be given; it is normalised and its phase made
    canonical."""
    __slots__ = ()

    def __new__(Class, coefficients):
        vector = _canonical(coefficients)
        if vector.size < 2:
            raise ValueError('a symmetric state needs at least one qubit')
        return super(SymmetricState, Class).__new__(
            Class, tuple(complex(c) for c in vector))

    @property
    def n(self):
        """The number of qubits."""
        return len(self.coefficients) - 1

    @property
    def vector(self):
        """The coefficients as a new numpy array."""
        return np.array(self.coefficients)

    def is_approximately(self, other, tolerance=tolerances.TOLERANCE):
        """Check if the given state is this one up to a global phase."""
        return distance(self, other) <= tolerance

class FullState(collections.namedtuple('FullState', 'amplitudes')):
    """A general state of N qubits in the computational basis.

    Dense vectors are limited to
    :data:`~majoranastates.tolerances.MAX_QUBITS` qubits."""
    __slots__ = ()

    def __new__(Class, amplitudes):
        vector = _canonical(amplitudes)
        n = vector.size.bit_length() - 1
        if n < 1 or 2 ** n != vector.size:
            raise ValueError('amplitude count must be a power of two')
        if n > tolerances.MAX_QUBITS:
            raise ValueError('too many qubits for a dense state')
        return super(FullState, Class).__new__(
            Class, tuple(complex(c) for c in vector))

    @property
    def n(self):
        """The number of qubits."""
        return len(self.amplitudes).bit_length() - 1

    @property
    def vector(self):
        """The amplitudes as a new numpy array."""
        return np.array(self.amplitudes)

    @property
    def tensor(self):
        """The amplitudes with one axis of length two per qubit."""
        return self.vector.reshape((2,) * self.n)

    def is_approximately(self, other, tolerance=tolerances.TOLERANCE):
        """Check if the given state is this one up to a global phase."""
        return distance(self, other) <= tolerance

# ----------------------------------------------------------------------------
# Density matrices.
# ----------------------------------------------------------------------------

SYMMETRIC = 'symmetric'
"""Basis tag for a matrix on the k+1 Dicke states of k qubits."""

COMPUTATIONAL = 'computational'
"""Basis tag for a matrix on the 2^k computational states of k qubits."""

class DensityMatrix(object):
    """A Hermitian, positive semidefinite, unit trace matrix of k qubits.

    Arguments:

    ``matrix``
        The square matrix of entries, of size k+1 in the symmetric basis
        or 2^k in the computational basis.

    ``basis``
        Either ``SYMMETRIC`` or ``COMPUTATIONAL``.

    ``tolerance``
        How far the entries may be from satisfying the density matrix
        conditions. Within it, the stored matrix is made exactly Hermitian.
    """
    __slots__ = ('matrix', 'basis', 'k')

    def __init__(self, matrix, basis=COMPUTATIONAL,
                 tolerance=tolerances.TOLERANCE):
        matrix = np.array(matrix, dtype=complex)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise ValueError('a density matrix must be square')
        dim = matrix.shape[0]
        if basis == SYMMETRIC:
            k = dim - 1
        elif basis == COMPUTATIONAL:
            k = dim.bit_length() - 1
            if 2 ** k != dim:
                raise ValueError('computational dimension must be a power of two')
        else:
            raise ValueError('unknown basis {0!r}'.format(basis))
        if k < 1:
            raise ValueError('a density matrix needs at least one qubit')
        if np.max(np.abs(matrix - matrix.conj().T)) > tolerance:
            raise ValueError('density matrix is not Hermitian')
        matrix = (matrix + matrix.conj().T) / 2.0
        if abs(np.trace(matrix) - 1.0) > tolerance:
            raise ValueError('density matrix does not have unit trace')
        if np.linalg.eigvalsh(matrix)[0] < -tolerance:
            raise ValueError('density matrix is not positive semidefinite')
        matrix.setflags(write=False)
        self.matrix = matrix
        self.basis = basis
        self.k = k

    @classmethod
    def from_pure(Class, state):
        """The projector onto the given pure state."""
        if isinstance(state, SymmetricState):
            vector, basis = state.vector, SYMMETRIC
        else:
            vector, basis = state.vector, COMPUTATIONAL
        return Class(np.outer(vector, vector.conj()), basis)

    @property
    def dim(self):
        return self.matrix.shape[0]

    @property
    def eigenvalues(self):
        """Eigenvalues in ascending order."""
        return np.linalg.eigvalsh(self.matrix)

    def rank(self, tolerance=tolerances.RANK_TOLERANCE):
        """The number of eigenvalues larger than the tolerance."""
        return int(np.sum(self.eigenvalues > tolerance))

    def to_computational(self):
        """This matrix expressed in the 2^k computational basis."""
        if self.basis == COMPUTATIONAL:
            return self
        columns = dicke_columns(self.k)
        return DensityMatrix(
            columns @ self.matrix @ columns.T, COMPUTATIONAL)

    def distance(self, other):
        """The Frobenius distance to another matrix of the same qubits."""
        if self.k != other.k:
            raise ValueError('density matrices have different qubit counts')
        if self.basis == other.basis:
            difference = self.matrix - other.matrix
        else:
            difference = (self.to_computational().matrix -
                other.to_computational().matrix)
        return float(np.linalg.norm(difference))

    def is_approximately(self, other, tolerance=tolerances.TOLERANCE):
        """Check if the given density matrix is within a Frobenius tolerance."""
        return self.distance(other) <= tolerance

    def __repr__(self):
        return 'DensityMatrix({0}, k={1})'.format(self.basis, self.k)

# ----------------------------------------------------------------------------
# Constructors.
# ----------------------------------------------------------------------------

def dicke_state(n, l):
    """The Dicke state of n qubits with l of them excited to |1>."""
    if n < 1:
        raise ValueError('a state needs at least one qubit')
    if not 0 <= l <= n:
        raise ValueError('excitation index out of range')
    coefficients = np.zeros(n + 1)
    coefficients[l] = 1.0
    return SymmetricState(coefficients)

def ghz_state(n):
    """The n qubit GHZ state (|0...0> + |1...1>)/sqrt(2)."""
    if n < 2:
        raise ValueError('a GHZ state needs at least two qubits')
    coefficients = np.zeros(n + 1)
    coefficients[0] = coefficients[n] = math.sqrt(0.5)
    return SymmetricState(coefficients)

def random_symmetric_state(n, rng=None, vanishing=0):
    """A symmetric state with Gaussian random coefficients.

    The last ``vanishing`` coefficients are set to zero, which gives the
    state that many Majorana points at |0>."""
    rng = np.random.default_rng() if rng is None else rng
    if not 0 <= vanishing <= n:
        raise ValueError('cannot zero more coefficients than qubits')
    coefficients = rng.normal(size=n + 1) + 1j * rng.normal(size=n + 1)
    coefficients[n + 1 - vanishing:] = 0.0
    return SymmetricState(coefficients)

def random_full_state(n, rng=None):
    """A Haar random state of n qubits."""
    rng = np.random.default_rng() if rng is None else rng
    return FullState(rng.normal(size=2 ** n) + 1j * rng.normal(size=2 ** n))

# ----------------------------------------------------------------------------
# Conversions and comparisons.
# ----------------------------------------------------------------------------

def expand_to_full(state):
    """Express a symmetric state in the 2^N computational basis."""
    n = state.n
    if n > tolerances.MAX_QUBITS:
        raise ValueError('too many qubits to expand into a dense state')
    weights = _weights(n)
    return FullState(state.vector[weights] / _root_binomials(n)[weights])

def project_to_symmetric(state, tolerance=tolerances.TOLERANCE):
    """Project a computational-basis state onto the symmetric subspace.

    Returns the normalised projection and the norm of the discarded,
    non-symmetric part, which is zero exactly when the state was already
    symmetric. A state with no symmetric component at all, such as the
    two qubit singlet, raises ``NumericalError``.
    """
    n = state.n
    vector = state.vector
    weights = _weights(n)
    sums = (np.bincount(weights, weights=vector.real, minlength=n + 1) +
        1j * np.bincount(weights, weights=vector.imag, minlength=n + 1))
    coefficients = sums / _root_binomials(n)
    if np.linalg.norm(coefficients) ** 2 <= tolerance:
        raise NumericalError('state has no permutation-symmetric component')
    projected = coefficients[weights] / _root_binomials(n)[weights]
    residual = float(np.linalg.norm(vector - projected))
    return SymmetricState(coefficients), residual

def overlap(x, y):
    """The inner product <x|y> of two states of the same qubits.

    Symmetric and computational states can be mixed freely."""
    if x.n != y.n:
        raise ValueError('states have different qubit counts')
    if isinstance(x, SymmetricState) and isinstance(y, SymmetricState):
        return complex(np.vdot(x.vector, y.vector))
    return complex(np.vdot(_full(x).vector, _full(y).vector))

def distance(x, y):
    """Euclidean distance between two states after aligning global phase."""
    if x.n != y.n:
        raise ValueError('states have different qubit counts')
    if isinstance(x, SymmetricState) and isinstance(y, SymmetricState):
        return _aligned_distance(x.vector, y.vector)
    return _aligned_distance(_full(x).vector, _full(y).vector)

def symmetrize(spinors, method='polynomial'):
    """The normalised symmetrisation of the product of the given spinors.

    Arguments:

    ``spinors``
        A sequence of :class:`Spinor` instances or (a, b) pairs, one per
        qubit. The result does not depend on their order.

    ``method``
        ``'polynomial'`` multiplies out the binary form prod(a_i + b_i t),
        whose t^l coefficient is proportional to ``c[l] * sqrt(C(N, l))``.
        ``'permutation'`` sums the tensor product over all N! qubit
        orderings; it is exponentially slow and exists as a check.
    """
    spinors = [s if isinstance(s, Spinor) else Spinor(*s) for s in spinors]
    n = len(spinors)
    if n == 0:
        raise ValueError('at least one spinor is needed')

    if method == 'polynomial':
        form = np.ones(1, dtype=complex)
        for spinor in spinors:
            form = np.convolve(form, [spinor.a, spinor.b])
        return SymmetricState(form / _root_binomials(n))
    elif method == 'permutation':
        if n > tolerances.MAX_QUBITS:
            raise ValueError('too many qubits for a dense symmetrisation')
        product = functools.reduce(
            np.multiply.outer, [spinor.vector for spinor in spinors])
        total = sum(
            np.transpose(product, order)
            for order in itertools.permutations(range(n)))
        assert np.linalg.norm(total) > 0.0
        return project_to_symmetric(FullState(total.ravel()))[0]
    else:
        raise ValueError('unknown symmetrisation method {0!r}'.format(method))

def apply_local(state, matrices):
    """Apply a 2x2 matrix to each qubit of a state and renormalise.

    Arguments:

    ``matrices``
        Either one 2x2 matrix, applied to every qubit, or a sequence of N
        of them, applied to qubits 1 to N in order. The matrices need not
        be unitary.
    """
    full = _full(state)
    matrices = np.asarray(matrices, dtype=complex)
    if matrices.shape == (2, 2):
        matrices = [matrices] * full.n
    elif matrices.shape != (full.n, 2, 2):
        raise ValueError('need one 2x2 matrix, or one for each qubit')
    tensor = full.tensor
    for axis, matrix in enumerate(matrices):
        tensor = np.moveaxis(
            np.tensordot(matrix, tensor, axes=([1], [axis])), 0, axis)
    return FullState(tensor.ravel())
