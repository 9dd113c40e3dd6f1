# -*- coding: utf-8 -*-
"""
Reduced density matrices, two-party witnesses, and recovering whole states
from their marginals.

Qubits are numbered from 1 in every public function, as in the rest of the
package. A keep list such as ``[3, 1]`` gives a density matrix whose first
(most significant) qubit is qubit 3 of the state.
"""
import math
import logging

import numpy as np
import scipy.linalg
from scipy.optimize import minimize, least_squares
from scipy.special import comb

from . import tolerances
from .errors import NumericalError
from .state import (
    SYMMETRIC, COMPUTATIONAL, DensityMatrix, FullState, SymmetricState,
    expand_to_full, overlap)
from .workers import run_starts

log = logging.getLogger(__name__)

AMBIGUOUS = 'AMBIGUOUS'
"""Returned by :func:`reconstruct_from_two_marginals` when inequivalent
states share the given marginals."""

# ----------------------------------------------------------------------------
# Partial traces.
# ----------------------------------------------------------------------------

def _full(state):
    if isinstance(state, SymmetricState):
        return expand_to_full(state)
    return state

def _axis_order(n, keep):
    """Zero-based axes with the kept qubits first, validating ``keep``."""
    keep = [int(q) for q in keep]
    if not keep:
        raise ValueError('at least one qubit must be kept')
    if len(set(keep)) != len(keep):
        raise ValueError('kept qubits must be distinct')
    if min(keep) < 1 or max(keep) > n:
        raise ValueError('kept qubits must be between 1 and {0}'.format(n))
    kept = [q - 1 for q in keep]
    return kept + [q for q in range(n) if q not in kept]

def _kept_block(tensor, order, k):
    """The amplitudes as a (kept, traced) matrix."""
    return np.transpose(tensor, order).reshape(2 ** k, -1)

def rdm_symmetric(state, k):
    """The reduced state of any k qubits of a symmetric state.

    The result is in the (k+1) dimensional Dicke basis of the kept qubits.
    It is built from the split of each N qubit Dicke state into k and N-k
    qubit Dicke states, so no 2^N vector is formed."""
    n = state.n
    if not 1 <= k < n:
        raise ValueError('retained qubit count must be between 1 and N-1')
    c = state.vector
    block = np.zeros((k + 1, n - k + 1), dtype=complex)
    for j in range(k + 1):
        for m in range(n - k + 1):
            block[j, m] = c[j + m] * math.sqrt(
                comb(k, j) * comb(n - k, m) / comb(n, j + m))
    return DensityMatrix(block @ block.conj().T, SYMMETRIC)

def rdm_full(state, keep):
    """The exact reduced density matrix of the listed qubits.

    Arguments:

    ``state``
        A :class:`~majoranastates.state.FullState`, or a symmetric state,
        which is expanded first.

    ``keep``
        The 1-based qubit numbers to keep, in the order their basis should
        use.
    """
    full = _full(state)
    order = _axis_order(full.n, keep)
    block = _kept_block(full.tensor, order, len(keep))
    return DensityMatrix(block @ block.conj().T, COMPUTATIONAL)

# ----------------------------------------------------------------------------
# Witnesses.
# ----------------------------------------------------------------------------

_SIGMA_YY = np.kron([[0, -1j], [1j, 0]], [[0, -1j], [1j, 0]]).real

# Density matrix eigenvalues below this are dropped before square roots.
_EIGEN_FLOOR = 1e-14

def concurrence(rho):
    """Wootters' concurrence of a two qubit density matrix.

    The decreasing values l1..l4 are the square roots of the eigenvalues of
    rho (Y x Y) rho* (Y x Y), and the concurrence is max(0, l1-l2-l3-l4).
    They are computed as the singular values of B^T (Y x Y) B for a factor
    rho = B B^dagger, which avoids square roots of rounding noise."""
    if not isinstance(rho, DensityMatrix):
        rho = DensityMatrix(rho)
    rho = rho.to_computational()
    if rho.k != 2:
        raise ValueError('concurrence needs a two qubit density matrix')
    values, vectors = scipy.linalg.eigh(rho.matrix)
    kept = values > _EIGEN_FLOOR
    factor = vectors[:, kept] * np.sqrt(values[kept])
    lambdas = np.zeros(4)
    singular = scipy.linalg.svdvals(factor.T @ _SIGMA_YY @ factor)
    lambdas[:len(singular)] = singular
    lambdas = np.sort(lambdas)[::-1]
    return float(max(0.0, lambdas[0] - lambdas[1:].sum()))

def three_tangle(state):
    """The residual three party tangle of a pure three qubit state.

    Four times the modulus of Cayley's hyperdeterminant of the amplitudes."""
    full = _full(state)
    if full.n != 3:
        raise ValueError('the three tangle needs a three qubit state')
    a = full.tensor
    d1 = (a[0,0,0]**2 * a[1,1,1]**2 + a[0,0,1]**2 * a[1,1,0]**2 +
        a[0,1,0]**2 * a[1,0,1]**2 + a[1,0,0]**2 * a[0,1,1]**2)
    d2 = (a[0,0,0] * a[1,1,1] * (a[0,1,1] * a[1,0,0] +
            a[1,0,1] * a[0,1,0] + a[1,1,0] * a[0,0,1]) +
        a[0,1,1] * a[1,0,0] * (a[1,0,1] * a[0,1,0] + a[1,1,0] * a[0,0,1]) +
        a[1,0,1] * a[0,1,0] * a[1,1,0] * a[0,0,1])
    d3 = (a[0,0,0] * a[1,1,0] * a[1,0,1] * a[0,1,1] +
        a[1,1,1] * a[0,0,1] * a[0,1,0] * a[1,0,0])
    return float(4.0 * abs(d1 - 2.0 * d2 + 4.0 * d3))

# ----------------------------------------------------------------------------
# Families.
# ----------------------------------------------------------------------------

def dnk_state(n, k, d0, d1):
    """The symmetric state of n-k spinors |0> and k spinors d0|0> + d1|1>.

    Every state with a k-fold and an (n-k)-fold Majorana point is reached
    from one of these by an identical local operation; d0 = 0 gives the
    Dicke state with k excitations."""
    if not 1 <= k <= n // 2:
        raise ValueError('k must be between 1 and n/2')
    if abs(d1) <= tolerances.PHASE_CUTOFF:
        raise ValueError('d1 must be non-zero')
    coefficients = np.zeros(n + 1, dtype=complex)
    for r in range(k + 1):
        coefficients[r] = (math.sqrt(comb(n, r)) * comb(n - r, k - r) *
            complex(d0) ** (k - r) * complex(d1) ** r)
    return SymmetricState(coefficients)

def generalized_dicke_order(n, r):
    """Computational indices of the weight r bitstrings, in labelling order.

    Bitstrings run in decreasing binary value, with those whose last qubit
    is |0> all placed before those whose last qubit is |1>. The first
    weight one string is therefore |10...0>."""
    if not 0 <= r <= n:
        raise ValueError('weight out of range')
    indices = [i for i in range(2 ** n - 1, -1, -1) if bin(i).count('1') == r]
    return ([i for i in indices if not i & 1] +
        [i for i in indices if i & 1])

def _check_lengths(n, k, a):
    if len(a) != k + 1:
        raise ValueError('need one coefficient list per weight 0 to k')
    for r, coefficients in enumerate(a):
        if len(coefficients) != comb(n, r, exact=True):
            raise ValueError(
                'weight {0} needs {1} coefficients'.format(
                    r, comb(n, r, exact=True)))

def generalized_dicke_state(n, k, alphas, a):
    """The superposition of weight 0 to k bitstrings with free coefficients.

    Arguments:

    ``alphas``
        One weight per excitation number r = 0..k.

    ``a``
        For each r, the C(n, r) coefficients of the weight r bitstrings in
        :func:`generalized_dicke_order`.

    Equal coefficients within each weight give back a symmetric state.
    """
    if len(alphas) != k + 1:
        raise ValueError('need one weight per excitation number 0 to k')
    _check_lengths(n, k, a)
    amplitudes = np.zeros(2 ** n, dtype=complex)
    for r in range(k + 1):
        amplitudes[generalized_dicke_order(n, r)] = (
            alphas[r] * np.asarray(a[r], dtype=complex))
    return FullState(amplitudes)

def uniqueness_conditions(n, k, a, tolerance=tolerances.PHASE_CUTOFF):
    """Check the two conditions under which marginals fix the state.

    The weight k coefficients are split at C(n-1, k): the first block has
    the last qubit in |0>, the second in |1>. Each block needs a non-zero
    coefficient on a bitstring whose first qubit is |0>."""
    _check_lengths(n, k, a)
    order = generalized_dicke_order(n, k)
    split = comb(n - 1, k, exact=True)
    first_qubit = 1 << (n - 1)

    def _holds(indices, coefficients):
        return any(
            not index & first_qubit and abs(value) > tolerance
            for index, value in zip(indices, coefficients))

    top = a[k]
    return (_holds(order[:split], top[:split]) and
        _holds(order[split:], top[split:]))

# ----------------------------------------------------------------------------
# Reconstruction.
# ----------------------------------------------------------------------------

def _gauge(parameters):
    """The SU(2) ancilla rotation, up to its irrelevant global phase."""
    theta, phi1, phi2 = parameters
    c, s = math.cos(theta), math.sin(theta)
    return np.array([
        [c * np.exp(1j * phi1), -s * np.exp(-1j * phi2)],
        [s * np.exp(1j * phi2), c * np.exp(-1j * phi1)]])

def _trace_first(vector, m):
    """The density matrix of qubits 2..m+1 of an m+1 qubit vector."""
    block = vector.reshape(2, 2 ** m)
    return block.T @ block.conj()

def _reconstruction_candidates(rho_a, rho_b, restarts, seed, parallel):
    """Fit purifications of rho_a to rho_b from several starts.

    Returns (residual, amplitudes) pairs sorted by residual."""
    rho_a = rho_a.to_computational()
    rho_b = rho_b.to_computational()
    m = rho_a.k
    if rho_b.k != m:
        raise ValueError('both marginals must cover the same number of qubits')
    values, vectors = scipy.linalg.eigh(rho_a.matrix)
    rank = int(np.sum(values > tolerances.RANK_TOLERANCE))
    if rank > 2:
        raise ValueError(
            'first marginal has rank {0}; reconstruction needs rank at most '
            '2'.format(rank))
    # Top two eigenpairs, so one ancilla qubit purifies rho_a.
    factor = vectors[:, -2:] * np.sqrt(np.clip(values[-2:], 0.0, None))
    target = rho_b.matrix

    def _amplitudes(parameters):
        return (factor @ _gauge(parameters).T).ravel()

    def _residuals(parameters):
        difference = _trace_first(_amplitudes(parameters), m) - target
        return np.concatenate([difference.real.ravel(),
            difference.imag.ravel()])

    def _fit(start):
        rough = minimize(lambda p: np.sum(_residuals(p) ** 2), start,
            method='BFGS', options={'gtol': 1e-12})
        polished = least_squares(_residuals, rough.x, method='lm',
            xtol=1e-15, ftol=1e-15, gtol=1e-15)
        residual = float(np.linalg.norm(polished.fun))
        log.debug('purification fit from %s: residual %.3g', start, residual)
        return residual, _amplitudes(polished.x)

    rng = np.random.default_rng(seed)
    starts = rng.uniform([0.0, 0.0, 0.0],
        [math.pi / 2.0, 2.0 * math.pi, 2.0 * math.pi], size=(restarts, 3))
    return sorted(run_starts(_fit, starts, parallel), key=lambda fit: fit[0])

def _distinct(states, threshold=tolerances.DISTINCT_FIDELITY):
    """Representatives of the states up to fidelity 1 - threshold."""
    classes = []
    for state in states:
        if not any(abs(overlap(state, kept)) ** 2 >= 1.0 - threshold
                for kept in classes):
            classes.append(state)
    return classes

def reconstruct_from_two_marginals(rho_a, rho_b,
                                   restarts=tolerances.RESTARTS, seed=None,
                                   tolerance=tolerances.FIT_TOLERANCE,
                                   parallel=False):
    """Recover an N qubit pure state from two of its N-1 qubit marginals.

    Arguments:

    ``rho_a``
        The marginal of qubits 1..N-1. It must have rank at most two, as
        every state with two distinct Majorana points does.

    ``rho_b``
        The marginal of qubits 2..N.

    ``restarts``, ``seed``, ``parallel``
        Control the multistart fit of the ancilla rotation.

    Purifying ``rho_a`` with one ancilla qubit leaves only a 2x2 unitary on
    the ancilla free. That unitary is fitted so that the purified state has
    ``rho_b`` as its marginal. Returns the state when every fit with a
    residual below ``tolerance`` gives the same state, and :data:`AMBIGUOUS`
    when inequivalent states fit. Raises ``NumericalError`` when no fit
    reaches the tolerance, meaning the marginals are inconsistent.
    """
    fits = _reconstruction_candidates(rho_a, rho_b, restarts, seed, parallel)
    accepted = [FullState(vector) for residual, vector in fits
        if residual < tolerance]
    if not accepted:
        raise NumericalError(
            'marginals are inconsistent: best fit residual '
            '{0:.3g}'.format(fits[0][0]))
    classes = _distinct(accepted)
    log.debug('%d of %d fits accepted, %d distinct states',
        len(accepted), len(fits), len(classes))
    if len(classes) > 1:
        return AMBIGUOUS
    return classes[0]

def marginal_match_search(targets, n, restarts=tolerances.RESTARTS, seed=None,
                          tolerance=tolerances.OPTIMIZATION_TOLERANCE,
                          parallel=False):
    """Search for every n qubit pure state with the given marginals.

    Arguments:

    ``targets``
        A sequence of (keep, density matrix) pairs, ``keep`` being the
        1-based qubits the density matrix describes.

    Minimises the summed squared Frobenius distance of the state's
    marginals to the targets over unnormalised amplitude vectors, using
    an analytic gradient, from ``restarts`` random starts. Returns the
    distinct states whose final residual, the square root of that sum, is
    below ``tolerance``, best first. An empty list is a valid answer.
    """
    if not 1 <= n <= tolerances.MAX_SEARCH_QUBITS:
        raise ValueError('search is limited to {0} qubits'.format(
            tolerances.MAX_SEARCH_QUBITS))
    prepared = []
    for keep, target in targets:
        if target.k != len(keep):
            raise ValueError('target does not match its qubit list')
        prepared.append((_axis_order(n, keep), len(keep),
            target.to_computational().matrix))
    if not prepared:
        raise ValueError('at least one target marginal is needed')
    dim = 2 ** n

    def _objective(parameters):
        x = parameters[:dim] + 1j * parameters[dim:]
        norm = float(np.vdot(x, x).real)
        tensor = x.reshape((2,) * n)
        value = 0.0
        gradient = np.zeros(dim, dtype=complex)
        for order, k, target in prepared:
            block = _kept_block(tensor, order, k)
            difference = block @ block.conj().T / norm - target
            value += float(np.sum(np.abs(difference) ** 2))
            applied = np.transpose(
                (difference @ block).reshape((2,) * n), np.argsort(order))
            applied = applied.ravel()
            expectation = float(np.vdot(x, applied).real) / norm
            gradient += (applied - expectation * x) / norm
        return value, 4.0 * np.concatenate([gradient.real, gradient.imag])

    def _search(start):
        result = minimize(_objective, start, jac=True, method='BFGS',
            options={'gtol': 1e-10})
        residual = math.sqrt(max(0.0, float(result.fun)))
        log.debug('marginal search start: residual %.3g after %d iterations',
            residual, result.nit)
        return residual, result.x[:dim] + 1j * result.x[dim:]

    rng = np.random.default_rng(seed)
    starts = rng.normal(size=(restarts, 2 * dim))
    found = sorted(run_starts(_search, starts, parallel), key=lambda r: r[0])
    return _distinct(
        [FullState(vector) for residual, vector in found
            if residual < tolerance])
