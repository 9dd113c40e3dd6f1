# -*- coding: utf-8 -*-
"""
Majorana constellations of symmetric states.

Every symmetric state of N qubits is, up to normalisation, the symmetrised
product of N single qubit spinors. Those spinors, as points on the sphere,
form the state's Majorana constellation. This module converts between the
two descriptions and moves constellations under 2x2 matrices.

The spinors are found as roots of the Majorana polynomial
``P(x) = sum_l (-1)^l sqrt(C(N, l)) c[l] x^l``. With ``c[l]`` counting
excitations, ``P`` factorises as ``prod_i (a_i - b_i x)`` over the spinors
``a_i|0> + b_i|1>``, so each root ``x`` is the spinor ``x|0> + |1>``: a root
at zero is the spinor |1> and a missing power of ``x`` (a root at infinity)
is the spinor |0>.
"""
import math
import logging
import collections

import numpy as np
import numpy.polynomial.polynomial as npp
import scipy.linalg
from scipy.optimize import linear_sum_assignment
from scipy.special import comb

from . import tolerances
from .state import Spinor, symmetrize, _root_binomials

log = logging.getLogger(__name__)

# ----------------------------------------------------------------------------
# Points.
# ----------------------------------------------------------------------------

class ProjectiveRoot(collections.namedtuple('ProjectiveRoot', 'z w')):
    """A point of the projective line: the spinor w|0> + z|1>.

    The ratio ``z/w`` is the stereographic coordinate tan(beta/2) e^(i alpha)
    of the point, and ``w == 0`` is the point at infinity, the spinor |1>.
    The pair is scale free and is stored with its larger component equal
    to exactly 1.
    """
    __slots__ = ()

    def __new__(Class, z, w):
        z, w = complex(z), complex(w)
        if z == 0 and w == 0:
            raise ValueError('a projective point needs a non-zero component')
        if abs(z) >= abs(w):
            return super(ProjectiveRoot, Class).__new__(Class, 1+0j, w / z)
        return super(ProjectiveRoot, Class).__new__(Class, z / w, 1+0j)

    @classmethod
    def infinity(Class):
        """The point at infinity, spinor |1>."""
        return Class(1.0, 0.0)

    @classmethod
    def from_spinor(Class, spinor):
        """The point of the given spinor, or (a, b) pair."""
        return Class(spinor[1], spinor[0])

    @classmethod
    def from_angles(Class, alpha, beta):
        """The point in the sphere direction (alpha, beta)."""
        if abs(beta - math.pi) <= tolerances.PHASE_CUTOFF:
            return Class.infinity()
        if abs(beta) <= tolerances.PHASE_CUTOFF:
            return Class(0.0, 1.0)
        return Class.from_spinor(Spinor.from_angles(alpha, beta))

    @property
    def is_infinite(self):
        return self.w == 0

    @property
    def spinor(self):
        return Spinor(self.w, self.z)

    @property
    def angles(self):
        """The sphere direction (alpha, beta) of the spinor."""
        return self.spinor.angles

    def root_angles(self):
        """The direction of the matching Majorana polynomial root.

        The polynomial root is ``w/z``, the inverse of this point's
        coordinate, so its direction is (-alpha, pi - beta). The rotated
        all-down projection of the state vanishes in this direction; see
        :func:`wigner_d_column`.
        """
        alpha, beta = self.angles
        return (-alpha) % (2.0 * math.pi), math.pi - beta

    def chordal_distance(self, other):
        """The scale free distance |z w' - z' w| / (|(z, w)| |(z', w')|)."""
        cross = abs(self.z * other.w - other.z * self.w)
        return cross / (math.hypot(abs(self.z), abs(self.w)) *
            math.hypot(abs(other.z), abs(other.w)))

    def mobius(self, matrix):
        """The image of this point when its spinor is multiplied by a matrix."""
        (m00, m01), (m10, m11) = np.asarray(matrix, dtype=complex)
        return ProjectiveRoot(m10 * self.w + m11 * self.z,
            m00 * self.w + m01 * self.z)

def _point_order(entry):
    alpha, beta = entry[0].angles
    return round(beta, 10), round(alpha, 10), -entry[1]

class MajoranaConstellation(collections.namedtuple(
        'MajoranaConstellation', 'points')):
    """A multiset of points on the sphere, the spinors of a symmetric state.

    Arguments:

    ``points``
        A sequence of (point, multiplicity) pairs. Points can be
        :class:`ProjectiveRoot` instances or (z, w) pairs. The pairs are
        stored sorted by polar then azimuthal angle.
    """
    __slots__ = ()

    def __new__(Class, points):
        entries = []
        for point, multiplicity in points:
            if not isinstance(point, ProjectiveRoot):
                point = ProjectiveRoot(*point)
            if int(multiplicity) != multiplicity or multiplicity < 1:
                raise ValueError('multiplicities must be positive integers')
            entries.append((point, int(multiplicity)))
        if not entries:
            raise ValueError('a constellation needs at least one point')
        return super(MajoranaConstellation, Class).__new__(
            Class, tuple(sorted(entries, key=_point_order)))

    @classmethod
    def from_spinors(Class, spinors, tolerance=tolerances.CLUSTER_TOLERANCE):
        """The constellation of the given spinors, merging coincident ones."""
        return Class(
            (ProjectiveRoot.from_spinor(spinor), 1) for spinor in spinors
            ).merged(tolerance)

    @property
    def n(self):
        """The number of qubits, the total multiplicity."""
        return sum(multiplicity for _, multiplicity in self.points)

    @property
    def multiplicities(self):
        """Multiplicities of the distinct points, largest first."""
        return tuple(sorted((m for _, m in self.points), reverse=True))

    @property
    def diversity(self):
        """The number of distinct points."""
        return len(self.points)

    def spinors(self):
        """One spinor per qubit, repeated according to multiplicity."""
        return [point.spinor
            for point, multiplicity in self.points
            for _ in range(multiplicity)]

    def merged(self, tolerance=tolerances.CLUSTER_TOLERANCE):
        """Combine points closer than the chordal tolerance.

        Points are absorbed into the nearest already kept point, considering
        the points of highest multiplicity first."""
        kept = []
        for point, multiplicity in sorted(self.points, key=lambda e: -e[1]):
            for entry in kept:
                if entry[0].chordal_distance(point) <= tolerance:
                    entry[1] += multiplicity
                    break
            else:
                kept.append([point, multiplicity])
        return MajoranaConstellation(kept)

    def mobius(self, matrix):
        """The constellation with every spinor multiplied by the matrix."""
        return MajoranaConstellation(
            (point.mobius(matrix), multiplicity)
            for point, multiplicity in self.points)

def constellation_distance(first, second):
    """The largest chordal distance between optimally matched points.

    Both constellations are expanded into one point per qubit and matched
    by minimum total chordal distance."""
    left = [point for point, m in first.points for _ in range(m)]
    right = [point for point, m in second.points for _ in range(m)]
    if len(left) != len(right):
        raise ValueError('constellations have different qubit counts')
    costs = np.array([[p.chordal_distance(q) for q in right] for p in left])
    rows, columns = linear_sum_assignment(costs)
    return float(costs[rows, columns].max())

# ----------------------------------------------------------------------------
# Root finding.
# ----------------------------------------------------------------------------

# Normwise backward error, relative to max|p_l| sum |x|^l, that the split
# images of one multiple root may show. Eigenvalue clusters needing a larger
# perturbation to coalesce are distinct roots.
_BACKWARD_ERROR = 1e-11

def _newton(coefficients, x, steps=8):
    """Polish a root, keeping only steps that reduce the residual."""
    slope = npp.polyder(coefficients)
    value = npp.polyval(x, coefficients)
    for _ in range(steps):
        gradient = npp.polyval(x, slope)
        if gradient == 0 or value == 0:
            break
        candidate = x - value / gradient
        candidate_value = npp.polyval(candidate, coefficients)
        if not abs(candidate_value) < abs(value):
            break
        x, value = candidate, candidate_value
    return x

def _locate_multiple_root(coefficients, values):
    """Test whether the given eigenvalues are the split images of one root.

    Returns the root as a spinor pair (a, b), meaning the polynomial root
    a/b, or None when the values are distinct roots. Works in the chart
    x -> 1/x when the values are far from the origin.

    An m-fold root perturbed by a relative coefficient error e splits into
    m values at distance r from its centre with r^m |P^(m)(c)| / m! of
    order e times the size of P near c. Clusters wider than that allows
    for rounding are rejected.
    """
    m = len(values)
    if abs(np.mean(values)) > 1.0:
        coefficients, values, inverted = coefficients[::-1], 1.0 / values, True
    else:
        inverted = False

    # The centre of a split multiple root is a simple root of P^(m-1).
    centre = _newton(npp.polyder(coefficients, m - 1), np.mean(values))
    if m > 1:
        spread = float(np.max(np.abs(values - centre)))
        leading = abs(npp.polyval(centre, npp.polyder(coefficients, m)))
        leading /= math.factorial(m)
        size = np.max(np.abs(coefficients)) * npp.polyval(
            abs(centre), np.ones(len(coefficients)))
        if spread ** m * leading > _BACKWARD_ERROR * size:
            return None
    return (1.0, centre) if inverted else (centre, 1.0)

def _polynomial_roots(coefficients, radius):
    """Roots of a polynomial with non-zero end coefficients.

    Returns (a, b, multiplicity) triples, one per distinct root a/b.
    Roots come from the eigenvalues of the balanced companion matrix and
    are then grouped: each eigenvalue takes the largest set of its nearest
    neighbours within ``radius`` that passes the multiple root test.
    """
    if len(coefficients) < 2:
        return []
    companion = npp.polycompanion(coefficients)
    balanced, _ = scipy.linalg.matrix_balance(companion)
    roots = scipy.linalg.eigvals(balanced)

    lengths = np.sqrt(1.0 + np.abs(roots) ** 2)
    chordal = np.abs(roots[:, None] - roots[None, :]) / np.outer(
        lengths, lengths)

    found = []
    remaining = list(range(len(roots)))
    while remaining:
        best = None
        for i in remaining:
            neighbours = sorted(
                (j for j in remaining if chordal[i, j] <= radius),
                key=lambda j: (chordal[i, j], j != i))
            for m in range(len(neighbours), 0, -1):
                members = neighbours[:m]
                root = _locate_multiple_root(coefficients, roots[members])
                if root is not None:
                    break
            if best is None or m > best[0]:
                best = (m, members, root)
        m, members, root = best
        if m > 1:
            log.debug('grouped %d eigenvalues into one root', m)
        found.append((root[0], root[1], m))
        remaining = [j for j in remaining if j not in members]
    return found

# ----------------------------------------------------------------------------
# Conversions.
# ----------------------------------------------------------------------------

def majorana_polynomial(state):
    """The coefficients p[0..N] of the state's Majorana polynomial.

    ``p[l] = (-1)^l sqrt(C(N, l)) c[l]``, lowest power first."""
    n = state.n
    signs = np.where(np.arange(n + 1) % 2, -1.0, 1.0)
    return signs * _root_binomials(n) * state.vector

def majorana_points(state, cluster_tol=tolerances.CLUSTER_TOLERANCE,
                    degree_threshold=tolerances.DEGREE_THRESHOLD,
                    radius=tolerances.GROUPING_RADIUS):
    """The Majorana constellation of a symmetric state.

    Arguments:

    ``cluster_tol``
        Points closer than this chordal distance are one point with the
        combined multiplicity.

    ``degree_threshold``
        Polynomial coefficients smaller than this fraction of the largest
        one are zero. Missing top powers give points at |0>, missing bottom
        powers give points at |1>.
    """
    n = state.n
    coefficients = majorana_polynomial(state)
    magnitudes = np.abs(coefficients)
    significant = np.flatnonzero(
        magnitudes > degree_threshold * magnitudes.max())
    low, degree = int(significant[0]), int(significant[-1])

    points = []
    if low:
        points.append((ProjectiveRoot.infinity(), low))
    if degree < n:
        points.append((ProjectiveRoot(0.0, 1.0), n - degree))
    for a, b, multiplicity in _polynomial_roots(
            coefficients[low:degree + 1], radius):
        points.append((ProjectiveRoot.from_spinor((a, b)), multiplicity))
    return MajoranaConstellation(points).merged(cluster_tol)

def state_from_constellation(constellation):
    """The symmetric state whose Majorana constellation is given."""
    return symmetrize(constellation.spinors())

def mobius_transform(constellation, matrix):
    """Multiply every spinor of a constellation by an invertible matrix."""
    return constellation.mobius(matrix)

# ----------------------------------------------------------------------------
# Rotations.
# ----------------------------------------------------------------------------

def euler_rotation(alpha, beta, gamma):
    """The SU(2) matrix Rz(alpha) Ry(beta) Rz(gamma)."""
    def rz(angle):
        return np.diag([np.exp(-0.5j * angle), np.exp(0.5j * angle)])
    c, s = math.cos(beta / 2.0), math.sin(beta / 2.0)
    ry = np.array([[c, -s], [s, c]], dtype=complex)
    return rz(alpha) @ ry @ rz(gamma)

def su2_rotate(state, matrix, tolerance=tolerances.TOLERANCE,
               cluster_tol=tolerances.CLUSTER_TOLERANCE):
    """Rotate every qubit of a symmetric state by the same SU(2) matrix.

    The rotation moves each Majorana point rigidly, and the state is
    rebuilt from the moved constellation."""
    matrix = np.asarray(matrix, dtype=complex)
    if matrix.shape != (2, 2):
        raise ValueError('a rotation is a 2x2 matrix')
    if np.max(np.abs(matrix.conj().T @ matrix - np.eye(2))) > tolerance:
        raise ValueError('rotation matrix is not unitary')
    if abs(np.linalg.det(matrix) - 1.0) > tolerance:
        raise ValueError('rotation matrix does not have unit determinant')
    return state_from_constellation(
        mobius_transform(majorana_points(state, cluster_tol), matrix))

def wigner_d_column(n, l, alpha, beta):
    """One entry of the spin-N/2 rotation column used for the Majorana roots.

    Returns sqrt(C(N, l)) cos(beta/2)^(N-l) (-sin(beta/2))^l
    e^(i (l - N/2) alpha). Contracted with a state's coefficients it equals
    cos(beta/2)^N e^(-i N alpha/2) P(tan(beta/2) e^(i alpha)), and so
    vanishes at every :meth:`ProjectiveRoot.root_angles` of the state.
    """
    if not 0 <= l <= n:
        raise ValueError('index out of range')
    return (math.sqrt(comb(n, l)) *
        math.cos(beta / 2.0) ** (n - l) *
        (-math.sin(beta / 2.0)) ** l *
        np.exp(1j * (l - n / 2.0) * alpha))
