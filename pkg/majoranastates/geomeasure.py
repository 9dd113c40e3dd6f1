# -*- coding: utf-8 -*-
"""
Geometric measure of entanglement of symmetric states.

The measure is one minus the largest squared overlap of the state with a
product state. For symmetric states of three or more qubits the closest
product state can be taken symmetric, a spin coherent state |alpha, beta>,
so the search runs over the sphere only. The maximising directions are the
closest product points (CPPs).
"""
import math
import logging
import collections

import numpy as np
from scipy.optimize import minimize
from scipy.special import comb

from . import tolerances
from .state import Spinor, _root_binomials
from .constellation import majorana_points
from .workers import run_starts

log = logging.getLogger(__name__)

# Refined optima closer than this chordal distance are one CPP.
_SAME_POINT = 1e-4

# Distinct seeds are further apart than this chordal distance.
_SAME_SEED = 1e-3

# Optima this close to a pole in polar angle are compared with the pole, and
# are never rings.
_POLE = 1e-4

class CoherentPoint(collections.namedtuple('CoherentPoint', 'alpha beta')):
    """A direction on the sphere labelling a spin coherent state.

    Angles are reduced on construction so that alpha is in [0, 2 pi) and
    beta in [0, pi], with alpha set to 0 within
    :data:`~majoranastates.tolerances.OPTIMIZATION_TOLERANCE` of a pole.
    The coherent state is the N-fold product of the spinor
    sin(beta/2) e^(-i alpha)|0> + cos(beta/2)|1>."""
    __slots__ = ()

    def __new__(Class, alpha, beta):
        alpha, beta = float(alpha), float(beta) % (2.0 * math.pi)
        if beta > math.pi:
            alpha, beta = alpha + math.pi, 2.0 * math.pi - beta
        if beta <= tolerances.OPTIMIZATION_TOLERANCE or \
                beta >= math.pi - tolerances.OPTIMIZATION_TOLERANCE:
            alpha = 0.0
        return super(CoherentPoint, Class).__new__(
            Class, alpha % (2.0 * math.pi), beta)

    @classmethod
    def from_majorana(Class, point):
        """The coherent direction of a Majorana point's spinor."""
        alpha, beta = point.angles
        return Class(alpha, math.pi - beta)

    @property
    def spinor(self):
        """The single qubit state repeated in the coherent state."""
        return Spinor(
            math.sin(self.beta / 2.0) * np.exp(-1j * self.alpha),
            math.cos(self.beta / 2.0))

    def antipode(self):
        return CoherentPoint(self.alpha + math.pi, math.pi - self.beta)

    def distance(self, other):
        """The chordal distance between the two directions, in [0, 1]."""
        return math.sqrt(max(0.0,
            1.0 - abs(np.vdot(self.spinor.vector, other.spinor.vector)) ** 2))

class EntanglementReport(collections.namedtuple(
        'EntanglementReport', 'eg log_eg cpps ring landscape')):
    """The result of :func:`geometric_measure`.

    ``eg`` is the geometric measure and ``log_eg`` its logarithmic form
    -log2(1 - eg). ``cpps`` lists every optimum found. ``ring`` is true when
    the optimum is a circle of constant polar angle rather than isolated
    points. ``landscape``, when requested, is the grid of squared overlaps
    indexed [beta, alpha].
    """
    __slots__ = ()

def _amplitude_grid(state, alphas, betas):
    """Coherent overlaps on the product of the given angle arrays."""
    n = state.n
    r = np.arange(n + 1)
    half = np.asarray(betas, dtype=float)[:, None] / 2.0
    radial = _root_binomials(n) * np.cos(half) ** r * np.sin(half) ** (n - r)
    phases = np.exp(1j * np.outer(alphas, n - r)) * state.vector
    return radial @ phases.T

def coherent_overlap(state, point):
    """The overlap <alpha, beta|s> of a coherent state with the state.

    This is sum_r sqrt(C(N, r)) cos(beta/2)^r sin(beta/2)^(N-r)
    e^(i (N-r) alpha) c[r]."""
    alpha, beta = point
    return complex(_amplitude_grid(state, [alpha], [beta])[0, 0])

def _fidelity(state, point):
    return abs(coherent_overlap(state, point)) ** 2

def landscape(state, grid=tolerances.GRID):
    """Rows (alpha, beta, F) of the squared overlap on a grid x grid mesh.

    Alpha runs over [0, 2 pi) and beta over [0, pi], beta varying slowest."""
    alphas, betas, values = _grid(state, grid)
    return [(float(alpha), float(beta), float(values[i, j]))
        for i, beta in enumerate(betas)
        for j, alpha in enumerate(alphas)]

def _grid(state, grid):
    if grid < 2:
        raise ValueError('grid needs at least two points per axis')
    alphas = np.linspace(0.0, 2.0 * math.pi, grid, endpoint=False)
    betas = np.linspace(0.0, math.pi, grid)
    values = np.abs(_amplitude_grid(state, alphas, betas)) ** 2
    return alphas, betas, values

def _is_ring(state, point):
    """Whether the squared overlap is flat along the CPP's circle of latitude."""
    if point.beta <= _POLE or point.beta >= math.pi - _POLE:
        return False
    alphas = np.linspace(0.0, 2.0 * math.pi, 64, endpoint=False)
    values = np.abs(_amplitude_grid(state, alphas, [point.beta])[0]) ** 2
    return float(np.var(values)) < tolerances.RING_VARIANCE

def geometric_measure(state, grid=tolerances.GRID,
                      restarts=tolerances.REFINEMENTS, parallel=False,
                      samples=False):
    """The geometric measure of entanglement of a symmetric state.

    Arguments:

    ``grid``
        Points per axis of the coarse search mesh.

    ``restarts``
        How many of the best mesh points are refined. Every Majorana point
        and its antipode are refined as well.

    ``parallel``
        Run the refinements on a thread pool.

    ``samples``
        Keep the coarse mesh of squared overlaps in the report.

    Refinement is by Nelder-Mead ascent from a simplex the size of a mesh
    cell, followed by a second, much smaller simplex. Optima near a pole
    are compared with the pole itself, and both poles are always
    candidates. Every optimum within
    :data:`~majoranastates.tolerances.OPTIMUM_WINDOW` of the best is
    reported as a CPP. A single qubit is never entangled.
    """
    alphas, betas, values = _grid(state, grid)
    if samples:
        values.setflags(write=False)
    mesh = values if samples else None

    constellation = majorana_points(state)
    if state.n == 1:
        cpp = CoherentPoint.from_majorana(constellation.points[0][0])
        return EntanglementReport(0.0, 0.0, [cpp], False, mesh)

    candidates = []
    for index in np.argsort(values, axis=None)[::-1][:restarts]:
        i, j = np.unravel_index(index, values.shape)
        candidates.append(CoherentPoint(alphas[j], betas[i]))
    for point, _ in constellation.points:
        seed = CoherentPoint.from_majorana(point)
        candidates.extend([seed, seed.antipode()])
    seeds = []
    for seed in candidates:
        if all(seed.distance(kept) > _SAME_SEED for kept in seeds):
            seeds.append(seed)
    log.debug('refining %d seeds for a %d qubit state', len(seeds), state.n)

    step = math.pi / grid
    def _ascend(start, size, xatol):
        simplex = np.array(start) + [[0.0, 0.0], [size, 0.0], [0.0, size]]
        result = minimize(lambda p: -_fidelity(state, p), list(start),
            method='Nelder-Mead', options={'initial_simplex': simplex,
                'xatol': xatol, 'fatol': 1e-15, 'maxiter': 400})
        return -float(result.fun), CoherentPoint(*result.x)

    def _refine(seed):
        value, point = _ascend(seed, step, 1e-7)
        polished = _ascend(point, 1e-5, 1e-10)
        if polished[0] > value:
            value, point = polished
        if point.beta <= _POLE or point.beta >= math.pi - _POLE:
            pole = CoherentPoint(0.0, 0.0 if point.beta <= _POLE else math.pi)
            if _fidelity(state, pole) >= value:
                value, point = _fidelity(state, pole), pole
        return value, point

    optima = run_starts(_refine, seeds, parallel)
    for pole in (CoherentPoint(0.0, 0.0), CoherentPoint(0.0, math.pi)):
        optima.append((_fidelity(state, pole), pole))
    optima.sort(key=lambda optimum: -optimum[0])
    best = optima[0][0]
    cpps = []
    for value, point in optima:
        if value < best - tolerances.OPTIMUM_WINDOW:
            break
        if all(point.distance(kept) > _SAME_POINT for kept in cpps):
            cpps.append(point)

    eg = min(max(0.0, 1.0 - best), 1.0 - np.finfo(float).eps)
    log_eg = -math.log2(1.0 - eg)
    ring = _is_ring(state, cpps[0])
    log.debug('geometric measure %.12f with %d CPPs', eg, len(cpps))
    return EntanglementReport(eg, log_eg, cpps, ring, mesh)

def dicke_closed_form(n, l):
    """The exact measure and a CPP of the Dicke state with l excitations.

    The CPP lies on the circle tan(beta/2) = sqrt((n-l)/l), every alpha."""
    if n < 1:
        raise ValueError('a state needs at least one qubit')
    if not 0 <= l <= n:
        raise ValueError('excitation index out of range')
    eg = 1.0 - comb(n, l) * (l / n) ** l * ((n - l) / n) ** (n - l)
    beta = 2.0 * math.atan2(math.sqrt(n - l), math.sqrt(l))
    return max(0.0, float(eg)), CoherentPoint(0.0, beta)
