# -*- coding: utf-8 -*-
"""
Numeric defaults used throughout the majoranastates package.

Every function that depends on one of these values also accepts it as a
keyword argument, and the command line exposes the commonly tuned ones as
global flags.
"""

# ----------------------------------------------------------------------------
# Comparisons and invariants.
# ----------------------------------------------------------------------------

#: Tolerance for exact invariants: norms, traces, Hermiticity, roundtrips.
TOLERANCE = 1e-9

#: Tolerance for values produced by iterative optimisation.
OPTIMIZATION_TOLERANCE = 1e-6

#: Components smaller than this do not fix the canonical global phase.
PHASE_CUTOFF = 1e-10

#: Eigenvalues above this count towards the rank of a density matrix.
RANK_TOLERANCE = 1e-9

# ----------------------------------------------------------------------------
# Root finding.
# ----------------------------------------------------------------------------

#: Chordal distance below which two Majorana points are the same point.
CLUSTER_TOLERANCE = 1e-6

#: Relative size below which a polynomial coefficient is treated as zero.
DEGREE_THRESHOLD = 1e-12

GROUPING_RADIUS = 0.1
"""Chordal radius searched for the split images of a multiple root.

A k-fold root comes back from an eigenvalue solver as k points spread over
a circle of radius roughly (machine epsilon)^(1/k), so a 7-fold root is
spread over about 1e-2. Candidates inside this radius are only merged when
their spread is what rounding does to a genuine multiple root.
"""

# ----------------------------------------------------------------------------
# Sizes.
# ----------------------------------------------------------------------------

#: Largest qubit count for dense 2^N computational-basis vectors.
MAX_QUBITS = 12

#: Largest qubit count accepted by the unstructured marginal search.
MAX_SEARCH_QUBITS = 8

# ----------------------------------------------------------------------------
# Local operations.
# ----------------------------------------------------------------------------

#: Condition number above which a local operation triggers a warning.
CONDITION_WARNING = 1e8

# ----------------------------------------------------------------------------
# Optimisation.
# ----------------------------------------------------------------------------

#: Grid points per angle for the coherent-state landscape.
GRID = 64

#: Number of best grid cells refined by local ascent.
REFINEMENTS = 8

#: Number of random starts for multistart fits and searches.
RESTARTS = 16

#: Two fitted states are distinct when their fidelity is below 1 - this.
DISTINCT_FIDELITY = 1e-6

#: Largest Frobenius residual accepted for a marginal fit.
FIT_TOLERANCE = 1e-7

#: Optima within this of the maximum overlap are all reported.
OPTIMUM_WINDOW = 1e-9

#: Overlap variance around a circle of latitude below which it is a ring.
RING_VARIANCE = 1e-10
