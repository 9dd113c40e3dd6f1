# -*- coding: utf-8 -*-
"""
A library of named multiqubit states.

States in this module are symmetric, held as Dicke coefficients, unless
specifically noted.
"""
import sys

from .state import SymmetricState, FullState, dicke_state, ghz_state

def __build_ghz_series(prefix, start_number=2, end_number=10):
    """Creates the GHZ states of each size in this module's globals.

    Calling this function creates module level constants GHZ2, GHZ3 etc."""
    module = sys.modules[__name__]
    series = tuple(ghz_state(n) for n in range(start_number, end_number+1))
    for state in series:
        setattr(module, "%s%d" % (prefix, state.n), state)

    return series

# ----------------------------------------------------------------------------
# CONSTANTS for specific states.
# ----------------------------------------------------------------------------

GHZ = __build_ghz_series('GHZ')
"""The GHZ states (|0...0> + |1...1>)/sqrt(2), from GHZ2 to GHZ10.

Their Majorana points are spaced evenly around the equator."""

W3 = dicke_state(3, 1)
"""The three qubit W state, one excitation shared by all qubits."""

W_BAR3 = dicke_state(3, 2)
"""The spin flipped W state, with two excitations."""

ETA = SymmetricState([0.0, 1.0, 1.0, 0.0])
"""The equal superposition of W3 and W_BAR3.

An identical local operation takes it to GHZ3, but unlike GHZ3 its two
qubit marginals fix it."""

BELL_PHI_PLUS = ghz_state(2)
BELL_PHI_MINUS = SymmetricState([1.0, 0.0, -1.0])
BELL_PSI_PLUS = dicke_state(2, 1)

CHI1 = FullState([1.0, 1.0] + [0.0] * 13 + [1.0])
"""(|0000> + |0001> + |1111>)/sqrt(3), a non-symmetric state.

It shares three of its four three qubit marginals with CHI2."""

CHI2 = FullState([1.0, 1.0] + [0.0] * 13 + [-1.0])
"""(|0000> + |0001> - |1111>)/sqrt(3), a non-symmetric state."""
