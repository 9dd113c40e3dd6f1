# -*- coding: utf-8 -*-
"""Parsing for command line values: numbers, matrices, qubit lists and names."""
import numpy as np

from . import majoranastates
from .state import SymmetricState, FullState

def complex_number(number_string):
    """Parses a complex number such as ``0.6``, ``-1j`` or ``1+2i``."""
    text = number_string.strip().lower().replace(' ', '').replace('i', 'j')
    if not text:
        raise ValueError('empty number')
    try:
        return complex(text)
    except ValueError:
        raise ValueError('cannot read {0!r} as a number'.format(number_string))

def complex_list(list_string):
    """Parses comma separated complex numbers."""
    return [complex_number(item) for item in __items(list_string, ',')]

def ragged_list(list_string):
    """Parses semicolon separated lists of comma separated numbers.

    ``"1;1,0,0"`` gives ``[[1], [1, 0, 0]]``."""
    return [complex_list(part) for part in __items(list_string, ';')]

def matrix(matrix_string):
    """Parses the four entries m00,m01,m10,m11 of a 2x2 matrix."""
    entries = complex_list(matrix_string)
    if len(entries) != 4:
        raise ValueError('a 2x2 matrix needs four entries')
    return np.array(entries).reshape(2, 2)

def qubits(qubits_string):
    """Parses a comma separated list of 1-based qubit numbers."""
    try:
        return [int(item) for item in __items(qubits_string, ',')]
    except ValueError:
        raise ValueError('qubits must be given as whole numbers')

def qubit_sets(sets_string):
    """Parses qubit lists separated by semicolons, e.g. ``1,2;1,3``."""
    return [qubits(part) for part in __items(sets_string, ';')]

def named_state(name_string):
    """Parses the name of a state in the catalogue, e.g. ``ghz 3``."""
    state = __states_by_name.get(__normalise_state_name(name_string))
    if state is None:
        raise ValueError('unknown state {0!r}'.format(name_string))
    return state

# -----------------------------------------------------------------------
# Internals
# -----------------------------------------------------------------------

def __items(list_string, separator):
    items = [item.strip() for item in list_string.split(separator)]
    if not all(items):
        raise ValueError('empty entry in {0!r}'.format(list_string))
    return items

def __normalise_state_name(name):
    """Drops case, spaces and punctuation from the name."""
    return ''.join(c for c in name.lower() if c.isalnum())

__states_by_name = dict(
    (__normalise_state_name(name), getattr(majoranastates, name))
    for name in dir(majoranastates)
    if isinstance(getattr(majoranastates, name), (SymmetricState, FullState)))
