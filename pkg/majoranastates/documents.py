# -*- coding: utf-8 -*-
"""
JSON documents and CSV rows for the package's values.

States, constellations and density matrices convert both ways; degeneracy
configurations and entanglement reports are written only. Complex numbers
are split into parallel ``re`` and ``im`` lists.
"""
import csv
import json

import numpy as np

from .errors import DocumentError, NumericalError
from .state import (
    SYMMETRIC, COMPUTATIONAL, DensityMatrix, FullState, SymmetricState)
from .constellation import MajoranaConstellation, ProjectiveRoot

DICKE = 'dicke'
"""Basis name of a symmetric state document."""

CSV_COLUMNS = ('alpha', 'beta', 'multiplicity')

def _split(values):
    values = np.asarray(values, dtype=complex)
    return values.real.tolist(), values.imag.tolist()

def _joined(document):
    try:
        re = np.array(document['re'], dtype=float)
        im = np.array(document['im'], dtype=float)
    except KeyError as error:
        raise DocumentError('document is missing {0}'.format(error))
    except (TypeError, ValueError):
        raise DocumentError('re and im must be lists of numbers')
    if re.shape != im.shape:
        raise DocumentError('re and im must have the same shape')
    return re + 1j * im

def _field(document, name, kind=int):
    try:
        return kind(document[name])
    except KeyError:
        raise DocumentError('document is missing {0!r}'.format(name))
    except (TypeError, ValueError):
        raise DocumentError('document field {0!r} is malformed'.format(name))

# ----------------------------------------------------------------------------
# States.
# ----------------------------------------------------------------------------

def state_to_document(state):
    """The JSON-ready dict of a symmetric or computational state."""
    if isinstance(state, SymmetricState):
        basis, values = DICKE, state.vector
    else:
        basis, values = COMPUTATIONAL, state.vector
    re, im = _split(values)
    return {'n': state.n, 'basis': basis, 're': re, 'im': im}

def state_from_document(document):
    """Read a state document back, checking its size against ``n``."""
    n = _field(document, 'n')
    basis = _field(document, 'basis', str)
    values = _joined(document)
    if values.ndim != 1:
        raise DocumentError('state coefficients must be a flat list')
    if basis == DICKE:
        expected = n + 1
    elif basis == COMPUTATIONAL:
        expected = 2 ** n if n >= 0 else 0
    else:
        raise DocumentError('unknown state basis {0!r}'.format(basis))
    if values.size != expected:
        raise DocumentError(
            'a {0} state of {1} qubits needs {2} coefficients, '
            'got {3}'.format(basis, n, expected, values.size))
    try:
        if basis == DICKE:
            return SymmetricState(values)
        return FullState(values)
    except (ValueError, NumericalError) as error:
        raise DocumentError(str(error))

# ----------------------------------------------------------------------------
# Constellations.
# ----------------------------------------------------------------------------

def constellation_to_document(constellation):
    points = []
    for point, multiplicity in constellation.points:
        alpha, beta = point.angles
        points.append({'alpha': alpha, 'beta': beta, 'mult': multiplicity})
    return {'n': constellation.n, 'points': points}

def constellation_from_document(document):
    """Read a constellation; a point with beta = pi is the point |1>."""
    n = _field(document, 'n')
    try:
        entries = [(ProjectiveRoot.from_angles(
                _field(p, 'alpha', float), _field(p, 'beta', float)),
                _field(p, 'mult'))
            for p in document['points']]
        constellation = MajoranaConstellation(entries)
    except KeyError:
        raise DocumentError("document is missing 'points'")
    except (TypeError, ValueError) as error:
        raise DocumentError('malformed constellation: {0}'.format(error))
    if constellation.n != n:
        raise DocumentError('multiplicities do not add up to n')
    return constellation

def constellation_rows(constellation):
    """CSV rows (alpha, beta, multiplicity), one per distinct point."""
    return [(point.angles[0], point.angles[1], multiplicity)
        for point, multiplicity in constellation.points]

def write_csv(stream, rows, columns=CSV_COLUMNS):
    """Write a header line and the given rows."""
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(columns)
    for row in rows:
        writer.writerow(['{0:.12g}'.format(v) if isinstance(v, float) else v
            for v in row])

# ----------------------------------------------------------------------------
# Density matrices.
# ----------------------------------------------------------------------------

def density_to_document(rho):
    re, im = _split(rho.matrix)
    return {'dim': rho.dim, 'basis': rho.basis, 'k': rho.k,
        're': re, 'im': im}

def density_from_document(document):
    """Read a density matrix, checking ``dim`` and ``k`` for consistency."""
    dim = _field(document, 'dim')
    k = _field(document, 'k')
    basis = _field(document, 'basis', str)
    matrix = _joined(document)
    if matrix.shape != (dim, dim):
        raise DocumentError('matrix entries do not match dim')
    try:
        rho = DensityMatrix(matrix, basis)
    except ValueError as error:
        raise DocumentError(str(error))
    if rho.k != k:
        raise DocumentError('k does not match the matrix dimension')
    return rho

# ----------------------------------------------------------------------------
# Results.
# ----------------------------------------------------------------------------

def configuration_to_document(configuration):
    return {'n': configuration.n,
        'multiplicities': list(configuration.multiplicities),
        'diversity': configuration.diversity,
        'label': configuration.label}

def report_to_document(report):
    """The entanglement report without its optional landscape."""
    return {'eg': report.eg, 'log_eg': report.log_eg,
        'cpps': [{'alpha': p.alpha, 'beta': p.beta} for p in report.cpps],
        'ring': bool(report.ring)}

# ----------------------------------------------------------------------------
# Text.
# ----------------------------------------------------------------------------

def loads(text):
    """Parse JSON text, reporting syntax errors as ``DocumentError``."""
    try:
        return json.loads(text)
    except ValueError as error:
        raise DocumentError('malformed JSON: {0}'.format(error))

def dumps(document):
    return json.dumps(document, indent=2, sort_keys=True)

def value_from_document(document):
    """Read whichever kind of value the document describes."""
    if not isinstance(document, dict):
        raise DocumentError('a document must be a JSON object')
    if 'points' in document:
        return constellation_from_document(document)
    if 'dim' in document:
        return density_from_document(document)
    return state_from_document(document)
