# -*- coding: utf-8 -*-
"""
The ``majoranastates`` command line.

Commands read and write JSON documents (see :mod:`majoranastates.documents`),
so their output can be piped into one another::

    majoranastates gen ghz --n 3 | majoranastates classify
    majoranastates gen dicke --n 3 --l 2 | majoranastates points --csv

Exit codes: 0 on success, 1 when ``table1`` finds a mismatch, 2 for
malformed input, 3 when a computation fails numerically.
"""
import sys
import logging
import argparse

import numpy as np

from . import tolerances
from . import documents
from . import parse
from . import reference
from .errors import NumericalError
from .state import (
    SymmetricState, dicke_state, ghz_state, project_to_symmetric,
    random_full_state, random_symmetric_state)
from .constellation import euler_rotation, majorana_points, su2_rotate
from .slocc import apply_ilo, classify
from .marginals import (
    AMBIGUOUS, dnk_state, generalized_dicke_state, marginal_match_search,
    rdm_full, rdm_symmetric, reconstruct_from_two_marginals)
from .geomeasure import geometric_measure, landscape

log = logging.getLogger(__name__)

# ----------------------------------------------------------------------------
# Input and output.
# ----------------------------------------------------------------------------

def _read(path, stdin):
    if path == '-':
        text = stdin.read()
    else:
        with open(path) as source:
            text = source.read()
    return documents.value_from_document(documents.loads(text))

def _read_state(path, stdin):
    value = _read(path, stdin)
    if not hasattr(value, 'n') or hasattr(value, 'points'):
        raise ValueError('expected a state document')
    return value

def _read_density(path, stdin):
    value = _read(path, stdin)
    if not hasattr(value, 'matrix'):
        raise ValueError('expected a density matrix document')
    return value

def _symmetric(state, tolerance):
    """The state itself, or a computational state that is symmetric."""
    if isinstance(state, SymmetricState):
        return state
    symmetric, residual = project_to_symmetric(state)
    if residual > tolerance:
        raise ValueError('state is not permutation symmetric')
    return symmetric

def _read_symmetric(path, stdin, tolerance):
    return _symmetric(_read_state(path, stdin), tolerance)

def _options(args, **names):
    """Keyword arguments for the global flags that were given."""
    return dict((keyword, getattr(args, flag))
        for keyword, flag in names.items()
        if getattr(args, flag) is not None)

# ----------------------------------------------------------------------------
# Commands.
# ----------------------------------------------------------------------------

def _gen(args, stdin, out):
    rng = np.random.default_rng(args.seed)
    if args.kind == 'ghz':
        state = ghz_state(args.n)
    elif args.kind == 'dicke':
        state = dicke_state(args.n, args.l)
    elif args.kind == 'dnk':
        state = dnk_state(args.n, args.k,
            parse.complex_number(args.d0), parse.complex_number(args.d1))
    elif args.kind == 'gdicke':
        state = generalized_dicke_state(args.n, args.k,
            parse.complex_list(args.alphas),
            parse.ragged_list(args.coefficients))
    elif args.kind == 'random':
        if args.full:
            state = random_full_state(args.n, rng)
        else:
            state = random_symmetric_state(args.n, rng, args.vanishing)
    else:
        state = parse.named_state(args.name)
    out.write(documents.dumps(documents.state_to_document(state)) + '\n')

def _points(args, stdin, out):
    state = _read_symmetric(args.state, stdin, args.tol)
    constellation = majorana_points(state, args.cluster_tol)
    if args.csv:
        documents.write_csv(out, documents.constellation_rows(constellation))
    else:
        out.write(documents.dumps(
            documents.constellation_to_document(constellation)) + '\n')

def _classify(args, stdin, out):
    state = _read_symmetric(args.state, stdin, args.tol)
    configuration = classify(state, args.cluster_tol)
    if args.json:
        out.write(documents.dumps(
            documents.configuration_to_document(configuration)) + '\n')
    else:
        out.write('{0} diversity {1}\n'.format(
            configuration.label, configuration.diversity))

def _rotate(args, stdin, out):
    state = _read_symmetric(args.state, stdin, args.tol)
    rotated = su2_rotate(state, euler_rotation(*args.euler),
        cluster_tol=args.cluster_tol)
    out.write(documents.dumps(documents.state_to_document(rotated)) + '\n')

def _ilo(args, stdin, out):
    state = _read_symmetric(args.state, stdin, args.tol)
    result = apply_ilo(state, parse.matrix(args.matrix), args.cluster_tol)
    out.write(documents.dumps(documents.state_to_document(result)) + '\n')

def _rdm(args, stdin, out):
    state = _read_state(args.state, stdin)
    keep = parse.qubits(args.keep)
    if args.dicke:
        rho = rdm_symmetric(_symmetric(state, args.tol), len(keep))
    else:
        rho = rdm_full(state, keep)
    out.write(documents.dumps(documents.density_to_document(rho)) + '\n')

def _reconstruct(args, stdin, out):
    rho_a = _read_density(args.rho_a, stdin)
    rho_b = _read_density(args.rho_b, stdin)
    result = reconstruct_from_two_marginals(rho_a, rho_b,
        seed=args.seed, parallel=args.parallel,
        **_options(args, restarts='restarts'))
    if result is AMBIGUOUS:
        out.write(AMBIGUOUS + '\n')
    else:
        out.write(documents.dumps(documents.state_to_document(result)) + '\n')

def _falsify(args, stdin, out):
    state = _read_state(args.state, stdin)
    targets = [(keep, rdm_full(state, keep))
        for keep in parse.qubit_sets(args.marginals)]
    found = marginal_match_search(targets, state.n, seed=args.seed,
        parallel=args.parallel, **_options(args, restarts='restarts'))
    out.write(documents.dumps({'count': len(found),
        'states': [documents.state_to_document(s) for s in found]}) + '\n')

def _entangle(args, stdin, out):
    state = _read_symmetric(args.state, stdin, args.tol)
    report = geometric_measure(state, parallel=args.parallel,
        **_options(args, grid='grid'))
    if args.json:
        out.write(documents.dumps(documents.report_to_document(report)) + '\n')
        return
    out.write('eg {0:.12g}\n'.format(report.eg))
    out.write('log_eg {0:.12g}\n'.format(report.log_eg))
    out.write('ring {0}\n'.format('yes' if report.ring else 'no'))
    for point in report.cpps:
        out.write('cpp {0:.12g} {1:.12g}\n'.format(point.alpha, point.beta))

def _landscape(args, stdin, out):
    state = _read_symmetric(args.state, stdin, args.tol)
    grid = args.landscape_grid or args.grid or tolerances.GRID
    documents.write_csv(out, landscape(state, grid), ('alpha', 'beta', 'F'))

def _table1(args, stdin, out):
    checks = reference.check_rows(args.cluster_tol)
    failures = 0
    for check in checks:
        ok = reference.passed(check, args.tol)
        failures += not ok
        out.write('{0:<28} {1}  polynomial {2:.1e}  points {3:.1e}  '
            'expansion {4:.1e}\n'.format(check.label,
                'ok  ' if ok else 'FAIL', check.polynomial_error,
                check.points_error, check.expansion_error))
    return 1 if failures else 0

# ----------------------------------------------------------------------------
# Parser.
# ----------------------------------------------------------------------------

def _state_argument(parser):
    parser.add_argument('state', nargs='?', default='-',
        help='state JSON file, or - for standard input (the default)')

def build_parser():
    """The argument parser for every command."""
    parser = argparse.ArgumentParser(prog='majoranastates',
        description='Majorana representation of symmetric qubit states.')
    parser.add_argument('--tol', type=float, default=tolerances.TOLERANCE,
        help='tolerance for invariants and checks')
    parser.add_argument('--cluster-tol', type=float,
        default=tolerances.CLUSTER_TOLERANCE,
        help='chordal distance merging Majorana points')
    parser.add_argument('--seed', type=int, default=None,
        help='seed for random states and multistart searches')
    parser.add_argument('--grid', type=int, default=None,
        help='coarse grid points per angle (default {0})'.format(
            tolerances.GRID))
    parser.add_argument('--restarts', type=int, default=None,
        help='random starts for fits (default {0})'.format(
            tolerances.RESTARTS))
    parser.add_argument('--parallel', action='store_true',
        help='run independent optimisation starts on a thread pool')
    parser.add_argument('-v', '--verbose', action='store_true',
        help='log debugging information')
    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True

    gen = commands.add_parser('gen', help='write a state document')
    kinds = gen.add_subparsers(dest='kind', metavar='kind')
    kinds.required = True
    ghz = kinds.add_parser('ghz', help='GHZ state')
    ghz.add_argument('--n', type=int, required=True)
    dicke = kinds.add_parser('dicke', help='Dicke state')
    dicke.add_argument('--n', type=int, required=True)
    dicke.add_argument('--l', type=int, required=True,
        help='number of qubits in |1>')
    dnk = kinds.add_parser('dnk',
        help='n-k spinors |0> and k spinors d0|0> + d1|1>')
    dnk.add_argument('--n', type=int, required=True)
    dnk.add_argument('--k', type=int, required=True)
    dnk.add_argument('--d0', required=True)
    dnk.add_argument('--d1', required=True)
    gdicke = kinds.add_parser('gdicke', help='generalized Dicke state')
    gdicke.add_argument('--n', type=int, required=True)
    gdicke.add_argument('--k', type=int, required=True)
    gdicke.add_argument('--alphas', required=True,
        help='weights for 0..k excitations, comma separated')
    gdicke.add_argument('--coefficients', required=True,
        help='coefficient lists for 0..k excitations, separated by ;')
    random = kinds.add_parser('random', help='random state')
    random.add_argument('--n', type=int, required=True)
    random.add_argument('--full', action='store_true',
        help='a general rather than a symmetric state')
    random.add_argument('--vanishing', type=int, default=0,
        help='number of trailing Dicke coefficients set to zero')
    named = kinds.add_parser('named', help='state from the catalogue')
    named.add_argument('name')
    gen.set_defaults(handler=_gen)

    points = commands.add_parser('points', help='Majorana constellation',
        description='Writes the constellation as JSON, or with --csv as '
            'rows of alpha, beta (radians) and multiplicity.')
    _state_argument(points)
    points.add_argument('--csv', action='store_true')
    points.set_defaults(handler=_points)

    classify_ = commands.add_parser('classify',
        help='degeneracy configuration')
    _state_argument(classify_)
    classify_.add_argument('--json', action='store_true')
    classify_.set_defaults(handler=_classify)

    rotate = commands.add_parser('rotate',
        help='rotate every qubit by Rz(a) Ry(b) Rz(c)')
    _state_argument(rotate)
    rotate.add_argument('--euler', type=float, nargs=3, required=True,
        metavar=('A', 'B', 'C'))
    rotate.set_defaults(handler=_rotate)

    ilo = commands.add_parser('ilo',
        help='apply one invertible matrix to every qubit')
    _state_argument(ilo)
    ilo.add_argument('--matrix', required=True, help='m00,m01,m10,m11')
    ilo.set_defaults(handler=_ilo)

    rdm = commands.add_parser('rdm', help='reduced density matrix')
    _state_argument(rdm)
    rdm.add_argument('--keep', required=True,
        help='1-based qubits to keep, comma separated')
    rdm.add_argument('--dicke', action='store_true',
        help='give the matrix in the Dicke basis of the kept qubits')
    rdm.set_defaults(handler=_rdm)

    reconstruct = commands.add_parser('reconstruct',
        help='state from marginals of qubits 1..N-1 and 2..N')
    reconstruct.add_argument('rho_a')
    reconstruct.add_argument('rho_b')
    reconstruct.set_defaults(handler=_reconstruct)

    falsify = commands.add_parser('falsify',
        help='search for other states sharing marginals')
    _state_argument(falsify)
    falsify.add_argument('--marginals', required=True,
        help='qubit sets separated by ;, e.g. 1,2;1,3')
    falsify.set_defaults(handler=_falsify)

    entangle = commands.add_parser('entangle',
        help='geometric measure of entanglement')
    _state_argument(entangle)
    entangle.add_argument('--json', action='store_true')
    entangle.set_defaults(handler=_entangle)

    landscape_ = commands.add_parser('landscape',
        help='squared coherent overlaps on a grid',
        description='Writes CSV rows of alpha, beta (radians) and the '
            'squared overlap F with the coherent state in that direction.')
    _state_argument(landscape_)
    landscape_.add_argument('--grid', dest='landscape_grid', type=int,
        default=None)
    landscape_.set_defaults(handler=_landscape)

    table1 = commands.add_parser('table1',
        help='recompute the worked two and three qubit examples')
    table1.set_defaults(handler=_table1)
    return parser

def run(argv=None, stdin=None, stdout=None, stderr=None):
    """Run one command, returning its exit code."""
    stdin = sys.stdin if stdin is None else stdin
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as error:
        return error.code

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format='%(levelname)s %(name)s: %(message)s', stream=stderr,
        force=True)
    logging.captureWarnings(True)
    log.debug('running %s', args.command)
    try:
        return args.handler(args, stdin, stdout) or 0
    except ValueError as error:
        stderr.write('majoranastates: error: {0}\n'.format(error))
        return 2
    except NumericalError as error:
        stderr.write('majoranastates: numerical failure: {0}\n'.format(error))
        return 3
    except OSError as error:
        stderr.write('majoranastates: error: {0}\n'.format(error))
        return 2

def main():
    sys.exit(run())
