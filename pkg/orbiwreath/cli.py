"""
Command-line front door

    orbiwreath verify <theorem> --config run.json [--json report.json]
    orbiwreath compute <what> --config run.json

Exit codes: 0 pass, 1 identity mismatch, 2 usage or config error, 3 cap exceeded.
"""
import argparse
import sys
from json import dump

from six.moves import range

import orbiwreath
from .config import RunConfig
from .exception import CapExceeded, Error, UnsupportedSource
from .groups import clear_caches, conjugacy_classes, subgroup_lattice, wreath_product
from .identities import (THEOREMS, lhs_series, rhs_es_exp, rhs_euler_product, rhs_master_product,
                         verify)
from .presentations import count_index_n_subgroups, count_index_n_subgroups_by_actions, hom_classes
from .rationals import format_rational
from .sectors import eta_split, gamma_extension, gamma_extension_wreath

EXIT_PASS = 0
EXIT_MISMATCH = 1
EXIT_CONFIG = 2
EXIT_CAP = 3

COMPUTATIONS = ('extension', 'lhs', 'rhs', 'subgroup-counts', 'group-info', 'sectors')


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config', required=True, metavar='PATH', help='JSON run configuration')
    common.add_argument('--json', metavar='PATH', help='also write the result as JSON')
    common.add_argument('--truncation', type=int, metavar='N', help='override the series truncation T')
    common.add_argument('--threads', type=int, metavar='K', help='enumeration workers (default: all cores)')
    common.add_argument('--cap-order', type=int, metavar='N', help='largest group order to build')
    common.add_argument('--cap-nodes', type=int, metavar='N', help='largest homomorphism search size')
    common.add_argument('--invariant', choices=('euler', 'euler_satake'), help='override the invariant')
    common.add_argument('-v', '--verbose', action='count', default=0, help='log progress (-vv for debug)')
    common.add_argument('--log-file', metavar='PATH', help='write the log to a file')

    parser = argparse.ArgumentParser(prog='orbiwreath', description='Gamma-sector extensions of orbifold '
                                     'Euler characteristics and their generating-function identities')
    parser.add_argument('--version', action='version', version='%(prog)s {}'.format(orbiwreath.__version__))
    commands = parser.add_subparsers(dest='command')
    commands.required = True
    verify_parser = commands.add_parser('verify', parents=[common], help='verify an identity up to q^T')
    verify_parser.add_argument('theorem', choices=THEOREMS)
    compute_parser = commands.add_parser('compute', parents=[common], help='print one computed quantity')
    compute_parser.add_argument('what', choices=COMPUTATIONS)
    return parser


def main(argv=None, stream=None):
    """
    Runs the command line and returns the exit code

    :param argv: arguments without the program name, defaults to sys.argv[1:]
    :param stream: text output, defaults to sys.stdout
    :rtype: int
    """
    stream = stream or sys.stdout
    args = build_parser().parse_args(argv)
    if args.verbose:
        orbiwreath.logger.level = 'DEBUG' if args.verbose > 1 else 'INFO'
    if args.log_file:
        orbiwreath.logger.filename = args.log_file
    try:
        config = RunConfig.load(args.config).override(truncation=args.truncation, threads=args.threads,
                                                      cap_order=args.cap_order, cap_nodes=args.cap_nodes,
                                                      invariant=args.invariant)
        with config.applied():
            if args.command == 'verify':
                return cmd_verify(config, args.theorem, json_path=args.json, stream=stream)
            return cmd_compute(config, args.what, json_path=args.json, stream=stream)
    except CapExceeded as e:
        sys.stderr.write('cap exceeded: {}\n'.format(e))
        return EXIT_CAP
    except (Error, ValueError, TypeError) as e:
        sys.stderr.write('error: {}\n'.format(e))
        return EXIT_CONFIG
    finally:
        clear_caches()


def cmd_verify(config, theorem, json_path=None, stream=None):
    """
    Verifies one identity for a run configuration

    :rtype: int
    """
    stream = stream or sys.stdout
    report = verify(theorem, config.presentation, config.descriptor, config.require_truncation(),
                    inv=config.invariant, source=config.abstract)
    stream.write('{}\n'.format(report))
    if json_path:
        report.save(json_path)
    return EXIT_PASS if report.passed else EXIT_MISMATCH


def cmd_compute(config, what, json_path=None, stream=None):
    """
    Prints one of COMPUTATIONS for a run configuration

    :rtype: int
    """
    stream = stream or sys.stdout
    if what not in COMPUTATIONS:
        raise ValueError('unknown computation {!r}'.format(what))
    result = _COMPUTE[what](config)
    stream.write('\n'.join(result.pop('lines')) + '\n')
    if json_path:
        with open(json_path, 'w') as f:
            dump(result, f, indent=4, sort_keys=True)
    return EXIT_PASS


# private

def _extension(config):
    degree = config.options.get('degree')
    if degree is None:
        result = gamma_extension(config.invariant, config.presentation, config.descriptor)
    else:
        result = gamma_extension_wreath(config.invariant, config.presentation, config.descriptor, degree)
    lines = [format_rational(result.value)]
    for images, size, fixed, order, value in result.rows:
        lines.append('  {} size={} chi={} |C|={} value={}'.format(images, size, fixed, order, value))
    return {'what': 'extension', 'invariant': str(config.invariant), 'value': format_rational(result.value),
            'terms': [list(row) for row in result.rows], 'lines': lines}


def _lhs(config):
    series = lhs_series(config.invariant, config.presentation, config.descriptor, config.require_truncation())
    return {'what': 'lhs', 'coefficients': series.to_json(), 'lines': [' '.join(series.to_json())]}


def _rhs(config):
    gamma, truncation = config.presentation, config.require_truncation()
    source = config.abstract or config.descriptor
    if config.options.get('master'):
        series = rhs_master_product(config.invariant, gamma, source, truncation)
    elif config.invariant.is_euler:
        series = rhs_euler_product(gamma, source, truncation)
    else:
        series = rhs_es_exp(gamma, source, truncation)
    return {'what': 'rhs', 'coefficients': series.to_json(), 'lines': [' '.join(series.to_json())]}


def _subgroup_counts(config):
    gamma = config.presentation
    counts = []
    for n in range(1, config.require_truncation() + 1):
        try:
            counts.append(count_index_n_subgroups(gamma, n))
        except UnsupportedSource:
            counts.append(count_index_n_subgroups_by_actions(gamma, n))
    lines = ['{} {}'.format(n, c) for n, c in enumerate(counts, 1)]
    return {'what': 'subgroup-counts', 'counts': counts, 'lines': lines}


def _group_info(config):
    group = config.group
    info = {'what': 'group-info', 'name': group.name, 'order': group.order,
            'classes': len(conjugacy_classes(group)), 'abelian': group.is_abelian,
            'generators': [group.label(g) for g in group.generators]}
    if group.order <= orbiwreath.subgroup_cap:
        info['subgroup_classes'] = len(subgroup_lattice(group).classes)
    info['lines'] = ['{}: {}'.format(key, info[key]) for key in
                     ('name', 'order', 'classes', 'abelian', 'generators', 'subgroup_classes') if key in info]
    return info


def _sectors(config):
    gamma, desc = config.presentation, config.descriptor
    degree = config.require_truncation()
    wreath = wreath_product(desc.group, degree)
    with_rho = gamma.kind != 'presented'
    lines = []
    sectors = []
    for c in hom_classes(gamma, wreath):
        split = eta_split(c.representative, with_rho=with_rho)
        chi = split.recombine(desc)
        sectors.append({'representative': list(c.images), 'size': c.size, 'indices': split.indices,
                        'fixed_chi': chi})
        lines.append('{} size={} orbits={} chi={}'.format(
            ' '.join(wreath.label(x) for x in c.images), c.size, split.indices, chi))
    return {'what': 'sectors', 'degree': degree, 'sectors': sectors, 'lines': lines}


_COMPUTE = {'extension': _extension, 'lhs': _lhs, 'rhs': _rhs, 'subgroup-counts': _subgroup_counts,
            'group-info': _group_info, 'sectors': _sectors}
