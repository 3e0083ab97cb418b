#!/usr/bin/env python3

import sys
from argparse import ArgumentParser
from lpbc import catalog
from lpbc.bicircular import MultiGraph, bicircular_matroid, is_bicircular
from lpbc.classifier import enumerate_bicircular_corpus, \
    enumerate_lpm_corpus, member_direct, member_theorem1, verify_theorem1
from lpbc.config import settings
from lpbc.core import BasisMatroid, uniform
from lpbc.exceptions import BadParameters, MatroidError
from lpbc.formats import parse_input, serialize
from lpbc.golden import GoldenStore
from lpbc.latticepath import LatticePathPresentation, StandardPresentation, \
    is_lattice_path, matroid_of_lpm, matroid_of_standard
from lpbc.transversal import SetFamily, matroid_of_family
from lpbc.util import MsgType, format_elements, msg, parse_elements

REPRESENTATIONS = ('matroid', 'bicircular-graph', 'lattice-path',
                   'family-formula', 'geometric-note')


def as_matroid(obj):
    if isinstance(obj, BasisMatroid):
        return obj
    if isinstance(obj, MultiGraph):
        return bicircular_matroid(obj)
    if isinstance(obj, LatticePathPresentation):
        return matroid_of_lpm(obj)
    if isinstance(obj, StandardPresentation):
        return matroid_of_standard(obj)
    if isinstance(obj, SetFamily):
        return matroid_of_family(obj)
    raise TypeError(f'No matroid for {type(obj).__name__}.')


def read_matroid(args):
    return as_matroid(parse_input(args.file))


def boolean(value):
    return str(bool(value)).lower()


def parser():
    parser = ArgumentParser(
        prog='lpbc',
        description='Bicircular and lattice path matroids, and the '
                    'excluded minors for their intersection.')
    parser.add_argument(
        '--node-budget', dest='node_budget', type=int,
        help='Search nodes allowed per decision')
    parser.add_argument(
        '--max-elements', dest='max_elements', type=int,
        help='Largest ground set a decision accepts')
    parser.add_argument(
        '--seed', dest='seed', type=int,
        help='Accepted for reproducible scripts; every search is '
             'deterministic')
    verbs = parser.add_subparsers(dest='verb', required=True)

    construct = verbs.add_parser('construct', help='Emit a named matroid')
    which = construct.add_mutually_exclusive_group(required=True)
    which.add_argument('--uniform', nargs=2, type=int, metavar=('R', 'N'))
    which.add_argument('--family', choices=catalog.FAMILIES)
    which.add_argument('--lpm', nargs=2, type=int, metavar=('M', 'R'),
                       help='Full m x r grid, or the region of --paths')
    which.add_argument('--catalog', metavar='NAME')
    construct.add_argument('--n', type=int)
    construct.add_argument('--k', type=int)
    construct.add_argument('--paths', nargs=2, metavar=('P', 'Q'))

    for verb, text in (('bases', 'List bases'),
                       ('circuits', 'List circuits'),
                       ('dual', 'Emit the dual')):
        sub = verbs.add_parser(verb, help=text)
        sub.add_argument('file', nargs='?', default='-')

    rank = verbs.add_parser('rank', help='Rank of the matroid or of a set')
    rank.add_argument('file', nargs='?', default='-')
    rank.add_argument('--set', dest='subset', default=None)

    minor = verbs.add_parser('minor', help='Emit M / contract \\ delete')
    minor.add_argument('file', nargs='?', default='-')
    minor.add_argument('--contract', default=None)
    minor.add_argument('--delete', default=None)

    check = verbs.add_parser('check', help='Decide class membership')
    check.add_argument('file', nargs='?', default='-')
    what = check.add_mutually_exclusive_group(required=True)
    what.add_argument('--class', dest='klass', choices=('lpbc',))
    what.add_argument('--lattice-path', dest='lattice_path',
                      action='store_true')
    what.add_argument('--bicircular', action='store_true')
    check.add_argument('--method', choices=('theorem1', 'direct'),
                       default='theorem1')

    listing = verbs.add_parser('catalog', help='The 19 excluded minors')
    listing.add_argument('action', choices=('list', 'emit'))
    listing.add_argument('name', nargs='?')
    listing.add_argument('--as', dest='kind', choices=REPRESENTATIONS,
                         default='matroid')

    corpus = verbs.add_parser('corpus', help='Emit a deduplicated corpus')
    corpus.add_argument('kind', choices=('lpm', 'bicircular'))
    corpus.add_argument('--max-n', dest='max_n', type=int)
    corpus.add_argument('--max-edges', dest='max_edges', type=int)
    corpus.add_argument('--max-vertices', dest='max_vertices', type=int)

    verify = verbs.add_parser('verify', help='Run the verification harness')
    verify.add_argument('what', choices=('theorem1',))
    verify.add_argument('--golden', default=None,
                        help='Golden basis file, defaults to golden_path')
    verify.add_argument('--no-golden', dest='no_golden',
                        action='store_true')
    verify.add_argument('--lpm-elements', dest='lpm_elements', type=int)
    verify.add_argument('--bicircular-edges', dest='bicircular_edges',
                        type=int)
    verify.add_argument('--bicircular-vertices',
                        dest='bicircular_vertices', type=int)
    return parser


def construct(args):
    if args.uniform:
        return uniform(*args.uniform)
    if args.family:
        if args.n is None:
            raise BadParameters(args.family, (args.n, args.k))
        return catalog.family(args.family, args.n, args.k)
    if args.catalog:
        return catalog.get(args.catalog).matroid
    m, r = args.lpm
    if args.paths:
        P, Q = args.paths
    else:
        P, Q = 'E' * m + 'N' * r, 'N' * r + 'E' * m
    return matroid_of_lpm(LatticePathPresentation(m, r, P, Q))


def check(args):
    matroid = read_matroid(args)
    if args.lattice_path:
        lattice, witness = is_lattice_path(matroid)
        print(f'lattice-path {boolean(lattice)}')
        if witness is not None:
            print('\n'.join(witness.lines()))
        return 0 if lattice else 1
    if args.bicircular:
        graph = is_bicircular(matroid)
        print(f'bicircular {boolean(graph is not None)}')
        if graph is not None:
            print(serialize(graph), end='')
        return 0 if graph is not None else 1
    if args.method == 'direct':
        verdict = member_direct(matroid)
    else:
        verdict = member_theorem1(matroid)
    print('\n'.join(verdict.lines()))
    return 0 if verdict.member else 1


def emit(args):
    entry = catalog.get(args.name)
    if args.kind == 'matroid':
        print(serialize(entry.matroid), end='')
        return 0
    payload = entry.representation(args.kind)
    if payload is None:
        msg(f'{entry.name} has no {args.kind} representation',
            MsgType.FAILURE)
        return 1
    if args.kind == 'family-formula':
        print(payload[0])
    elif args.kind == 'geometric-note':
        print(payload)
    else:
        print(serialize(payload), end='')
    return 0


def corpus(args):
    if args.kind == 'lpm':
        stream = enumerate_lpm_corpus(args.max_n)
    else:
        stream = enumerate_bicircular_corpus(args.max_edges,
                                             args.max_vertices)
    for index, matroid in enumerate(stream):
        if index:
            print()
        print(serialize(matroid), end='')
    return 0


def verify(args):
    store = None
    if not args.no_golden:
        store = GoldenStore(args.golden or settings()['golden_path'])
    report = verify_theorem1(
        lpm_elements=args.lpm_elements,
        bicircular_edges=args.bicircular_edges,
        bicircular_vertices=args.bicircular_vertices,
        store=store)
    print('\n'.join(report.lines()))
    for failure in report.failures:
        if failure.serialized:
            msg(failure.line(), MsgType.FAILURE)
            print(failure.serialized, file=sys.stderr, end='')
    return 0 if report.passed else 1


def run(args):
    if args.verb == 'construct':
        print(serialize(construct(args)), end='')
    elif args.verb == 'bases':
        for b in read_matroid(args).bases:
            print(format_elements(b))
    elif args.verb == 'circuits':
        for c in read_matroid(args).circuits:
            print(format_elements(c))
    elif args.verb == 'rank':
        matroid = read_matroid(args)
        if args.subset is None:
            print(f'rank {matroid.r}')
        else:
            print(f'rank {matroid.rank_of(parse_elements(args.subset))}')
    elif args.verb == 'dual':
        print(serialize(read_matroid(args).dual()), end='')
    elif args.verb == 'minor':
        matroid = read_matroid(args).minor(
            parse_elements(args.contract), parse_elements(args.delete))
        print(serialize(matroid), end='')
    elif args.verb == 'check':
        return check(args)
    elif args.verb == 'catalog' and args.action == 'list':
        for entry in catalog.theorem1_list():
            print(catalog.describe(entry))
    elif args.verb == 'catalog':
        return emit(args)
    elif args.verb == 'corpus':
        return corpus(args)
    elif args.verb == 'verify':
        return verify(args)
    return 0


def main(argv=None):
    args = parser().parse_args(argv)

    config = settings()
    if args.node_budget is not None:
        config['node_budget'] = args.node_budget
    if args.max_elements is not None:
        config['max_elements'] = args.max_elements

    try:
        code = run(args)
    except MatroidError as e:
        print(f'{type(e).__name__}: {str(e)}', file=sys.stderr)
        sys.exit(2)
    sys.exit(code)
