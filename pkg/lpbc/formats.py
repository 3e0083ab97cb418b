#!/usr/bin/env python3

import re
import sys
from lpbc.bicircular import MultiGraph
from lpbc.core import BasisMatroid, from_bases
from lpbc.exceptions import ParseError, ValidationError
from lpbc.latticepath import LatticePathPresentation, StandardPresentation
from lpbc.transversal import SetFamily
from lpbc.util import format_elements

HEADERS = {
    'matroid': 2,
    'graph': 1,
    'lpm': 2,
    'intervals': 2,
    'family': 2,
}

TOKEN = re.compile(r'\S+')


class Line():
    def __init__(self, number, text):
        self.number = number
        self.tokens = [(m.start() + 1, m.group())
                       for m in TOKEN.finditer(text)]

    @property
    def keyword(self):
        return self.tokens[0][1]

    @property
    def args(self):
        return self.tokens[1:]

    def fail(self, column, message):
        raise ParseError(self.number, column, message)

    def integers(self, count=None):
        if count is not None and len(self.args) != count:
            column = self.args[count][0] if len(self.args) > count \
                else self.tokens[-1][0]
            self.fail(column, f'{self.keyword} takes {count} values, '
                      f'got {len(self.args)}')
        out = []
        for column, token in self.args:
            if not token.isdigit():
                self.fail(column, f'expected an integer, got {token!r}')
            out.append(int(token))
        return out


def lines_of(text):
    out = []
    for number, raw in enumerate(text.splitlines(), 1):
        raw = raw.split('#', 1)[0]
        if raw.strip():
            out.append(Line(number, raw))
    return out


def body(lines, keyword):
    for line in lines:
        if line.keyword != keyword:
            line.fail(line.tokens[0][0],
                      f'expected {keyword!r}, got {line.keyword!r}')
    return lines


def parse_text(text):
    lines = lines_of(text)
    if not lines:
        raise ParseError(1, 1, 'empty input')
    header, rest = lines[0], lines[1:]
    if header.keyword not in HEADERS:
        header.fail(header.tokens[0][0], f'unknown format {header.keyword!r}')
    values = header.integers(HEADERS[header.keyword])
    return PARSERS[header.keyword](values, rest)


def parse_input(path=None):
    """Read `path` (or stdin for None and '-') and parse its first object."""
    if path is None or path == '-':
        return parse_text(sys.stdin.read())
    with open(path, 'r') as f:
        return parse_text(f.read())


def parse_matroid(values, lines):
    n, r = values
    bases = [line.integers() for line in body(lines, 'basis')]
    for line, basis in zip(lines, bases):
        for (column, _), a, b in zip(line.args[1:], basis, basis[1:]):
            if a >= b:
                line.fail(column, 'basis elements must strictly increase')
        if len(basis) != r:
            raise ValidationError(
                f'line {line.number}: basis has {len(basis)} elements, '
                f'rank is {r}.')
    return from_bases(n, bases)


def parse_graph(values, lines):
    v, = values
    edges = []
    for line in lines:
        if line.keyword == 'link':
            a, b = line.integers(2)
            edges.append(('link', a, b))
        elif line.keyword == 'loop':
            a, = line.integers(1)
            edges.append(('loop', a))
        elif line.keyword == 'free':
            line.integers(0)
            edges.append(('free',))
        else:
            line.fail(line.tokens[0][0],
                      f'expected link, loop or free, got {line.keyword!r}')
    return MultiGraph(v, edges)


def parse_lpm(values, lines):
    m, r = values
    paths = {}
    for line in lines:
        if line.keyword not in ('P', 'Q') or line.keyword in paths:
            line.fail(line.tokens[0][0],
                      f'unexpected {line.keyword!r} in lpm block')
        if len(line.args) > 1:
            line.fail(line.args[1][0], 'a path is a single word')
        paths[line.keyword] = line.args[0][1] if line.args else ''
    for name in ('P', 'Q'):
        if name not in paths:
            raise ParseError(
                lines[-1].number if lines else 1, 1, f'missing path {name}')
    return LatticePathPresentation(m, r, paths['P'], paths['Q'])


def parse_intervals(values, lines):
    n, r = values
    intervals = [tuple(line.integers(2))
                 for line in body(lines, 'interval')]
    if len(intervals) != r:
        raise ValidationError(
            f'Expected {r} intervals, found {len(intervals)}.')
    return StandardPresentation(n, intervals)


def parse_family(values, lines):
    n, r = values
    sets = [line.integers() for line in body(lines, 'set')]
    if len(sets) != r:
        raise ValidationError(f'Expected {r} sets, found {len(sets)}.')
    for line, members in zip(lines, sets):
        for e in members:
            if not 1 <= e <= n:
                raise ValidationError(
                    f'line {line.number}: element {e} is outside 1..{n}.')
    return SetFamily(n, sets)


PARSERS = {
    'matroid': parse_matroid,
    'graph': parse_graph,
    'lpm': parse_lpm,
    'intervals': parse_intervals,
    'family': parse_family,
}


def words(head, mask):
    return f'{head} {format_elements(mask)}'.rstrip()


def serialize(obj):
    """Text form of any parseable object, newline-terminated."""
    if isinstance(obj, BasisMatroid):
        out = [f'matroid {obj.n} {obj.r}']
        out += [words('basis', b) for b in obj.bases]
    elif isinstance(obj, MultiGraph):
        out = [f'graph {obj.v}']
        out += [' '.join(str(part) for part in edge) for edge in obj.edges]
    elif isinstance(obj, LatticePathPresentation):
        out = [f'lpm {obj.m} {obj.r}', f'P {obj.P}'.rstrip(),
               f'Q {obj.Q}'.rstrip()]
    elif isinstance(obj, StandardPresentation):
        out = [f'intervals {obj.n} {obj.r}']
        out += [f'interval {l} {u}' for l, u in obj.intervals]
    elif isinstance(obj, SetFamily):
        out = [f'family {obj.n} {len(obj.sets)}']
        out += [words('set', s) for s in obj.sets]
    else:
        raise TypeError(f'Cannot serialize {type(obj).__name__}.')
    return '\n'.join(out) + '\n'

