#!/usr/bin/env python3

import pytest
from lpbc.bicircular import MultiGraph
from lpbc.core import uniform
from lpbc.exceptions import ParseError, ValidationError
from lpbc.formats import parse_input, parse_text, serialize
from lpbc.latticepath import StandardPresentation
from lpbc.transversal import SetFamily


def test_parse_matroid():
    text = 'matroid 3 2\nbasis 1 2\nbasis 1 3\nbasis 2 3\n'
    assert parse_text(text) == uniform(2, 3)


def test_comments_and_blank_lines():
    text = '# a triangle\n\nmatroid 3 2  # header\nbasis 1 2\n\n' \
        'basis 2 3\nbasis 1 3\n'
    assert parse_text(text) == uniform(2, 3)


def test_parse_lpm(running_lpm):
    text = 'lpm 5 5\nP EEEENNENNN\nQ NENNENEENE\n'
    assert parse_text(text) == running_lpm


def test_parse_empty_lpm_paths():
    lpm = parse_text('lpm 0 0\nP\nQ\n')
    assert (lpm.m, lpm.r, lpm.P, lpm.Q) == (0, 0, '', '')


def test_parse_intervals(running_intervals):
    text = 'intervals 10 5\n' + ''.join(
        f'interval {l} {u}\n' for l, u in running_intervals.intervals)
    assert parse_text(text) == running_intervals


def test_parse_graph():
    graph = parse_text('graph 2\nlink 1 2\nloop 2\nfree\n')
    assert graph == MultiGraph(2, [('link', 1, 2), ('loop', 2), ('free',)])


def test_parse_family():
    family = parse_text('family 4 2\nset 1 2\nset 2 3 4\n')
    assert family == SetFamily(4, [[1, 2], [2, 3, 4]])


@pytest.mark.parametrize("text,line,column", [
    ['matroid 3 x\n', 1, 11],
    ['bogus 3 2\n', 1, 1],
    ['graph 2\nlink 1 2\nedge 1\n', 3, 1],
    ['matroid 3 2\nbasis 1 2\nset 1 3\n', 3, 1],
    ['graph 2\nlink 1\n', 2, 6],
    ['# only a comment\n\n  lpm 1\n', 3, 7],
    ['lpm 1 1\nP EN\nP NE\n', 3, 1],
    ['lpm 1 1\nP E N\nQ NE\n', 2, 5],
    ['matroid 3 2\nbasis 1 2\nbasis 3 1\n', 3, 9],
    ['matroid 3 2\nbasis 2 2\n', 2, 9],
])
def test_parse_error_position(text, line, column):
    with pytest.raises(ParseError) as e:
        parse_text(text)
    assert (e.value.line, e.value.column) == (line, column)


def test_empty_input():
    with pytest.raises(ParseError) as e:
        parse_text('# nothing\n\n')
    assert (e.value.line, e.value.column) == (1, 1)


def test_missing_path():
    with pytest.raises(ParseError) as e:
        parse_text('lpm 1 1\nP EN\n')
    assert 'missing path Q' in str(e.value)


@pytest.mark.parametrize("text", [
    'matroid 3 2\nbasis 1 2\nbasis 3\n',
    'intervals 4 2\ninterval 1 3\ninterval 1 4\n',
    'intervals 4 2\ninterval 1 3\n',
    'family 3 2\nset 1 2\n',
    'family 3 1\nset 1 4\n',
    'lpm 1 1\nP NE\nQ EN\n',
    'graph 2\nloop 3\n',
])
def test_validation_errors(text):
    with pytest.raises(ValidationError):
        parse_text(text)


@pytest.mark.parametrize("obj", [
    uniform(2, 4),
    uniform(0, 2),
    MultiGraph(3, [('link', 1, 2), ('loop', 3), ('free',)]),
    StandardPresentation(5, [(1, 3), (2, 5)]),
    SetFamily(3, [[1], [2, 3]]),
])
def test_serialize_parses_back(obj):
    assert parse_text(serialize(obj)) == obj


def test_serialize_lpm(running_lpm):
    assert serialize(running_lpm) == 'lpm 5 5\nP EEEENNENNN\nQ NENNENEENE\n'


def test_serialize_unknown():
    with pytest.raises(TypeError):
        serialize(42)


def test_parse_input_file(tmp_path):
    path = tmp_path / 'u12.txt'
    path.write_text('matroid 2 1\nbasis 1\nbasis 2\n')
    assert parse_input(str(path)) == uniform(1, 2)
