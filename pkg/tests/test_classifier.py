#!/usr/bin/env python3

import pytest
from lpbc import catalog
from lpbc.classifier import Check, IsomorphismClasses, Report, \
    enumerate_bicircular_corpus, enumerate_lpm_corpus, family_reductions, \
    graph_multisets, lattice_paths, lpm_presentations, member_direct, \
    member_theorem1, names_entry, stays_below, targets, verify_groups, \
    verify_theorem1
from lpbc.core import uniform
from lpbc.exceptions import GroundSetTooLarge, VerificationFailure
from lpbc.isomin import MinorWitness, is_isomorphic
from lpbc.latticepath import is_lattice_path, matroid_of_lpm


def contains(corpus, matroid):
    return any(is_isomorphic(m, matroid) is not None for m in corpus)


def test_member_theorem1_accepts_u24():
    verdict = member_theorem1(uniform(2, 4))
    assert verdict.member
    assert verdict.witness is None
    assert verdict.lines() == ['member true']
    assert verdict.budgets_used['nodes'] >= 0


@pytest.mark.parametrize("name", ['wheel3', 'U5,7', 'B2,2', 'A3'])
def test_member_theorem1_names_the_entry(name):
    entry = catalog.get(name)
    verdict = member_theorem1(entry.matroid)
    assert not verdict.member
    assert verdict.witness.target_name == name
    assert verdict.witness.replay(entry.matroid, entry.matroid)
    assert verdict.lines()[:2] == ['member false', f'witness {name}']


@pytest.mark.parametrize("name,lattice,bicircular", [
    ['B2,2', False, False],
    ['A3', False, True],
    ['U3,7', True, False],
])
def test_member_direct(name, lattice, bicircular):
    verdict = member_direct(catalog.get(name).matroid)
    assert not verdict.member
    assert verdict.lattice_path is lattice
    assert verdict.bicircular is bicircular
    assert verdict.lines()[:3] == [
        'member false',
        f'lattice-path {str(lattice).lower()}',
        f'bicircular {str(bicircular).lower()}',
    ]


def test_member_direct_accepts_u24():
    verdict = member_direct(uniform(2, 4))
    assert verdict.member
    assert verdict.graph is not None


def test_size_limit():
    with pytest.raises(GroundSetTooLarge):
        member_theorem1(uniform(2, 5), limit=4)


def test_isomorphism_classes():
    classes = IsomorphismClasses()
    assert classes.add(uniform(1, 2))
    assert not classes.add(uniform(1, 2).relabel([2, 1]))
    assert classes.add(uniform(2, 3))
    assert len(classes) == 2


def test_lattice_paths():
    assert list(lattice_paths(1, 2)) == ['NNE', 'NEN', 'ENN']
    assert stays_below('ENN', 'NNE')
    assert not stays_below('NNE', 'ENN')


def test_lpm_presentations_are_valid():
    seen = list(lpm_presentations(3))
    assert len(seen) == len(set(seen))
    assert all(lpm.n <= 3 for lpm in seen)


def test_lpm_corpus_small():
    corpus = list(enumerate_lpm_corpus(2))
    # U01 U11 U02 U12 U22 and U11+U01
    assert len(corpus) == 6
    assert contains(corpus, uniform(1, 2))
    assert all(is_lattice_path(m)[0] for m in corpus)


def test_lpm_corpus_holds_u24():
    assert contains(list(enumerate_lpm_corpus(4)), uniform(2, 4))


def test_graph_multisets_break_vertex_symmetry():
    graphs = list(graph_multisets(1, 2))
    # free, a loop, a link
    assert len(graphs) == 3


def test_bicircular_corpus():
    corpus = list(enumerate_bicircular_corpus(3, 2))
    assert contains(corpus, uniform(2, 3))
    assert all(member_direct(m).bicircular for m in corpus)


def test_bicircular_corpus_holds_whirl():
    whirl = catalog.get('whirl3').matroid
    assert contains(list(enumerate_bicircular_corpus(6, 3)), whirl)


def test_family_reductions():
    found = family_reductions(8)
    assert [name for name, _, _ in found] == ['A4']
    name, matroid, witness = found[0]
    assert witness is not None
    assert catalog.get(witness.target_name).group == 'i'
    assert witness.replay(matroid, catalog.get(witness.target_name).matroid)


def test_targets():
    known = targets(6)
    assert 'U3,7' in known
    assert 'wheel3' in known
    assert 'A4' not in known


@pytest.mark.parametrize("name", ['A3', 'whirl3', 'B2,2'])
def test_lattice_path_witness_names_the_entry(name):
    entry = catalog.get(name)
    verdict = member_direct(entry.matroid)
    assert names_entry(entry, verdict.witness, targets(6))


def test_names_entry_rejects_other_targets():
    entry = catalog.get('whirl3')
    known = targets(6)
    assert not names_entry(entry, MinorWitness('wheel3', 0, 0, range(1, 7)),
                           known)
    assert not names_entry(entry, None, known)
    assert not names_entry(entry, MinorWitness('X', 0, 0, []), known)


def test_verify_groups(mocker):
    mocker.patch('lpbc.classifier.msg')
    report = Report()
    entries = [catalog.get('A3'), catalog.get('U3,7')]
    verify_groups(report, entries, targets(7), None, None)
    assert report.lines() == [
        'PASS group A3 A3',
        'PASS theorem1 A3 A3',
        'PASS group U3,7',
        'PASS theorem1 U3,7 U3,7',
        'checks 4 failures 0',
    ]


def test_verify_groups_flags_a_foreign_witness(mocker):
    mocker.patch('lpbc.classifier.msg')
    mocker.patch('lpbc.classifier.names_entry', return_value=False)
    report = Report()
    verify_groups(report, [catalog.get('A3')], targets(6), None, None)
    assert report.lines()[0] == 'FAIL group A3 A3'


def test_check_line():
    assert Check('group', 'U3,7', True, 'U3,7').line() == \
        'PASS group U3,7 U3,7'
    assert Check('golden', 'X', False).line() == 'FAIL golden X'


def test_report(mocker):
    msg = mocker.patch('lpbc.classifier.msg')
    report = Report()
    report.add('group', 'U3,7', True, 'U3,7')
    report.add('golden', 'X', False, None, uniform(1, 1))
    assert report.lines() == [
        'PASS group U3,7 U3,7',
        'FAIL golden X',
        'checks 2 failures 1',
    ]
    assert not report.passed
    assert report.failures[0].serialized == 'matroid 1 1\nbasis 1\n'
    report.finish()
    assert msg.call_count == 1
    with pytest.raises(VerificationFailure) as e:
        report.raise_for_failures()
    assert e.value.check == 'golden X'


def test_passing_report_does_not_raise():
    report = Report()
    report.add('coherence', 'U3,7', True)
    assert report.passed
    report.raise_for_failures()


@pytest.mark.slow
def test_verify_theorem1():
    report = verify_theorem1()
    assert report.passed, '\n'.join(c.line() for c in report.failures)
    checks = {c.check for c in report.checks}
    assert checks >= {'coherence', 'group', 'theorem1', 'single-element',
                      'vertical-3-connected', 'reduction', 'biconditional'}


@pytest.mark.slow
def test_running_membership(running_lpm):
    matroid = matroid_of_lpm(running_lpm)
    verdict = member_theorem1(matroid)
    assert verdict.member is True
    assert verdict.witness is None
    assert member_direct(matroid).member is True
