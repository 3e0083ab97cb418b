#!/usr/bin/env python3

import pytest
from lpbc import catalog
from lpbc.bicircular import MultiGraph, bicircular_matroid, is_bicircular
from lpbc.catalog import family, wheel, whirl
from lpbc.classifier import enumerate_bicircular_corpus, \
    enumerate_lpm_corpus
from lpbc.core import from_bases, uniform
from lpbc.exceptions import ValidationError
from lpbc.transversal import SetFamily, family_to_graph, graph_to_family, \
    is_partial_transversal, matching_number, matroid_of_family, \
    width2_options, width2_presentation_search


def test_set_family():
    family_ = SetFamily(3, [[1, 2], [2, 3]])
    assert family_.lists() == [[1, 2], [2, 3]]
    assert family_.homes(2) == [0, 1]
    assert family_.homes(1) == [0]
    assert matroid_of_family(family_) == uniform(2, 3)
    with pytest.raises(ValidationError):
        SetFamily(2, [[3]])


def test_delete_element():
    family_ = SetFamily(3, [[1, 2], [2, 3]])
    assert family_.delete_element(2) == SetFamily(2, [[1], [2]])
    assert SetFamily(2, [[1], [1, 2]]).delete_element(1) == \
        SetFamily(1, [[1]])


@pytest.mark.parametrize("sets,X,matched", [
    [[[1], [1]], [1], True],
    [[[1], [1]], [1, 2], False],
    [[[1, 2], [1]], [1, 2], True],
    [[[1], [1]], [], True],
])
def test_is_partial_transversal(sets, X, matched):
    assert is_partial_transversal(SetFamily(2, sets), X) == matched


def test_matching_number():
    assert matching_number(SetFamily(3, [[1], [1], [2, 3]])) == 2
    assert matching_number(SetFamily(3, [])) == 0


def test_matroid_of_family_with_loops():
    m = matroid_of_family(SetFamily(3, [[1, 2]]))
    assert m == from_bases(3, [[1], [2]])
    assert m.loops == 4


def test_width2_options():
    assert width2_options(0, 3) == [(0,), (0, 1)]
    assert width2_options(1, 3) == [(0,), (1,), (0, 1), (1, 2)]


@pytest.mark.parametrize("matroid", [
    uniform(2, 4),
    uniform(1, 3),
    from_bases(3, [[1, 2], [2, 3]]),
    family('A', 3),
])
def test_width2_presentation_found(matroid):
    found = width2_presentation_search(matroid)
    assert found is not None
    assert len(found.sets) == matroid.r
    assert matroid_of_family(found) == matroid


@pytest.mark.parametrize("matroid", [uniform(3, 7), wheel()])
def test_width2_presentation_missing(matroid):
    assert width2_presentation_search(matroid) is None


def test_width2_rank_zero():
    assert width2_presentation_search(uniform(0, 2)) == SetFamily(2, [])


@pytest.mark.parametrize("matroid", [
    uniform(2, 4), uniform(3, 6), whirl(), family('B', 2, 2)])
def test_width2_matches_bicircular(matroid):
    found = width2_presentation_search(matroid)
    assert (found is None) == (is_bicircular(matroid) is None)
    if found is not None:
        assert bicircular_matroid(family_to_graph(found)) == matroid


CORPORA = {
    'lpm': lambda: enumerate_lpm_corpus(6),
    'bicircular': lambda: enumerate_bicircular_corpus(6, 3),
}


@pytest.mark.parametrize("corpus", sorted(CORPORA))
def test_width2_matches_bicircular_on_corpus(corpus):
    for matroid in CORPORA[corpus]():
        found = width2_presentation_search(matroid)
        assert (found is None) == (is_bicircular(matroid) is None), matroid
        if found is not None:
            assert bicircular_matroid(family_to_graph(found)) == matroid


@pytest.mark.slow
def test_width2_matches_bicircular_on_catalog_minors():
    for entry in catalog.theorem1_list():
        m = entry.matroid
        for e in range(1, m.n + 1):
            for minor in (m.delete([e]), m.contract([e])):
                found = width2_presentation_search(minor)
                assert (found is None) == (is_bicircular(minor) is None), \
                    (entry.name, e)


def test_family_graph_correspondence():
    family_ = SetFamily(3, [[1, 2], [2, 3]])
    graph = family_to_graph(family_)
    assert graph == MultiGraph(
        2, [('loop', 1), ('link', 1, 2), ('loop', 2)])
    assert graph_to_family(graph) == family_
    free = MultiGraph(1, [('free',), ('loop', 1)])
    assert graph_to_family(free) == SetFamily(2, [[2]])
    with pytest.raises(ValidationError):
        family_to_graph(SetFamily(1, [[1], [1], [1]]))
