#!/usr/bin/env python3

import pytest
from lpbc.catalog import CatalogEntry, freeze
from lpbc.core import uniform
from lpbc.exceptions import GoldenMismatchError
from lpbc.golden import GoldenStore, to_record


def test_to_record():
    assert to_record(uniform(1, 2)) == {
        'n': 2, 'r': 1, 'bases': [[1], [2]]}


def test_store_syncs(tmp_path):
    path = str(tmp_path / 'goldens.yaml')
    store = GoldenStore(path)
    assert not store
    store['U1,2'] = to_record(uniform(1, 2))

    reloaded = GoldenStore(path)
    assert list(reloaded) == ['U1,2']
    assert reloaded.matches('U1,2', uniform(1, 2))
    assert not reloaded.matches('U1,2', uniform(2, 2))

    del reloaded['U1,2']
    assert len(GoldenStore(path)) == 0


def test_freeze(tmp_path):
    store = GoldenStore(str(tmp_path / 'goldens.yaml'))
    entry = CatalogEntry('U1,2', 'i', uniform(1, 2))
    assert freeze([entry], store) == {'U1,2': 'frozen'}
    assert freeze([entry], store) == {'U1,2': 'match'}

    changed = CatalogEntry('U1,2', 'i', uniform(1, 3))
    with pytest.raises(GoldenMismatchError) as e:
        freeze([changed], store)
    assert e.value.name == 'U1,2'
