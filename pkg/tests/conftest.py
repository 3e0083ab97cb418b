#!/usr/bin/env python3

import os
import pytest
from lpbc import config
from lpbc.latticepath import LatticePathPresentation, StandardPresentation


@pytest.fixture(autouse=True)
def clean_settings(mocker, tmp_path):
    mocker.patch.dict(os.environ, {
        'LPBC_CONFIG': str(tmp_path / 'lpbc.yaml'),
        'LPBC_NO_EMOJI': '1',
        'LPBC_NO_COLOR': '1',
    })
    for key in list(os.environ):
        if key.startswith('LPBC_') and key not in (
                'LPBC_CONFIG', 'LPBC_NO_EMOJI', 'LPBC_NO_COLOR'):
            del os.environ[key]
    config.reset()
    yield
    config.reset()


@pytest.fixture
def running_lpm():
    """Ten elements, rank five: the running lattice path example."""
    return LatticePathPresentation(5, 5, 'EEEENNENNN', 'NENNENEENE')


@pytest.fixture
def running_intervals():
    return StandardPresentation(
        10, [(1, 5), (3, 6), (4, 8), (6, 9), (9, 10)])
