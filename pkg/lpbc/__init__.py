#!/usr/bin/env python3

from lpbc.bicircular import MultiGraph
from lpbc.core import BasisMatroid
from lpbc.isomin import MinorWitness
from lpbc.latticepath import LatticePathPresentation, StandardPresentation
from lpbc.transversal import SetFamily

__all__ = [
    'BasisMatroid',
    'LatticePathPresentation',
    'MinorWitness',
    'MultiGraph',
    'SetFamily',
    'StandardPresentation',
]
