#!/usr/bin/env python3

import os
import yaml
from collections.abc import MutableMapping


def to_record(matroid):
    return {
        'n': matroid.n,
        'r': matroid.r,
        'bases': [list(b) for b in matroid.basis_lists()],
    }


class GoldenStore(MutableMapping):
    """Frozen catalog bases, one YAML document, rewritten on every change."""

    def __init__(self, path):
        self.path = path
        if os.path.exists(path):
            with open(path, 'r') as f:
                self.data = yaml.load(f, Loader=yaml.SafeLoader) or {}
        else:
            self.data = {}

    def sync(self):
        with open(self.path, 'w') as f:
            yaml.dump(self.data, f)

    def matches(self, name, matroid):
        return self.data[name] == to_record(matroid)

    def __getitem__(self, item):
        return self.data[item]

    def __setitem__(self, item, value):
        self.data[item] = value
        self.sync()

    def __delitem__(self, item):
        del self.data[item]
        self.sync()

    def __iter__(self):
        return iter(self.data)

    def __len__(self):
        return len(self.data)

    def __bool__(self):
        return len(self.data) > 0

    def __repr__(self):
        return repr(self.data)

    def __str__(self):
        return yaml.dump(self.data)
