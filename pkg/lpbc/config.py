#!/usr/bin/env python3

import os
import yaml
from collections.abc import MutableMapping

DEFAULTS = {
    'node_budget': 10 ** 8,
    'max_elements': 10,
    'vertical_max_elements': 12,
    'lpm_corpus_elements': 8,
    'bicircular_corpus_edges': 7,
    'bicircular_corpus_vertices': 4,
    'golden_path': '.lpbc-goldens.yaml',
}

ENVIRONMENT = {
    'LPBC_NODE_BUDGET': 'node_budget',
    'LPBC_MAX_ELEMENTS': 'max_elements',
    'LPBC_VERTICAL_MAX_ELEMENTS': 'vertical_max_elements',
    'LPBC_GOLDEN_PATH': 'golden_path',
}


def coerce(key, value):
    if isinstance(DEFAULTS.get(key), int) and not isinstance(value, int):
        return int(value)
    return value


class Settings(MutableMapping):
    """Defaults, then lpbc.yaml (or $LPBC_CONFIG), then the environment.

    Command-line flags are applied last by assigning into the mapping.
    """

    def __init__(self, path=None, environ=None):
        if environ is None:
            environ = os.environ
        if path is None:
            path = environ.get('LPBC_CONFIG', 'lpbc.yaml')
        self.path = path
        self.data = dict(DEFAULTS)

        if os.path.exists(path):
            with open(path, 'r') as f:
                loaded = yaml.load(f, Loader=yaml.SafeLoader) or {}
            for key, value in loaded.items():
                self.data[key] = coerce(key, value)

        for variable, key in ENVIRONMENT.items():
            if environ.get(variable):
                self.data[key] = coerce(key, environ[variable])

    def __getitem__(self, item):
        return self.data[item]

    def __setitem__(self, item, value):
        self.data[item] = coerce(item, value)

    def __delitem__(self, item):
        self.data[item] = DEFAULTS[item]

    def __iter__(self):
        return iter(self.data)

    def __len__(self):
        return len(self.data)

    def __repr__(self):
        return repr(self.data)

    def __str__(self):
        return yaml.dump(self.data)


_settings = None


def settings():
    global _settings
    if _settings is None:
        _settings = Settings()
    return _settings


def reset():
    global _settings
    _settings = None
