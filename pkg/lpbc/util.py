#!/usr/bin/env python3

import humanize
import os
import re
import sys
import time
from colorama import Fore, Style
from datetime import timedelta
from itertools import combinations


def msg(message, kind=None, suffix=None, file=None):
    if file is None:
        file = sys.stderr
    out = ''
    style_applied = False

    if kind is None:
        kind = MsgType.NEUTRAL

    if not os.environ.get('LPBC_NO_EMOJI') and kind["icon"]:
        out += f'{kind["icon"]} '
    elif not os.environ.get('LPBC_NO_COLOR') and kind["style"]:
        out += f'{kind["style"]}'
        style_applied = True

    out += message
    if style_applied:
        out += f'{Style.RESET_ALL}'

    if suffix:
        out += f' {suffix}'

    print(out, file=file)


def humanize_abbreviated(s):
    abbreviations = {
        r' milliseconds?': 'ms',
        r' seconds?': 's',
        r' minutes?': 'm',
        r' hours?': 'h',
        r' days?': 'd'
    }
    for search, replace in abbreviations.items():
        s = re.sub(search, replace, s)
    return s


def duration(time1, time2=None):
    if not time2:
        time2 = time.time()
    seconds = time2 - time1
    delta = timedelta(seconds=seconds)
    humanized = humanize.precisedelta(delta, minimum_unit='seconds')
    return humanize_abbreviated(humanized)


# Elements are labelled 1..n; element e lives in bit e - 1.

def bit(e):
    return 1 << (e - 1)


def to_mask(elements):
    if isinstance(elements, int):
        return elements
    mask = 0
    for e in elements:
        mask |= 1 << (e - 1)
    return mask


def to_elements(mask):
    out = []
    e = 1
    while mask:
        if mask & 1:
            out.append(e)
        mask >>= 1
        e += 1
    return out


def popcount(mask):
    return bin(mask).count('1')


def full_mask(n):
    return (1 << n) - 1


def subsets_of_size(mask, k):
    """Yield the k-subsets of mask in lexicographic order of element lists."""
    for combo in combinations(to_elements(mask), k):
        yield to_mask(combo)


def submasks(mask):
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def parse_elements(text):
    if text is None or not text.strip():
        return []
    return [int(part) for part in re.split(r'[,\s]+', text.strip()) if part]


def format_elements(mask):
    return ' '.join(str(e) for e in to_elements(mask))


class MsgType():
    FILE = {
        'icon': '📜',
        'style': None
    }
    CHECK = {
        'icon': '🎯',
        'style': '\033[4m'
    }
    WORKING = {
        'icon': '⏳',
        'style': Fore.BLUE
    }
    SUCCESS = {
        'icon': '✔',
        'style': Fore.GREEN
    }
    FAILURE = {
        'icon': '❌',
        'style': Fore.RED
    }
    NEUTRAL = {
        'icon': None,
        'style': Style.DIM
    }
    GOLDEN = {
        'icon': '💾',
        'style': Style.DIM
    }


class Error():
    NON_UNIFORM_BASES = 'Bases have differing sizes: {}.'
    EXCHANGE_VIOLATION = 'Basis exchange fails for A={}, B={}, a={}.'
    EMPTY_BASES = 'A matroid needs at least one basis.'
    ELEMENT_RANGE = 'Element {} is outside 1..{}.'
    OVERLAPPING_SETS = 'Contraction and deletion sets share {}.'
    RANK_ZERO = 'Free extension of a rank-0 matroid is not defined here.'
    BAD_TARGET_RANK = 'Cannot truncate a rank-{} matroid to rank {}.'
    GROUND_SET_TOO_LARGE = 'Ground set of {} elements exceeds the limit {}.'
    HAS_FREE_EDGE = 'Edge {} is free; cycle matroids need links and loops.'
    NOT_CIRCUIT_HYPERPLANE = '{{{}}} is not a circuit-hyperplane.'
    BUDGET_EXCEEDED = 'Search budget of {} nodes exhausted.'
    NO_CIRCUIT = 'Matroid is free; it has no circuits.'
    GIRTH_TOO_SMALL = 'Girth {} is below 4; the size bound needs k > 2.'
    BAD_PARAMETERS = 'Bad parameters for {}: {}.'
    UNKNOWN_NAME = 'Unknown name: {}'
    PARSE = 'line {}, column {}: {}'
    GOLDEN_MISMATCH = 'Catalog entry {} differs from its golden bases.'
    VERIFICATION_FAILURE = 'Verification check {} failed.'
    CHAIN_VIOLATION = 'Interval endpoints must form chains: {}.'
    EMPTY_INTERVAL = 'Interval [{}, {}] is empty.'
    PATH_ORDER = 'Path P rises above path Q at step {}.'
    PATH_SHAPE = 'Path {} must have {} North and {} East steps.'
    NOT_VERTICALLY_3_CONNECTED = 'Matroid is not vertically 3-connected.'
    RANK_TOO_SMALL = 'Rank {} is below 3.'
