#!/usr/bin/env python3

from lpbc.config import settings
from lpbc.core import surviving_elements
from lpbc.exceptions import BudgetExceeded
from lpbc.util import bit, format_elements, subsets_of_size, to_elements, \
    to_mask


class Budget():
    """Node counter for one search; running dry raises instead of answering."""

    def __init__(self, limit=None):
        if limit is None:
            limit = settings()['node_budget']
        self.limit = limit
        self.used = 0

    def tick(self, nodes=1):
        self.used += nodes
        if self.used > self.limit:
            raise BudgetExceeded(self.limit, self.used)

    def __repr__(self):
        return f'Budget({self.used}/{self.limit})'


def ensure_budget(budget):
    if budget is None or isinstance(budget, int):
        return Budget(budget)
    return budget


class MinorWitness():
    def __init__(self, target_name, contract, delete, iso):
        self.target_name = target_name
        self.contract = to_mask(contract)
        self.delete = to_mask(delete)
        self.iso = tuple(iso)

    def __repr__(self):
        return (f'MinorWitness({self.target_name},'
                f'contract={to_elements(self.contract)},'
                f'delete={to_elements(self.delete)})')

    def __eq__(self, other):
        if not isinstance(other, MinorWitness):
            return False
        return (self.target_name, self.contract, self.delete, self.iso) == \
            (other.target_name, other.contract, other.delete, other.iso)

    def __hash__(self):
        return hash((self.target_name, self.contract, self.delete, self.iso))

    def replay(self, matroid, target):
        minor = matroid.minor(self.contract, self.delete)
        if minor.n != target.n:
            return False
        return minor.relabel(self.iso) == target

    def lines(self):
        pairs = ' '.join(f'{a}:{b}' for a, b in enumerate(self.iso, 1))
        return [
            f'witness {self.target_name}',
            f'contract {format_elements(self.contract)}'.rstrip(),
            f'delete {format_elements(self.delete)}'.rstrip(),
            f'map {pairs}'.rstrip(),
        ]


def element_signatures(matroid):
    return matroid.signatures


def invariant_profile(matroid):
    return matroid.profile


def is_isomorphic(first, second, budget=None):
    """Lexicographically least basis-preserving bijection, or None.

    The result maps element i of `first` to result[i - 1] of `second`.
    """
    if invariant_profile(first) != invariant_profile(second):
        return None
    budget = ensure_budget(budget)
    n = first.n
    ours = element_signatures(first)
    theirs = element_signatures(second)
    candidates = [
        [j for j in range(1, n + 1) if theirs[j - 1] == ours[i - 1]]
        for i in range(1, n + 1)
    ]
    # Circuits are checked once all their elements are placed.
    closing = [[] for _ in range(n + 1)]
    for c in first.circuits:
        closing[to_elements(c)[-1]].append(c)
    targets = second.circuit_set

    image = [0] * (n + 1)
    used = [False] * (n + 1)

    def image_of(mask):
        out = 0
        for e in to_elements(mask):
            out |= bit(image[e])
        return out

    def place(i):
        if i > n:
            return True
        for j in candidates[i - 1]:
            if used[j]:
                continue
            budget.tick()
            image[i] = j
            if all(image_of(c) in targets for c in closing[i]):
                used[j] = True
                if place(i + 1):
                    return True
                used[j] = False
        return False

    if place(1):
        return tuple(image[1:])
    return None


def has_minor_iso(matroid, target, budget=None, name=None):
    """First (contract, delete, iso) in scan order giving `target`, or None.

    Contraction sets are independent sets of size r(M) - r(N) in
    lexicographic order; deletion sets follow in lexicographic order.
    """
    budget = ensure_budget(budget)
    k = matroid.r - target.r
    d = matroid.n - target.n - k
    if k < 0 or d < 0:
        return None
    profile = invariant_profile(target)
    basis_count = len(target.bases)

    for C in subsets_of_size(matroid.ground, k):
        if not matroid.is_independent(C):
            continue
        budget.tick()
        contracted = matroid.contract(C)
        kept = surviving_elements(matroid.n, C)
        for D in subsets_of_size(contracted.ground, d):
            budget.tick()
            minor = contracted.delete(D)
            if len(minor.bases) != basis_count or minor.r != target.r:
                continue
            if invariant_profile(minor) != profile:
                continue
            iso = is_isomorphic(minor, target, budget)
            if iso is None:
                continue
            delete = to_mask(kept[e - 1] for e in to_elements(D))
            return MinorWitness(name, C, delete, iso)
    return None
