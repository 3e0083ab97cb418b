#!/usr/bin/env python3

from lpbc.bicircular import MultiGraph
from lpbc.core import BasisMatroid, surviving_elements, compress
from lpbc.exceptions import ValidationError
from lpbc.isomin import ensure_budget
from lpbc.util import bit, full_mask, subsets_of_size, to_elements, \
    to_mask


class SetFamily():
    """An ordered family (N_1, ..., N_r) of subsets of 1..n, kept as masks."""

    def __init__(self, n, sets):
        self.n = n
        self.sets = tuple(to_mask(s) for s in sets)
        for s in self.sets:
            if s & ~full_mask(n):
                raise ValidationError(
                    f'Set {to_elements(s)} leaves the ground set 1..{n}.')

    def __repr__(self):
        return f'SetFamily({self.n},{self.lists()})'

    def __eq__(self, other):
        if not isinstance(other, SetFamily):
            return False
        return self.n == other.n and self.sets == other.sets

    def __hash__(self):
        return hash((self.n, self.sets))

    def lists(self):
        return [to_elements(s) for s in self.sets]

    def homes(self, e):
        """Indices of the sets containing element e."""
        return [j for j, s in enumerate(self.sets) if s & bit(e)]

    def delete_element(self, x):
        """The family presenting M\\x: x removed, empty sets dropped."""
        kept = surviving_elements(self.n, bit(x))
        sets = [compress(s & ~bit(x), kept) for s in self.sets]
        return SetFamily(self.n - 1, [s for s in sets if s])


def matched(homes, elements, strict=False):
    """Augmenting-path matching of elements into distinct sets.

    Returns the matching size, or None under `strict` once an element fails.
    """
    owner = {}

    def augment(e, seen):
        for j in homes[e]:
            if j in seen:
                continue
            seen.add(j)
            if j not in owner or augment(owner[j], seen):
                owner[j] = e
                return True
        return False

    count = 0
    for e in elements:
        if augment(e, set()):
            count += 1
        elif strict:
            return None
    return count


def matches(homes, elements):
    return matched(homes, elements, strict=True) is not None


def is_partial_transversal(family, X):
    homes = {e: family.homes(e) for e in range(1, family.n + 1)}
    return matches(homes, to_elements(to_mask(X)))


def matching_number(family):
    homes = {e: family.homes(e) for e in range(1, family.n + 1)}
    return matched(homes, range(1, family.n + 1))


def matroid_of_family(family):
    rank = matching_number(family)
    homes = {e: family.homes(e) for e in range(1, family.n + 1)}
    bases = [X for X in subsets_of_size(full_mask(family.n), rank)
             if matches(homes, to_elements(X))]
    return BasisMatroid(family.n, bases, rank)


def prefix_checks(matroid):
    """Per element e: circuits ending at e, and bases of M|{1..e} holding e."""
    circuits = [[] for _ in range(matroid.n + 1)]
    for c in matroid.circuits:
        circuits[to_elements(c)[-1]].append(c)
    independents = [[] for _ in range(matroid.n + 1)]
    for e in range(1, matroid.n + 1):
        tail = full_mask(matroid.n) & ~full_mask(e)
        restriction = matroid.delete(tail)
        independents[e] = [b for b in restriction.bases if b & bit(e)]
    return circuits, independents


def width2_options(top, rank):
    """Set-index choices for the next element, new indices in order."""
    options = [(i,) for i in range(min(top + 1, rank))]
    for j in range(1, min(top + 2, rank)):
        for i in range(j):
            if j > top and i < top:
                continue
            options.append((i, j))
    return options


def width2_presentation_search(matroid, budget=None):
    """A presentation with r(M) sets of size at most two, or None."""
    budget = ensure_budget(budget)
    n = matroid.n
    rank = matroid.r
    if rank == 0:
        return SetFamily(n, [])
    circuits, independents = prefix_checks(matroid)
    loops = matroid.loops
    homes = {}

    def consistent(e):
        for c in circuits[e]:
            if matches(homes, to_elements(c)):
                return False
        for b in independents[e]:
            if not matches(homes, to_elements(b)):
                return False
        return True

    def place(e, top):
        if e > n:
            return True
        budget.tick()
        if loops & bit(e):
            homes[e] = ()
            return consistent(e) and place(e + 1, top)
        for option in width2_options(top, rank):
            homes[e] = option
            if consistent(e) and place(e + 1, max(top, max(option) + 1)):
                return True
        del homes[e]
        return False

    if not place(1, 0):
        return None
    sets = [0] * rank
    for e, option in homes.items():
        for j in option:
            sets[j] |= bit(e)
    return SetFamily(n, sets)


def family_to_graph(family):
    edges = []
    for e in range(1, family.n + 1):
        where = family.homes(e)
        if len(where) > 2:
            raise ValidationError(
                f'Element {e} lies in {len(where)} sets; a graph needs <= 2.')
        if not where:
            edges.append(('free',))
        elif len(where) == 1:
            edges.append(('loop', where[0] + 1))
        else:
            edges.append(('link', where[0] + 1, where[1] + 1))
    return MultiGraph(len(family.sets), edges)


def graph_to_family(graph):
    sets = [0] * graph.v
    for e, edge in enumerate(graph.edges, 1):
        for vertex in edge[1:]:
            sets[vertex - 1] |= bit(e)
    return SetFamily(len(graph.edges), sets)
