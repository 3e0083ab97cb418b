#!/usr/bin/env python3

import networkx as nx
from collections import Counter
from functools import cached_property
from itertools import product
from networkx.utils import UnionFind
from lpbc.config import settings
from lpbc.util import Error, bit, full_mask, popcount, subsets_of_size, \
    submasks, to_elements, to_mask
from lpbc.exceptions import BadParameters, BadTargetRank, ExchangeViolation, \
    GroundSetTooLarge, HasFreeEdge, NonUniformBases, NotCircuitHyperplane, \
    OverlappingSets, RankZero, ValidationError

# Memoised ranks per matroid; the memo starts over once it holds this many.
RANK_MEMO = 1 << 16


def surviving_elements(n, removed):
    """Original labels of the elements kept after removing `removed`.

    Position j of the result is the original label of new element j + 1.
    """
    removed = to_mask(removed)
    return tuple(e for e in range(1, n + 1) if not removed & bit(e))


def compress(mask, kept):
    out = 0
    for j, e in enumerate(kept):
        if mask & bit(e):
            out |= 1 << j
    return out


def lex_key(mask):
    return to_elements(mask)


def circuit_key(mask):
    return (popcount(mask), to_elements(mask))


class BasisMatroid():
    """A matroid on 1..n stored as its sorted, deduplicated basis masks.

    The constructor trusts its input; use from_bases() for validation.
    """

    def __init__(self, n, bases, r=None):
        self.n = n
        self.bases = tuple(sorted(set(bases), key=lex_key))
        if r is None:
            r = popcount(self.bases[0])
        self.r = r
        self.basis_set = frozenset(self.bases)
        self._ranks = {}

    def __repr__(self):
        return f'BasisMatroid(n={self.n},r={self.r},bases={len(self.bases)})'

    def __eq__(self, other):
        if not isinstance(other, BasisMatroid):
            return False
        return self.n == other.n and self.basis_set == other.basis_set

    def __hash__(self):
        return hash((self.n, self.basis_set))

    @property
    def ground(self):
        return full_mask(self.n)

    def basis_lists(self):
        return [to_elements(b) for b in self.bases]

    @cached_property
    def independent(self):
        found = set()
        for b in self.bases:
            if b in found:
                continue
            for sub in submasks(b):
                found.add(sub)
        return frozenset(found)

    def is_independent(self, X):
        return to_mask(X) in self.independent

    def is_basis(self, X):
        return to_mask(X) in self.basis_set

    def rank_of(self, X):
        X = to_mask(X)
        if X not in self._ranks:
            if len(self._ranks) >= RANK_MEMO:
                self._ranks.clear()
            best = 0
            for b in self.bases:
                size = popcount(b & X)
                if size > best:
                    best = size
                    if best == self.r:
                        break
            self._ranks[X] = best
        return self._ranks[X]

    def closure(self, X):
        X = to_mask(X)
        rank = self.rank_of(X)
        out = X
        for e in range(1, self.n + 1):
            if not X & bit(e) and self.rank_of(X | bit(e)) == rank:
                out |= bit(e)
        return out

    @cached_property
    def circuits(self):
        found = []
        for size in range(1, min(self.r + 1, self.n) + 1):
            for X in subsets_of_size(self.ground, size):
                if X in self.independent:
                    continue
                if all(X & ~bit(e) in self.independent
                       for e in to_elements(X)):
                    found.append(X)
        return tuple(sorted(found, key=circuit_key))

    @cached_property
    def circuit_set(self):
        return frozenset(self.circuits)

    @cached_property
    def signatures(self):
        """Per element: circuit counts by size, and how many bases hold it."""
        sizes = range(1, self.r + 2)
        out = []
        for e in range(1, self.n + 1):
            counts = Counter(popcount(c) for c in self.circuits if c & bit(e))
            in_bases = sum(1 for b in self.bases if b & bit(e))
            out.append((tuple(counts[s] for s in sizes), in_bases))
        return tuple(out)

    @cached_property
    def profile(self):
        return (
            self.n,
            self.r,
            len(self.bases),
            tuple(sorted(popcount(c) for c in self.circuits)),
            tuple(sorted(s[0] for s in self.signatures)),
            tuple(sorted(popcount(c) for c in self.parallel_classes())),
            popcount(self.loops),
            popcount(self.coloops),
        )

    @cached_property
    def loops(self):
        covered = 0
        for b in self.bases:
            covered |= b
        return self.ground & ~covered

    @cached_property
    def coloops(self):
        common = self.ground
        for b in self.bases:
            common &= b
        return common

    def dual(self):
        ground = self.ground
        return BasisMatroid(self.n, (ground & ~b for b in self.bases),
                            self.n - self.r)

    def minor(self, contract=0, delete=0):
        """M / contract \\ delete, relabelled onto 1..n' in original order."""
        C = to_mask(contract)
        D = to_mask(delete)
        if C & D:
            raise OverlappingSets(to_elements(C & D))
        rank_c = self.rank_of(C)
        kept = surviving_elements(self.n, C | D)
        keep = ~(C | D)
        candidates = set()
        for b in self.bases:
            if popcount(b & C) == rank_c:
                candidates.add(b & keep)
        size = max(popcount(b) for b in candidates)
        bases = (compress(b, kept) for b in candidates if popcount(b) == size)
        return BasisMatroid(len(kept), bases, size)

    def contract(self, C):
        return self.minor(C, 0)

    def delete(self, D):
        return self.minor(0, D)

    def relabel(self, perm):
        """Send element i to perm[i - 1]."""
        perm = tuple(perm)
        if sorted(perm) != list(range(1, self.n + 1)):
            raise ValidationError(
                f'{perm} is not a permutation of 1..{self.n}.')
        bases = []
        for b in self.bases:
            bases.append(to_mask(perm[e - 1] for e in to_elements(b)))
        return BasisMatroid(self.n, bases, self.r)

    def free_extend(self):
        if self.r == 0:
            raise RankZero()
        new = bit(self.n + 1)
        bases = set(self.bases)
        for sub in self.independent:
            if popcount(sub) == self.r - 1:
                bases.add(sub | new)
        return BasisMatroid(self.n + 1, bases, self.r)

    def truncate(self):
        if self.r == 0:
            raise RankZero()
        return self.free_extend().contract(bit(self.n + 1))

    def truncate_to(self, target):
        if not 1 <= target <= self.r:
            raise BadTargetRank(target, self.r)
        out = self
        while out.r > target:
            out = out.truncate()
        return out

    def parallel_classes(self):
        """Classes of the non-loop elements under 'equal or a 2-circuit'."""
        uf = UnionFind(e for e in to_elements(self.ground & ~self.loops))
        for c in self.circuits:
            if popcount(c) == 2:
                uf.union(*to_elements(c))
        classes = [to_mask(group) for group in uf.to_sets()]
        return sorted(classes, key=lambda c: to_elements(c)[0])

    def series_classes(self):
        return self.dual().parallel_classes()

    def is_connected(self):
        if self.n <= 1:
            return True
        uf = UnionFind(range(1, self.n + 1))
        for c in self.circuits:
            uf.union(*to_elements(c))
        return len(list(uf.to_sets())) == 1

    def is_vertical_separation(self, A, B, l):
        A = to_mask(A)
        B = to_mask(B)
        if A & B or A | B != self.ground:
            return False
        if popcount(A) < l or popcount(B) < l:
            return False
        rank_a = self.rank_of(A)
        rank_b = self.rank_of(B)
        if rank_a < l or rank_b < l:
            return False
        return rank_a + rank_b - self.r < l

    def is_vertically_k_connected(self, k, limit=None):
        """Return (True, None) or (False, (A, B, l)) with l < k."""
        if limit is None:
            limit = settings()['vertical_max_elements']
        if self.n > limit:
            raise GroundSetTooLarge(self.n, limit)
        ground = self.ground
        for l in range(1, k):
            # Element 1 always sits in A; the other side is the complement.
            for A in range(1, ground, 2):
                B = ground & ~A
                if popcount(A) < l or popcount(B) < l:
                    continue
                if self.is_vertical_separation(A, B, l):
                    return False, (A, B, l)
        return True, None

    def relax_circuit_hyperplane(self, X):
        X = to_mask(X)
        if X not in self.circuit_set or self.rank_of(X) != self.r - 1 \
                or self.closure(X) != X:
            raise NotCircuitHyperplane(to_elements(X))
        return BasisMatroid(self.n, self.bases + (X,), self.r)


def from_bases(n, bases):
    if not bases:
        raise ValidationError(Error.EMPTY_BASES)
    masks = []
    for basis in bases:
        for e in basis:
            if not 1 <= e <= n:
                raise ValidationError(Error.ELEMENT_RANGE.format(e, n))
        if len(set(basis)) != len(basis):
            raise ValidationError(f'Basis {list(basis)} repeats an element.')
        masks.append(to_mask(basis))
    sizes = {popcount(m) for m in masks}
    if len(sizes) > 1:
        raise NonUniformBases(sizes)

    matroid = BasisMatroid(n, masks)
    check_exchange(matroid)
    return matroid


def check_exchange(matroid):
    bases = matroid.basis_set
    for A in matroid.bases:
        for B in matroid.bases:
            if A == B:
                continue
            for a in to_elements(A & ~B):
                without = A & ~bit(a)
                if not any(without | bit(b) in bases
                           for b in to_elements(B & ~A)):
                    raise ExchangeViolation(
                        (to_elements(A), to_elements(B), a))


def uniform(r, n):
    if not 0 <= r <= n:
        raise BadParameters('U', (r, n))
    return BasisMatroid(n, subsets_of_size(full_mask(n), r), r)


def direct_sum(first, second):
    bases = []
    for b1 in first.bases:
        for b2 in second.bases:
            bases.append(b1 | (b2 << first.n))
    return BasisMatroid(first.n + second.n, bases, first.r + second.r)


def cycle_matroid(graph):
    """Bases are the maximal spanning forests of a multigraph.

    Parallel links share one edge of the simple graph handed to networkx;
    each spanning tree then expands to every choice of parallel copy.
    """
    for i, edge in enumerate(graph.edges, 1):
        if edge[0] == 'free':
            raise HasFreeEdge(i)

    simple = nx.Graph()
    simple.add_nodes_from(range(1, graph.v + 1))
    for i, edge in enumerate(graph.edges, 1):
        if edge[0] != 'link':
            continue
        a, b = edge[1:]
        if simple.has_edge(a, b):
            simple[a][b]['elements'].append(i)
        else:
            simple.add_edge(a, b, elements=[i])

    forests = []
    for component in nx.connected_components(simple):
        if len(component) == 1:
            continue
        trees = []
        part = simple.subgraph(component).copy()
        for tree in nx.SpanningTreeIterator(part):
            copies = [simple[a][b]['elements'] for a, b in tree.edges]
            trees += [to_mask(pick) for pick in product(*copies)]
        forests.append(trees)

    rank = graph.v - nx.number_connected_components(simple)
    # Components own disjoint edges, so a sum of their masks is their union.
    bases = [sum(parts) for parts in product(*forests)]
    return BasisMatroid(len(graph.edges), bases, rank)
