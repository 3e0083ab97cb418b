#!/usr/bin/env python3

from collections import Counter
from networkx.utils import UnionFind
from lpbc.core import BasisMatroid, surviving_elements
from lpbc.exceptions import GirthTooSmall, NoCircuit, ValidationError
from lpbc.isomin import ensure_budget
from lpbc.util import bit, full_mask, popcount, subsets_of_size, to_elements

FREE = ('free',)


class MultiGraph():
    """Vertices 1..v and an ordered edge list; edge i is element i.

    Edges are ('link', a, b) with a != b, ('loop', a) or ('free',).
    """

    def __init__(self, v, edges):
        self.v = v
        self.edges = [tuple(edge) for edge in edges]
        self.validate()

    def __repr__(self):
        return f'MultiGraph({self.v},{self.edges})'

    def __eq__(self, other):
        if not isinstance(other, MultiGraph):
            return False
        return self.v == other.v and self.edges == other.edges

    def __hash__(self):
        return hash((self.v, tuple(self.edges)))

    def validate(self):
        for i, edge in enumerate(self.edges, 1):
            kind = edge[0]
            if kind == 'free' and len(edge) == 1:
                continue
            if kind == 'loop' and len(edge) == 2:
                ends = edge[1:]
            elif kind == 'link' and len(edge) == 3 and edge[1] != edge[2]:
                ends = edge[1:]
            else:
                raise ValidationError(f'Edge {i} is malformed: {edge}.')
            for vertex in ends:
                if not 1 <= vertex <= self.v:
                    raise ValidationError(
                        f'Edge {i} leaves the vertex set 1..{self.v}.')

    @property
    def m(self):
        return len(self.edges)

    def delete_edge(self, e):
        return MultiGraph(self.v, self.edges[:e - 1] + self.edges[e:])

    def contract_loop(self, e):
        """Contract the loop e at vertex u.

        u disappears: its other loops turn free and each link u-w becomes a
        loop at w. Vertices above u shift down by one.
        """
        edge = self.edges[e - 1]
        if edge[0] != 'loop':
            raise ValidationError(f'Edge {e} is not a loop.')
        u = edge[1]

        def shift(vertex):
            return vertex - 1 if vertex > u else vertex

        edges = []
        for i, other in enumerate(self.edges, 1):
            if i == e:
                continue
            if other[0] == 'loop' and other[1] == u:
                edges.append(FREE)
            elif other[0] == 'loop':
                edges.append(('loop', shift(other[1])))
            elif other[0] == 'link' and u in other[1:]:
                w = other[2] if other[1] == u else other[1]
                edges.append(('loop', shift(w)))
            elif other[0] == 'link':
                edges.append(('link', shift(other[1]), shift(other[2])))
            else:
                edges.append(FREE)
        return MultiGraph(self.v - 1, edges)

    def contract_link(self, e):
        """Contract the link e, merging its larger end into its smaller one.

        Links parallel to e become loops at the merged vertex.
        """
        edge = self.edges[e - 1]
        if edge[0] != 'link':
            raise ValidationError(f'Edge {e} is not a link.')
        u, w = sorted(edge[1:])

        def image(vertex):
            if vertex == w:
                return u
            return vertex - 1 if vertex > w else vertex

        edges = []
        for i, other in enumerate(self.edges, 1):
            if i == e:
                continue
            if other[0] == 'link':
                a, b = sorted((image(other[1]), image(other[2])))
                edges.append(('loop', a) if a == b else ('link', a, b))
            elif other[0] == 'loop':
                edges.append(('loop', image(other[1])))
            else:
                edges.append(FREE)
        return MultiGraph(self.v - 1, edges)

    def relabel_vertices(self, perm):
        """Vertex a becomes perm[a - 1]; links keep their smaller end first."""
        edges = []
        for edge in self.edges:
            if edge[0] == 'link':
                a, b = sorted((perm[edge[1] - 1], perm[edge[2] - 1]))
                edges.append(('link', a, b))
            elif edge[0] == 'loop':
                edges.append(('loop', perm[edge[1] - 1]))
            else:
                edges.append(FREE)
        return MultiGraph(self.v, edges)


def is_independent_in(edges, elements):
    """No free edge, and every component has at most one cycle."""
    uf = UnionFind()
    for e in elements:
        edge = edges[e - 1]
        if edge[0] == 'free':
            return False
        uf.union(*edge[1:])
    count = Counter()
    for e in elements:
        count[uf[edges[e - 1][1]]] += 1
    size = Counter(uf[vertex] for vertex in list(uf.parents))
    return all(count[root] <= size[root] for root in count)


def bicircular_rank(edges, elements):
    uf = UnionFind()
    for e in elements:
        edge = edges[e - 1]
        if edge[0] != 'free':
            uf.union(*edge[1:])
    count = Counter()
    for e in elements:
        if edges[e - 1][0] != 'free':
            count[uf[edges[e - 1][1]]] += 1
    size = Counter(uf[vertex] for vertex in list(uf.parents))
    return sum(min(count[root], size[root]) for root in size)


def bicircular_matroid(graph):
    m = graph.m
    rank = bicircular_rank(graph.edges, range(1, m + 1))
    bases = [X for X in subsets_of_size(full_mask(m), rank)
             if is_independent_in(graph.edges, to_elements(X))]
    return BasisMatroid(m, bases, rank)


def slot_options(top, v):
    """Slots for the next non-loop element; unused vertices enter in order."""
    options = [('loop', a) for a in range(1, min(top + 1, v) + 1)]
    for b in range(2, min(top + 2, v) + 1):
        for a in range(1, b):
            if b == top + 2 and a != top + 1:
                continue
            options.append(('link', a, b))
    return options


def is_bicircular(matroid, budget=None):
    """A multigraph whose bicircular matroid equals M, or None.

    The search places every element on a slot of the complete graph on r(M)
    vertices: matroid loops become free edges, everything else a loop or a
    link. A rank-r bicircular matroid always has such a graph and fewer
    vertices cannot carry rank r.
    """
    budget = ensure_budget(budget)
    n = matroid.n
    v = matroid.r
    if v == 0:
        return MultiGraph(0, [FREE] * n)

    circuits = [[] for _ in range(n + 1)]
    for c in matroid.circuits:
        circuits[to_elements(c)[-1]].append(c)
    spanning = [[] for _ in range(n + 1)]
    for e in range(1, n + 1):
        restriction = matroid.delete(full_mask(n) & ~full_mask(e))
        spanning[e] = [b for b in restriction.bases if b & bit(e)]
    loops = matroid.loops
    edges = [None] * n

    def consistent(e):
        for c in circuits[e]:
            if is_independent_in(edges, to_elements(c)):
                return False
        for b in spanning[e]:
            if not is_independent_in(edges, to_elements(b)):
                return False
        return True

    def place(e, top):
        if e > n:
            return True
        budget.tick()
        if loops & bit(e):
            edges[e - 1] = FREE
            return consistent(e) and place(e + 1, top)
        for slot in slot_options(top, v):
            edges[e - 1] = slot
            if consistent(e) and place(e + 1, max(top, max(slot[1:]))):
                return True
        edges[e - 1] = None
        return False

    if not place(1, 0):
        return None
    return MultiGraph(v, edges)


def girth(matroid):
    if not matroid.circuits:
        raise NoCircuit()
    return popcount(matroid.circuits[0])


def check_size_bound(matroid):
    """|E| <= r(r - 1) / (k - 2) with k = girth - 1."""
    g = girth(matroid)
    if g < 4:
        raise GirthTooSmall(g)
    k = g - 1
    r = matroid.r
    return matroid.n * (k - 2) <= r * (r - 1)


def delete_edges(graph, removed):
    kept = surviving_elements(graph.m, removed)
    return MultiGraph(graph.v, [graph.edges[e - 1] for e in kept])
