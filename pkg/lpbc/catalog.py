#!/usr/bin/env python3

from functools import lru_cache
from lpbc.bicircular import MultiGraph, bicircular_matroid
from lpbc.core import cycle_matroid, direct_sum, uniform
from lpbc.exceptions import BadParameters, GoldenMismatchError, UnknownName, \
    VerificationFailure
from lpbc.golden import to_record
from lpbc.isomin import is_isomorphic
from lpbc.latticepath import LatticePathPresentation, matroid_of_lpm
from lpbc.util import popcount

FAMILIES = ('P', 'Pprime', 'A', 'B', 'C', 'D', 'E')


def P(n):
    return direct_sum(uniform(n - 1, n), uniform(n - 1, n)).truncate_to(n)


def family(name, n, k=None):
    """Members of the excluded-minor families for lattice path matroids.

    C(n, k) is the dual of B(n, k), the member named C_{n+k,k}.
    """
    if name not in FAMILIES:
        raise UnknownName(name)
    two = name in ('B', 'C')
    if two and (k is None or not n >= k >= 2):
        raise BadParameters(name, (n, k))
    if not two and k is not None:
        raise BadParameters(name, (n, k))
    least = {'P': 2, 'Pprime': 3, 'A': 3, 'D': 4, 'E': 4}
    if not two and n < least[name]:
        raise BadParameters(name, (n,))

    if name == 'P':
        return P(n)
    if name == 'Pprime':
        return P(n - 1).dual().free_extend().dual()
    if name == 'A':
        return family('Pprime', n).free_extend()
    if name == 'B':
        blocks = direct_sum(uniform(n - 1, n), uniform(n - 1, n))
        return direct_sum(blocks, uniform(k - 1, k)).truncate_to(n)
    if name == 'C':
        return family('B', n, k).dual()
    if name == 'D':
        return direct_sum(P(n - 1), uniform(1, 1)).free_extend()
    return family('D', n).dual()


def family_name(name, n, k=None):
    if name == 'C':
        return f'C{n + k},{k}'
    if k is None:
        return f'{name}{n}'
    return f'{name}{n},{k}'


def uniform_name(r, n):
    return f'U{r},{n}'


def k4():
    """K_4 with hub 4; edges 1, 2, 3 are the rim triangle."""
    return MultiGraph(4, [
        ('link', 1, 2), ('link', 2, 3), ('link', 1, 3),
        ('link', 1, 4), ('link', 2, 4), ('link', 3, 4),
    ])


RIM = (1, 2, 3)


def wheel():
    return cycle_matroid(k4())


def whirl():
    return wheel().relax_circuit_hyperplane(RIM)


def link(a, b, times=1):
    return [('link', a, b)] * times


def loop(a, times=1):
    return [('loop', a)] * times


FIGURE_GRAPHS = {
    'A3': MultiGraph(3, link(1, 2, 2) + link(1, 3, 2) + link(2, 3) + loop(1)),
    'B3,3': MultiGraph(3, link(1, 2, 3) + link(2, 3, 3) + link(1, 3, 3)),
    'C4,2': MultiGraph(4, link(1, 4, 2) + link(2, 4, 2) + link(3, 4, 2)),
    'C5,2': MultiGraph(5, link(2, 4, 2) + link(3, 5, 2) + link(4, 5)
                       + link(2, 3) + link(1, 5) + link(1, 2)),
    'D4': MultiGraph(4, link(1, 2, 3) + link(2, 3, 3) + link(3, 4)
                     + link(1, 4)),
    'whirl3': MultiGraph(3, link(1, 2) + link(2, 3) + link(1, 3)
                         + loop(1) + loop(2) + loop(3)),
    'R3': MultiGraph(3, link(1, 2) + link(2, 3) + link(1, 3)
                     + loop(2, 2) + loop(3, 2)),
    'R4': MultiGraph(4, link(1, 2) + link(2, 3) + link(1, 3)
                     + link(3, 4, 2) + loop(2, 2)),
}


def figure_graph(name):
    if name not in FIGURE_GRAPHS:
        raise UnknownName(name)
    return FIGURE_GRAPHS[name]


LATTICE_PATHS = {
    'U3,7': ('EEEENNN', 'NNNEEEE'),
    'U4,7': ('EEENNNN', 'NNNNEEE'),
    'U5,7': ('EENNNNN', 'NNNNNEE'),
    'T3(U1,2+U3,5)': ('EEEENNN', 'NENNEEE'),
    'T3(U1,2+U1,2+U3,3)': ('EEENNEN', 'NENNEEE'),
    'T4(U1,2+U4,5)': ('EEENNNN', 'NENNNEE'),
    'T4(U3,4+U3,3)': ('EEENNNN', 'NNNENEE'),
}


def lattice_path(name):
    P, Q = LATTICE_PATHS[name]
    r = P.count('N')
    return LatticePathPresentation(len(P) - r, r, P, Q)


def r3_shape(matroid):
    """A 5-element rank-2 flat holding two parallel pairs."""
    pairs = [c for c in matroid.parallel_classes() if popcount(c) == 2]
    if len(pairs) != 2:
        return False
    flat = matroid.closure(pairs[0] | pairs[1])
    return popcount(flat) == 5 and matroid.rank_of(flat) == 2


def r4_shape(matroid):
    """A parallel pair, and two 4-circuits meeting in a single element."""
    pairs = [c for c in matroid.parallel_classes() if popcount(c) == 2]
    fours = [c for c in matroid.circuits if popcount(c) == 4]
    meeting = any(popcount(a & b) == 1 for a in fours for b in fours)
    return len(pairs) == 1 and meeting


SHAPES = {'R3': r3_shape, 'R4': r4_shape}


class CatalogEntry():
    GROUPS = ('i', 'ii', 'iii')

    def __init__(self, name, group, matroid, representations=None):
        self.name = name
        self.group = group
        self.matroid = matroid
        self.representations = representations or []

    def __repr__(self):
        return f'CatalogEntry({self.name},{self.group},{self.matroid})'

    def representation(self, kind):
        for have, payload in self.representations:
            if have == kind:
                return payload
        return None

    def matroids(self):
        """(kind, matroid) for every representation that builds a matroid."""
        out = []
        for kind, payload in self.representations:
            if kind == 'bicircular-graph':
                out.append((kind, bicircular_matroid(payload)))
            elif kind == 'lattice-path':
                out.append((kind, matroid_of_lpm(payload)))
            elif kind == 'family-formula':
                out.append((kind, payload[1]))
        return out

    def check(self):
        for kind, matroid in self.matroids():
            if is_isomorphic(self.matroid, matroid) is None:
                raise VerificationFailure(f'coherence {kind}', self.name)
        shape = SHAPES.get(self.name)
        if shape and not shape(self.matroid):
            raise VerificationFailure('coherence geometric-note', self.name)


def formula(text, matroid):
    return ('family-formula', (text, matroid))


def group_one():
    entries = []
    for r in (3, 4, 5):
        name = uniform_name(r, 7)
        entries.append((name, uniform(r, 7), f'U_{{{r},7}}'))
    u12 = uniform(1, 2)
    entries += [
        ('T3(U1,2+U3,5)', direct_sum(u12, uniform(3, 5)).truncate_to(3),
         'T_3(U_{1,2} + U_{3,5})'),
        ('T3(U1,2+U1,2+U3,3)',
         direct_sum(direct_sum(u12, u12), uniform(3, 3)).truncate_to(3),
         'T_3(U_{1,2} + U_{1,2} + U_{3,3})'),
        ('T4(U1,2+U4,5)', direct_sum(u12, uniform(4, 5)).truncate_to(4),
         'T_4(U_{1,2} + U_{4,5})'),
        ('T4(U3,4+U3,3)',
         direct_sum(uniform(3, 4), uniform(3, 3)).truncate_to(4),
         'T_4(U_{3,4} + U_{3,3})'),
    ]
    out = []
    for name, matroid, text in entries:
        out.append(CatalogEntry(name, 'i', matroid, [
            formula(text, matroid),
            ('lattice-path', lattice_path(name)),
        ]))
    return out


def group_two():
    formulas = [
        ('A3', family('A', 3), 'A_3 = P_3\' + x'),
        ('B3,3', family('B', 3, 3),
         'B_{3,3} = T_3(U_{2,3} + U_{2,3} + U_{2,3})'),
        ('C4,2', family('C', 2, 2), 'C_{4,2} = B_{2,2}*'),
        ('C5,2', family('C', 3, 2), 'C_{5,2} = B_{3,2}*'),
        ('D4', family('D', 4), 'D_4 = (P_3 + U_{1,1}) + x'),
        ('whirl3', whirl(), 'W^3 = M(K_4) relaxed at the rim'),
    ]
    out = []
    for name, matroid, text in formulas:
        out.append(CatalogEntry(name, 'ii', matroid, [
            formula(text, matroid),
            ('bicircular-graph', figure_graph(name)),
        ]))
    notes = {
        'R3': 'rank 3: a 5-point line holding two doubled points, '
              'plus two points off it',
        'R4': 'rank 4: two 4-point planes meeting in a point, '
              'plus a doubled point',
    }
    for name, note in notes.items():
        graph = figure_graph(name)
        out.append(CatalogEntry(name, 'ii', bicircular_matroid(graph), [
            ('bicircular-graph', graph),
            ('geometric-note', note),
        ]))
    return out


def group_three():
    formulas = [
        ('B2,2', family('B', 2, 2),
         'B_{2,2} = T_2(U_{1,2} + U_{1,2} + U_{1,2})'),
        ('B3,2', family('B', 3, 2),
         'B_{3,2} = T_3(U_{2,3} + U_{2,3} + U_{1,2})'),
        ('E4', family('E', 4), 'E_4 = D_4*'),
        ('wheel3', wheel(), 'W_3 = M(K_4)'),
    ]
    return [CatalogEntry(name, 'iii', matroid, [formula(text, matroid)])
            for name, matroid, text in formulas]


def build_entries():
    return group_one() + group_two() + group_three()


@lru_cache(maxsize=None)
def theorem1_list():
    """The 19 excluded minors, grouped (i), (ii), (iii), coherence-checked."""
    entries = build_entries()
    for entry in entries:
        entry.check()
    return tuple(entries)


def names():
    return [entry.name for entry in theorem1_list()]


def get(name):
    for entry in theorem1_list():
        if entry.name == name:
            return entry
    raise UnknownName(name)


def by_size():
    """Entries ordered by element count, catalog order within a size."""
    return sorted(theorem1_list(), key=lambda entry: entry.matroid.n)


@lru_cache(maxsize=None)
def lattice_path_excluded_minors(max_elements):
    """(name, matroid) for every lattice path excluded minor that fits."""
    found = [
        ('wheel3', wheel()),
        ('whirl3', whirl()),
        ('R3', bicircular_matroid(figure_graph('R3'))),
        ('R4', bicircular_matroid(figure_graph('R4'))),
    ]
    n = 3
    while 2 * n <= max_elements:
        found.append((family_name('A', n), family('A', n)))
        n += 1
    for name in ('B', 'C'):
        for n in range(2, max_elements // 2 + 1):
            for k in range(2, n + 1):
                if 2 * n + k <= max_elements:
                    found.append((family_name(name, n, k),
                                  family(name, n, k)))
    for name in ('D', 'E'):
        n = 4
        while 2 * n <= max_elements:
            found.append((family_name(name, n), family(name, n)))
            n += 1
    found = [pair for pair in found if pair[1].n <= max_elements]
    return tuple(sorted(found, key=lambda pair: pair[1].n))


def freeze(entries, store):
    """Write unseen entries to the golden store; compare the rest.

    Returns {name: 'frozen' | 'match'}; a difference raises.
    """
    status = {}
    for entry in entries:
        if entry.name not in store:
            store[entry.name] = to_record(entry.matroid)
            status[entry.name] = 'frozen'
        elif store.matches(entry.name, entry.matroid):
            status[entry.name] = 'match'
        else:
            raise GoldenMismatchError(entry.name)
    return status


def describe(entry):
    m = entry.matroid
    return (f'{entry.name} group={entry.group} n={m.n} r={m.r} '
            f'bases={len(m.bases)} '
            f'kinds={",".join(kind for kind, _ in entry.representations)}')
