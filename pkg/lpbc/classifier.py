#!/usr/bin/env python3

import time
from itertools import combinations, combinations_with_replacement, \
    permutations
from lpbc import catalog
from lpbc.bicircular import FREE, MultiGraph, bicircular_matroid, \
    is_bicircular
from lpbc.config import settings
from lpbc.exceptions import GoldenMismatchError, GroundSetTooLarge, \
    VerificationFailure
from lpbc.formats import serialize
from lpbc.isomin import ensure_budget, has_minor_iso, is_isomorphic
from lpbc.latticepath import LatticePathPresentation, is_lattice_path, \
    matroid_of_lpm
from lpbc.util import MsgType, duration, msg, popcount

# (lattice path, bicircular) for the members of each group.
EXPECTED = {
    'i': (True, False),
    'ii': (False, True),
    'iii': (False, False),
}


class Verdict():
    def __init__(self, member, witness=None, method='theorem1',
                 budgets_used=None, lattice_path=None, bicircular=None,
                 graph=None):
        self.member = member
        self.witness = witness
        self.method = method
        self.budgets_used = budgets_used or {}
        self.lattice_path = lattice_path
        self.bicircular = bicircular
        self.graph = graph

    def __repr__(self):
        return (f'Verdict({self.method},member={self.member},'
                f'witness={self.witness})')

    def lines(self):
        out = [f'member {str(self.member).lower()}']
        if self.method == 'direct':
            out.append(f'lattice-path {str(self.lattice_path).lower()}')
            out.append(f'bicircular {str(self.bicircular).lower()}')
        if self.witness is not None:
            out += self.witness.lines()
        return out


def check_size(matroid, limit=None):
    if limit is None:
        limit = settings()['max_elements']
    if matroid.n > limit:
        raise GroundSetTooLarge(matroid.n, limit)


def member_theorem1(matroid, budget=None, limit=None):
    """Search for each of the 19 excluded minors, smallest first."""
    check_size(matroid, limit)
    budget = ensure_budget(budget)
    for entry in catalog.by_size():
        if entry.matroid.n > matroid.n:
            break
        witness = has_minor_iso(matroid, entry.matroid, budget, entry.name)
        if witness is not None:
            return Verdict(False, witness, 'theorem1', {'nodes': budget.used})
    return Verdict(True, None, 'theorem1', {'nodes': budget.used})


def member_direct(matroid, budget=None, limit=None):
    """Decide lattice path and bicircular separately; both must hold."""
    check_size(matroid, limit)
    budget = ensure_budget(budget)
    lattice, witness = is_lattice_path(matroid, budget, limit)
    graph = is_bicircular(matroid, budget)
    return Verdict(
        lattice and graph is not None, witness, 'direct',
        {'nodes': budget.used}, lattice_path=lattice,
        bicircular=graph is not None, graph=graph)


class IsomorphismClasses():
    """Representatives bucketed by invariant profile."""

    def __init__(self):
        self.buckets = {}

    def __len__(self):
        return sum(len(bucket) for bucket in self.buckets.values())

    def add(self, matroid):
        """True when `matroid` is not isomorphic to anything seen so far."""
        bucket = self.buckets.setdefault(matroid.profile, [])
        for seen in bucket:
            if is_isomorphic(matroid, seen) is not None:
                return False
        bucket.append(matroid)
        return True


def lattice_paths(m, r):
    """Paths (0,0) to (m,r), ordered by the positions of their North steps."""
    n = m + r
    for north in combinations(range(n), r):
        steps = ['E'] * n
        for i in north:
            steps[i] = 'N'
        yield ''.join(steps)


def stays_below(P, Q):
    below = above = 0
    for p, q in zip(P, Q):
        below += p == 'N'
        above += q == 'N'
        if below > above:
            return False
    return True


def lpm_presentations(max_n):
    for n in range(1, max_n + 1):
        for r in range(n + 1):
            paths = list(lattice_paths(n - r, r))
            for P in paths:
                for Q in paths:
                    if stays_below(P, Q):
                        yield LatticePathPresentation(n - r, r, P, Q)


def enumerate_lpm_corpus(max_n=None):
    if max_n is None:
        max_n = settings()['lpm_corpus_elements']
    classes = IsomorphismClasses()
    for lpm in lpm_presentations(max_n):
        matroid = matroid_of_lpm(lpm)
        if classes.add(matroid):
            yield matroid


def slots(v):
    out = [FREE] + [('loop', a) for a in range(1, v + 1)]
    out += [('link', a, b) for a, b in combinations(range(1, v + 1), 2)]
    return sorted(out)


def graph_multisets(max_edges, max_vertices):
    """One slot multiset per vertex-permutation orbit, on max_vertices."""
    universe = slots(max_vertices)
    everything = MultiGraph(max_vertices, universe)
    tables = [dict(zip(universe, everything.relabel_vertices(perm).edges))
              for perm in permutations(range(1, max_vertices + 1))]
    for m in range(1, max_edges + 1):
        for combo in combinations_with_replacement(universe, m):
            if all(tuple(sorted(table[s] for s in combo)) >= combo
                   for table in tables):
                yield MultiGraph(max_vertices, combo)


def enumerate_bicircular_corpus(max_edges=None, max_vertices=None):
    config = settings()
    if max_edges is None:
        max_edges = config['bicircular_corpus_edges']
    if max_vertices is None:
        max_vertices = config['bicircular_corpus_vertices']
    classes = IsomorphismClasses()
    for graph in graph_multisets(max_edges, max_vertices):
        matroid = bicircular_matroid(graph)
        if classes.add(matroid):
            yield matroid


def family_reductions(max_elements=None, budget=None):
    """(name, matroid, witness) for family members outside the 19.

    The witness names the smallest listed excluded minor the member
    contains, or is None when there is none.
    """
    if max_elements is None:
        max_elements = settings()['max_elements']
    listed = set(catalog.names())
    out = []
    for name, matroid in catalog.lattice_path_excluded_minors(max_elements):
        if name in listed:
            continue
        witness = None
        for entry in catalog.by_size():
            if entry.matroid.n >= matroid.n:
                break
            witness = has_minor_iso(
                matroid, entry.matroid, ensure_budget(budget), entry.name)
            if witness is not None:
                break
        out.append((name, matroid, witness))
    return out


def targets(max_elements):
    found = dict(catalog.lattice_path_excluded_minors(max_elements))
    found.update((entry.name, entry.matroid)
                 for entry in catalog.theorem1_list())
    return found


def replays(matroid, witness, known):
    return witness is not None and witness.target_name in known and \
        witness.replay(matroid, known[witness.target_name])


def names_entry(entry, witness, known):
    """True when the witness target is the entry itself, up to isomorphism."""
    if witness is None or witness.target_name not in known:
        return False
    target = known[witness.target_name]
    return is_isomorphic(target, entry.matroid) is not None


class Check():
    def __init__(self, check, ref, passed, witness_ref=None,
                 serialized=None):
        self.check = check
        self.ref = ref
        self.passed = passed
        self.witness_ref = witness_ref
        self.serialized = serialized

    def __repr__(self):
        return f'Check({self.line()})'

    def line(self):
        status = 'PASS' if self.passed else 'FAIL'
        parts = (status, self.check, self.ref, self.witness_ref)
        return ' '.join(part for part in parts if part)


class Report():
    def __init__(self):
        self.checks = []
        self.start_time = time.time()
        self.end_time = None

    def add(self, check, ref, passed, witness_ref=None, matroid=None):
        serialized = None
        if not passed and matroid is not None:
            serialized = serialize(matroid)
        self.checks.append(
            Check(check, ref, bool(passed), witness_ref, serialized))

    @property
    def failures(self):
        return [c for c in self.checks if not c.passed]

    @property
    def passed(self):
        return not self.failures

    def lines(self):
        out = [c.line() for c in self.checks]
        out.append(f'checks {len(self.checks)} failures '
                   f'{len(self.failures)}')
        return out

    def raise_for_failures(self):
        if self.failures:
            first = self.failures[0]
            raise VerificationFailure(
                f'{first.check} {first.ref}', first.serialized)

    def finish(self):
        self.end_time = time.time()
        took = duration(self.start_time, self.end_time)
        if self.passed:
            msg(f'{len(self.checks)} checks passed', MsgType.SUCCESS,
                f'({took})')
        else:
            msg(f'{len(self.failures)} of {len(self.checks)} checks failed',
                MsgType.FAILURE, f'({took})')


def witness_name(verdict):
    if verdict.witness is None:
        return None
    return verdict.witness.target_name


def verify_catalog(report, entries, store):
    msg('Catalog coherence', MsgType.CHECK)
    for entry in entries:
        try:
            entry.check()
            report.add('coherence', entry.name, True)
        except VerificationFailure as e:
            report.add('coherence', entry.name, False, e.check, entry.matroid)
    if store is None:
        return
    msg('Golden bases', MsgType.GOLDEN, store.path)
    for entry in entries:
        try:
            status = catalog.freeze([entry], store)[entry.name]
            report.add('golden', entry.name, True, status)
        except GoldenMismatchError:
            report.add('golden', entry.name, False, None, entry.matroid)


def verify_groups(report, entries, known, node_budget, limit):
    msg('Group patterns', MsgType.CHECK)
    for entry in entries:
        direct = member_direct(entry.matroid, node_budget, limit)
        sides = (direct.lattice_path, direct.bicircular)
        passed = not direct.member and sides == EXPECTED[entry.group]
        if direct.witness is not None:
            passed = passed and \
                replays(entry.matroid, direct.witness, known) and \
                names_entry(entry, direct.witness, known)
        report.add('group', entry.name, passed, witness_name(direct),
                   entry.matroid)

        verdict = member_theorem1(entry.matroid, node_budget, limit)
        passed = not verdict.member and \
            witness_name(verdict) == entry.name and \
            replays(entry.matroid, verdict.witness, known)
        report.add('theorem1', entry.name, passed, witness_name(verdict),
                   entry.matroid)


def verify_minimality(report, entries, node_budget, limit):
    msg('Single-element minors', MsgType.CHECK)
    for entry in entries:
        m = entry.matroid
        for e in range(1, m.n + 1):
            for ref, minor in ((f'{entry.name}\\{e}', m.delete([e])),
                               (f'{entry.name}/{e}', m.contract([e]))):
                direct = member_direct(minor, node_budget, limit)
                verdict = member_theorem1(minor, node_budget, limit)
                report.add('single-element', ref,
                           direct.member and verdict.member,
                           witness_name(verdict) or witness_name(direct),
                           minor)


def verify_connectivity(report, entries):
    msg('Bicircular excluded-minor shape', MsgType.CHECK)
    for entry in entries:
        if entry.group not in ('i', 'iii'):
            continue
        m = entry.matroid
        connected, _ = m.is_vertically_k_connected(3)
        small = all(popcount(c) <= 2 for c in m.parallel_classes())
        report.add('vertical-3-connected', entry.name, connected and small,
                   None, m)


def verify_reductions(report, known, limit, node_budget):
    msg('Family reductions', MsgType.CHECK)
    for name, matroid, witness in family_reductions(limit, node_budget):
        report.add('reduction', name, replays(matroid, witness, known),
                   witness.target_name if witness else None, matroid)


def verify_corpus(report, label, corpus, side, node_budget, limit):
    msg(f'Biconditional over the {label} corpus', MsgType.CHECK)
    for index, matroid in enumerate(corpus, 1):
        verdict = member_theorem1(matroid, node_budget, limit)
        direct = member_direct(matroid, node_budget, limit)
        passed = verdict.member == direct.member and getattr(direct, side)
        if not verdict.member:
            passed = passed and verdict.witness.replay(
                matroid, catalog.get(verdict.witness.target_name).matroid)
        report.add('biconditional', f'{label}#{index}', passed,
                   witness_name(verdict), matroid)


def verify_theorem1(node_budget=None, max_elements=None, lpm_elements=None,
                    bicircular_edges=None, bicircular_vertices=None,
                    store=None):
    """Run every check and return the Report; nothing is raised on FAIL."""
    config = settings()
    limit = max_elements or config['max_elements']
    report = Report()
    entries = catalog.build_entries()
    verify_catalog(report, entries, store)
    known = targets(limit)
    verify_groups(report, entries, known, node_budget, limit)
    verify_minimality(report, entries, node_budget, limit)
    verify_connectivity(report, entries)
    verify_reductions(report, known, limit, node_budget)
    verify_corpus(report, 'lpm', enumerate_lpm_corpus(lpm_elements),
                  'lattice_path', node_budget, limit)
    verify_corpus(report, 'bicircular',
                  enumerate_bicircular_corpus(bicircular_edges,
                                              bicircular_vertices),
                  'bicircular', node_budget, limit)
    report.finish()
    return report
