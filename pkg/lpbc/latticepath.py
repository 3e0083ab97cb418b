#!/usr/bin/env python3

from lpbc.bicircular import FREE, MultiGraph
from lpbc.config import settings
from lpbc.core import BasisMatroid, uniform
from lpbc.exceptions import GroundSetTooLarge, PreconditionViolated, \
    ValidationError, VerificationFailure
from lpbc.isomin import MinorWitness, ensure_budget, has_minor_iso
from lpbc.transversal import SetFamily, matroid_of_family
from lpbc.util import Error, to_mask

SWAP = str.maketrans('NE', 'EN')


class LatticePathPresentation():
    """Bounding paths P (lower right) and Q (upper left), (0,0) to (m,r)."""

    def __init__(self, m, r, P, Q):
        self.m = m
        self.r = r
        self.P = P
        self.Q = Q
        self.validate()

    def __repr__(self):
        return f'LatticePathPresentation({self.m},{self.r},{self.P},{self.Q})'

    def __eq__(self, other):
        if not isinstance(other, LatticePathPresentation):
            return False
        return (self.m, self.r, self.P, self.Q) == \
            (other.m, other.r, other.P, other.Q)

    def __hash__(self):
        return hash((self.m, self.r, self.P, self.Q))

    @property
    def n(self):
        return self.m + self.r

    def validate(self):
        for name, path in (('P', self.P), ('Q', self.Q)):
            if len(path) != self.n or set(path) - set('NE') \
                    or path.count('N') != self.r:
                raise ValidationError(
                    Error.PATH_SHAPE.format(name, self.r, self.m))
        below = above = 0
        for step, (p, q) in enumerate(zip(self.P, self.Q), 1):
            below += p == 'N'
            above += q == 'N'
            if below > above:
                raise ValidationError(Error.PATH_ORDER.format(step))


class StandardPresentation():
    """Intervals [l_i, u_i] whose lower and upper endpoints form chains."""

    def __init__(self, n, intervals):
        self.n = n
        self.intervals = tuple(tuple(interval) for interval in intervals)
        self.validate()

    def __repr__(self):
        return f'StandardPresentation({self.n},{list(self.intervals)})'

    def __eq__(self, other):
        if not isinstance(other, StandardPresentation):
            return False
        return self.n == other.n and self.intervals == other.intervals

    def __hash__(self):
        return hash((self.n, self.intervals))

    @property
    def r(self):
        return len(self.intervals)

    @property
    def lower(self):
        return [interval[0] for interval in self.intervals]

    @property
    def upper(self):
        return [interval[1] for interval in self.intervals]

    def validate(self):
        for l, u in self.intervals:
            if not 1 <= l <= self.n or not 1 <= u <= self.n:
                bad = l if not 1 <= l <= self.n else u
                raise ValidationError(Error.ELEMENT_RANGE.format(bad, self.n))
            if l > u:
                raise ValidationError(Error.EMPTY_INTERVAL.format(l, u))
        for name, ends in (('lower', self.lower), ('upper', self.upper)):
            if any(a >= b for a, b in zip(ends, ends[1:])):
                raise ValidationError(
                    Error.CHAIN_VIOLATION.format(f'{name} endpoints {ends}'))

    def homes(self, x):
        """1-based indices of the intervals containing x."""
        return [i for i, (l, u) in enumerate(self.intervals, 1) if l <= x <= u]

    def family(self):
        return SetFamily(self.n, [range(l, u + 1) for l, u in self.intervals])


def north_steps(path):
    return [i for i, step in enumerate(path, 1) if step == 'N']


def to_standard_presentation(lpm):
    return StandardPresentation(
        lpm.n, list(zip(north_steps(lpm.Q), north_steps(lpm.P))))


def to_lattice_path_presentation(presentation):
    n = presentation.n

    def path(ends):
        steps = ['E'] * n
        for x in ends:
            steps[x - 1] = 'N'
        return ''.join(steps)

    return LatticePathPresentation(
        n - presentation.r, presentation.r,
        path(presentation.upper), path(presentation.lower))


def choices(intervals):
    """Increasing tuples (b_1, ..., b_r) with l_i <= b_i <= u_i."""
    chosen = []

    def extend(i, previous):
        if i == len(intervals):
            yield tuple(chosen)
            return
        l, u = intervals[i]
        for b in range(max(l, previous + 1), u + 1):
            chosen.append(b)
            yield from extend(i + 1, b)
            chosen.pop()

    yield from extend(0, 0)


def matroid_of_lpm(lpm):
    intervals = to_standard_presentation(lpm).intervals
    bases = [to_mask(b) for b in choices(intervals)]
    return BasisMatroid(lpm.n, bases, lpm.r)


def matroid_of_standard(presentation):
    return matroid_of_family(presentation.family())


def count_paths(lpm):
    ways = {0: 1}
    for l, u in to_standard_presentation(lpm).intervals:
        ways = {b: sum(w for p, w in ways.items() if p < b)
                for b in range(l, u + 1)}
    return sum(ways.values())


def rotate(lpm):
    return LatticePathPresentation(lpm.m, lpm.r, lpm.Q[::-1], lpm.P[::-1])


def reflect(lpm):
    return LatticePathPresentation(
        lpm.r, lpm.m, lpm.Q.translate(SWAP), lpm.P.translate(SWAP))


def delete_presentation(presentation, x):
    """Standard presentation of M\\x, relabelled onto 1..n-1."""
    intervals = [list(interval) for interval in presentation.intervals]
    r = len(intervals)

    if [x, x] in intervals:
        intervals.remove([x, x])
    else:
        upper = [u for _, u in intervals]
        lower = [l for l, _ in intervals]
        for interval in intervals:
            if interval[0] == x:
                interval[0] = x + 1
            elif interval[1] == x:
                interval[1] = x - 1
        if x in upper:
            k = upper.index(x)
            j = 1
            while k - j >= 0 and upper[k - j] == x - j:
                intervals[k - j][1] = x - j - 1
                j += 1
        if x in lower:
            k = lower.index(x)
            j = 1
            while k + j < r and lower[k + j] == x + j:
                intervals[k + j][0] = x + j + 1
                j += 1

    def shift(y):
        return y - 1 if y > x else y

    return StandardPresentation(
        presentation.n - 1, [(shift(l), shift(u)) for l, u in intervals])


def has_upper_bound_property(presentation):
    """Return (True, None) or (False, k) for the first k with l_{k+2} > u_k."""
    lower = presentation.lower
    upper = presentation.upper
    for k in range(1, presentation.r - 1):
        if lower[k + 1] > upper[k - 1]:
            return False, k
    return True, None


def triple_intervals(presentation):
    """(x, i) for every x lying in N_i, N_{i+1} and N_{i+2}."""
    found = []
    for x in range(1, presentation.n + 1):
        homes = presentation.homes(x)
        for i in homes:
            if i + 2 in homes:
                found.append((x, i))
    return found


def bicircular_certificate(presentation):
    """The graph of a width-2 standard presentation, or None."""
    if triple_intervals(presentation):
        return None
    edges = []
    for x in range(1, presentation.n + 1):
        homes = presentation.homes(x)
        if not homes:
            edges.append(FREE)
        elif len(homes) == 1:
            edges.append(('loop', homes[0]))
        else:
            edges.append(('link', homes[0], homes[1]))
    return MultiGraph(presentation.r, edges)


def extract_uniform_minor(lpm):
    """Delete down to U_{r,r+2} along the lower, then upper, endpoints."""
    matroid = matroid_of_lpm(lpm)
    r = lpm.r
    if r < 3:
        raise PreconditionViolated(Error.RANK_TOO_SMALL.format(r))
    connected, _ = matroid.is_vertically_k_connected(3)
    if not connected:
        raise PreconditionViolated(Error.NOT_VERTICALLY_3_CONNECTED)

    presentation = to_standard_presentation(lpm)
    labels = list(range(1, lpm.n + 1))
    deleted = []

    def drop(x):
        nonlocal presentation
        deleted.append(labels.pop(x - 1))
        presentation = delete_presentation(presentation, x)

    while True:
        loops = [x for x in range(1, presentation.n + 1)
                 if not presentation.homes(x)]
        if not loops:
            break
        drop(loops[-1])

    while True:
        lower = presentation.lower
        gaps = [k for k in range(r - 1) if lower[k + 1] != lower[k] + 1]
        if not gaps:
            break
        drop(lower[gaps[0]] + 1)

    while True:
        upper = presentation.upper
        gaps = [k for k in range(1, r) if upper[k - 1] != upper[k] - 1]
        if not gaps:
            break
        drop(upper[gaps[-1]] - 1)

    while presentation.n > r + 2:
        drop(presentation.n)

    witness = MinorWitness(f'U{r},{r + 2}', 0, to_mask(deleted),
                           range(1, r + 3))
    if not witness.replay(matroid, uniform(r, r + 2)):
        raise VerificationFailure('uniform-minor', repr(lpm))
    return witness


def is_lattice_path(matroid, budget=None, limit=None):
    """Return (True, None) or (False, witness) against the excluded minors."""
    from lpbc.catalog import lattice_path_excluded_minors

    if limit is None:
        limit = settings()['max_elements']
    if matroid.n > limit:
        raise GroundSetTooLarge(matroid.n, limit)
    budget = ensure_budget(budget)
    for name, excluded in lattice_path_excluded_minors(matroid.n):
        witness = has_minor_iso(matroid, excluded, budget, name)
        if witness is not None:
            return False, witness
    return True, None
