#!/usr/bin/env python3

from lpbc.util import Error


class MatroidError(Exception):
    pass


class NonUniformBases(MatroidError):
    def __init__(self, sizes):
        super().__init__(Error.NON_UNIFORM_BASES.format(sorted(sizes)))
        self.sizes = sizes


class ExchangeViolation(MatroidError):
    def __init__(self, triple):
        super().__init__(Error.EXCHANGE_VIOLATION.format(*triple))
        self.triple = triple


class OverlappingSets(MatroidError):
    def __init__(self, common):
        super().__init__(Error.OVERLAPPING_SETS.format(common))
        self.common = common


class RankZero(MatroidError):
    def __init__(self):
        super().__init__(Error.RANK_ZERO)


class BadTargetRank(MatroidError):
    def __init__(self, target, rank):
        super().__init__(Error.BAD_TARGET_RANK.format(rank, target))
        self.target = target
        self.rank = rank


class GroundSetTooLarge(MatroidError):
    def __init__(self, size, limit):
        super().__init__(Error.GROUND_SET_TOO_LARGE.format(size, limit))
        self.size = size
        self.limit = limit


class HasFreeEdge(MatroidError):
    def __init__(self, edge):
        super().__init__(Error.HAS_FREE_EDGE.format(edge))
        self.edge = edge


class NotCircuitHyperplane(MatroidError):
    def __init__(self, members):
        super().__init__(Error.NOT_CIRCUIT_HYPERPLANE.format(
            ', '.join(str(e) for e in members)))
        self.members = members


class BudgetExceeded(MatroidError):
    def __init__(self, budget, used=None):
        super().__init__(Error.BUDGET_EXCEEDED.format(budget))
        self.budget = budget
        self.used = used


class PreconditionViolated(MatroidError):
    def __init__(self, reason):
        super().__init__(reason)
        self.reason = reason


class NoCircuit(MatroidError):
    def __init__(self):
        super().__init__(Error.NO_CIRCUIT)


class GirthTooSmall(MatroidError):
    def __init__(self, girth):
        super().__init__(Error.GIRTH_TOO_SMALL.format(girth))
        self.girth = girth


class BadParameters(MatroidError):
    def __init__(self, name, params):
        super().__init__(Error.BAD_PARAMETERS.format(name, params))
        self.name = name
        self.params = params


class UnknownName(MatroidError):
    def __init__(self, name):
        super().__init__(Error.UNKNOWN_NAME.format(name))
        self.name = name


class ParseError(MatroidError):
    def __init__(self, line, column, message):
        super().__init__(Error.PARSE.format(line, column, message))
        self.line = line
        self.column = column
        self.message = message


class ValidationError(MatroidError):
    pass


class GoldenMismatchError(MatroidError):
    def __init__(self, name):
        super().__init__(Error.GOLDEN_MISMATCH.format(name))
        self.name = name


class VerificationFailure(MatroidError):
    def __init__(self, check, serialized):
        super().__init__(Error.VERIFICATION_FAILURE.format(check))
        self.check = check
        self.serialized = serialized
