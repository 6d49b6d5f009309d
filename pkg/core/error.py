#! usr/bin/python
# -*- coding:utf-8 -*-


class AsdError(Exception):
    """
        This is AsdError BaseError
        Every failure raised by the decomposition toolkit derives from it
    """
    def __init__(self, message=''):
        super(AsdError, self).__init__(message)
        self.message = message

    def __str__(self):
        return self.message


class NotTriangular(AsdError):
    """edge count is not n(n+1)/2 for any positive n"""
    def __init__(self, edges):
        super(NotTriangular, self).__init__()
        self.edges = edges

    def __str__(self):
        return "edge count {} is not a triangular number".format(self.edges)


class SumMismatch(AsdError):
    def __init__(self, degrees, n):
        super(SumMismatch, self).__init__()
        self.degrees = tuple(degrees)
        self.n = n

    def __str__(self):
        return "sum{}={} but n(n+1)/2={} for n={}".format(self.degrees, sum(self.degrees),
                                                         self.n * (self.n + 1) // 2, self.n)


class DimensionMismatch(AsdError):
    """vectors or matrices of incompatible shape"""


class ConditionFailed(AsdError):
    """
        the degree sequence violates d[k-i] >= n-i
    """
    def __init__(self, degrees, n):
        super(ConditionFailed, self).__init__()
        self.degrees = tuple(degrees)
        self.n = n

    def __str__(self):
        return "degree sequence {} fails the sufficient condition for n={}".format(self.degrees, self.n)


class SearchExhausted(AsdError):
    """no ascending matrix found; existence is a published result, so this must never fire"""
    def __init__(self, degrees, columns):
        super(SearchExhausted, self).__init__()
        self.degrees = tuple(degrees)
        self.columns = columns

    def __str__(self):
        return "no ascending matrix in N({}, {}^-) found".format(self.degrees, self.columns)


class MatchingUnavailable(AsdError):
    def __init__(self, row, column, index):
        super(MatchingUnavailable, self).__init__()
        self.row = row
        self.column = column
        self.index = index

    def __str__(self):
        return "matching M'{} needs cell ({},{}) which has multiplicity 0".format(self.index, self.row, self.column)


class HallViolation(AsdError):
    def __init__(self, vertices):
        super(HallViolation, self).__init__()
        self.vertices = tuple(vertices)

    def __str__(self):
        return "no matching saturates x{}".format(list(self.vertices))


class Unsatisfiable(AsdError):
    """the multigraph has no sequential coloring (or the chosen solver found none)"""
    def __init__(self, degrees, solver):
        super(Unsatisfiable, self).__init__()
        self.degrees = tuple(degrees)
        self.solver = solver

    def __str__(self):
        return "no sequential coloring for d={} (solver={})".format(self.degrees, self.solver)


class SearchTimeout(AsdError):
    """exact search ran past its deadline"""
    def __init__(self, degrees, seconds, nodes):
        super(SearchTimeout, self).__init__()
        self.degrees = tuple(degrees)
        self.seconds = seconds
        self.nodes = nodes

    def __str__(self):
        return "exact search for d={} gave up after {}s ({} nodes)".format(self.degrees, self.seconds, self.nodes)


class NotSequential(AsdError):
    """coloring is not proper or a vertex does not see exactly 1..d_i"""


class Incomplete(AsdError):
    """list edge coloring left edges uncolored"""
    def __init__(self, uncolored):
        super(Incomplete, self).__init__()
        self.uncolored = tuple(uncolored)

    def __str__(self):
        return "list coloring left {} edge(s) uncolored: {}".format(len(self.uncolored), list(self.uncolored)[:8])


class NotReduced(AsdError):
    def __str__(self):
        return 'host graph is not reduced: {}'.format(self.message)


class TheoremStress(AsdError):
    """
        a step guaranteed by the theory failed; the instance was dumped to `path`
    """
    def __init__(self, stage, path, detail=''):
        super(TheoremStress, self).__init__(detail)
        self.stage = stage
        self.path = path

    def __str__(self):
        return "theorem stress at stage[{}] ({}), instance dumped to {}".format(self.stage, self.message, self.path)


class CapExceeded(AsdError):
    def __init__(self, edges, cap):
        super(CapExceeded, self).__init__()
        self.edges = edges
        self.cap = cap

    def __str__(self):
        return "oracle refuses {} edges (cap={})".format(self.edges, self.cap)


class Infeasible(AsdError):
    """no simple bipartite graph realizes the requested degrees"""


class InstanceError(AsdError):
    """
        malformed instance or certificate file
    """
    def __init__(self, path, reason):
        super(InstanceError, self).__init__(reason)
        self.path = path

    def __str__(self):
        return "path[{}] {}".format(self.path, self.message)
