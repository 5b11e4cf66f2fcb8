"""Exceptions raised by the fixpointlab library.

Every error condition named by an operation has its own class so callers
(and the CLI's exit-code mapping) can tell them apart.
"""


class FixpointError(Exception):
    """Base class for all library errors."""


class ParseError(FixpointError):
    """Malformed space file."""

    def __init__(self, message, line_no=None, source=None):
        self.message = message
        self.line_no = line_no
        self.source = source
        location = source or '<input>'
        if line_no is not None:
            location = f'{location}:{line_no}'
        super().__init__(f'{location}: {message}')


class InvalidMetric(FixpointError):
    """The candidate table is not a metric with at least three points."""

    def __init__(self, violations):
        self.violations = list(violations)
        kinds = ', '.join(sorted({v.kind.value for v in self.violations}))
        super().__init__(f'{len(self.violations)} metric violation(s): {kinds}')


class InvalidWeight(FixpointError):
    pass


class DisconnectedGraph(FixpointError):
    def __init__(self, unreachable):
        self.unreachable = tuple(unreachable)
        super().__init__(f'no path between {self.unreachable[0]} and {self.unreachable[1]}')


class InvalidMap(FixpointError):
    pass


class UnknownPoint(FixpointError):
    def __init__(self, point):
        self.point = point
        super().__init__(f'unknown point {point!r}')


class NotDistinct(FixpointError):
    def __init__(self, points):
        self.points = tuple(points)
        super().__init__(f'points must be pairwise distinct: {", ".join(self.points)}')


class ArityMismatch(FixpointError):
    pass


class TooFewPoints(FixpointError):
    pass


class SpaceTooLarge(FixpointError):
    def __init__(self, count, cap):
        self.count = count
        self.cap = cap
        super().__init__(f'{count} self-maps exceed the enumeration cap of {cap}')


class ContradictoryPredicate(FixpointError):
    def __init__(self, classes):
        self.classes = tuple(classes)
        super().__init__(f'classes both required and excluded: {", ".join(self.classes)}')


class InvalidGrid(FixpointError):
    pass
