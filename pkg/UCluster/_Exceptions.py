__copyright__ = "(C) 2019-2021 Science and Technology Facilities Council"
__license__ = "BSD - see LICENSE file in top-level directory"
__authors__ = "Neil Massey"

"""Exceptions raised by the UCluster package.  All of them derive from
UClusterException so that callers can catch everything from the package with
one clause."""


class UClusterException(Exception):
    """Base class for all UCluster exceptions."""
    pass


class APIException(UClusterException):
    """Misuse of the library: unknown variant, method not applicable to a
    variant, unsupported config file version."""
    pass


class InputException(UClusterException):
    """Invalid argument passed to an operation."""
    pass


class ParseException(UClusterException):
    """Malformed instance or witness text.  The line number is 1-based."""

    def __init__(self, line_no, message):
        self.line_no = line_no
        self.message = message
        super().__init__("line {}: {}".format(line_no, message))


class WitnessException(UClusterException):
    """A witness could not be applied to a graph.  `step` is the index of the
    offending entry (split step or edge/vertex line) in the witness."""

    def __init__(self, step, message):
        self.step = step
        self.message = message
        super().__init__("step {}: {}".format(step, message))


class CapacityException(UClusterException):
    """A brute-force size guard was exceeded."""

    def __init__(self, guard, size, limit):
        self.guard = guard
        self.size = size
        self.limit = limit
        super().__init__(
            "{} guard exceeded: size {} > limit {}. Pass override=True to run "
            "anyway, or use an fpt method.".format(guard, size, limit)
        )


class StructuralException(UClusterException):
    """A score-2 component matched no known shape."""
    pass


class GenerationException(UClusterException):
    """Infeasible parameters for the planted instance generator."""
    pass


class CancelledException(UClusterException):
    """A long search noticed that its cancellation token was set."""
    pass
