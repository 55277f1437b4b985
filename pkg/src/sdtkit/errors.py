"""Exception types shared across the toolkit."""


class ToolkitError(Exception):
    """Base class for all toolkit-specific errors."""


class GraphDataError(ToolkitError, ValueError):
    """Raised when graph data violates the simple-graph invariants."""


class ConnectivityError(ToolkitError, ValueError):
    """Raised when an operation requiring a connected graph gets a disconnected one."""


class RegularityError(ToolkitError, ValueError):
    """Raised when an operation requiring a regular graph gets an irregular one."""


class PermutationError(ToolkitError, ValueError):
    """Raised for non-bijective image sequences or degree mismatches."""


class CycleNotationError(ToolkitError, ValueError):
    """Raised when cycle-notation text cannot be parsed into a permutation."""


class Graph6Error(ToolkitError, ValueError):
    """Raised on malformed graph6 input.

    ``offset`` is the byte position (within the stripped line) where the
    problem was detected, or None when the whole line is at fault.
    """

    def __init__(self, message, offset=None):
        super().__init__(message if offset is None else f"{message} (byte {offset})")
        self.offset = offset


class ScaleError(ToolkitError, ValueError):
    """Raised when a brute-force operation is asked to exceed its hard cap."""


class DomainInvarianceError(ToolkitError, ValueError):
    """Raised when a point set is not closed under the acting generators.

    Carries the offending generator index and the point that escapes.
    """

    def __init__(self, message, generator_index=None, point=None):
        super().__init__(message)
        self.generator_index = generator_index
        self.point = point


class TransitivityError(ToolkitError, ValueError):
    """Raised when a required transitivity precondition fails.

    ``witnesses`` holds a pair of elements in distinct orbits and, when
    relevant, their differing neighbour counts.
    """

    def __init__(self, message, witnesses=None):
        super().__init__(message)
        self.witnesses = witnesses


class HypothesisError(ToolkitError, ValueError):
    """Raised when design extraction preconditions fail; names the clause."""

    def __init__(self, message, clause=None):
        super().__init__(message)
        self.clause = clause


class TheoremViolationError(ToolkitError):
    """A verified mathematical identity failed on a concrete instance.

    This is never expected to fire; it would falsify a proved statement on
    the instance at hand, so it carries the full witness and is allowed to
    crash any caller.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
