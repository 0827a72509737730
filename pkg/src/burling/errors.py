"""Exception types shared across the package."""


class BurlingError(Exception):
    """Base class for all errors raised by this package."""


class InvalidVertexError(BurlingError):
    """A vertex id is outside 0..n-1 for the graph at hand."""


class InvalidArgumentError(BurlingError):
    """An argument violates a documented precondition (e.g. repeated vertices)."""


class FormatError(BurlingError):
    """A serialized document does not conform to the file format."""


class TipViolationError(BurlingError):
    """An operation was asked to act on a vertex that is not a tip."""


class ArityError(BurlingError):
    """A join was given |x| != |tips(g2)|."""


class HomogeneityError(BurlingError):
    """A join was given x-vertices with differing neighborhoods."""


class CapError(BurlingError):
    """A size cap was exceeded; pass an explicit override to go bigger."""


class BudgetRequiredError(CapError):
    """Exhaustive search on a large graph needs an explicit node budget."""


class SearchBudgetExceeded(BurlingError):
    """A search hit its node limit before finishing; the result is inconclusive.

    Carries ``nodes``, the number of search nodes explored. No witness was
    found up to that point (detectors return as soon as they find one).
    """

    def __init__(self, nodes: int, what: str = "search"):
        super().__init__(f"{what} exhausted its node budget after {nodes} nodes")
        self.nodes = nodes
