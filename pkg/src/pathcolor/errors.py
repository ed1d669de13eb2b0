class PreconditionError(ValueError):
    """Input does not satisfy an operation's structural requirement."""


class Mod3AdmissionError(PreconditionError):
    """The graph turned out not to have all cycle lengths divisible by 3."""

    def __init__(self, message, ear=None):
        super().__init__(message)
        self.ear = ear


class TreePackingError(PreconditionError):
    """No pair of edge-disjoint spanning trees exists.

    ``union_size`` is the size of a maximum union of two forests found by
    exhaustive augmentation; it is below ``required`` = 2(n-1), which
    certifies the failure.
    """

    def __init__(self, union_size, required, forests=None):
        super().__init__(
            f"no two edge-disjoint spanning trees: max two-forest union has "
            f"{union_size} edges, {required} needed"
        )
        self.union_size = union_size
        self.required = required
        self.forests = forests


class InvariantError(RuntimeError):
    """An internal invariant of a construction failed (implementation bug)."""


class MalformedInputError(ValueError):
    """A graph or coloring file could not be parsed."""
