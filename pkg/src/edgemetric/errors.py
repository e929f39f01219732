"""Exception taxonomy shared by all modules."""


class EdgeMetricError(Exception):
    """Base class for every library error."""


class StructureError(EdgeMetricError):
    """A structure violates a construction invariant."""


class SelfLoop(StructureError):
    pass


class ConsecutiveContact(StructureError):
    pass


class IndexOutOfRange(StructureError):
    pass


class DuplicateContact(StructureError):
    pass


class UniqueBondsViolated(StructureError):
    pass


class NotSecondary(StructureError):
    """An operation restricted to unique-bond structures got a general one."""


class LengthMismatch(EdgeMetricError):
    """Two structures of different lengths were combined."""


class HeterogeneousLengths(LengthMismatch):
    """An ensemble mixes structures of different lengths."""


class NotationError(EdgeMetricError):
    """Malformed textual structure encoding."""


class UnbalancedBracket(NotationError):
    pass


class InvalidCharacter(NotationError):
    pass


class PairFormatError(NotationError):
    pass


class AlphabetExhausted(EdgeMetricError):
    """Too many mutually crossing contacts for the bracket alphabet."""


class DimensionMismatch(EdgeMetricError):
    """Ideals over different variable counts were combined."""


class InvalidMetricIndex(EdgeMetricError):
    """Metric index outside the supported range (m >= 3, m <= cap)."""


class BudgetExceeded(EdgeMetricError):
    """An exhaustive computation would exceed its configured budget."""


class PreconditionViolated(EdgeMetricError):
    """Inputs do not satisfy a documented precondition."""
