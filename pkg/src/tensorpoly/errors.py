"""Exception hierarchy shared by the graph modules."""


class TensorPolyError(Exception):
    """Base class for all library errors."""


class GraphInputError(TensorPolyError, ValueError):
    """Unknown edge id, vertex out of range, or malformed edge subset."""


class ContractError(TensorPolyError, ValueError):
    """Classical or ribbon contraction requested on an unsupported edge."""


class StructureError(TensorPolyError, ValueError):
    """A ribbon or stranded graph violates its structural invariants."""


class OrientabilityError(StructureError):
    """Odd Euler characteristic or an orientation-preserving strand gluing."""


class OperationError(TensorPolyError, ValueError):
    """Delete/contract on a passive edge of a stranded graph."""


class ParseError(TensorPolyError, ValueError):
    """Malformed graph file."""


class StrategyMismatchError(TensorPolyError):
    """Two evaluation strategies disagreed; carries both results."""

    def __init__(self, message, first=None, second=None):
        super().__init__(message)
        self.first = first
        self.second = second
