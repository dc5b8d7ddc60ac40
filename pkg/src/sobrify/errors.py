"""Exception types raised across the package."""


class OrderError(ValueError):
    """Base class for invalid order-theoretic input."""


class CycleError(OrderError):
    """Cover pairs induce a cycle, so antisymmetry fails."""


class UnknownLabel(OrderError, KeyError):
    pass


class SizeLimitExceeded(OrderError):
    pass


class EmptySetError(OrderError):
    """Irreducibility is only defined for nonempty sets."""


class EmptyInput(OrderError):
    pass


class NotClosedFamily(OrderError):
    pass


class NotIrreducibleFamily(OrderError):
    pass


class NotMonotone(OrderError):
    pass


class NotIso(OrderError):
    pass


class SpaceMismatch(OrderError):
    pass


class UnrecognizedChainForm(OrderError):
    pass


class NotRepresentable(OrderError):
    pass


class ParseError(OrderError):
    pass


class UnknownSuite(OrderError):
    pass
