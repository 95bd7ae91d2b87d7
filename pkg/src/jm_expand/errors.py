"""Exception types shared across the package."""


class JMExpandError(Exception):
    """Base class for all errors raised by jm_expand."""


class NoSuchPart(JMExpandError, ValueError):
    pass


class InvalidPart(JMExpandError, ValueError):
    pass


class InvalidInput(JMExpandError, ValueError):
    pass


class IndexOutOfRange(JMExpandError, IndexError):
    pass


class ResourceGuard(JMExpandError):
    """An exhaustive expansion was refused because it exceeds the configured bound."""


class InvariantViolation(JMExpandError):
    """A computed element is not invariant where theory says it must be."""


class NotCentral(InvariantViolation):
    pass


class NotBiInvariant(InvariantViolation):
    pass


class DegenerateGram(JMExpandError):
    """Gram-Schmidt hit a vanishing pivot at the requested alpha."""

    def __init__(self, message, alpha=None):
        super().__init__(message)
        self.alpha = alpha


class SingularTheta(DegenerateGram):
    pass
