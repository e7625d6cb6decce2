class MatroidcolorError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(MatroidcolorError, ValueError):
    pass


class NotFoundError(MatroidcolorError, KeyError):
    pass


class ResourceError(MatroidcolorError):
    """An instance exceeds a configured size or enumeration budget."""


class InvalidCircuitsError(DomainError):
    def __init__(self, violation):
        super().__init__(f"circuit axioms violated: {violation}")
        self.violation = violation


class LoopNotSupportedError(DomainError):
    pass


class NotAMatroidError(DomainError):
    def __init__(self, counterexample):
        super().__init__(f"not a matroid: {counterexample}")
        self.counterexample = counterexample


class NoColoringError(DomainError):
    pass


class TheoremViolation(MatroidcolorError, AssertionError):
    """A checked inequality failed.

    This means either an implementation bug or a genuine counterexample, so
    it always carries the full instance.
    """

    def __init__(self, message, instance=None):
        super().__init__(message)
        self.instance = instance


class ClaimViolation(TheoremViolation):
    pass
