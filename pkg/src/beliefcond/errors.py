"""Exception hierarchy shared by every module."""


class BeliefError(Exception):
    """Base class for all errors raised by this package."""


class FrameMismatchError(BeliefError, ValueError):
    """Two objects built over different frames were combined."""


class FrameTooLargeError(BeliefError, ValueError):
    """A frame exceeds the size cap of the requested operation."""

    def __init__(self, size, cap, operation):
        self.size = size
        self.cap = cap
        self.operation = operation
        super().__init__(f"{operation} supports frames of at most {cap} elements, got {size}")


class InvalidMassError(BeliefError, ValueError):
    """A set function violates one of the mass-function conditions."""

    def __init__(self, axiom, witness, message):
        self.axiom = axiom
        self.witness = witness
        super().__init__(message)


class NotABeliefFunctionError(BeliefError, ValueError):
    """A set function is not a belief function.

    ``witness`` is the first subset (canonical order) at which the
    Moebius inverse is negative or a normalization condition fails.
    """

    def __init__(self, axiom, witness, message):
        self.axiom = axiom
        self.witness = witness
        super().__init__(message)


class ConditioningUndefined(BeliefError, ValueError):
    """The conditioning event has zero belief (or plausibility)."""

    def __init__(self, message, step=None):
        self.step = step
        if step is not None:
            message = f"step {step}: {message}"
        super().__init__(message)


class InfeasibleConstraintsError(BeliefError, ValueError):
    """A linear constraint system has no solution inside the simplex."""


class InvalidScenarioError(BeliefError, ValueError):
    """A partition scenario is malformed."""


class DocumentError(BeliefError, ValueError):
    """A JSON document or event expression could not be parsed."""
