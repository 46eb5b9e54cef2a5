"""Exception hierarchy of the workbench."""


class KnotWorkbenchError(Exception):
    """Base class for every error raised by the workbench."""


class GaussCodeError(KnotWorkbenchError, ValueError):
    """Malformed Gauss code text or word."""


class NonRealizableError(KnotWorkbenchError):
    """No choice of local crossing configurations embeds the code in the sphere."""

    def __init__(self, word):
        self.word = tuple(word)
        super().__init__(f"Gauss code {list(self.word)} is not realizable on the sphere")


class IllegalSiteError(KnotWorkbenchError):
    """A move site is not legal on the projection it is applied to."""


class BudgetExceededError(KnotWorkbenchError):
    """A computation would exceed its configured crossing or state budget."""


class UndecidableSystemError(KnotWorkbenchError):
    """Canonical-form decision requested for a move set without a reduction system."""


class UnseparatedPairError(KnotWorkbenchError):
    """Two relations of the classification could not be told apart."""

    def __init__(self, first, second):
        self.pair = (first, second)
        super().__init__(f"relations {first} and {second} are not separated")


class AuditFailure(KnotWorkbenchError):
    """A table or condition check produced a result contradicting the classification."""

    def __init__(self, message, certificate=None):
        self.certificate = certificate
        super().__init__(message)
