"""Exception hierarchy shared by the whole package."""


class PartsatError(Exception):
    """Base class for all errors raised by this package."""


class InputError(PartsatError):
    """Bad parameters, unknown vertex ids, or malformed input data."""


class UnsupportedParametersError(InputError):
    """No construction is available for the requested parameters."""


class WitnessError(PartsatError):
    """An object failed certification.

    ``violation`` carries a machine-readable reason, e.g. ``("clique", [...])``
    for an unwanted clique, ``("nonedge", (u, v))`` for an unsaturated
    admissible non-edge, or ``("parts", (i, j, ...))`` for a part subset whose
    deletion kills every required clique.
    """

    def __init__(self, message, violation=None):
        super().__init__(message)
        self.violation = violation


class ResourceExhaustedError(PartsatError):
    """A search ran out of budget. ``partial`` holds best-so-far progress."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial
