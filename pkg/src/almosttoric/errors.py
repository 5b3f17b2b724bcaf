"""Exception types; the CLI maps each to an exit code."""


class InputError(ValueError):
    """Malformed or invalid problem instance (exit code 1)."""


class NotHypersurfaceError(Exception):
    """rank(P_A * V_f) == 0: the Hadamard product has codimension 2 (exit code 2)."""


class InconsistencyError(RuntimeError):
    """An internal cross-check failed; indicates a bug (exit code 3)."""


class VerificationError(AssertionError):
    """A polynomial does not vanish on the parameterization (exit code 4)."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
