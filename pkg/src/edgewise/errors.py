"""Exceptions shared across the package."""


class InputError(ValueError):
    """Malformed or out-of-range input data.

    The command line maps this to exit code 2.
    """


class GenerationError(RuntimeError):
    """A randomized generator exhausted its rejection budget.

    Carries enough context to reproduce: the generator name, the seed,
    and whatever diagnostics the generator accumulated.
    """

    def __init__(self, message, **diagnostics):
        super().__init__(message)
        self.diagnostics = dict(diagnostics)
