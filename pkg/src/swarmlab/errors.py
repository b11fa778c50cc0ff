"""Exception hierarchy shared by all swarmlab modules."""


class SwarmlabError(Exception):
    """Base class for every error raised by swarmlab."""


class InvalidArgumentError(SwarmlabError, ValueError):
    """An argument violates a documented precondition."""


class InvalidSpaceError(InvalidArgumentError):
    """A search space has inconsistent bounds."""


class ContractError(SwarmlabError):
    """A caller violated an interface contract (e.g. missing velocities)."""


class NumericError(SwarmlabError):
    """A non-finite value appeared where a finite one is required."""

    def __init__(self, message, position=None, iteration=None):
        super().__init__(message)
        self.position = position
        self.iteration = iteration


class ConfigError(SwarmlabError):
    """A run/tuning configuration is malformed or out of range."""
