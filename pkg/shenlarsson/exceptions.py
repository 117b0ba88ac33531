# shenlarsson/exceptions.py


class HamLieError(Exception):
    """Base class of every error raised by the library."""


class DimensionMismatch(HamLieError, ValueError):
    pass


class NotInSpanError(HamLieError, ValueError):
    """A matrix handed to sp_decompose is not a combination of the basis."""


class InvalidRootError(HamLieError, ValueError):
    pass


class RepresentationError(HamLieError, ValueError):
    pass


class GeneratorError(HamLieError, ValueError):
    """H_0 was requested, or a derivation index is out of range."""


class OutsideBoxError(HamLieError, ValueError):
    pass


class InvalidRankError(HamLieError, ValueError):
    pass


class DegenerateGradeError(HamLieError, ValueError):
    """r + alpha vanishes where a nonzero vector is required."""


class ConfigError(HamLieError, ValueError):
    """A run configuration failed validation; ``errors`` maps option names to messages."""

    def __init__(self, errors):
        self.errors = errors
        super().__init__('; '.join(f'{k}: {v}' for k, v in errors.items()))
