"""Exception types shared across the toolkit."""


class LmCriticError(Exception):
    """Base class for all toolkit errors."""


class EmptyCorpus(LmCriticError):
    """Raised when a language model is trained on zero sentences."""


class CorruptModelFile(LmCriticError):
    """Raised when a model file fails format validation."""


class ScorerUnavailable(LmCriticError):
    """Raised when an external scorer endpoint cannot serve a request."""


class EmptyEvalSet(LmCriticError):
    """Raised when critic evaluation or calibration receives no pairs."""


class EmptyDataset(LmCriticError):
    """Raised when an edit-pattern model is trained on an empty pair set."""


class LengthMismatch(LmCriticError):
    """Raised when aligned sentence files differ in length."""
