"""Exception types shared across the package."""


class IntegralityError(RuntimeError):
    """A quantity that must be a small non-negative integer failed its rounding tolerance."""


class ConditioningError(RuntimeError):
    """A rank decision fell inside the ambiguous singular-value band."""


class LabelingError(ValueError):
    """No diagram (or diagram pair) matches the diagonal of an invariant."""


class ClassificationError(RuntimeError):
    """Two independent computations of classification data disagree."""


class UndecidedError(RuntimeError):
    """A bounded search exhausted its node budget without reaching a verdict."""
