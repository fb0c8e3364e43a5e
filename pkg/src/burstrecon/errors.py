"""Exception types shared across the package.

Every contract failure raises a distinct, named error; no function returns a
best guess when its preconditions are violated.
"""


class EnumerationCapExceeded(RuntimeError):
    """An enumeration would produce more words than the configured cap allows."""

    def __init__(self, required: int, cap: int):
        super().__init__(f"enumeration needs {required} words, cap is {cap}")
        self.required = required
        self.cap = cap


class BallTooSmall(ValueError):
    """More distinct channel outputs were requested than the error ball holds."""

    def __init__(self, requested: int, ball_size: int):
        super().__init__(
            f"requested {requested} distinct outputs, ball size {ball_size}"
        )
        self.requested = requested
        self.ball_size = ball_size


class ReconstructionError(RuntimeError):
    """Base class for reconstruction failures."""


class BelowThreshold(ReconstructionError):
    """Fewer outputs than the channel's reconstruction threshold plus one."""

    def __init__(self, got: int, required: int):
        super().__init__(f"{got} outputs given, need at least {required}")
        self.got = got
        self.required = required


class AmbiguousSymbol(ReconstructionError):
    """No symbol wins every pairwise precedence/majority comparison."""


class ThresholdNotMet(ReconstructionError):
    """No burst count yields a first-symbol class above its pigeonhole bound."""


class InconsistentOutputs(ReconstructionError):
    """The outputs cannot all come from one center of the stated length."""


class CandidateFilterError(ReconstructionError):
    """The final containment filter kept zero or several candidates."""

    def __init__(self, survivors: int):
        super().__init__(f"{survivors} candidates survived, expected exactly 1")
        self.survivors = survivors
