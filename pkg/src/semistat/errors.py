class SemistatError(Exception):
    """Base class for all library errors."""


class DimensionError(SemistatError, ValueError):
    pass


class FieldError(SemistatError, ValueError):
    pass


class FieldMismatchError(FieldError):
    pass


class VerificationError(SemistatError):
    """An input structure failed an axiom it was required to satisfy."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class CapExceededError(SemistatError):
    def __init__(self, count: int, cap: int):
        super().__init__(f"{count} candidates exceed the cap of {cap}")
        self.count = count
        self.cap = cap


class SingularMatrixError(SemistatError, ValueError):
    pass
