"""Shared exception types. Module-specific errors subclass GwmlError."""


class GwmlError(Exception):
    """Base class for all operational errors raised by this package."""


class WidthMismatchError(GwmlError):
    """Input row width does not match the width the model was trained on."""


class LengthMismatchError(GwmlError):
    """Paired vectors have different lengths."""
