"""Exception hierarchy shared by every module."""


class SphereDegError(Exception):
    """Base class for all errors raised by this package."""


class InvalidGraphError(SphereDegError, ValueError):
    def __init__(self, violations):
        self.violations = tuple(violations)
        super().__init__("invalid genus graph: " + "; ".join(self.violations))


class NoSuchEdgeError(SphereDegError, KeyError):
    pass


class ResourceLimitError(SphereDegError):
    """A request exceeds the configured desk-scale caps."""


class EmptyInputError(SphereDegError, ValueError):
    pass


class FaceNotInComplexError(SphereDegError, KeyError):
    pass


class LabelCollisionError(SphereDegError, ValueError):
    pass


class NotAPillarError(SphereDegError, ValueError):
    pass


class InvalidDiskMapError(SphereDegError, ValueError):
    pass


class FillerFailure(SphereDegError):
    """No filling was found within the search bounds.

    ``instance`` holds whatever the caller needs to reproduce the failing
    request (the sphere, its map, and the target), and ``trace`` the descent
    steps taken before the failure, if any.
    """

    def __init__(self, message, instance=None, trace=None):
        super().__init__(message)
        self.instance = instance
        self.trace = list(trace or [])


class SchemaError(SphereDegError, ValueError):
    """Malformed input document; ``location`` is a JSON-pointer-ish path."""

    def __init__(self, message, location=""):
        self.location = location
        super().__init__(f"{location or '<root>'}: {message}")
