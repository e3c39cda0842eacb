"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed or inconsistent input."""


class ResourceError(RuntimeError):
    """A configured size cap was exceeded."""


class UnsupportedError(ValueError):
    """The requested shape is outside what the library can decide."""


class GuardError(RuntimeError):
    """A computation would touch the truncation boundary.

    ``safe_radius`` carries the largest radius that stays inside the guard.
    """

    def __init__(self, message: str, safe_radius: int | None = None):
        super().__init__(message)
        self.safe_radius = safe_radius
