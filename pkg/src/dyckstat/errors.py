"""Exception types shared across the package."""


class DyckError(ValueError):
    """Base class for rejected input."""


class InvariantError(DyckError):
    """An argument does not satisfy a required structural invariant.

    ``invariant`` names the violated condition so callers (the CLI in
    particular) can report it verbatim.
    """

    def __init__(self, invariant: str, detail: str = ""):
        self.invariant = invariant
        self.detail = detail
        msg = invariant if not detail else f"{invariant}: {detail}"
        super().__init__(msg)


class DomainError(DyckError):
    """Index arguments outside the domain of a counting function."""


class ResourceError(RuntimeError):
    """The brute-force work cap was exceeded."""
