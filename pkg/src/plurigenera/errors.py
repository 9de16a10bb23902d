"""Exception types shared across the package."""


class PlurigeneraError(Exception):
    """Base class for all package errors."""


class InvalidInputError(PlurigeneraError):
    """Structurally malformed input: bad field types, ranges, or JSON."""


class UnsupportedInputError(PlurigeneraError):
    """Well-formed input outside the domain where the requested quantity
    is determined by the numerical data alone."""


class InadmissibleTypeError(PlurigeneraError):
    """An operation that requires an admissible fibration type got an
    inadmissible one.  Carries the named rule violations."""

    def __init__(self, violations):
        self.violations = tuple(violations)
        super().__init__(
            "inadmissible numerical type: " + ", ".join(self.violations)
        )


class OracleBoundExceededError(PlurigeneraError):
    """A brute-force oracle refused to run above its configured bound."""
