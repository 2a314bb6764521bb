"""Exception hierarchy for the kappa toolkit.

Domain modules raise these; the command layer turns them into exit codes:
- InputError and subclasses: the user gave us something malformed (exit 1)
- CapabilityError and subclasses: the input is fine but lies beyond what the
  shipped algorithms can answer exactly (exit 2)
"""


class KappaError(Exception):
    """Base class for every error raised by this package."""

    exit_code = 1


# ===== Input errors (exit 1) =====

class InputError(KappaError, ValueError):
    """Malformed or invalid input."""


class DegreeMismatchError(InputError):
    """Permutations of different degrees were combined."""


class PointRangeError(InputError):
    """A point index lies outside 0..degree-1."""


class InvalidDomainError(InputError):
    """An action domain is not an invariant orbit or block system."""


class IntransitiveError(InputError):
    """An operation that needs a transitive group got an intransitive one."""


class CayleyTableError(InputError):
    """A multiplication table violates a group axiom.

    Attributes:
        axiom: Short name of the failed axiom ('latin', 'identity', 'associativity', ...)
        witness: Tuple of element indices demonstrating the failure
    """

    def __init__(self, message: str, axiom: str, witness: tuple[int, ...] = ()):
        super().__init__(message)
        self.axiom = axiom
        self.witness = witness


class NotNormalError(InputError):
    """A subgroup expected to be normal is not."""


class NotSimpleError(InputError):
    """An operation restricted to simple groups got a non-simple one."""


class TrivialGroupError(InputError):
    """The trivial group has no proper subgroup, so κ is undefined."""

    def __init__(self, message: str = "κ undefined: no proper subgroup (trivial group)"):
        super().__init__(message)


class TreeFormatError(InputError):
    """Edges do not describe a tree."""


class CatalogError(InputError):
    """Unknown catalog entry or parameter out of range.

    Attributes:
        suggestions: Similar catalog names, best first
    """

    def __init__(self, message: str, suggestions: list[str] | None = None):
        super().__init__(message)
        self.suggestions = suggestions or []


class ConfigError(InputError):
    """A configuration value could not be parsed."""


class FileFormatError(InputError):
    """A group or tree file could not be parsed.

    Attributes:
        line: 1-based line number of the offending line (None if not line-specific)
    """

    def __init__(self, message: str, line: int | None = None):
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)
        self.line = line


# ===== Capability errors (exit 2) =====

class CapabilityError(KappaError):
    """The question is well-posed but outside the shipped capability."""

    exit_code = 2


class UnknownSimpleError(CapabilityError):
    """μ is not available for a simple group outside the shipped table."""

    def __init__(self, order: int):
        super().__init__(f"μ unavailable: simple group of order {order} is outside the shipped table")
        self.order = order


class DecompositionIncompleteError(CapabilityError):
    """A perfect primitive non-simple group could not be split further."""


class OracleBoundError(CapabilityError):
    """A brute-force oracle was asked about a group above its size bound."""


class IncompleteResultError(CapabilityError):
    """A κ value is only a lower-bound candidate."""


# ===== Internal =====

class InconsistencyError(KappaError, RuntimeError):
    """An internal invariant failed; indicates a bug or a wrong claim of simplicity."""

    exit_code = 2
