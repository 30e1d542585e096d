"""Exception hierarchy shared by the library and the CLI."""
from typing import Optional


class MultialgebraError(ValueError):
    """Base class for every error raised by the library."""
    exit_code = 2


class StructureFileError(MultialgebraError):
    """Malformed structure, diagram or identity file."""
    exit_code = 1

    def __init__(self, message: str, line: Optional[int] = None, source: Optional[str] = None):
        self.line = line
        self.source = source
        location = ""
        if source:
            location = f"{source}:"
        if line is not None:
            location = f"{location}{line}:"
        super().__init__(f"{location} {message}" if location else message)


class TermSyntaxError(MultialgebraError):
    """Syntax error in the term / identity language."""
    exit_code = 1

    def __init__(self, message: str, position: int, text: str = ""):
        self.message = message
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")


class UnknownSymbolError(MultialgebraError):
    """Operation symbol not present in the signature."""


class ArityMismatchError(MultialgebraError):
    """Wrong number of arguments for an operation symbol."""


class ElementRangeError(MultialgebraError):
    """Element index outside the carrier."""


class PartitionError(MultialgebraError):
    """Partition does not match the carrier."""


class SignatureMismatchError(MultialgebraError):
    """Two structures are not of the same type."""


class GuardExceededError(MultialgebraError):
    """An oracle guard (carrier size or generated-set cap) was exceeded."""

    def __init__(self, message: str, partial_size: Optional[int] = None):
        self.partial_size = partial_size
        if partial_size is not None:
            message = f"{message} (partial size {partial_size})"
        super().__init__(message)


class AxiomError(MultialgebraError):
    """A structure does not satisfy the axioms an operation requires."""


class FactorizationError(MultialgebraError):
    """Relation is not contained in the kernel of the homomorphism."""


class VarietyMembershipError(MultialgebraError):
    """Algebra is not a member of the requested variety."""


class DiagramError(MultialgebraError):
    """Directed diagram invariant violated."""


class TheoremViolation(MultialgebraError):
    """A containment or isomorphism guaranteed by the theory failed to hold."""
    exit_code = 3
