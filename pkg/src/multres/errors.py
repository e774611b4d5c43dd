"""Exception hierarchy shared by all modules.

Everything raised on bad input derives from ContractError so the CLI and the
service can map contract violations to exit code 2 / HTTP 400 uniformly.
"""


class MultresError(Exception):
    """Base class for all package errors."""


class ContractError(MultresError):
    """A precondition or invariant of a public operation was violated."""


class ParseError(ContractError):
    """Syntax or semantic error in a polynomial expression string."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class RingMismatchError(ContractError):
    """Operands live over different rings."""


class DimensionError(ContractError):
    """A coordinate vector has the wrong length for its ring."""


class ExactDivisionError(ContractError):
    """An exact polynomial division left a remainder."""


class PermissibilityError(ContractError):
    """A blow-up center is not permissible for the object being transformed."""


class CharacteristicError(ContractError):
    """An operation is not available in the ring's characteristic."""
