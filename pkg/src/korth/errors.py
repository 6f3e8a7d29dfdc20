"""Exception types shared across the package."""


class KorthError(Exception):
    """Base class for all library errors."""


class DimensionError(KorthError, ValueError):
    """Operands have incompatible lengths or shapes."""


class RangeError(KorthError, ValueError):
    """A numeric argument is outside its admissible range."""


class MatrixParseError(KorthError, ValueError):
    """Malformed matrix text input."""

    def __init__(self, message: str, line: int, column: int | None = None):
        loc = f"line {line}" if column is None else f"line {line}, column {column}"
        super().__init__(f"{message} ({loc})")
        self.line = line
        self.column = column


class InvalidCodeError(KorthError, ValueError):
    """Input does not describe a valid stabilizer code."""


class SignFixError(InvalidCodeError):
    """No conjugation exists that normalizes the stabilizer signs."""


class DegenerateCodeError(KorthError, ValueError):
    """Operation requires distinct check columns; reduce degeneracy first."""


class NoSyndromeError(KorthError, ValueError):
    """A qubit position has an all-zero check column (no syndrome)."""


class CongruenceError(KorthError, ValueError):
    """A required modular congruence is violated; carries the offender."""

    def __init__(self, message: str, witness=None, residue: int | None = None,
                 modulus: int | None = None):
        super().__init__(message)
        self.witness = witness
        self.residue = residue
        self.modulus = modulus


class UnsupportedCodeError(KorthError, ValueError):
    """Operation is only defined for a narrower class of codes (e.g. CSS)."""
