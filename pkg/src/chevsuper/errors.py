"""Exception types shared across the package."""


class DivisionByZero(ArithmeticError):
    """Division by an exactly-zero scalar."""


class GeneratorMismatch(ValueError):
    """Grassmann operands built over different generator sets or fields."""


class NotInvertible(ArithmeticError):
    """Element has no inverse (odd, inhomogeneous with odd part, or zero body)."""


class InvalidFamily(ValueError):
    """Family parameters outside the supported classical ranges."""


class NotARoot(ValueError):
    """Coordinate vector is not a root of the given system."""


class NotHomogeneous(ValueError):
    """Matrix mixes even and odd blocks where a homogeneous element is required."""


class NotAChevalleyBasis(RuntimeError):
    """Construction-time verification of the basis conditions failed."""


class IntegralityViolation(ArithmeticError):
    """A quantity required to be an integer is not; carries a witness."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotRational(ArithmeticError):
    """Cartan action has a non-integer eigenvalue on the given lattice."""


class DegenerateWeights(ValueError):
    """Weight set does not span the dual of the Cartan subalgebra."""


class ParityError(ValueError):
    """Parameter parity does not match the constructor requirement."""


class WrongConstructor(TypeError):
    """One-parameter constructor applied to a root of the wrong kind."""


class FormulaMismatch(RuntimeError):
    """No integer constants satisfy the commutator formula for this pair."""
