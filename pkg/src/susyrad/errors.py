"""Exception types shared across the package."""


class DomainError(ValueError):
    """Argument outside the mathematical domain of a special function."""


class AdmissibilityError(ValueError):
    """Quantum numbers or model parameters violate a constructor constraint."""


class ParityError(AdmissibilityError):
    """Oscillator quantum numbers with N - L odd."""


class StabilityError(ValueError):
    """Trap configuration that does not confine (e*V <= 0)."""


class ConfigError(ValueError):
    """Malformed configuration file."""


class ConvergenceError(RuntimeError):
    """Quadrature failed to converge; carries the last two estimates."""

    def __init__(self, message, estimates=(None, None)):
        super().__init__(message)
        self.estimates = tuple(estimates)


class VerificationError(RuntimeError):
    """A map identity check could not be assessed (e.g. every point excluded)."""
