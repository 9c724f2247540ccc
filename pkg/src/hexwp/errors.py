"""Typed errors shared across the package.

Every numerical failure mode surfaces as one of these instead of NaN/inf
leaking out of an evaluator.
"""


class HexwpError(Exception):
    """Base class for all package errors."""


class PoleProximity(HexwpError):
    """Input is within the configured margin of a lattice point (a pole)."""


class SigmaOverflow(HexwpError):
    """The quasi-periodic exponential prefactor of sigma exceeds double range."""


class NonConvergence(HexwpError):
    """A quadrature error estimate failed to reach the requested tolerance."""


class NoConvergence(HexwpError):
    """Newton iteration did not converge within the iteration budget."""

    def __init__(self, message: str, last_iterate: complex):
        super().__init__(message)
        self.last_iterate = last_iterate


class DerivativeVanishes(HexwpError):
    """Newton hit an iterate where the analytic derivative is numerically zero."""


class UnknownSuite(HexwpError):
    """Requested verification suite name is not registered."""


class NearPoleOfF(HexwpError):
    """|p(z)| is too small: z is next to a pole of the uniformizing function."""


class NearZeroDenominator(HexwpError):
    """|p'(z) + sqrt(3)| is too small for the second-solution pair."""
