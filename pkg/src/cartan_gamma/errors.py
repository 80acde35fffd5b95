"""Exception hierarchy shared by every subsystem."""


class CartanGammaError(Exception):
    """Base class for all errors raised by this package."""


class InvalidRank(CartanGammaError):
    """Rank outside the admissible range for the requested family."""


class NotARoot(CartanGammaError):
    """Coefficient vector is not a root of the given system."""


class PoleError(CartanGammaError):
    """Gamma evaluated at a nonpositive integer."""


class DomainError(CartanGammaError):
    """Argument outside the contractual domain of an operation."""


class NotAUnit(CartanGammaError):
    """Residue is not invertible modulo the word's modulus."""


class NotInC(CartanGammaError):
    """Word fails the integrality/unit-invariance membership test."""


class SearchExhausted(CartanGammaError):
    """Prime-site search hit its cap without finding a match."""


class NoConvergence(CartanGammaError):
    """Iteration failed to converge within the configured budget."""


class QuadratureNotConverged(CartanGammaError):
    """Successive quadrature refinements disagree beyond tolerance."""
