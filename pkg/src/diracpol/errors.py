"""Exception hierarchy shared across the package."""


class DiracPolError(Exception):
    """Base class for all package-specific errors."""


class ConfigError(DiracPolError):
    """Invalid physical parameters or malformed configuration input."""


class QuadratureDivergence(DiracPolError):
    """Doubling the quadrature node count moved a matrix entry beyond tolerance."""


class SpectralGapCollapse(DiracPolError):
    """An eigenvalue fell inside the zero-energy tolerance band.

    The positive/negative partition of the spectrum is undefined here
    (supercritical binding or an under-resolved basis).
    """


class NumericalDegradation(DiracPolError):
    """A matrix that should be symmetric came out asymmetric beyond tolerance."""


class DegenerateDenominator(DiracPolError):
    """A perturbation-theory energy denominator is smaller than gap_tol."""


class TrackingLost(DiracPolError):
    """Overlap-based continuation of a perturbed level became ambiguous."""


class FieldTooStrong(DiracPolError):
    """Quadratic Stark fit residual exceeds tolerance; reduce the field set."""


class CrossingDetected(DiracPolError):
    """Two tracked occupied levels collapsed onto the same perturbed state."""


class NoSignChange(DiracPolError):
    """Bisection precondition failed: no sign change between the endpoints."""
