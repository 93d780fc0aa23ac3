"""Exception types for the engine.

Every numerical failure mode raises a subclass of EwkbError carrying enough
payload (offending point, pole location, ...) for the CLI to emit a
machine-readable diagnostic.
"""


class EwkbError(Exception):
    """Base class for all engine errors."""

    def __init__(self, message, **payload):
        super().__init__(message)
        self.payload = payload


class PotentialParseError(EwkbError):
    """Malformed potential / map description (carries line/column when known)."""


class ValidationError(EwkbError):
    """Structurally invalid input (duplicate poles, bad tolerances, ...)."""


class DomainError(EwkbError):
    """Evaluation requested at a point outside the function's domain (a pole)."""


class RootFindingError(EwkbError):
    """Argument-principle bookkeeping failed (winding mismatch, root on boundary)."""


class BranchTrackingError(EwkbError):
    """Square-root continuation lost the branch (step past a zero/pole of q-tilde)."""


class PathError(EwkbError):
    """Bad path geometry: node at a pole, coincident nodes, pole on a segment."""


class CanonicalPathError(EwkbError):
    """No canonical path found / supplied path violates the monotonicity condition."""


class TracingError(EwkbError):
    """Stokes-line tracing stalled; carries the partial line."""


class SectorClassificationError(EwkbError):
    """Sample point on (or too близко to) a Stokes line, or no sector matched."""

class BasePointLimitError(EwkbError):
    """Regularized launch toward the singular base point did not converge."""


class EvaluationError(EwkbError):
    """Fundamental-solution evaluation failed (zero of chi for rho, q-tilde zero for psi)."""


class SeriesError(EwkbError):
    """Semiclassical series generation failed (order limit, sigma mismatch, divergent integral)."""


class PadeError(EwkbError):
    """Degenerate Pade system."""


class ResummationError(EwkbError):
    """Borel-plane pole obstructs the Laplace contour (pole location in payload)."""


class MapError(EwkbError):
    """Change-of-variable map singular at the requested point (zero of y')."""


class BranchCoherenceError(EwkbError):
    """The two square roots of a covariance identity ended on incoherent branches."""


class QuantizationError(EwkbError):
    """Contour through a turning point, or insufficient connection data."""
