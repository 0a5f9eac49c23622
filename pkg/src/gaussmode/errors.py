"""Exception types shared across the package.

Every error raised on a user-facing path derives from GaussmodeError so the
CLI can map failures onto stable exit codes and machine-readable error names.
"""


class GaussmodeError(Exception):
    """Base class for all package errors."""

    #: short snake_case identifier used in CLI error objects
    code = "error"


class NonFiniteError(GaussmodeError):
    """A coefficient carries a NaN or infinite component."""

    code = "non_finite"


class NonNormalizableError(GaussmodeError):
    """Coefficients fail the normalizability condition (positive real parts
    of the diagonal coefficients and a positive-definite real quadratic form)."""

    code = "non_normalizable"


class KernelNotPhysicalError(GaussmodeError):
    """A reduced-mode kernel does not describe a positive trace-one operator."""

    code = "kernel_not_physical"


class NotSymmetricError(GaussmodeError):
    """An operation that requires mode-exchange symmetry received an
    asymmetric state or matrix."""

    code = "not_symmetric"


class NonNormalizableResultError(GaussmodeError):
    """An optical-element sequence produced coefficients that no longer
    describe a normalizable state (numerically singular solve or negative
    quadratic form)."""

    code = "non_normalizable_result"


class GridTooCoarseError(GaussmodeError):
    """A discretization grid cannot represent the state accurately enough."""

    code = "grid_too_coarse"


class InvalidInputError(GaussmodeError):
    """Malformed or inconsistent CLI input."""

    code = "invalid_input"
