"""Exception taxonomy shared across the package.

The CLI maps InputError and DomainError (with their subclasses) to exit
code 2 and the numerical failures (PrecisionError, ConvergenceError,
SingularityError) to exit code 3.
"""


class CauchyJumpError(Exception):
    """Base class for every error raised by this package."""


class InputError(CauchyJumpError):
    """Malformed user input: bad JSON, unknown preset, unparsable expression."""


class DomainError(CauchyJumpError):
    """Argument outside its mathematical domain."""


class CornerError(DomainError):
    """Operation requested at a corner parameter where no normal exists."""


class EndpointError(DomainError):
    """Principal value requested at an endpoint of an open contour."""


class RegionError(DomainError):
    """Point lies in the wrong region for the requested quantity."""


class AnnulusError(DomainError):
    """Extraction circle lies outside the map's declared annulus."""


class TruncationError(DomainError):
    """Requested coefficients fall outside a series' tracked window."""


class DegenerateMapError(InputError):
    """Exterior map with vanishing leading coefficient or broken inverse."""


class PrecisionError(CauchyJumpError):
    """A numerical routine could not reach its required resolution."""


class ConvergenceError(CauchyJumpError):
    """An iterative or extrapolated quantity failed to settle."""


class SingularityError(CauchyJumpError):
    """Integrand or density blew up at a quadrature node."""
