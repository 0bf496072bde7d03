"""Cauchy-type integrals, jump decompositions, and Faber bases on plane contours.

The toolkit is organized around a few small objects: a Contour carries
the curve geometry, a Density carries boundary data pulled back to the
parameter interval, a CauchyIntegral pairs the two with a quadrature
policy, and formal LaurentPoly arithmetic feeds the Faber machinery.
"""

from ._version import __version__
from .cauchy import (
    BoundaryTriple,
    CauchyIntegral,
    CifProbe,
    CifReport,
    verify_cif,
)
from .contour import (
    EXTERIOR,
    INTERIOR,
    Contour,
    ContourPoint,
    Region,
    Side,
    classify,
    evaluate,
    length,
    normal_offset,
)
from .density import (
    Density,
    HolderReport,
    check_holder,
    estimate_holder,
)
from .errors import (
    AnnulusError,
    CauchyJumpError,
    ConvergenceError,
    CornerError,
    DegenerateMapError,
    DomainError,
    EndpointError,
    InputError,
    PrecisionError,
    RegionError,
    SingularityError,
    TruncationError,
)
from .exprlang import compile_expression
from .faber import (
    ExteriorMap,
    FaberBasis,
    FaberSeriesResult,
    VanishingReport,
    disk_map,
    ellipse_map,
    faber_polynomials,
    faber_polynomials_quadrature,
    faber_series,
    map_from_laurent,
    segment_map,
    verify_vanishing,
)
from .jump import (
    BvpVerdict,
    JumpPair,
    close_with_arc,
    decompose,
    default_exterior_probes,
    solve_holomorphic_bvp,
)
from .quadrature import (
    Nodes,
    PVResult,
    QuadratureRule,
    integrate,
    pv_cauchy,
    pv_unit,
)
from .series import (
    ExactComplex,
    LaurentPoly,
    invert,
    multiply,
    polynomial_part,
    power,
)

__all__ = [
    "__version__",
    "AnnulusError",
    "BoundaryTriple",
    "BvpVerdict",
    "CauchyIntegral",
    "CauchyJumpError",
    "CifProbe",
    "CifReport",
    "Contour",
    "ContourPoint",
    "ConvergenceError",
    "CornerError",
    "DegenerateMapError",
    "Density",
    "DomainError",
    "EndpointError",
    "ExactComplex",
    "EXTERIOR",
    "ExteriorMap",
    "FaberBasis",
    "FaberSeriesResult",
    "HolderReport",
    "InputError",
    "INTERIOR",
    "JumpPair",
    "LaurentPoly",
    "Nodes",
    "PrecisionError",
    "PVResult",
    "QuadratureRule",
    "Region",
    "RegionError",
    "Side",
    "SingularityError",
    "TruncationError",
    "VanishingReport",
    "check_holder",
    "classify",
    "close_with_arc",
    "compile_expression",
    "decompose",
    "default_exterior_probes",
    "disk_map",
    "ellipse_map",
    "estimate_holder",
    "evaluate",
    "faber_polynomials",
    "faber_polynomials_quadrature",
    "faber_series",
    "integrate",
    "invert",
    "length",
    "map_from_laurent",
    "multiply",
    "normal_offset",
    "polynomial_part",
    "power",
    "pv_cauchy",
    "pv_unit",
    "solve_holomorphic_bvp",
    "verify_cif",
    "verify_vanishing",
]
