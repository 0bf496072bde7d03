"""Faber polynomials of plane domains through exterior conformal maps.

An exterior map g sends the complement of the domain onto the outside
of the unit circle, g(z) = c1 z + c0 + c-1/z + ... with c1 != 0.  The
n-th Faber polynomial is the polynomial part of g**n: degree n with
leading coefficient c1**n.  Negative powers have no polynomial part,
which is what verify_vanishing checks by quadrature.

The built-in maps all come from a Joukowski-type inverse
g^-1(w) = c w + d / w, which covers disks (d = 0), ellipses, and
segments (c = d).  Their Laurent expansions are produced formally from
the fixed-point relation g = (z - d / g) / c, so with rational c and d
the polynomial coefficients are exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .contour import Contour
from .errors import (
    AnnulusError,
    DegenerateMapError,
    DomainError,
    InputError,
    RegionError,
)
from .quadrature import QuadratureRule, integrate
from .series import ExactComplex, LaurentPoly

_TWO_PI_I = 2j * math.pi


@dataclass(frozen=True)
class ExteriorMap:
    """Conformal map of a domain complement onto the outside of the unit disk."""

    name: str
    laurent: LaurentPoly
    forward: object            # callable z -> w, vectorized
    inverse: object            # callable w -> z, vectorized
    annulus: tuple[float, float]
    joukowski: tuple | None = None

    def __post_init__(self):
        lead = self.laurent.coeffs.get(1)
        if not lead or complex(lead) == 0:
            raise DegenerateMapError("exterior map needs a nonzero linear coefficient")
        rin, rout = self.annulus
        if not rin < rout:
            raise DegenerateMapError("annulus radii must satisfy inner < outer")
        for rho in (1.2, 2.0):
            w = rho * np.exp(2j * np.pi * np.arange(32) / 32)
            back = np.asarray(self.forward(np.asarray(self.inverse(w))), dtype=complex)
            err = float(np.max(np.abs(back - w)))
            if err > 1e-10 * rho:
                raise DegenerateMapError(
                    f"forward(inverse) misses identity by {err:.3e} on |w|={rho}")

    def extraction_radius(self) -> float:
        return (self.annulus[0] + self.annulus[1]) / 2.0

    def in_closed_domain(self, z: complex, tol: float = 1e-9) -> bool:
        """Whether z lies in the domain or on its boundary, via |g(z)| <= 1."""
        w = complex(np.atleast_1d(self.forward(np.array([complex(z)])))[0])
        return abs(w) <= 1.0 + tol

    def boundary_point(self, t: float) -> complex:
        """Image of e**(2 pi i t) under the inverse map."""
        return complex(np.atleast_1d(
            self.inverse(np.array([np.exp(2j * np.pi * float(t))])))[0])


def _laurent_from_joukowski(c: Fraction, d: Fraction, width: int) -> LaurentPoly:
    """Expansion of g at infinity from the relation c*g + d/g = z.

    Seeded with z/c, each pass of g <- (z - d * g**-1) / c settles two
    more coefficients; the loop runs until the tracked window stops
    changing.
    """
    cc = ExactComplex(c)
    z = LaurentPoly.monomial(1, 1, mode="exact")
    g = z.scale(ExactComplex(1) / cc)
    if d == 0:
        return g
    dd = ExactComplex(d)
    for _ in range(width + 2):
        nxt = (z - g.invert(horizon=width).scale(dd)).scale(ExactComplex(1) / cc)
        nxt = nxt._windowed(lo=1 - width)
        if nxt == g:
            break
        g = nxt
    return g


def _forward_joukowski(c: float, d: float):
    def g(z):
        z = np.asarray(z, dtype=complex)
        root = np.sqrt(z * z - 4.0 * c * d)
        w_plus = (z + root) / (2.0 * c)
        w_minus = (z - root) / (2.0 * c)
        # the exterior branch is the larger root; the two moduli tie only
        # on the focal segment, where either choice gives |w| = sqrt(d/c)
        return np.where(np.abs(w_plus) >= np.abs(w_minus), w_plus, w_minus)

    return g


def _inverse_joukowski(c: float, d: float):
    def ginv(w):
        w = np.asarray(w, dtype=complex)
        return c * w + d / w

    return ginv


def _joukowski_map(name: str, c: Fraction, d: Fraction, width: int) -> ExteriorMap:
    if c <= 0 or d < 0 or d > c:
        raise InputError("need semi-axis data with c >= d >= 0 and c > 0")
    cf, df = float(c), float(d)
    outer_scale = cf + df
    forward = _forward_joukowski(cf, df) if d != 0 else (
        lambda z: np.asarray(z, dtype=complex) / cf)
    return ExteriorMap(
        name=name,
        laurent=_laurent_from_joukowski(c, d, width),
        forward=forward,
        inverse=_inverse_joukowski(cf, df),
        annulus=(outer_scale, 3.0 * outer_scale),
        joukowski=(c, d),
    )


def disk_map(radius, width: int = 24) -> ExteriorMap:
    """Exterior map of the disk |z| <= radius: g(z) = z / radius."""
    r = Fraction(radius) if not isinstance(radius, float) else Fraction(radius).limit_denominator(10**9)
    if r <= 0:
        raise InputError("disk radius must be positive")
    return _joukowski_map(f"disk:{r}", r, Fraction(0), width)


def ellipse_map(a, b, width: int = 24) -> ExteriorMap:
    """Exterior map of the ellipse with semi-axes a >= b > 0."""
    af = Fraction(a) if not isinstance(a, float) else Fraction(a).limit_denominator(10**9)
    bf = Fraction(b) if not isinstance(b, float) else Fraction(b).limit_denominator(10**9)
    if not af >= bf > 0:
        raise InputError("ellipse needs semi-axes a >= b > 0")
    c, d = (af + bf) / 2, (af - bf) / 2
    return _joukowski_map(f"ellipse:{af},{bf}", c, d, width)


def segment_map(half_length, width: int = 24) -> ExteriorMap:
    """Exterior map of the segment [-h, h]: the degenerate ellipse b = 0."""
    h = Fraction(half_length) if not isinstance(half_length, float) \
        else Fraction(half_length).limit_denominator(10**9)
    if h <= 0:
        raise InputError("segment half-length must be positive")
    return _joukowski_map(f"segment:{h}", h / 2, h / 2, width)


def map_from_laurent(laurent: LaurentPoly, annulus: tuple[float, float],
                     name: str = "user-map") -> ExteriorMap:
    """Exterior map from user-supplied expansion coefficients.

    The forward evaluator sums the truncated expansion; the inverse
    solves g(z) = w by Newton iteration seeded with the linear part.
    """
    coeffs = {k: complex(v) for k, v in laurent.coeffs.items()}
    if coeffs.get(1, 0) == 0:
        raise DegenerateMapError("expansion needs a nonzero coefficient at z^1")
    ks = np.array(sorted(coeffs), dtype=float)
    cs = np.array([coeffs[int(k)] for k in ks], dtype=complex)

    def forward(z):
        z = np.asarray(z, dtype=complex)
        return np.power.outer(z, ks) @ cs

    dks = ks[ks != 0]
    dcs = np.array([coeffs[int(k)] * k for k in dks], dtype=complex)

    def dforward(z):
        z = np.asarray(z, dtype=complex)
        return np.power.outer(z, dks - 1) @ dcs

    c1 = coeffs[1]
    c0 = coeffs.get(0, 0j)

    def inverse(w):
        w = np.asarray(w, dtype=complex)
        z = (w - c0) / c1
        for _ in range(60):
            step = (forward(z) - w) / dforward(z)
            z = z - step
            if np.max(np.abs(step)) < 1e-15 * (1.0 + np.max(np.abs(z))):
                break
        return z

    return ExteriorMap(name=name, laurent=laurent, forward=forward,
                       inverse=inverse, annulus=annulus)


@dataclass(frozen=True)
class FaberBasis:
    """Faber polynomials Psi_0..Psi_n as ascending coefficient vectors."""

    map_name: str
    source: str  # "formal" | "quadrature"
    polynomials: tuple

    def degree(self) -> int:
        return len(self.polynomials) - 1

    def evaluate(self, n: int, z) -> np.ndarray:
        """Value of Psi_n at points z by Horner evaluation."""
        z = np.asarray(z, dtype=complex)
        coeffs = [complex(c) for c in self.polynomials[n]]
        acc = np.zeros_like(z)
        for c in reversed(coeffs):
            acc = acc * z + c
        return acc


def faber_polynomials(mapping: ExteriorMap, n_max: int) -> FaberBasis:
    """Polynomial parts of g**0..g**n from the formal expansion.

    Exact when the map's expansion is exact and its tracked window is
    wide enough to pin every nonnegative coefficient.
    """
    if n_max < 0:
        raise DomainError("polynomial degree must be nonnegative")
    g = mapping.laurent
    width_needed = 2 * n_max + 6
    if g.lo is not None and 1 - g.lo < width_needed and mapping.joukowski is not None:
        c, d = mapping.joukowski
        g = _laurent_from_joukowski(c, d, width_needed)
    vectors = []
    power = LaurentPoly.one(g.mode)
    for n in range(n_max + 1):
        vec = power.polynomial_part()
        if len(vec) != n + 1:
            raise DomainError(
                f"polynomial part of g**{n} has degree {len(vec) - 1}, expected {n}")
        vectors.append(tuple(vec))
        if n < n_max:
            power = power * g
    return FaberBasis(map_name=mapping.name, source="formal",
                      polynomials=tuple(vectors))


def _extraction_contour(mapping: ExteriorMap, radius: float | None) -> Contour:
    rho = mapping.extraction_radius() if radius is None else float(radius)
    rin, rout = mapping.annulus
    if not rin < rho < rout:
        raise AnnulusError(
            f"extraction radius {rho} outside the declared annulus ({rin}, {rout})")
    return Contour.circle(0j, rho)


def faber_polynomials_quadrature(mapping: ExteriorMap, n_max: int,
                                 radius: float | None = None,
                                 nodes: int = 512) -> FaberBasis:
    """Faber coefficients d_k from circle quadrature.

    d_k = (1 / 2 pi i) * integral of g(zeta)**n zeta**(-k-1) dzeta over
    a circle inside the map's analyticity annulus.
    """
    if n_max < 0:
        raise DomainError("polynomial degree must be nonnegative")
    circle = _extraction_contour(mapping, radius)
    rule = QuadratureRule.trapezoid(max(nodes, 4 * (n_max + 2)))
    vectors = []
    for n in range(n_max + 1):
        vec = []
        for k in range(n + 1):
            def moment(nd, _n=n, _k=k):
                return np.asarray(mapping.forward(nd.z), dtype=complex) ** _n \
                    * nd.z ** (-(_k + 1))

            part = integrate(circle, moment, rule)
            vec.append(part.value / _TWO_PI_I)
        vectors.append(tuple(vec))
    return FaberBasis(map_name=mapping.name, source="quadrature",
                      polynomials=tuple(vectors))


@dataclass(frozen=True)
class VanishingReport:
    """Moduli of the interior projection of a negative map power."""

    n: int
    rows: tuple  # (probe, modulus)
    max_modulus: float


def verify_vanishing(mapping: ExteriorMap, n: int, probes,
                     radius: float | None = None,
                     nodes: int = 512) -> VanishingReport:
    """Check that negative powers of the map have no interior part.

    Evaluates (1 / 2 pi i) * integral of g(zeta)**n / (zeta - z) dzeta
    over an annulus circle at probe points of the closed domain; the
    result should vanish identically for n < 0.
    """
    if n >= 0:
        raise DomainError("the vanishing law concerns negative powers only")
    circle = _extraction_contour(mapping, radius)
    rule = QuadratureRule.trapezoid(nodes)
    rows = []
    worst = 0.0
    for z in probes:
        z = complex(z)
        if not mapping.in_closed_domain(z):
            raise RegionError(f"probe {z} lies outside the closed domain")

        def kernel(nd, _z=z):
            return np.asarray(mapping.forward(nd.z), dtype=complex) ** n / (nd.z - _z)

        part = integrate(circle, kernel, rule)
        modulus = abs(part.value / _TWO_PI_I)
        worst = max(worst, modulus)
        rows.append((z, modulus))
    return VanishingReport(n=n, rows=tuple(rows), max_modulus=worst)


@dataclass(frozen=True)
class FaberSeriesResult:
    """Truncated Faber expansion of a function on a domain."""

    map_name: str
    coefficients: tuple      # a_0..a_n
    max_error: float
    probes: tuple
    nodes: int


def faber_series(f, mapping: ExteriorMap, n_terms: int,
                 probes=None, nodes: int | None = None) -> FaberSeriesResult:
    """Expand f in Faber polynomials and check the truncation on probes.

    The coefficients are the Laurent coefficients of f(g^-1(w)) on the
    unit circle, a_n = (1 / 2 pi i) * integral of f(g^-1(w)) w**(-n-1) dw.
    Probes default to images of unit-circle points; any supplied probe
    must lie in the closed domain.
    """
    if n_terms < 0:
        raise DomainError("series length must be nonnegative")
    m = nodes or max(512, 8 * (n_terms + 1))
    unit = Contour.circle(0j, 1.0)
    rule = QuadratureRule.trapezoid(m)
    coeffs = []
    for n in range(n_terms + 1):
        def moment(nd, _n=n):
            pullback = np.asarray(f(np.asarray(mapping.inverse(nd.z))), dtype=complex)
            return pullback * nd.z ** (-(_n + 1))

        part = integrate(unit, moment, rule)
        coeffs.append(part.value / _TWO_PI_I)
    basis = faber_polynomials(mapping, n_terms)
    if probes is None:
        probes = [mapping.boundary_point(k / 64.0) for k in range(64)]
    else:
        probes = [complex(z) for z in probes]
        for z in probes:
            if not mapping.in_closed_domain(z):
                raise RegionError(f"probe {z} lies outside the closed domain")
    zs = np.array(probes, dtype=complex)
    total = np.zeros_like(zs)
    for n, a in enumerate(coeffs):
        total = total + a * basis.evaluate(n, zs)
    target = np.asarray(f(zs), dtype=complex)
    max_error = float(np.max(np.abs(total - target))) if len(zs) else 0.0
    return FaberSeriesResult(map_name=mapping.name, coefficients=tuple(coeffs),
                             max_error=max_error, probes=tuple(probes), nodes=m)
