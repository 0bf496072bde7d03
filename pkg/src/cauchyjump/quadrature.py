"""Contour quadrature and principal values.

Closed corner-free contours use the periodic trapezoid rule, which is
spectrally accurate for analytic integrands; everything else uses
composite Gauss-Legendre panels split at the declared corners.  Error
estimates come from comparing the requested resolution against a
doubled one.

Principal values split off the unit-density integral, whose value is
known in closed form: i*pi on a closed contour, and a two-point
logarithm plus i*pi on an open one, with the branch cut leaving the
singular point on the right-hand side of the direction of travel.  The
remaining subtracted integrand is bounded, and its nodes are arranged
never to land on the singular parameter.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .contour import Contour
from .density import Density
from .errors import DomainError, EndpointError, InputError, SingularityError

DEFAULT_NODES = 256
DEFAULT_GAUSS_ORDER = 16


@dataclass(frozen=True)
class Nodes:
    """Quadrature nodes on a contour: parameters, positions, velocities, weights."""

    t: np.ndarray
    z: np.ndarray
    dz: np.ndarray
    w: np.ndarray


@dataclass(frozen=True)
class PVResult:
    """Value of a contour integral with an error estimate from node doubling."""

    value: complex
    error_estimate: float
    nodes_used: int
    warning: str | None = None


@dataclass(frozen=True)
class QuadratureRule:
    """Node layout: 'trapezoid' (periodic) or 'gauss' (composite panels)."""

    kind: str = "trapezoid"
    nodes: int = DEFAULT_NODES
    order: int = DEFAULT_GAUSS_ORDER
    panels: int = 16

    def __post_init__(self):
        if self.kind not in ("trapezoid", "gauss"):
            raise InputError(f"unknown quadrature rule {self.kind!r}")
        if self.nodes < 4 or self.order < 2 or self.panels < 1:
            raise InputError("quadrature rule is too coarse")

    @classmethod
    def trapezoid(cls, nodes: int = DEFAULT_NODES) -> "QuadratureRule":
        return cls(kind="trapezoid", nodes=nodes)

    @classmethod
    def gauss(cls, order: int = DEFAULT_GAUSS_ORDER, panels: int = 16) -> "QuadratureRule":
        return cls(kind="gauss", nodes=order * panels, order=order, panels=panels)

    @classmethod
    def default_for(cls, contour: Contour, nodes: int | None = None) -> "QuadratureRule":
        n = nodes or DEFAULT_NODES
        if contour.closed and not contour.corners:
            return cls.trapezoid(n)
        panels = max(4, n // DEFAULT_GAUSS_ORDER)
        return cls.gauss(DEFAULT_GAUSS_ORDER, panels)

    def scaled(self, factor: int) -> "QuadratureRule":
        """Same layout with `factor` times the resolution."""
        if self.kind == "trapezoid":
            return QuadratureRule.trapezoid(self.nodes * factor)
        return QuadratureRule.gauss(self.order, self.panels * factor)

    def build_nodes(self, contour: Contour, half_step_from: float | None = None,
                    extra_breaks: tuple = ()) -> Nodes:
        """Concrete nodes on a contour.

        `half_step_from` offsets the periodic trapezoid grid half a
        node spacing away from the given parameter, so no node lands on
        it at any resolution; `extra_breaks` forces panel boundaries at
        given parameters so Gauss nodes stay clear of them.
        """
        if self.kind == "trapezoid":
            if not contour.closed:
                raise InputError("trapezoid rule needs a closed contour")
            shift = 0.0 if half_step_from is None else half_step_from + 0.5 / self.nodes
            t = (shift + np.arange(self.nodes) / self.nodes) % 1.0
            w = np.full(self.nodes, 1.0 / self.nodes)
        else:
            breaks = sorted({0.0, 1.0, *contour.corners,
                             *(float(b) for b in extra_breaks)})
            xg, wg = np.polynomial.legendre.leggauss(self.order)
            tt, ww = [], []
            for a, b in zip(breaks[:-1], breaks[1:]):
                if b - a < 1e-15:
                    continue
                edges = np.linspace(a, b, self.panels + 1)
                for p0, p1 in zip(edges[:-1], edges[1:]):
                    half = (p1 - p0) / 2.0
                    tt.append((p0 + p1) / 2.0 + half * xg)
                    ww.append(half * wg)
            t = np.concatenate(tt)
            w = np.concatenate(ww)
        z, dz = contour.points(t % 1.0 if contour.closed else t)
        return Nodes(t=t, z=z, dz=dz, w=w)


def _sum(nodes: Nodes, integrand) -> complex:
    vals = np.asarray(integrand(nodes), dtype=complex)
    if not np.all(np.isfinite(vals.view(float))):
        bad = int(np.argmax(~np.isfinite(vals.real) | ~np.isfinite(vals.imag)))
        raise SingularityError(
            f"integrand not finite at node {bad} (t={nodes.t[bad]:.12g}, "
            f"tau={nodes.z[bad]:.12g})")
    return complex(np.sum(vals * nodes.dz * nodes.w))


def integrate(contour: Contour, integrand, rule: QuadratureRule | None = None,
              half_step_from: float | None = None,
              extra_breaks: tuple = ()) -> PVResult:
    """Integral of f(tau) dtau along the contour.

    The integrand receives a Nodes batch and returns the values f at
    the node positions.  The reported value uses the requested
    resolution; the error estimate is the distance to a doubled rule.
    """
    rule = rule or QuadratureRule.default_for(contour)
    coarse_nodes = rule.build_nodes(contour, half_step_from, extra_breaks)
    fine_nodes = rule.scaled(2).build_nodes(contour, half_step_from, extra_breaks)
    coarse = _sum(coarse_nodes, integrand)
    fine = _sum(fine_nodes, integrand)
    return PVResult(value=coarse, error_estimate=abs(fine - coarse),
                    nodes_used=len(coarse_nodes.t))


def pv_unit(contour: Contour, t0: float) -> PVResult:
    """Principal value of dtau / (tau - gamma(t0)) along the contour.

    Closed contours give exactly i*pi.  Open contours give
    log(b - tau0) - log(a - tau0) + i*pi with the logarithm branch cut
    running from tau0 along the right-hand side of the direction of
    travel, so the answer is the symmetric-deletion limit.
    """
    t0 = float(t0)
    if not 0.0 <= t0 <= 1.0:
        raise DomainError(f"parameter {t0} outside [0, 1]")
    if contour.closed:
        return PVResult(value=1j * math.pi, error_estimate=0.0, nodes_used=0)
    if t0 < 1e-12 or t0 > 1.0 - 1e-12:
        raise EndpointError("principal value undefined at an open-contour endpoint")
    pt = contour.evaluate(t0)
    a = contour.evaluate(0.0).z
    b = contour.evaluate(1.0).z
    cut_dir = -1j * pt.dz / abs(pt.dz)
    theta = cmath.phase(cut_dir)

    def branch_log(w: complex) -> complex:
        ang = theta + (cmath.phase(w) - theta) % (2.0 * math.pi)
        return math.log(abs(w)) + 1j * ang

    value = branch_log(b - pt.z) - branch_log(a - pt.z) + 1j * math.pi
    return PVResult(value=value, error_estimate=0.0, nodes_used=0)


def pv_cauchy(contour: Contour, density: Density, t0: float,
              rule: QuadratureRule | None = None) -> PVResult:
    """Principal value of phi(tau) / (tau - gamma(t0)) dtau.

    Subtracts phi(tau0) so the remaining integrand is bounded, then adds
    phi(tau0) times the closed-form unit principal value.  On a closed
    corner-free contour the subtracted term uses a trapezoid grid offset
    half a step from t0; otherwise t0 becomes a panel boundary.  Either
    way no node coincides with the singular parameter.
    """
    unit = pv_unit(contour, t0)
    tau0 = contour.evaluate(t0).z
    phi0 = density.value_at(t0)
    rule = rule or QuadratureRule.default_for(contour)

    def subtracted(nodes: Nodes):
        return (density(nodes.t % 1.0 if contour.closed else nodes.t) - phi0) / (nodes.z - tau0)

    if contour.closed and not contour.corners and rule.kind == "trapezoid":
        # half-step-shifted grid: nodes sit symmetrically around t0
        part = integrate(contour, subtracted, rule, half_step_from=t0)
    else:
        gauss = rule if rule.kind == "gauss" else QuadratureRule.gauss(
            DEFAULT_GAUSS_ORDER, max(4, rule.nodes // DEFAULT_GAUSS_ORDER))
        part = integrate(contour, subtracted, gauss, extra_breaks=(t0,))
    warning = None
    if density.declared_non_holder:
        warning = ("density is declared non-Hölder; the principal value "
                   "may not exist and the result is indicative only")
    return PVResult(value=part.value + phi0 * unit.value,
                    error_estimate=part.error_estimate,
                    nodes_used=part.nodes_used,
                    warning=warning)
