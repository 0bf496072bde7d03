"""Sokhotski decomposition of a boundary density into side limits.

decompose splits a density phi on a closed contour into the pair of
region-restricted functions plus (analytic inside, vanishing nowhere
required) and minus (analytic outside, vanishing at infinity) whose
difference on the contour is phi.  An open contour is first completed
by an arc carrying the zero density, which changes nothing off the
original arc; results are flagged accordingly.

solve_holomorphic_bvp decides whether boundary data u extends to a
function holomorphic on the closed interior: it does exactly when the
minus part is identically zero, which is tested on exterior probe
rings together with the leading coefficients at infinity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .cauchy import CauchyIntegral
from .contour import Contour, Side
from .density import Density
from .errors import RegionError
from .quadrature import QuadratureRule


@dataclass(frozen=True)
class JumpPair:
    """Side parts of a density: plus on the interior, minus on the exterior."""

    contour: Contour          # the closed contour actually integrated over
    density: Density          # the density on that closed contour
    integral: CauchyIntegral
    closed_by_arc: bool = False
    original_contour: Contour | None = None

    def plus(self, z: complex) -> complex:
        """Interior part; on the contour, its boundary value."""
        region = self.contour.classify(z)
        if region.on_contour:
            return self.integral.boundary_values(region.t).plus
        if region.kind != "interior":
            raise RegionError(f"plus is restricted to the interior; {z} is outside")
        return self.integral.eval(z)

    def minus(self, z: complex) -> complex:
        """Exterior part; on the contour, its boundary value."""
        region = self.contour.classify(z)
        if region.on_contour:
            return self.integral.boundary_values(region.t).minus
        if region.kind != "exterior":
            raise RegionError(f"minus is restricted to the exterior; {z} is inside")
        return self.integral.eval(z)

    def jump_at(self, t0: float) -> complex:
        """plus - minus on the contour, which reproduces the density."""
        triple = self.integral.boundary_values(t0)
        return triple.plus - triple.minus


def _completing_arc(contour: Contour) -> Contour:
    """Circular arc from the open contour's end back to its start.

    A half circle over the chord, bulging toward the side of the chord
    that carries less of the original curve, keeps the completion clear
    of the arc body for the shapes this package works with.
    """
    a = contour.evaluate(0.0).z
    b = contour.evaluate(1.0).z
    mid = (a + b) / 2.0
    radius = abs(b - a) / 2.0
    normal = 1j * (a - b) / abs(a - b)
    ts = np.linspace(0, 1, 257)
    zs, _ = contour.points(ts)
    side_mass = float(np.sum(((zs - mid) / normal).real > 0))
    bulge = normal if side_mass < len(zs) / 2 else -normal
    theta_b = math.atan2((b - mid).imag, (b - mid).real)
    theta_m = math.atan2(bulge.imag, bulge.real)
    # sweep half a turn from b to a passing through mid + radius*bulge
    sweep = ((theta_m - theta_b) % (2.0 * math.pi))
    orient = 1.0 if sweep < math.pi else -1.0

    def f(t):
        ang = theta_b + orient * math.pi * np.asarray(t, dtype=float)
        return mid + radius * np.exp(1j * ang)

    def df(t):
        ang = theta_b + orient * math.pi * np.asarray(t, dtype=float)
        return 1j * orient * math.pi * radius * np.exp(1j * ang)

    spec = {"kind": "arc", "center": [mid.real, mid.imag], "radius": radius,
            "closed": False}
    return Contour(f, df, closed=False, spec=spec, normalize=False)


def close_with_arc(contour: Contour, density: Density):
    """Complete an open contour and extend the density by zero on the arc.

    The original orientation is preserved, so values of the integral
    match the open-arc integral exactly; only the interior labeling
    depends on which way the completed loop happens to wind.
    """
    arc = _completing_arc(contour)
    closed = Contour.piecewise([contour, arc], closed=True, normalize=False)

    def h(t):
        t = np.atleast_1d(np.asarray(t, dtype=float))
        out = np.zeros(t.shape, dtype=complex)
        first = t < 0.5
        if first.any():
            out[first] = density(np.clip(t[first] * 2.0, 0.0, 1.0))
        return out

    extended = Density(pullback=h, name=f"{density.name} (zero on completion arc)",
                       closed=True,
                       holder_index=density.holder_index,
                       holder_constant=density.holder_constant,
                       declared_non_holder=density.declared_non_holder)
    return closed, extended


def decompose(contour: Contour, density: Density,
              rule: QuadratureRule | None = None) -> JumpPair:
    """Split a density into its interior and exterior analytic parts."""
    if contour.closed:
        ci = CauchyIntegral(contour, density, rule=rule)
        return JumpPair(contour=contour, density=density, integral=ci)
    closed, extended = close_with_arc(contour, density)
    ci = CauchyIntegral(closed, extended, rule=rule)
    return JumpPair(contour=closed, density=extended, integral=ci,
                    closed_by_arc=True, original_contour=contour)


@dataclass(frozen=True)
class BvpVerdict:
    """Whether boundary data extends holomorphically into the interior."""

    solvable: bool
    tol: float
    max_exterior_modulus: float
    witness: tuple[complex, float] | None
    series_moduli: tuple
    boundary_residual: float | None
    closed_by_arc: bool
    jump: JumpPair
    solution: object | None = None  # callable z -> complex when solvable
    note: str = ""


def default_exterior_probes(contour: Contour, per_ring: int = 16) -> list[complex]:
    """Two concentric probe rings outside the contour, 16 points each."""
    if contour.closed:
        # open sampling: a duplicated seam point would bias the centroid
        ts = np.arange(256) / 256.0
    else:
        ts = np.linspace(0.0, 1.0, 257)
    zs, _ = contour.points(ts)
    center = complex(np.mean(zs))
    rmax = float(np.max(np.abs(zs - center)))
    probes = []
    for factor in (2.0, 4.0):
        for k in range(per_ring):
            probes.append(center + factor * rmax
                          * np.exp(2j * math.pi * k / per_ring))
    return probes


def solve_holomorphic_bvp(contour: Contour, u: Density,
                          probes: list[complex] | None = None,
                          tol: float | None = None,
                          rule: QuadratureRule | None = None) -> BvpVerdict:
    """Decide solvability of the interior holomorphic boundary problem.

    The data u is solvable exactly when its exterior part vanishes
    identically; that is tested at the probe points and through the
    first four coefficients at infinity.  When unsolvable, the witness
    is the probe with the largest exterior modulus.  When solvable, the
    solution is the interior part and the boundary residual reports how
    well it reproduces u on the contour.
    """
    pair = decompose(contour, u, rule=rule)
    work = pair.contour
    if probes is None:
        probes = default_exterior_probes(work)
    ts = np.linspace(0.0, 1.0, 65)
    scale = float(np.max(np.abs(u(ts)))) if len(ts) else 1.0
    eff_tol = tol if tol is not None else 1e-7 * max(1.0, scale)
    moduli = []
    for z in probes:
        region = work.classify(z)
        if region.kind != "exterior":
            raise RegionError(f"probe {z} must lie outside the contour")
        moduli.append(abs(pair.minus(z)))
    moduli = np.array(moduli)
    # ties happen on symmetric data; take the first probe within rounding
    # of the max so the witness does not wander with float noise
    mmax = float(np.max(moduli)) if len(moduli) else 0.0
    worst = int(np.argmax(moduli >= mmax * (1.0 - 1e-12)))
    coeffs = pair.integral.series_at_infinity(4)
    series_moduli = tuple(abs(c) for c in coeffs)
    max_mod = float(moduli[worst])
    solvable = bool(max_mod <= eff_tol and max(series_moduli) <= eff_tol)
    witness = None if solvable else (complex(probes[worst]), max_mod)
    residual = None
    if solvable:
        grid = np.linspace(0.0, 1.0, 33)[:-1] if contour.closed \
            else np.linspace(0.05, 0.95, 32)
        errs = []
        for t in grid:
            t_eff = t if contour.closed else t * 0.5
            plus_b = pair.integral.boundary_values(t_eff).plus
            errs.append(abs(plus_b - u.value_at(t)))
        residual = float(np.max(errs))
    note = ""
    if pair.closed_by_arc:
        note = ("open contour completed by an arc carrying the zero density; "
                "solvability refers to the completed loop")
    return BvpVerdict(
        solvable=solvable,
        tol=eff_tol,
        max_exterior_modulus=max_mod,
        witness=witness,
        series_moduli=series_moduli,
        boundary_residual=residual,
        closed_by_arc=pair.closed_by_arc,
        jump=pair,
        solution=pair.plus if solvable else None,
        note=note,
    )
