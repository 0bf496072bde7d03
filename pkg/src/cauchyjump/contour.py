"""Plane contours: parameterized curves on [0, 1] with region queries.

Closed contours are normalized to counterclockwise orientation at
construction, so the winding number of an interior point is always +1.
Corners are declared, never detected.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    CornerError,
    DomainError,
    InputError,
    PrecisionError,
)


class Side(enum.Enum):
    """Which side of the curve a limit or offset is taken from."""

    INTERIOR = "interior"
    EXTERIOR = "exterior"


@dataclass(frozen=True)
class ContourPoint:
    """A contour sample: parameter, position, and velocity."""

    t: float
    z: complex
    dz: complex


@dataclass(frozen=True)
class Region:
    """Classification of a point relative to a closed contour."""

    kind: str  # "interior" | "exterior" | "on_contour"
    t: float | None = None

    @property
    def on_contour(self) -> bool:
        return self.kind == "on_contour"


INTERIOR = Region("interior")
EXTERIOR = Region("exterior")

_SAMPLE_N = 2048


class Contour:
    """A piecewise-smooth curve gamma: [0, 1] -> C with declared corners."""

    def __init__(self, f, df, closed, corners=(), spec=None, normalize=True):
        self._f = f
        self._df = df
        self.closed = bool(closed)
        self.corners = tuple(sorted(float(c) for c in corners))
        self.spec = spec or {"kind": "custom", "closed": self.closed}
        self._samples = None
        self._length = None
        self._diameter = None
        self._validate()
        if normalize and self.closed and self._signed_area() < 0:
            f_old, df_old = self._f, self._df
            self._f = lambda t: f_old(1.0 - np.asarray(t, dtype=float))
            self._df = lambda t: -df_old(1.0 - np.asarray(t, dtype=float))
            self.corners = tuple(sorted((1.0 - c) % 1.0 for c in self.corners))
            self._samples = None
            self.spec = dict(self.spec, reversed_for_ccw=True)

    # -- construction presets -------------------------------------------

    @classmethod
    def circle(cls, center=0j, radius=1.0):
        center = complex(center)
        radius = float(radius)
        if radius <= 0:
            raise InputError("circle radius must be positive")

        def f(t):
            return center + radius * np.exp(2j * np.pi * np.asarray(t, dtype=float))

        def df(t):
            return 2j * np.pi * radius * np.exp(2j * np.pi * np.asarray(t, dtype=float))

        spec = {"kind": "circle", "center": [center.real, center.imag],
                "radius": radius, "closed": True}
        return cls(f, df, closed=True, spec=spec)

    @classmethod
    def ellipse(cls, center=0j, semi_axes=(2.0, 1.0)):
        center = complex(center)
        a, b = float(semi_axes[0]), float(semi_axes[1])
        if a <= 0 or b <= 0:
            raise InputError("ellipse semi-axes must be positive")

        def f(t):
            th = 2 * np.pi * np.asarray(t, dtype=float)
            return center + a * np.cos(th) + 1j * b * np.sin(th)

        def df(t):
            th = 2 * np.pi * np.asarray(t, dtype=float)
            return 2 * np.pi * (-a * np.sin(th) + 1j * b * np.cos(th))

        spec = {"kind": "ellipse", "center": [center.real, center.imag],
                "semi_axes": [a, b], "closed": True}
        return cls(f, df, closed=True, spec=spec)

    @classmethod
    def segment(cls, a, b):
        a, b = complex(a), complex(b)
        if a == b:
            raise InputError("segment endpoints coincide")
        delta = b - a

        def f(t):
            return a + np.asarray(t, dtype=float) * delta

        def df(t):
            return np.full_like(np.asarray(t, dtype=float), delta, dtype=complex)

        spec = {"kind": "segment", "a": [a.real, a.imag], "b": [b.real, b.imag],
                "closed": False}
        return cls(f, df, closed=False, spec=spec)

    @classmethod
    def fourier(cls, coefficients):
        """Closed curve from exponential Fourier data {k: c_k}."""
        coeffs = {int(k): complex(v) for k, v in coefficients.items()}
        coeffs = {k: v for k, v in coeffs.items() if v != 0}
        if not any(k != 0 for k in coeffs):
            raise InputError("fourier contour needs a nonconstant coefficient")
        ks = np.array(sorted(coeffs), dtype=float)
        cs = np.array([coeffs[int(k)] for k in ks], dtype=complex)

        def f(t):
            t = np.asarray(t, dtype=float)
            return np.exp(2j * np.pi * np.multiply.outer(t, ks)) @ cs

        def df(t):
            t = np.asarray(t, dtype=float)
            return np.exp(2j * np.pi * np.multiply.outer(t, ks)) @ (2j * np.pi * ks * cs)

        spec = {"kind": "fourier",
                "coefficients": [[int(k), coeffs[int(k)].real, coeffs[int(k)].imag]
                                 for k in sorted(coeffs)],
                "closed": True}
        return cls(f, df, closed=True, spec=spec)

    @classmethod
    def piecewise(cls, pieces, closed=None, normalize=True):
        """Chain of sub-contours joined end to end, equal parameter share each.

        Junction parameters become corners.  The chain must be
        continuous; it is closed when the last endpoint returns to the
        first.
        """
        if not pieces:
            raise InputError("piecewise contour needs at least one piece")
        pieces = list(pieces)
        n = len(pieces)
        scale = 4 * max(abs(complex(p.evaluate(0.0).z)) + 1 for p in pieces)
        for left, right in zip(pieces, pieces[1:]):
            gap = abs(left.evaluate(1.0).z - right.evaluate(0.0).z)
            if gap > 1e-9 * scale:
                raise InputError(f"pieces are not contiguous (gap {gap:.3e})")
        wrap = abs(pieces[-1].evaluate(1.0).z - pieces[0].evaluate(0.0).z)
        is_closed = closed if closed is not None else wrap <= 1e-9 * scale
        if is_closed and wrap > 1e-9 * scale:
            raise InputError("closed piecewise chain does not return to start")

        def f(t):
            t = np.atleast_1d(np.asarray(t, dtype=float))
            out = np.empty(t.shape, dtype=complex)
            idx = np.minimum((t * n).astype(int), n - 1)
            for i, piece in enumerate(pieces):
                m = idx == i
                if m.any():
                    out[m] = piece._f(t[m] * n - i)
            return out

        def df(t):
            t = np.atleast_1d(np.asarray(t, dtype=float))
            out = np.empty(t.shape, dtype=complex)
            idx = np.minimum((t * n).astype(int), n - 1)
            for i, piece in enumerate(pieces):
                m = idx == i
                if m.any():
                    out[m] = piece._df(t[m] * n - i) * n
            return out

        corners = set()
        for i, piece in enumerate(pieces):
            for c in piece.corners:
                corners.add((i + c) / n)
            if i > 0:
                corners.add(i / n)
        if is_closed:
            corners.add(0.0)
        spec = {"kind": "piecewise", "pieces": [p.spec for p in pieces],
                "closed": is_closed}
        return cls(f, df, closed=is_closed, corners=sorted(corners), spec=spec,
                   normalize=normalize)

    # -- validation ------------------------------------------------------

    def _validate(self):
        ts = np.linspace(0.0, 1.0, 513)
        z = np.atleast_1d(self._f(ts))
        dz = np.atleast_1d(self._df(ts))
        if not (np.all(np.isfinite(z.view(float))) and np.all(np.isfinite(dz.view(float)))):
            raise InputError("contour map produced a non-finite value")
        scale = float(np.max(np.abs(z)) - np.min(np.abs(z)) + np.max(np.abs(z)) + 1e-300)
        if self.closed:
            ends = np.atleast_1d(self._f(np.array([0.0, 1.0])))
            gap = abs(complex(ends[0]) - complex(ends[-1]))
            if gap > 1e-9 * max(scale, 1e-12):
                raise InputError(f"closed contour does not return to start (gap {gap:.3e})")
        # derivative may only vanish at declared corners
        interior = np.ones(ts.shape, dtype=bool)
        for c in self.corners:
            interior &= np.abs(ts - c) > 2e-3
        if interior.any() and np.min(np.abs(dz[interior])) < 1e-9 * max(scale, 1e-12):
            raise InputError("contour derivative vanishes away from declared corners")

    def _signed_area(self):
        ts = np.linspace(0.0, 1.0, 1025)[:-1]
        z = np.atleast_1d(self._f(ts))
        dz = np.atleast_1d(self._df(ts))
        return 0.5 * float(np.mean(np.conj(z) * dz).imag)

    # -- sampling helpers -------------------------------------------------

    def _sample_cache(self):
        if self._samples is None:
            if self.closed:
                ts = np.linspace(0.0, 1.0, _SAMPLE_N, endpoint=False)
            else:
                ts = np.linspace(0.0, 1.0, _SAMPLE_N)
            self._samples = (ts, np.atleast_1d(self._f(ts)), np.atleast_1d(self._df(ts)))
        return self._samples

    def points(self, t):
        """Vectorized positions and velocities at parameters t."""
        t = np.asarray(t, dtype=float)
        if np.any(t < 0.0) or np.any(t > 1.0):
            raise DomainError("parameter outside [0, 1]")
        return np.atleast_1d(self._f(t)), np.atleast_1d(self._df(t))

    def evaluate(self, t: float) -> ContourPoint:
        """Position and one-sided velocity at a single parameter."""
        t = float(t)
        if not 0.0 <= t <= 1.0:
            raise DomainError(f"parameter {t} outside [0, 1]")
        z = complex(np.atleast_1d(self._f(t))[0])
        dz = complex(np.atleast_1d(self._df(t))[0])
        return ContourPoint(t, z, dz)

    def diameter(self) -> float:
        if self._diameter is None:
            _, z, _ = self._sample_cache()
            pts = z[:: max(1, len(z) // 512)]
            d = np.abs(pts[:, None] - pts[None, :])
            self._diameter = float(d.max())
        return self._diameter

    def max_speed(self) -> float:
        _, _, dz = self._sample_cache()
        return float(np.max(np.abs(dz)))

    def nearest_parameter(self, z: complex):
        """Parameter of the closest sampled point, refined locally.

        Returns (t, distance).
        """
        ts, zs, _ = self._sample_cache()
        z = complex(z)
        i = int(np.argmin(np.abs(zs - z)))
        span = 1.0 / (len(ts) - (0 if self.closed else 1))
        lo, hi = ts[i] - span, ts[i] + span
        if not self.closed:
            lo, hi = max(lo, 0.0), min(hi, 1.0)
        # golden-section refinement of |gamma(t) - z|
        gr = (math.sqrt(5.0) - 1.0) / 2.0
        a, b = lo, hi
        c = b - gr * (b - a)
        d = a + gr * (b - a)
        fc = abs(complex(self._f(np.array([c % 1.0 if self.closed else c]))[0]) - z)
        fd = abs(complex(self._f(np.array([d % 1.0 if self.closed else d]))[0]) - z)
        for _ in range(80):
            if fc < fd:
                b, d, fd = d, c, fc
                c = b - gr * (b - a)
                fc = abs(complex(self._f(np.array([c % 1.0 if self.closed else c]))[0]) - z)
            else:
                a, c, fc = c, d, fd
                d = a + gr * (b - a)
                fd = abs(complex(self._f(np.array([d % 1.0 if self.closed else d]))[0]) - z)
        t = ((a + b) / 2.0) % 1.0 if self.closed else min(max((a + b) / 2.0, 0.0), 1.0)
        dist = abs(complex(self._f(np.array([t]))[0]) - z)
        return float(t), float(dist)

    # -- region queries ----------------------------------------------------

    def classify(self, z: complex, tol: float | None = None) -> Region:
        """Interior, Exterior, or OnContour with the nearest parameter.

        The on-contour tolerance defaults to 1e-9 times the contour
        diameter.  Interior/exterior resolution uses the quadrature
        winding number; an estimate farther than 0.25 from every integer
        raises PrecisionError.
        """
        z = complex(z)
        eff_tol = tol if tol is not None else 1e-9 * self.diameter()
        t_near, dist = self.nearest_parameter(z)
        if dist <= eff_tol:
            return Region("on_contour", t=t_near)
        if not self.closed:
            raise DomainError("open contour separates no interior from exterior")
        w = None
        for n in (256, 1024, 4096, 16384):
            ts = np.arange(n) / n
            zs, dzs = np.atleast_1d(self._f(ts)), np.atleast_1d(self._df(ts))
            w = complex(np.mean(dzs / (zs - z))) / (2j * np.pi)
            if abs(w - round(w.real)) <= 0.05:
                break
        if abs(w - round(w.real)) > 0.25:
            # quadrature winding breaks down when z hugs the curve; there
            # the side of the local tangent line decides (simple curve,
            # CCW orientation puts the interior on the left of travel)
            pt = self.evaluate(t_near)
            if dist <= 0.05 * self.feature_size(t_near) and pt.dz != 0:
                cross = (np.conj(pt.dz) * (z - pt.z)).imag
                return INTERIOR if cross > 0 else EXTERIOR
            raise PrecisionError(
                f"winding number estimate {w:.3f} is not near an integer")
        return INTERIOR if round(w.real) != 0 else EXTERIOR

    def normal_offset(self, t: float, eps: float, side: Side) -> complex:
        """Point at distance eps from gamma(t) along the normal.

        The interior side is to the left of the direction of travel.
        Corners have no normal.
        """
        if eps <= 0:
            raise DomainError("offset distance must be positive")
        for c in self.corners:
            d = abs(t - c)
            if self.closed:
                d = min(d, 1.0 - d)
            if d < 1e-12:
                raise CornerError(f"no normal at corner parameter {c}")
        pt = self.evaluate(t)
        if pt.dz == 0:
            raise DomainError(f"derivative vanishes at t={t}")
        unit = 1j * pt.dz / abs(pt.dz)
        sign = 1.0 if side == Side.INTERIOR else -1.0
        return pt.z + sign * eps * unit

    def length(self) -> float:
        """Arc length via adaptive quadrature, relative error 1e-10."""
        if self._length is None:
            from scipy.integrate import quad

            breaks = sorted({0.0, 1.0, *self.corners})
            total = 0.0
            for a, b in zip(breaks[:-1], breaks[1:]):
                if b - a < 1e-15:
                    continue
                val, _ = quad(
                    lambda t: abs(complex(np.atleast_1d(self._df(t))[0])),
                    a, b, epsabs=0.0, epsrel=1e-12, limit=200,
                )
                total += val
            self._length = float(total)
        return self._length

    def feature_size(self, t: float) -> float:
        """Local geometric scale: curvature radius capped by global size.

        Used to seed offset ladders; a straight piece falls back to a
        quarter of the arc length.
        """
        pt = self.evaluate(min(max(t, 1e-6), 1 - 1e-6))
        h = 1e-5
        lo, hi = max(t - h, 0.0), min(t + h, 1.0)
        d2 = (complex(np.atleast_1d(self._df(hi))[0])
              - complex(np.atleast_1d(self._df(lo))[0])) / (hi - lo)
        speed = abs(pt.dz)
        kappa = abs((np.conj(pt.dz) * d2).imag) / speed**3 if speed > 0 else 0.0
        cap = self.length() / 4.0
        if kappa <= 1e-12:
            return cap
        return float(min(1.0 / kappa, cap))


# -- op mirrors ---------------------------------------------------------


def evaluate(contour: Contour, t: float) -> ContourPoint:
    """Position and velocity on the contour at parameter t."""
    return contour.evaluate(t)


def classify(contour: Contour, z: complex, tol: float | None = None) -> Region:
    """Region of a point relative to a closed contour."""
    return contour.classify(z, tol)


def length(contour: Contour) -> float:
    """Arc length of the contour."""
    return contour.length()


def normal_offset(contour: Contour, t: float, eps: float, side: Side) -> complex:
    """Offset point along the interior or exterior normal."""
    return contour.normal_offset(t, eps, side)
