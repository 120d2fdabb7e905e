"""Geometry of the three supported spaces.

All three spaces are complete geodesic spaces of nonpositive curvature in
which every geodesic segment extends to a unit-speed ray:

* ``Euclidean(dim)`` -- flat space, points are coordinate vectors;
* ``Spider(legs)`` -- half-lines glued at a common apex (a metric tree);
* ``OrthantCycle(quadrants)`` -- Euclidean quadrants glued edge-to-edge in
  a cycle; with at least four quadrants the apex cone angle is at least
  360 degrees, which keeps the space nonpositively curved.

Geodesics in the orthant cycle follow the planar unfolding picture: sweep
the apex angle between two points along each of the two cyclic arcs; an
arc with angle below 180 degrees contributes the planar chord, otherwise
the geodesic runs through the apex with length ``|p| + |q|``.

Rays reaching a cone point continue by a fixed deterministic policy (the
lowest different leg on a spider; exactly 180 degrees on the side of
increasing quadrant index on an orthant cycle), which makes every run
reproducible. All operations are pure functions of immutable values and
safe for concurrent use.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from ._backend import kernels as _k
from .errors import InvalidLambda, InvalidPoint, NotOnComplex, SpaceMismatch, ZeroDirection

__all__ = [
    "EuclideanPoint",
    "SpiderPoint",
    "OrthantPoint",
    "Point",
    "Ray",
    "Space",
    "Euclidean",
    "Spider",
    "OrthantCycle",
    "from_model_r3",
    "to_model_r3",
    "space_from_json",
]

MODEL_TOL = 1e-12


@dataclass(frozen=True)
class EuclideanPoint:
    coords: tuple[float, ...]

    def __repr__(self):
        return f"E{self.coords!r}"


@dataclass(frozen=True)
class SpiderPoint:
    leg: int
    offset: float

    def __repr__(self):
        return f"S(leg={self.leg}, t={self.offset!r})"


@dataclass(frozen=True)
class OrthantPoint:
    quadrant: int
    s: float
    t: float

    def __repr__(self):
        return f"O(q={self.quadrant}, s={self.s!r}, t={self.t!r})"


Point = Union[EuclideanPoint, SpiderPoint, OrthantPoint]


@dataclass(frozen=True)
class Ray:
    """Unit-speed geodesic ray from ``base`` through ``through``.

    Build rays with :meth:`Space.make_ray`, which canonicalizes both points
    and rejects coincident endpoints.
    """

    base: Point
    through: Point


def _finite(value, what):
    v = float(value)
    if not math.isfinite(v):
        raise InvalidPoint(f"{what} must be finite, got {value!r}")
    return v + 0.0  # normalize -0.0


def _nonnegative(value, what):
    v = _finite(value, what)
    if v < 0.0:
        raise InvalidPoint(f"{what} must be nonnegative, got {value!r}")
    return v


class Space:
    """Common operations of the three concrete spaces."""

    kind: str

    # -- validation ---------------------------------------------------

    def canonicalize(self, p: Point) -> Point:
        """Validate ``p`` and return its canonical representative.

        Idempotent and distance-preserving. Raises :class:`InvalidPoint`
        for out-of-range indices or forbidden negative coordinates.
        """
        raise NotImplementedError

    def _require(self, p: Point) -> Point:
        # same validation as canonicalize, surfaced as SpaceMismatch for
        # metric operations
        try:
            return self.canonicalize(p)
        except InvalidPoint as exc:
            raise SpaceMismatch(f"{p!r} is not a point of {self!r}: {exc}") from exc

    # -- raw-coordinate hooks (canonical inputs, no validation) --------

    def _dist(self, p: Point, q: Point) -> float:
        raise NotImplementedError

    def _ray_at(self, base: Point, through: Point, u: float) -> Point:
        raise NotImplementedError

    # -- metric operations ---------------------------------------------

    def distance(self, p: Point, q: Point) -> float:
        """Exact geodesic distance between two points."""
        return self._dist(self._require(p), self._require(q))

    def combine(self, p: Point, q: Point, lam: float) -> Point:
        """The point z on the geodesic [p, q] with d(p, z) = lam * d(p, q)."""
        lam = float(lam)
        if not 0.0 <= lam <= 1.0:
            raise InvalidLambda(f"interpolation parameter must be in [0, 1], got {lam!r}")
        p = self._require(p)
        q = self._require(q)
        if lam == 0.0 or p == q:
            return p
        if lam == 1.0:
            return q
        return self._ray_at(p, q, lam * self._dist(p, q))

    def make_ray(self, base: Point, through: Point) -> Ray:
        """Construct the unit-speed ray from ``base`` through ``through``."""
        base = self._require(base)
        through = self._require(through)
        if base == through:
            raise ZeroDirection("ray base and through point coincide")
        return Ray(base, through)

    def ray_point(self, ray: Ray, u: float) -> Point:
        """The point at arc length ``u`` >= 0 along the (extended) ray."""
        u = float(u)
        if u < 0.0 or not math.isfinite(u):
            raise ValueError(f"arc length must be finite and nonnegative, got {u!r}")
        base = self._require(ray.base)
        through = self._require(ray.through)
        if base == through:
            raise ZeroDirection("ray base and through point coincide")
        if u == 0.0:
            return base
        return self._ray_at(base, through, u)

    def busemann_approx(self, ray: Ray, z: Point, horizon: float) -> float:
        """Finite-horizon Busemann value ``d(z, ray(horizon)) - horizon``.

        Over-approximates the limiting Busemann function and is
        nonincreasing in ``horizon``.
        """
        horizon = float(horizon)
        if not horizon > 0.0:
            raise ValueError(f"horizon must be positive, got {horizon!r}")
        far = self.ray_point(ray, horizon)
        return self.distance(z, far) - horizon

    # -- serialization ---------------------------------------------------

    def to_json(self) -> dict:
        raise NotImplementedError


@dataclass(frozen=True)
class Euclidean(Space):
    dim: int

    kind = "euclidean"

    def __post_init__(self):
        if int(self.dim) < 1 or self.dim != int(self.dim):
            raise ValueError(f"dimension must be a positive integer, got {self.dim!r}")
        object.__setattr__(self, "dim", int(self.dim))

    def canonicalize(self, p):
        if not isinstance(p, EuclideanPoint):
            raise InvalidPoint(f"expected a coordinate-vector point, got {p!r}")
        if len(p.coords) != self.dim:
            raise InvalidPoint(f"expected {self.dim} coordinates, got {len(p.coords)}")
        return EuclideanPoint(tuple(_finite(c, "coordinate") for c in p.coords))

    def _dist(self, p, q):
        return _k.eucl_dist(p.coords, q.coords)

    def _ray_at(self, base, through, u):
        return EuclideanPoint(_k.eucl_ray(base.coords, through.coords, u))

    def to_json(self):
        return {"kind": "euclidean", "dim": self.dim}


@dataclass(frozen=True)
class Spider(Space):
    legs: int

    kind = "spider"

    def __post_init__(self):
        if int(self.legs) < 2 or self.legs != int(self.legs):
            raise ValueError(f"a spider needs at least 2 legs, got {self.legs!r}")
        object.__setattr__(self, "legs", int(self.legs))

    def canonicalize(self, p):
        if not isinstance(p, SpiderPoint):
            raise InvalidPoint(f"expected a (leg, offset) point, got {p!r}")
        leg = int(p.leg)
        if not 0 <= leg < self.legs:
            raise InvalidPoint(f"leg index {p.leg!r} out of range [0, {self.legs})")
        off = _nonnegative(p.offset, "leg offset")
        if off == 0.0:
            return SpiderPoint(0, 0.0)  # the apex
        return SpiderPoint(leg, off)

    def _dist(self, p, q):
        return _k.spider_dist(p.leg, p.offset, q.leg, q.offset)

    def _ray_at(self, base, through, u):
        leg, off = _k.spider_ray(base.leg, base.offset, through.leg, through.offset, u)
        return SpiderPoint(leg, off)

    def to_json(self):
        return {"kind": "spider", "legs": self.legs}


@dataclass(frozen=True)
class OrthantCycle(Space):
    quadrants: int

    kind = "orthant_cycle"

    def __post_init__(self):
        if int(self.quadrants) < 4 or self.quadrants != int(self.quadrants):
            # below 4 quadrants the apex cone angle drops under 360 degrees
            # and the space is no longer nonpositively curved
            raise ValueError(f"an orthant cycle needs at least 4 quadrants, got {self.quadrants!r}")
        object.__setattr__(self, "quadrants", int(self.quadrants))

    def canonicalize(self, p):
        if not isinstance(p, OrthantPoint):
            raise InvalidPoint(f"expected a (quadrant, s, t) point, got {p!r}")
        q = int(p.quadrant)
        if not 0 <= q < self.quadrants:
            raise InvalidPoint(f"quadrant index {p.quadrant!r} out of range [0, {self.quadrants})")
        s = _nonnegative(p.s, "edge coordinate s")
        t = _nonnegative(p.t, "edge coordinate t")
        return OrthantPoint(*_k.orth_canonical(self.quadrants, q, s, t))

    def _dist(self, p, q):
        return _k.orth_dist(self.quadrants, p.quadrant, p.s, p.t, q.quadrant, q.s, q.t)

    def _ray_at(self, base, through, u):
        q, s, t = _k.orth_ray(
            self.quadrants, base.quadrant, base.s, base.t, through.quadrant, through.s, through.t, u
        )
        return OrthantPoint(q, s, t)

    def to_json(self):
        return {"kind": "orthant_cycle", "k": self.quadrants}


def space_from_json(obj: dict) -> Space:
    kind = obj.get("kind")
    if kind == "euclidean":
        return Euclidean(obj["dim"])
    if kind == "spider":
        return Spider(obj["legs"])
    if kind == "orthant_cycle":
        return OrthantCycle(obj["k"])
    raise ValueError(f"unknown space kind {kind!r}")


# ---------------------------------------------------------------------------
# Embedded model of the five-quadrant cycle in R^3
#
# The five quadrants, in cyclic order, are
#   Q0 = R+ x R- x {0}    Q1 = R- x R- x {0}    Q2 = R- x R+ x {0}
#   Q3 = {0} x R+ x R+    Q4 = R+ x {0} x R+
# with shared edges  e0 = +x, e1 = -y, e2 = -x, e3 = +y, e4 = +z; quadrant i
# uses coordinate s along edge i and t along edge i+1 (mod 5).
# ---------------------------------------------------------------------------

_FIVE = OrthantCycle(5)


def from_model_r3(coords) -> OrthantPoint:
    """Map embedded 3-coordinate points of the five-quadrant cycle to
    canonical internal points.

    Accepts coordinates within ``1e-12`` of one of the five quadrants and
    raises :class:`NotOnComplex` otherwise.
    """
    xyz = tuple(float(c) for c in coords)
    if len(xyz) != 3:
        raise NotOnComplex(f"expected 3 model coordinates, got {len(xyz)}")
    if not all(math.isfinite(c) for c in xyz):
        raise NotOnComplex(f"model coordinates must be finite, got {coords!r}")
    x, y, z = xyz
    tol = MODEL_TOL

    def clamp(v):
        return 0.0 if abs(v) <= tol else v

    if abs(z) <= tol:
        if x >= -tol and y <= tol:
            raw = OrthantPoint(0, max(clamp(x), 0.0), max(clamp(-y), 0.0))
        elif x <= tol and y <= tol:
            raw = OrthantPoint(1, max(clamp(-y), 0.0), max(clamp(-x), 0.0))
        elif x <= tol and y >= -tol:
            raw = OrthantPoint(2, max(clamp(-x), 0.0), max(clamp(y), 0.0))
        else:
            raise NotOnComplex(f"{coords!r} lies in no quadrant of the complex")
    elif abs(x) <= tol and y >= -tol and z >= -tol:
        raw = OrthantPoint(3, max(clamp(y), 0.0), max(clamp(z), 0.0))
    elif abs(y) <= tol and x >= -tol and z >= -tol:
        raw = OrthantPoint(4, max(clamp(z), 0.0), max(clamp(x), 0.0))
    else:
        raise NotOnComplex(f"{coords!r} lies in no quadrant of the complex")
    return _FIVE.canonicalize(raw)


def to_model_r3(p: OrthantPoint) -> tuple[float, float, float]:
    """Inverse of :func:`from_model_r3` on canonical points of the
    five-quadrant cycle."""
    p = _FIVE.canonicalize(p)
    q, s, t = p.quadrant, p.s, p.t
    if q == 0:
        return (s, -t, 0.0)
    if q == 1:
        return (-t, -s, 0.0)
    if q == 2:
        return (-s, t, 0.0)
    if q == 3:
        return (0.0, s, t)
    return (t, 0.0, s)
