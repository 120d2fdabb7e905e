"""The two computational resources the solver relies on.

* ``support_step``: at a non-minimizing point ``x`` it returns a point at
  exactly the requested distance along a ray from ``x`` through a center
  attaining the envelope value. Every point of the level set
  ``{z : f(z) <= f(x)}`` then has nonpositive Busemann value along that
  ray, i.e. the level set sits inside the ray's horoball.
* ``FeasibleBall.project``: nearest-point projection onto a metric ball,
  the identity inside and the point at distance ``radius`` from the center
  along the geodesic to ``x`` outside.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from .envelope import DistanceEnvelope
from .errors import DegenerateCenter, NegativeRadius
from .spaces import Point, Ray, Space

__all__ = [
    "FeasibleBall",
    "MinimizerCertificate",
    "StepPoint",
    "SupportStepResult",
    "support_step",
]


@dataclass(frozen=True)
class FeasibleBall:
    """Closed metric ball used as the feasible region."""

    space: Space
    center: Point
    radius: float

    def __post_init__(self):
        r = float(self.radius)
        if not (math.isfinite(r) and r >= 0.0):
            raise NegativeRadius(f"ball radius must be finite and >= 0, got {self.radius!r}")
        object.__setattr__(self, "radius", r)
        object.__setattr__(self, "center", self.space.canonicalize(self.center))

    @property
    def diameter_bound(self) -> float:
        return 2.0 * self.radius

    def contains(self, x: Point) -> bool:
        return self.space.distance(x, self.center) <= self.radius

    def project(self, x: Point) -> Point:
        """Nearest point of the ball; nonexpansive and idempotent."""
        x = self.space._require(x)
        d = self.space._dist(x, self.center)
        if d <= self.radius:
            return x
        return self.space.combine(self.center, x, self.radius / d)


@dataclass(frozen=True)
class MinimizerCertificate:
    """The queried point minimizes the envelope over the whole space."""

    value: float


@dataclass(frozen=True)
class StepPoint:
    """A step of exact length along a supporting ray."""

    point: Point
    ray: Ray
    active_index: int
    value: float


SupportStepResult = Union[MinimizerCertificate, StepPoint]


def support_step(f: DistanceEnvelope, x: Point, step_length: float) -> SupportStepResult:
    """Move ``step_length`` along a ray from ``x`` through the active center.

    If the active term has zero slope, ``x`` is a global minimizer and a
    certificate is returned instead. Raises :class:`DegenerateCenter` when
    ``x`` coincides with the active center while its slope is positive (no
    ray direction is determined in that case).
    """
    step_length = float(step_length)
    if not step_length > 0.0:
        raise ValueError(f"step length must be positive, got {step_length!r}")
    space = f.space
    x = space._require(x)
    value, idx = f.eval_with_argmax(x)
    term = f.terms[idx]
    if term.beta == 0.0:
        return MinimizerCertificate(value)
    if x == term.center:
        raise DegenerateCenter(
            f"query point coincides with active center {idx} while its slope is positive"
        )
    ray = space.make_ray(x, term.center)
    return StepPoint(space.ray_point(ray, step_length), ray, idx, value)
