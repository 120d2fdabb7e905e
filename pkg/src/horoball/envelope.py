"""Finite distance-envelope objectives.

A distance envelope is the pointwise maximum of finitely many terms
``beta * d(x, center) + gamma`` with ``beta >= 0``. Circumcenter and
ball-intersection objectives are the two stock constructions. Each term is
``beta``-Lipschitz, so the envelope is Lipschitz with constant
``max(beta)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import EmptySet, NegativeRadius, SpaceMismatch
from .spaces import Point, Space

__all__ = [
    "EnvelopeTerm",
    "DistanceEnvelope",
    "make_circumcenter",
    "make_intersecting_balls",
]


@dataclass(frozen=True)
class EnvelopeTerm:
    center: Point
    beta: float
    gamma: float


@dataclass(frozen=True)
class DistanceEnvelope:
    """``f(x) = max_i beta_i * d(x, center_i) + gamma_i`` over a space."""

    space: Space
    terms: tuple[EnvelopeTerm, ...]

    def __post_init__(self):
        if not self.terms:
            raise EmptySet("a distance envelope needs at least one term")
        normalized = []
        for i, term in enumerate(self.terms):
            beta = float(term.beta)
            gamma = float(term.gamma)
            if not (math.isfinite(beta) and beta >= 0.0):
                raise ValueError(f"term {i}: slope must be finite and >= 0, got {term.beta!r}")
            if not math.isfinite(gamma):
                raise ValueError(f"term {i}: offset must be finite, got {term.gamma!r}")
            try:
                center = self.space.canonicalize(term.center)
            except Exception as exc:
                raise SpaceMismatch(f"term {i}: {exc}") from exc
            normalized.append(EnvelopeTerm(center, beta, gamma))
        object.__setattr__(self, "terms", tuple(normalized))

    def eval_with_argmax(self, x: Point) -> tuple[float, int]:
        """Envelope value at ``x`` and the smallest index attaining it."""
        x = self.space._require(x)
        best = -math.inf
        best_i = 0
        for i, term in enumerate(self.terms):
            v = term.beta * self.space._dist(x, term.center) + term.gamma
            if v > best:
                best = v
                best_i = i
        return best, best_i

    def __call__(self, x: Point) -> float:
        return self.eval_with_argmax(x)[0]

    def lipschitz_bound(self) -> float:
        return max(term.beta for term in self.terms)


def make_circumcenter(space: Space, points) -> DistanceEnvelope:
    """Objective ``max_a d(x, a)`` whose minimizer is the circumcenter of
    ``points`` and whose minimum value is the circumradius."""
    points = list(points)
    if not points:
        raise EmptySet("circumcenter objective needs at least one point")
    return DistanceEnvelope(space, tuple(EnvelopeTerm(p, 1.0, 0.0) for p in points))


def make_intersecting_balls(space: Space, pairs) -> DistanceEnvelope:
    """Objective ``max_a d(x, a) - radius_a``; its minimum value is
    nonpositive exactly when the balls share a point."""
    pairs = list(pairs)
    if not pairs:
        raise EmptySet("ball-intersection objective needs at least one ball")
    terms = []
    for i, (center, radius) in enumerate(pairs):
        r = float(radius)
        if not (math.isfinite(r) and r >= 0.0):
            raise NegativeRadius(f"ball {i}: radius must be finite and >= 0, got {radius!r}")
        terms.append(EnvelopeTerm(center, 1.0, -r))
    return DistanceEnvelope(space, tuple(terms))
