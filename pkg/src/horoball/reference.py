"""Independent brute-force oracles for validating the solvers.

``brute_force_minimize`` exhaustively evaluates an envelope on a grid and
certifies its result with a Lipschitz covering bound. The metric formulas
here are re-derived in vectorized numpy rather than shared with the solver
kernels, so the two routes are independent implementations end to end.

``spider_circumcenter_closed_form`` solves the minimal enclosing ball of
one-point-per-leg spider configurations exactly: everything reduces to a
one-dimensional minimax on the leg carrying the largest offset, unless the
largest offset is tied, in which case the apex itself is the center.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .envelope import DistanceEnvelope
from .errors import EmptyGrid, MultiplePointsPerLeg, SpaceMismatch
from .spaces import (
    Euclidean,
    EuclideanPoint,
    OrthantCycle,
    OrthantPoint,
    Point,
    Space,
    Spider,
    SpiderPoint,
)

__all__ = [
    "GridSpec",
    "default_grid",
    "brute_force_minimize",
    "spider_circumcenter_closed_form",
]


@dataclass(frozen=True)
class GridSpec:
    """Evaluation grid: resolution plus a per-space bounding region.

    Exactly one region field applies per space kind: ``box`` (per-dimension
    (lo, hi) intervals) for Euclidean space, ``max_offset`` for spiders,
    ``max_radius`` (each quadrant covered by [0, R]^2) for orthant cycles.
    """

    resolution: float
    box: Optional[tuple[tuple[float, float], ...]] = None
    max_offset: Optional[float] = None
    max_radius: Optional[float] = None

    def __post_init__(self):
        if not float(self.resolution) > 0.0:
            raise EmptyGrid(f"grid resolution must be positive, got {self.resolution!r}")


def default_grid(f: DistanceEnvelope, resolution: float) -> GridSpec:
    """Grid derived from the envelope's centers.

    The minimizer of a distance envelope never lies beyond its centers
    (moving toward them decreases every term), so the centers' bounding
    region is a valid search region.
    """
    space = f.space
    centers = [t.center for t in f.terms]
    if isinstance(space, Euclidean):
        arr = np.array([c.coords for c in centers], dtype=float)
        box = tuple((float(lo), float(hi)) for lo, hi in zip(arr.min(axis=0), arr.max(axis=0)))
        return GridSpec(resolution, box=box)
    if isinstance(space, Spider):
        return GridSpec(resolution, max_offset=max(c.offset for c in centers))
    return GridSpec(
        resolution, max_radius=max(math.hypot(c.s, c.t) for c in centers)
    )


def _axis(lo: float, hi: float, h: float) -> np.ndarray:
    if hi < lo:
        raise EmptyGrid(f"empty interval [{lo}, {hi}]")
    count = int(math.floor((hi - lo) / h + 0.5)) + 1
    axis = lo + h * np.arange(count)
    if axis[-1] < hi - 1e-15 * max(1.0, abs(hi)):
        axis = np.append(axis, hi)
    return axis


def _term_arrays(f: DistanceEnvelope):
    betas = np.array([t.beta for t in f.terms])
    gammas = np.array([t.gamma for t in f.terms])
    return betas, gammas


def _orth_polar_arrays(space: OrthantCycle, centers) -> tuple[np.ndarray, np.ndarray]:
    r = np.array([math.hypot(c.s, c.t) for c in centers])
    phi = np.array([c.quadrant * (math.pi / 2) + math.atan2(c.t, c.s) for c in centers])
    return r, phi


def brute_force_minimize(f: DistanceEnvelope, grid: GridSpec):
    """Exhaustive minimization of ``f`` over the grid.

    Returns ``(point, value, error_bound)``: the best grid point, its
    envelope value, and a certified bound ``L * h * c`` on how far the
    grid value can sit above the true minimum (``c`` is the grid diagonal
    factor: sqrt(dim) for Euclidean boxes, 1 on spider legs, sqrt(2) on
    quadrant patches).
    """
    space = f.space
    h = float(grid.resolution)
    lb = f.lipschitz_bound()
    if isinstance(space, Euclidean):
        if grid.box is None:
            raise EmptyGrid("Euclidean brute force needs a box region")
        if len(grid.box) != space.dim:
            raise SpaceMismatch(f"box has {len(grid.box)} intervals for dimension {space.dim}")
        axes = [_axis(lo, hi, h) for lo, hi in grid.box]
        centers = np.array([t.center.coords for t in f.terms])
        betas, gammas = _term_arrays(f)
        best_val = math.inf
        best_pt: Optional[Point] = None
        # sweep the first axis to keep memory bounded
        rest = axes[1:]
        mesh_rest = np.meshgrid(*rest, indexing="ij") if rest else []
        flat_rest = [m.ravel() for m in mesh_rest]
        m = flat_rest[0].size if flat_rest else 1
        for x0 in axes[0]:
            cols = [np.full(m, x0)] + list(flat_rest)
            pts = np.stack(cols, axis=1)
            vals = None
            for c, b, g in zip(centers, betas, gammas):
                d = np.sqrt(((pts - c) ** 2).sum(axis=1))
                v = b * d + g
                vals = v if vals is None else np.maximum(vals, v)
            i = int(np.argmin(vals))
            if vals[i] < best_val:
                best_val = float(vals[i])
                best_pt = EuclideanPoint(tuple(float(c) for c in pts[i]))
        assert best_pt is not None
        return best_pt, best_val, lb * h * math.sqrt(space.dim)

    if isinstance(space, Spider):
        if grid.max_offset is None:
            raise EmptyGrid("spider brute force needs a max_offset region")
        ts = _axis(0.0, float(grid.max_offset), h)
        betas, gammas = _term_arrays(f)
        best_val = math.inf
        best_pt = None
        for leg in range(space.legs):
            vals = None
            for term, b, g in zip(f.terms, betas, gammas):
                c = term.center
                d = np.abs(ts - c.offset) if c.leg == leg or c.offset == 0.0 else ts + c.offset
                v = b * d + g
                vals = v if vals is None else np.maximum(vals, v)
            i = int(np.argmin(vals))
            if vals[i] < best_val:
                best_val = float(vals[i])
                best_pt = space.canonicalize(SpiderPoint(leg, float(ts[i])))
        assert best_pt is not None
        return best_pt, best_val, lb * h

    if isinstance(space, OrthantCycle):
        if grid.max_radius is None:
            raise EmptyGrid("orthant brute force needs a max_radius region")
        axis = _axis(0.0, float(grid.max_radius), h)
        S, T = np.meshgrid(axis, axis, indexing="ij")
        S = S.ravel()
        T = T.ravel()
        rg = np.sqrt(S * S + T * T)
        ag_in = np.arctan2(T, S)
        betas, gammas = _term_arrays(f)
        cr, cphi = _orth_polar_arrays(space, [t.center for t in f.terms])
        total = space.quadrants * (math.pi / 2)
        best_val = math.inf
        best_pt = None
        for q in range(space.quadrants):
            ag = ag_in + q * (math.pi / 2)
            vals = None
            for j in range(len(f.terms)):
                delta = np.abs(ag - cphi[j])
                theta = np.minimum(delta, total - delta)
                chord = np.sqrt(
                    np.maximum(rg * rg + cr[j] ** 2 - 2.0 * rg * cr[j] * np.cos(theta), 0.0)
                )
                d = np.where(theta < math.pi, chord, rg + cr[j])
                v = betas[j] * d + gammas[j]
                vals = v if vals is None else np.maximum(vals, v)
            i = int(np.argmin(vals))
            if vals[i] < best_val:
                best_val = float(vals[i])
                best_pt = space.canonicalize(OrthantPoint(q, float(S[i]), float(T[i])))
        assert best_pt is not None
        return best_pt, best_val, lb * h * math.sqrt(2.0)

    raise SpaceMismatch(f"unsupported space {space!r}")


def spider_circumcenter_closed_form(a_offsets) -> tuple[SpiderPoint, float]:
    """Exact circumcenter of spider points lying on pairwise distinct legs.

    With the largest offset tied between two or more legs the apex is the
    center and the radius equals that offset; otherwise the center sits on
    the largest-offset leg, halfway adjustment against the second-largest
    offset.
    """
    pairs = []
    for item in a_offsets:
        if isinstance(item, SpiderPoint):
            pairs.append((int(item.leg), float(item.offset)))
        else:
            leg, off = item
            pairs.append((int(leg), float(off)))
    if not pairs:
        raise EmptyGrid("need at least one point")
    legs = [leg for leg, _ in pairs]
    if len(set(legs)) != len(legs):
        raise MultiplePointsPerLeg("closed form requires at most one point per leg")
    if len(pairs) == 1:
        leg, off = pairs[0]
        center = SpiderPoint(0, 0.0) if off == 0.0 else SpiderPoint(leg, off)
        return center, 0.0
    offs = sorted((off for _, off in pairs), reverse=True)
    t_max, t_second = offs[0], offs[1]
    if t_max == t_second:
        return SpiderPoint(0, 0.0), t_max
    max_leg = max(pairs, key=lambda lo: lo[1])[0]
    t = (t_max - t_second) / 2.0
    center = SpiderPoint(0, 0.0) if t == 0.0 else SpiderPoint(max_leg, t)
    return center, (t_max + t_second) / 2.0
