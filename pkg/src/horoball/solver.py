"""Projected subgradient iteration and its circumcenter specialization.

``subgradient_minimize`` runs the generic fixed-step iteration: query the
support oracle at the current iterate, move to the returned step point,
project back onto the feasible ball. With step length ``D / sqrt(n)`` the
average of the objective values over the ``n`` iterates exceeds the
optimal value by at most ``L * D / sqrt(n)``, where ``L`` is the Lipschitz
constant and ``D`` bounds the feasible diameter. The bound involves no
curvature constant.

``circumcenter`` is the specialization to ``f = max_a d(., a)``: start at
the first input point, repeatedly find the farthest input point and move a
fixed step toward it. It needs exactly ``k * (n + 1) - 1`` distance
computations and ``n`` geodesic steps for ``k`` points, and the best value
seen exceeds the circumradius by at most ``2 * diam(A) / sqrt(n)``. No
projection is ever needed: iterates provably stay near the initial point,
which the implementation verifies on every iteration.

Runs are deterministic: ties pick the smallest index, and identical inputs
produce identical results; the inner loop dispatches to the compiled
kernel backend when available.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ._backend import kernels as _k
from .envelope import DistanceEnvelope
from .errors import (
    EmptySet,
    InfeasibleStart,
    InvalidConfig,
    SpaceMismatch,
    TooFewIterations,
)
from .oracles import FeasibleBall, MinimizerCertificate, support_step
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
    "SolverConfig",
    "SolverRun",
    "subgradient_minimize",
    "circumcenter",
]

MIN_CIRCUMCENTER_ITERATIONS = 16

# slack for the in-loop containment check of the circumcenter iterates
_DRIFT_SLACK = 1e-9


@dataclass(frozen=True)
class SolverConfig:
    """Configuration of the projected subgradient iteration.

    ``step_length`` defaults to ``diameter_bound / sqrt(iterations)``, the
    choice under which the mean-value guarantee holds; ``diameter_bound``
    defaults to the diameter of the feasible ball.
    """

    iterations: int
    diameter_bound: Optional[float] = None
    step_length: Optional[float] = None
    record_history: bool = False
    initial_point: Optional[Point] = None

    def __post_init__(self):
        if int(self.iterations) != self.iterations or self.iterations < 1:
            raise InvalidConfig(f"iteration count must be a positive integer, got {self.iterations!r}")
        object.__setattr__(self, "iterations", int(self.iterations))
        if self.diameter_bound is not None and not float(self.diameter_bound) > 0.0:
            raise InvalidConfig(f"diameter bound must be positive, got {self.diameter_bound!r}")
        if self.step_length is not None and not float(self.step_length) > 0.0:
            raise InvalidConfig(f"step length must be positive, got {self.step_length!r}")


@dataclass(frozen=True)
class SolverRun:
    """Outcome of a solver run.

    ``history`` holds the pre-step iterate of each iteration with its
    objective value (only when recording was requested); ``mean_value``
    averages exactly those values.
    """

    best_point: Point
    best_value: float
    mean_value: float
    iterations_done: int
    stopped_early: bool
    history: Optional[tuple[tuple[Point, float], ...]] = None
    distance_calls: Optional[int] = None
    combine_calls: Optional[int] = None


def subgradient_minimize(
    f: DistanceEnvelope, region: FeasibleBall, config: SolverConfig
) -> SolverRun:
    """Minimize a distance envelope over a metric ball.

    Starts at ``config.initial_point`` (default: the ball center) and runs
    ``config.iterations`` rounds of support step plus projection,
    recording each pre-step value. Stops early if the support oracle
    certifies a global minimizer.
    """
    if f.space != region.space:
        raise SpaceMismatch(
            f"objective lives in {f.space!r} but the feasible region in {region.space!r}"
        )
    space = f.space
    n = config.iterations
    diameter = config.diameter_bound
    if diameter is None:
        diameter = region.diameter_bound
    if not diameter > 0.0:
        raise InvalidConfig("feasible ball has zero diameter; supply a positive diameter_bound")
    eps = config.step_length
    if eps is None:
        eps = diameter / math.sqrt(n)

    if config.initial_point is None:
        x = region.center
    else:
        x = space._require(config.initial_point)
        if space.distance(x, region.center) > region.radius:
            raise InfeasibleStart(
                f"initial point {x!r} lies outside the feasible ball of radius {region.radius!r}"
            )

    history: Optional[list[tuple[Point, float]]] = [] if config.record_history else None
    values: list[float] = []
    best_value = math.inf
    best_point = x
    stopped = False
    done = 0
    for _ in range(n):
        result = support_step(f, x, eps)
        values.append(result.value)
        if history is not None:
            history.append((x, result.value))
        done += 1
        if result.value < best_value:
            best_value = result.value
            best_point = x
        if isinstance(result, MinimizerCertificate):
            stopped = True
            break
        x = region.project(result.point)

    return SolverRun(
        best_point=best_point,
        best_value=best_value,
        mean_value=math.fsum(values) / len(values),
        iterations_done=done,
        stopped_early=stopped,
        history=tuple(history) if history is not None else None,
    )


def _encode_points(space: Space, points: list[Point]):
    if isinstance(space, Euclidean):
        return [p.coords for p in points]
    if isinstance(space, Spider):
        legs = np.array([p.leg for p in points], dtype=np.int64)
        offs = np.array([p.offset for p in points], dtype=np.float64)
        return legs, offs
    quads = np.array([p.quadrant for p in points], dtype=np.int64)
    ss = np.array([p.s for p in points], dtype=np.float64)
    ts = np.array([p.t for p in points], dtype=np.float64)
    return quads, ss, ts


def _decode_point(space: Space, raw) -> Point:
    if isinstance(space, Euclidean):
        return EuclideanPoint(tuple(raw))
    if isinstance(space, Spider):
        return SpiderPoint(int(raw[0]), float(raw[1]))
    return OrthantPoint(int(raw[0]), float(raw[1]), float(raw[2]))


def _history_width(space: Space) -> int:
    if isinstance(space, Euclidean):
        return space.dim
    if isinstance(space, Spider):
        return 2
    return 3


def circumcenter(
    space: Space,
    points,
    iterations: int,
    record_history: bool = False,
    _enforce_min_iterations: bool = True,
) -> SolverRun:
    """Approximate the minimal enclosing ball of ``points``.

    Requires ``iterations >= 16``; the returned ``best_value`` never
    undershoots the true circumradius and exceeds it by at most
    ``2 * diam(points) / sqrt(iterations)``. If all points coincide the
    exact answer is returned immediately with ``stopped_early`` set.
    """
    pts = [space._require(p) for p in points]
    if not pts:
        raise EmptySet("circumcenter needs at least one point")
    if int(iterations) != iterations or iterations < 1:
        raise InvalidConfig(f"iteration count must be a positive integer, got {iterations!r}")
    n = int(iterations)
    if _enforce_min_iterations and n < MIN_CIRCUMCENTER_ITERATIONS:
        raise TooFewIterations(
            f"circumcenter requires at least {MIN_CIRCUMCENTER_ITERATIONS} iterations, got {n}"
        )

    hist_vals = hist_pts = None
    if record_history:
        hist_vals = np.empty(n, dtype=np.float64)
        hist_pts = np.empty((n, _history_width(space)), dtype=np.float64)

    if isinstance(space, Euclidean):
        raw = _encode_points(space, pts)
        out = _k.run_circ_euclidean(raw, n, hist_vals, hist_pts)
    elif isinstance(space, Spider):
        legs, offs = _encode_points(space, pts)
        out = _k.run_circ_spider(legs, offs, n, hist_vals, hist_pts)
    elif isinstance(space, OrthantCycle):
        quads, ss, ts = _encode_points(space, pts)
        out = _k.run_circ_orthant(space.quadrants, quads, ss, ts, n, hist_vals, hist_pts)
    else:
        raise SpaceMismatch(f"unsupported space {space!r}")

    best_raw, best_value, value_sum, dist_calls, comb_calls, max_drift, iters, init_radius = out

    if iters == 0:
        # all points coincide: the first point is the exact circumcenter
        return SolverRun(
            best_point=pts[0],
            best_value=0.0,
            mean_value=0.0,
            iterations_done=0,
            stopped_early=True,
            history=() if record_history else None,
            distance_calls=dist_calls,
            combine_calls=comb_calls,
        )

    if max_drift > 2.0 * init_radius + _DRIFT_SLACK:
        raise AssertionError(
            f"iterate drifted {max_drift!r} from the initial point, beyond the "
            f"guaranteed containment radius {2.0 * init_radius!r}"
        )

    history = None
    if record_history:
        history = tuple(
            (_decode_point(space, hist_pts[i]), float(hist_vals[i])) for i in range(iters)
        )

    if isinstance(space, Euclidean):
        best_point: Point = EuclideanPoint(tuple(best_raw))
    elif isinstance(space, Spider):
        best_point = SpiderPoint(int(best_raw[0]), float(best_raw[1]))
    else:
        best_point = OrthantPoint(int(best_raw[0]), float(best_raw[1]), float(best_raw[2]))

    return SolverRun(
        best_point=best_point,
        best_value=float(best_value),
        mean_value=float(value_sum) / iters,
        iterations_done=iters,
        stopped_early=False,
        history=history,
        distance_calls=int(dist_calls),
        combine_calls=int(comb_calls),
    )
