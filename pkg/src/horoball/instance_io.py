"""JSON instance files: parsing, validation diagnostics, serialization.

An instance file looks like::

    {
      "space": {"kind": "orthant_cycle", "k": 5},
      "points": [{"model3d": [0, 0, 2.23606797749979]},
                 {"quadrant": 0, "s": 1.0, "t": 2.0}],
      "objective": {"kind": "circumcenter"},
      "feasible_ball": {"center": {"quadrant": 0, "s": 0, "t": 0},
                        "radius": 5.0}
    }

Point forms: ``{"coords": [...]}`` (Euclidean), ``{"leg": i, "t": v}``
(spider), ``{"quadrant": i, "s": v, "t": v}`` (orthant cycle), and
``{"model3d": [x, y, z]}`` for the five-quadrant cycle. Objectives:
``circumcenter``, ``balls`` (with ``radii`` aligned to the point list), or
an explicit ``envelope`` with a ``terms`` array. Parse problems raise
:class:`InstanceError` carrying the offending field path.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from .envelope import DistanceEnvelope, EnvelopeTerm, make_circumcenter, make_intersecting_balls
from .errors import HoroballError, InstanceError
from .oracles import FeasibleBall
from .spaces import (
    Euclidean,
    EuclideanPoint,
    OrthantCycle,
    OrthantPoint,
    Point,
    Space,
    Spider,
    SpiderPoint,
    from_model_r3,
    space_from_json,
)

__all__ = [
    "Instance",
    "load_instance",
    "loads_instance",
    "instance_to_json",
    "point_from_json",
    "point_to_json",
]


@dataclass
class Instance:
    space: Space
    points: list[Point]
    objective: Optional[DistanceEnvelope] = None
    feasible_ball: Optional[FeasibleBall] = None


def point_from_json(space: Space, obj, where: str = "point") -> Point:
    if not isinstance(obj, dict):
        raise InstanceError(f"{where}: expected an object, got {obj!r}")
    try:
        if "model3d" in obj:
            if not (isinstance(space, OrthantCycle) and space.quadrants == 5):
                raise InstanceError(
                    f"{where}: model3d form is only valid in the 5-quadrant orthant cycle"
                )
            return from_model_r3(obj["model3d"])
        if "coords" in obj:
            return space.canonicalize(EuclideanPoint(tuple(obj["coords"])))
        if "leg" in obj:
            return space.canonicalize(SpiderPoint(obj["leg"], obj["t"]))
        if "quadrant" in obj:
            return space.canonicalize(OrthantPoint(obj["quadrant"], obj["s"], obj["t"]))
    except InstanceError:
        raise
    except (HoroballError, KeyError, TypeError, ValueError) as exc:
        raise InstanceError(f"{where}: {exc}") from exc
    raise InstanceError(f"{where}: unrecognized point form {sorted(obj)!r}")


def point_to_json(p: Point) -> dict:
    if isinstance(p, EuclideanPoint):
        return {"coords": list(p.coords)}
    if isinstance(p, SpiderPoint):
        return {"leg": p.leg, "t": p.offset}
    return {"quadrant": p.quadrant, "s": p.s, "t": p.t}


def _envelope_from_json(space: Space, obj, points: list[Point]) -> DistanceEnvelope:
    kind = obj.get("kind")
    if kind == "circumcenter":
        if not points:
            raise InstanceError("objective: circumcenter needs a nonempty points list")
        return make_circumcenter(space, points)
    if kind == "balls":
        radii = obj.get("radii")
        if not isinstance(radii, list) or len(radii) != len(points):
            raise InstanceError(
                "objective: balls needs a radii list matching the points list"
            )
        try:
            return make_intersecting_balls(space, list(zip(points, radii)))
        except HoroballError as exc:
            raise InstanceError(f"objective: {exc}") from exc
    if kind == "envelope":
        terms_json = obj.get("terms")
        if not isinstance(terms_json, list) or not terms_json:
            raise InstanceError("objective: envelope needs a nonempty terms list")
        terms = []
        for i, t in enumerate(terms_json):
            where = f"objective.terms[{i}]"
            if not isinstance(t, dict) or "center" not in t:
                raise InstanceError(f"{where}: expected an object with a center")
            center = point_from_json(space, t["center"], where=f"{where}.center")
            try:
                terms.append(EnvelopeTerm(center, t.get("beta", 1.0), t.get("gamma", 0.0)))
            except (TypeError, ValueError) as exc:
                raise InstanceError(f"{where}: {exc}") from exc
        try:
            return DistanceEnvelope(space, tuple(terms))
        except (HoroballError, ValueError) as exc:
            raise InstanceError(f"objective: {exc}") from exc
    raise InstanceError(f"objective: unknown kind {kind!r}")


def loads_instance(text: str) -> Instance:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(data, dict):
        raise InstanceError("top level: expected a JSON object")
    if "space" not in data:
        raise InstanceError("top level: missing required field 'space'")
    try:
        space = space_from_json(data["space"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InstanceError(f"space: {exc}") from exc

    points_json = data.get("points", [])
    if not isinstance(points_json, list):
        raise InstanceError("points: expected a list")
    points = [
        point_from_json(space, obj, where=f"points[{i}]") for i, obj in enumerate(points_json)
    ]

    objective = None
    if "objective" in data and data["objective"] is not None:
        obj = data["objective"]
        if not isinstance(obj, dict):
            raise InstanceError("objective: expected an object")
        objective = _envelope_from_json(space, obj, points)

    ball = None
    if "feasible_ball" in data and data["feasible_ball"] is not None:
        bj = data["feasible_ball"]
        if not isinstance(bj, dict) or "center" not in bj or "radius" not in bj:
            raise InstanceError("feasible_ball: expected an object with center and radius")
        center = point_from_json(space, bj["center"], where="feasible_ball.center")
        try:
            ball = FeasibleBall(space, center, bj["radius"])
        except (HoroballError, TypeError, ValueError) as exc:
            raise InstanceError(f"feasible_ball: {exc}") from exc

    return Instance(space=space, points=points, objective=objective, feasible_ball=ball)


def load_instance(path) -> Instance:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InstanceError(f"cannot read {path}: {exc}") from exc
    return loads_instance(text)


def instance_to_json(instance: Instance) -> dict:
    out: dict = {
        "space": instance.space.to_json(),
        "points": [point_to_json(p) for p in instance.points],
    }
    if instance.objective is not None:
        out["objective"] = {
            "kind": "envelope",
            "terms": [
                {"center": point_to_json(t.center), "beta": t.beta, "gamma": t.gamma}
                for t in instance.objective.terms
            ],
        }
    if instance.feasible_ball is not None:
        out["feasible_ball"] = {
            "center": point_to_json(instance.feasible_ball.center),
            "radius": instance.feasible_ball.radius,
        }
    return out
