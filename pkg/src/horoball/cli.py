"""Command-line interface.

Subcommands:
  circumcenter        approximate the minimal enclosing ball of an instance
  minimize            run the projected subgradient iteration on an instance
  experiment figure1  convergence sweep of the circumcenter solver on the
                      built-in five-quadrant instance, written as CSV

Exit codes: 2 instance parse error, 3 too few iterations, 4 space/point
mismatch, 5 missing feasible ball, 6 output I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor

from .envelope import make_circumcenter, make_intersecting_balls
from .errors import (
    EmptySet,
    HoroballError,
    InstanceError,
    InvalidPoint,
    NotOnComplex,
    SpaceMismatch,
    TooFewIterations,
)
from .instance_io import Instance, load_instance, point_to_json
from .oracles import FeasibleBall
from .reference import brute_force_minimize, default_grid
from .solver import SolverConfig, circumcenter, subgradient_minimize
from .spaces import OrthantCycle, from_model_r3, to_model_r3

EXIT_PARSE = 2
EXIT_TOO_FEW_ITERATIONS = 3
EXIT_SPACE_MISMATCH = 4
EXIT_NO_FEASIBLE_BALL = 5
EXIT_IO = 6


def _fmt(x: float) -> str:
    # 17 significant digits: bit-comparable across runs
    return format(float(x), ".17g")


def _experiment_instance():
    """The built-in three-point instance in the five-quadrant cycle; its
    circumradius is sqrt(5) and its diameter sqrt(10 + 4*sqrt(5))."""
    space = OrthantCycle(5)
    pts = [
        from_model_r3((0.0, 0.0, math.sqrt(5.0))),
        from_model_r3((1.0, -2.0, 0.0)),
        from_model_r3((-2.0, 1.0, 0.0)),
    ]
    return space, pts


def _point_report(space, p) -> dict:
    rep = {"point": point_to_json(p)}
    if isinstance(space, OrthantCycle) and space.quadrants == 5:
        rep["model3d"] = list(to_model_r3(p))
    return rep


def _history_csv(space, history, path) -> None:
    from .spaces import Euclidean, Spider

    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        if isinstance(space, Euclidean):
            cols = [f"x{i}" for i in range(space.dim)]
        elif isinstance(space, Spider):
            cols = ["leg", "t"]
        else:
            cols = ["quadrant", "s", "t"]
        writer.writerow(["iteration", "value"] + cols)
        for i, (p, v) in enumerate(history):
            pj = point_to_json(p)
            if "coords" in pj:
                row = [_fmt(c) for c in pj["coords"]]
            elif "leg" in pj:
                row = [str(pj["leg"]), _fmt(pj["t"])]
            else:
                row = [str(pj["quadrant"]), _fmt(pj["s"]), _fmt(pj["t"])]
            writer.writerow([str(i + 1), _fmt(v)] + row)


def cmd_circumcenter(args) -> int:
    instance = load_instance(args.input)
    if not instance.points:
        raise InstanceError("points: circumcenter needs a nonempty points list")
    run = circumcenter(
        instance.space, instance.points, args.iters, record_history=bool(args.history)
    )
    report = {
        "center": _point_report(instance.space, run.best_point),
        "radius": run.best_value,
        "mean_value": run.mean_value,
        "iterations": run.iterations_done,
        "distance_calls": run.distance_calls,
        "combine_calls": run.combine_calls,
        "stopped_early": run.stopped_early,
    }
    if args.verify:
        f = make_circumcenter(instance.space, instance.points)
        grid = default_grid(f, args.verify_resolution)
        _, value, err = brute_force_minimize(f, grid)
        # solver value never undershoots the optimum; the grid value
        # overshoots it by at most err
        consistent = run.best_value >= value - err
        report["verify"] = {
            "grid_value": value,
            "grid_error_bound": err,
            "resolution": args.verify_resolution,
            "consistent": consistent,
        }
    json.dump(report, sys.stdout, indent=2)
    sys.stdout.write("\n")
    if args.history:
        _history_csv(instance.space, run.history, args.history)
    return 0


def _resolve_objective(instance: Instance, args):
    if args.circumcenter:
        if not instance.points:
            raise InstanceError("points: --circumcenter needs a nonempty points list")
        return make_circumcenter(instance.space, instance.points), "circumcenter"
    if args.balls:
        if args.radii is not None:
            radii = [float(r) for r in args.radii.split(",")]
        else:
            radii = [0.0] * len(instance.points)
        if len(radii) != len(instance.points):
            raise InstanceError(
                f"--radii: got {len(radii)} radii for {len(instance.points)} points"
            )
        return (
            make_intersecting_balls(instance.space, list(zip(instance.points, radii))),
            "balls",
        )
    if instance.objective is not None:
        kind = "balls" if any(t.gamma != 0.0 for t in instance.objective.terms) else "envelope"
        return instance.objective, kind
    if instance.points:
        return make_circumcenter(instance.space, instance.points), "circumcenter"
    raise InstanceError("instance has neither an objective nor points to build one from")


def cmd_minimize(args) -> int:
    instance = load_instance(args.input)
    if instance.feasible_ball is None:
        print("error: instance supplies no feasible ball", file=sys.stderr)
        return EXIT_NO_FEASIBLE_BALL
    f, objective_kind = _resolve_objective(instance, args)
    config = SolverConfig(iterations=args.iters)
    run = subgradient_minimize(f, instance.feasible_ball, config)
    diameter = instance.feasible_ball.diameter_bound
    bound = f.lipschitz_bound() * diameter / math.sqrt(args.iters)
    mean_gap = run.mean_value - run.best_value
    print(f"best_value: {_fmt(run.best_value)}")
    print(f"best_point: {json.dumps(point_to_json(run.best_point))}")
    print(f"mean_value: {_fmt(run.mean_value)}")
    print(f"iterations: {run.iterations_done}")
    print(f"stopped_early: {str(run.stopped_early).lower()}")
    print(f"mean_gap_bound: {_fmt(bound)}")
    status = "satisfied" if mean_gap <= bound else "violated"
    print(f"mean_gap_vs_best: {_fmt(mean_gap)} ({status})")
    if objective_kind == "balls":
        if run.best_value <= 0.0:
            print("verdict: feasible (a common point of the balls was found)")
        else:
            print("verdict: infeasible (no point with nonpositive value found)")
    return 0


def _experiment_row(n: int):
    space, pts = _experiment_instance()
    started = time.perf_counter()
    run = circumcenter(space, pts, n, _enforce_min_iterations=False)
    wall_ms = (time.perf_counter() - started) * 1e3
    sigma = math.sqrt(5.0)
    mu = math.sqrt(10.0 + 4.0 * math.sqrt(5.0))
    gap = run.best_value - sigma
    if gap > 2.0 * mu / math.sqrt(n):
        raise AssertionError(
            f"N={n}: gap {gap!r} exceeds the guaranteed envelope {2.0 * mu / math.sqrt(n)!r}"
        )
    log10_gap = math.log10(gap) if gap > 0.0 else -math.inf
    return n, run.best_value, gap, log10_gap, wall_ms


def cmd_experiment_figure1(args) -> int:
    if not 1 <= args.max_exp <= 8:
        print("error: --max-exp must be in [1, 8]", file=sys.stderr)
        return EXIT_PARSE
    sizes = [10**e for e in range(1, args.max_exp + 1)]
    env_cap = os.environ.get("HOROBALL_THREADS")
    workers = len(sizes) if env_cap is None else max(1, int(env_cap))
    workers = min(workers, len(sizes), os.cpu_count() or 1)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_experiment_row, sizes))
    else:
        rows = [_experiment_row(n) for n in sizes]
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["N", "f_best", "gap", "log10_gap", "wall_time_ms"])
    for n, f_best, gap, log10_gap, wall_ms in rows:
        writer.writerow([str(n), _fmt(f_best), _fmt(gap), _fmt(log10_gap), f"{wall_ms:.3f}"])
    text = buf.getvalue()
    try:
        if args.output == "-":
            sys.stdout.write(text)
        else:
            with open(args.output, "w", newline="", encoding="utf-8") as fh:
                fh.write(text)
    except OSError as exc:
        print(f"error: cannot write {args.output}: {exc}", file=sys.stderr)
        return EXIT_IO
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="horoball",
        description="First-order optimization in Euclidean, spider, and orthant-cycle geometries.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_circ = sub.add_parser("circumcenter", help="approximate the minimal enclosing ball")
    p_circ.add_argument("--input", required=True, help="instance JSON file")
    p_circ.add_argument("--iters", required=True, type=int, help="iteration count (>= 16)")
    p_circ.add_argument("--history", help="write per-iteration CSV to this path")
    p_circ.add_argument("--verify", action="store_true", help="cross-check with the grid oracle")
    p_circ.add_argument(
        "--verify-resolution", type=float, default=1e-2, help="grid resolution for --verify"
    )
    p_circ.set_defaults(func=cmd_circumcenter)

    p_min = sub.add_parser("minimize", help="projected subgradient iteration over a ball")
    p_min.add_argument("--input", required=True, help="instance JSON file")
    p_min.add_argument("--iters", required=True, type=int, help="iteration count (>= 1)")
    group = p_min.add_mutually_exclusive_group()
    group.add_argument(
        "--circumcenter", action="store_true", help="objective: max distance to the points"
    )
    group.add_argument(
        "--balls", action="store_true", help="objective: max of distance minus radius"
    )
    p_min.add_argument("--radii", help="comma-separated radii for --balls")
    p_min.set_defaults(func=cmd_minimize)

    p_exp = sub.add_parser("experiment", help="built-in experiments")
    exp_sub = p_exp.add_subparsers(dest="experiment", required=True)
    p_fig = exp_sub.add_parser(
        "figure1", help="convergence sweep N = 10^1..10^max_exp on the built-in instance"
    )
    p_fig.add_argument("--max-exp", type=int, default=6, dest="max_exp")
    p_fig.add_argument("--output", required=True, help="CSV output path ('-' for stdout)")
    p_fig.set_defaults(func=cmd_experiment_figure1)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InstanceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except TooFewIterations as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOO_FEW_ITERATIONS
    except (SpaceMismatch, InvalidPoint, NotOnComplex, EmptySet) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SPACE_MISMATCH
    except HoroballError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
