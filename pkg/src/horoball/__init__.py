"""Optimization of distance envelopes in nonpositively curved spaces.

The package provides exact geodesic computation in three concrete
geometries (Euclidean space, spiders, orthant cycles), a support oracle
based on horoball containment of level sets, a projected subgradient
solver with a dimension- and curvature-free accuracy guarantee, and a
minimal enclosing ball solver. A compiled kernel backend is used when
available; a bit-identical pure-Python fallback is selected otherwise
(see ``horoball.COMPILED``).
"""

from ._backend import COMPILED
from .envelope import DistanceEnvelope, EnvelopeTerm, make_circumcenter, make_intersecting_balls
from .errors import (
    DegenerateCenter,
    EmptyGrid,
    EmptySet,
    HoroballError,
    InfeasibleStart,
    InstanceError,
    InvalidConfig,
    InvalidLambda,
    InvalidPoint,
    MultiplePointsPerLeg,
    NegativeRadius,
    NotOnComplex,
    SpaceMismatch,
    TooFewIterations,
    ZeroDirection,
)
from .oracles import FeasibleBall, MinimizerCertificate, StepPoint, SupportStepResult, support_step
from .reference import GridSpec, brute_force_minimize, default_grid, spider_circumcenter_closed_form
from .solver import SolverConfig, SolverRun, circumcenter, subgradient_minimize
from .spaces import (
    Euclidean,
    EuclideanPoint,
    OrthantCycle,
    OrthantPoint,
    Point,
    Ray,
    Space,
    Spider,
    SpiderPoint,
    from_model_r3,
    space_from_json,
    to_model_r3,
)

__version__ = "0.1.0"

__all__ = [
    "COMPILED",
    "__version__",
    # spaces
    "Space",
    "Euclidean",
    "Spider",
    "OrthantCycle",
    "Point",
    "EuclideanPoint",
    "SpiderPoint",
    "OrthantPoint",
    "Ray",
    "from_model_r3",
    "to_model_r3",
    "space_from_json",
    # objectives
    "DistanceEnvelope",
    "EnvelopeTerm",
    "make_circumcenter",
    "make_intersecting_balls",
    # oracles
    "FeasibleBall",
    "MinimizerCertificate",
    "StepPoint",
    "SupportStepResult",
    "support_step",
    # solvers
    "SolverConfig",
    "SolverRun",
    "subgradient_minimize",
    "circumcenter",
    # reference oracles
    "GridSpec",
    "default_grid",
    "brute_force_minimize",
    "spider_circumcenter_closed_form",
    # errors
    "HoroballError",
    "InvalidPoint",
    "SpaceMismatch",
    "InvalidLambda",
    "ZeroDirection",
    "NotOnComplex",
    "EmptySet",
    "NegativeRadius",
    "DegenerateCenter",
    "InfeasibleStart",
    "InvalidConfig",
    "TooFewIterations",
    "MultiplePointsPerLeg",
    "EmptyGrid",
    "InstanceError",
]
