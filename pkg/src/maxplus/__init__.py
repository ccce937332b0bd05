"""Finite-support idempotent probability measures over the max-plus semiring.

The semiring replaces + with max and x with +; a "probability measure"
becomes a finite weighted family of points whose largest weight is 0,
and integration becomes a maximum of weight-shifted function values.
The package provides the measure algebra (integration, pushforward,
max-plus convex combination), weak-topology utilities (neighborhoods,
dense-subset approximation, convergence), fiber-extremal lifting along
point maps, set-distance axiom checking, and seeded property suites
exercising all of it on finite metric ground models.
"""

from .errors import (
    CoefficientError,
    DenseSetTooCoarseError,
    EmptyFiberError,
    LiftImpossibleError,
    MaxPlusError,
    MetricUnavailableError,
    NoMassError,
    NormAxiomError,
    SpaceMismatchError,
    UnknownPointError,
    ValidationError,
)
from .functor import (
    FiberBoundReport,
    canonical_lift,
    check_fiber_bounds,
    fiber_inf,
    fiber_sup,
    lift_toward,
    preimage_contains,
    pushforward,
    sample_preimage,
    support_displacement,
    support_image_check,
)
from .ground import (
    FunctionTable,
    GroundSpace,
    Point,
    PointMap,
    compose,
    constant_table,
    distance,
    fiber,
    fiber_points,
    identity_map,
    pointwise_max,
    pullback,
    shift,
    uniform_grid_1d,
    uniform_grid_2d,
)
from .kappametric import (
    BUILTIN_CANDIDATES,
    KappaAxiomReport,
    KappaCandidate,
    check_kappa_axioms,
    constant_candidate,
    distance_candidate,
    distance_to_set,
    squared_distance_candidate,
)
from .measures import (
    UNBOUNDED,
    AxiomCheckReport,
    IdempotentMeasure,
    card_class,
    check_axioms,
    combine,
    make_measure,
    max_weight_gap,
    measure_equal,
    min_plus_functional,
    sum_functional,
    supports_equal,
)
from .semiring import NEG_INF, UNIT, MaxPlusValue, as_value, odot, oplus
from .suites import DEFAULT_TRIALS, SUITES, SuiteReport
from .weaktop import (
    WeakNeighborhood,
    approximate_on_dense,
    contains,
    convergence_tail,
    converges,
    nearest_dense_point,
)

__version__ = "0.1.0"

__all__ = [
    "AxiomCheckReport",
    "BUILTIN_CANDIDATES",
    "CoefficientError",
    "DEFAULT_TRIALS",
    "DenseSetTooCoarseError",
    "EmptyFiberError",
    "FiberBoundReport",
    "FunctionTable",
    "GroundSpace",
    "IdempotentMeasure",
    "KappaAxiomReport",
    "KappaCandidate",
    "LiftImpossibleError",
    "MaxPlusError",
    "MaxPlusValue",
    "MetricUnavailableError",
    "NEG_INF",
    "NoMassError",
    "NormAxiomError",
    "Point",
    "PointMap",
    "SUITES",
    "SpaceMismatchError",
    "SuiteReport",
    "UNBOUNDED",
    "UNIT",
    "UnknownPointError",
    "ValidationError",
    "WeakNeighborhood",
    "approximate_on_dense",
    "as_value",
    "canonical_lift",
    "card_class",
    "check_axioms",
    "check_fiber_bounds",
    "check_kappa_axioms",
    "combine",
    "compose",
    "constant_candidate",
    "constant_table",
    "contains",
    "convergence_tail",
    "converges",
    "distance",
    "distance_candidate",
    "distance_to_set",
    "fiber",
    "fiber_inf",
    "fiber_points",
    "fiber_sup",
    "identity_map",
    "lift_toward",
    "make_measure",
    "max_weight_gap",
    "measure_equal",
    "min_plus_functional",
    "nearest_dense_point",
    "odot",
    "oplus",
    "pointwise_max",
    "preimage_contains",
    "pullback",
    "pushforward",
    "sample_preimage",
    "shift",
    "squared_distance_candidate",
    "sum_functional",
    "support_displacement",
    "support_image_check",
    "supports_equal",
    "uniform_grid_1d",
    "uniform_grid_2d",
]
