"""Pushforward of measures along point maps and its preimage structure.

The pushforward acts on integrands by precomposition: integrating a
table against the image measure equals integrating its pullback against
the original. On finite-support measures this is a per-fiber max of
weights, which makes the functor laws (identity, composition, support
image) hold atom-exactly in floating point.

The preimage of a measure under a pushforward is an infinite max-plus
convex set; it is represented implicitly here through membership
(:func:`preimage_contains`), its maximal element (:func:`canonical_lift`),
a seeded sampler (:func:`sample_preimage`), and a geometry-aware
representative lift (:func:`lift_toward`).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import EmptyFiberError, LiftImpossibleError, SpaceMismatchError
from .ground import FunctionTable, PointMap, fiber_points
from .measures import IdempotentMeasure, measure_equal
from .rng import rand_int, trial_rng


def _require_source_measure(f: PointMap, mu: IdempotentMeasure) -> None:
    if mu.space_id != f.from_space:
        raise SpaceMismatchError(
            f"measure on {mu.space_id!r} cannot ride a map from {f.from_space!r}"
        )


def _require_target_measure(f: PointMap, nu: IdempotentMeasure) -> None:
    if nu.space_id != f.to_space:
        raise SpaceMismatchError(
            f"measure on {nu.space_id!r} does not live on the map target {f.to_space!r}"
        )


def pushforward(f: PointMap, mu: IdempotentMeasure) -> IdempotentMeasure:
    """Transport a measure along a map: per-fiber max of atom weights.

    The peak atom survives (its image weight is still 0), so the result
    is normalized without any arithmetic on the weights.
    """
    _require_source_measure(f, mu)
    out: dict[str, float] = {}
    for pid, w in mu.atoms():
        y = f(pid)
        cur = out.get(y)
        if cur is None or w > cur:
            out[y] = w
    tindex = f.target.index
    ordered = {y: out[y] for y in sorted(out, key=tindex)}
    return IdempotentMeasure._trusted(f.target, ordered)


def support_image_check(f: PointMap, mu: IdempotentMeasure) -> bool:
    """Whether the pushforward support equals the set-image of the support."""
    image = {f(x) for x in mu.support}
    return set(pushforward(f, mu).support) == image


def preimage_contains(
    f: PointMap,
    nu: IdempotentMeasure,
    mu: IdempotentMeasure,
    tol: float = 0.0,
) -> bool:
    """Membership test for the preimage of ``nu`` under the pushforward."""
    _require_target_measure(f, nu)
    return measure_equal(pushforward(f, mu), nu, tol)


def canonical_lift(f: PointMap, nu: IdempotentMeasure) -> IdempotentMeasure:
    """The maximal preimage element: pull each weight back to its whole fiber.

    Every other measure that pushes forward to ``nu`` is dominated by
    this one pointwise.
    """
    _require_target_measure(f, nu)
    nw = dict(nu.atoms())
    out: dict[str, float] = {}
    covered: set[str] = set()
    for x in f.source.point_ids:
        y = f(x)
        w = nw.get(y)
        if w is not None:
            out[x] = w
            covered.add(y)
    if len(covered) != len(nw):
        missing = next(y for y in nu.support if y not in covered)
        raise LiftImpossibleError(
            f"lift impossible: point {missing!r} carries mass but has no preimage"
        )
    return IdempotentMeasure._trusted(f.source, out)


def sample_preimage(f: PointMap, nu: IdempotentMeasure, seed: int) -> IdempotentMeasure:
    """A random element of the preimage of ``nu`` under the pushforward.

    In each fiber over a support point one designated point carries the
    fiber's weight exactly; every other fiber point either stays off the
    support (probability one half) or carries a uniform weight from the
    five units below. Identical seeds give identical output.
    """
    _require_target_measure(f, nu)
    rng = trial_rng(seed, 0)
    out: dict[str, float] = {}
    for y, w in nu.atoms():
        pts = fiber_points(f, y)
        if not pts:
            raise LiftImpossibleError(
                f"lift impossible: point {y!r} carries mass but has no preimage"
            )
        designated = pts[rand_int(rng, 0, len(pts) - 1)]
        for x in pts:
            if x == designated:
                out[x] = w
            elif float(rng.uniform(0.0, 1.0)) >= 0.5:
                out[x] = w - float(rng.uniform(0.0, 5.0))
    sindex = f.source.index
    ordered = {x: out[x] for x in sorted(out, key=sindex)}
    return IdempotentMeasure._trusted(f.source, ordered)


def fiber_sup(f: PointMap, phi: FunctionTable) -> FunctionTable:
    """Per-fiber maximum of a source table, as a table on the target.

    Defined only where fibers are nonempty; a non-surjective map is
    rejected at the first point outside the image.
    """
    return _fiber_extreme(f, phi, max)


def fiber_inf(f: PointMap, phi: FunctionTable) -> FunctionTable:
    """Per-fiber minimum of a source table, as a table on the target."""
    return _fiber_extreme(f, phi, min)


def _fiber_extreme(f: PointMap, phi: FunctionTable, pick) -> FunctionTable:
    if phi.space_id != f.from_space:
        raise SpaceMismatchError(
            f"table on {phi.space_id!r} cannot descend along a map from {f.from_space!r}"
        )
    values = phi.values
    out: dict[str, float] = {}
    for y in f.target.point_ids:
        pts = fiber_points(f, y)
        if not pts:
            raise EmptyFiberError(
                f"undefined on non-image point {y!r} of space {f.to_space!r}"
            )
        out[y] = pick(values[x] for x in pts)
    return FunctionTable._trusted(f.target, out)


@dataclass(frozen=True)
class FiberBoundReport:
    """Outcome of the fiber-bound check for a fiber-supported measure."""

    applicable: bool
    point: str
    lower: float | None
    upper: float | None
    integral: float | None
    passed: bool

    def as_dict(self) -> dict:
        return {
            "applicable": self.applicable,
            "point": self.point,
            "lower": self.lower,
            "upper": self.upper,
            "integral": self.integral,
            "passed": self.passed,
        }


def check_fiber_bounds(
    f: PointMap,
    y0: str,
    nu: IdempotentMeasure,
    phi: FunctionTable,
    tol: float = 1e-12,
) -> FiberBoundReport:
    """Bound the integral of a measure that pushes forward to a point mass.

    When the pushforward of ``nu`` is the point mass at ``y0`` (else the
    report is marked inapplicable), the integral of any source table is
    squeezed between that table's minimum and maximum over the fiber.
    """
    f.target.index(y0)
    push = pushforward(f, nu)
    if push.support != (y0,):
        return FiberBoundReport(False, y0, None, None, None, False)
    pts = fiber_points(f, y0)
    values = phi.values
    lower = min(values[x] for x in pts)
    upper = max(values[x] for x in pts)
    integral = nu.integrate(phi).as_float()
    passed = (lower - tol) <= integral <= (upper + tol)
    return FiberBoundReport(True, y0, lower, upper, integral, passed)


def lift_toward(
    f: PointMap,
    base: IdempotentMeasure,
    target: IdempotentMeasure,
) -> IdempotentMeasure:
    """Lift a target measure through the map, staying near a base measure.

    Each target atom is placed on the fiber point closest to the support
    of ``base`` (ties to the earliest point), keeping its weight, so the
    result pushes forward to ``target`` bit-exactly. Without coordinates
    on the source the representative is simply each fiber's earliest
    point.
    """
    _require_source_measure(f, base)
    _require_target_measure(f, target)
    source = f.source
    use_metric = source.has_coords
    if use_metric:
        anchor_coords = [source.coords(s) for s in base.support]
    out: dict[str, float] = {}
    for y, w in target.atoms():
        pts = fiber_points(f, y)
        if not pts:
            raise LiftImpossibleError(
                f"lift impossible: point {y!r} carries mass but has no preimage"
            )
        if use_metric:
            best = None
            best_d = math.inf
            for x in pts:
                cx = source.coords(x)
                d = min(math.dist(cx, ca) for ca in anchor_coords)
                if d < best_d:
                    best, best_d = x, d
            out[best] = w
        else:
            out[pts[0]] = w
    sindex = source.index
    ordered = {x: out[x] for x in sorted(out, key=sindex)}
    return IdempotentMeasure._trusted(source, ordered)


def support_displacement(base: IdempotentMeasure, other: IdempotentMeasure) -> float:
    """How far the other measure's support strays from the base support.

    One-sided: the largest distance from an atom of ``other`` to its
    nearest atom of ``base``. Zero whenever the other support is a
    subset of the base support.
    """
    if base.space_id != other.space_id:
        raise SpaceMismatchError(
            f"cannot measure displacement across spaces"
            f" {base.space_id!r} and {other.space_id!r}"
        )
    space = base.space
    anchor_coords = [space.coords(s) for s in base.support]
    worst = 0.0
    for x in other.support:
        cx = space.coords(x)
        d = min(math.dist(cx, ca) for ca in anchor_coords)
        if d > worst:
            worst = d
    return worst
