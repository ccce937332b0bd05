"""Weak (pointwise-integration) topology utilities.

A basic neighborhood of a measure is cut out by finitely many test
tables and a strict epsilon on the integral discrepancies. On finite
models every measure has finite support already, so the classical
density statement becomes a constructive one: replace each atom by its
nearest point of a designated dense subset and keep the weights. The
construction either lands strictly inside the requested neighborhood or
fails loudly with the worst discrepancy.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import DenseSetTooCoarseError, SpaceMismatchError, ValidationError
from .ground import FunctionTable, GroundSpace
from .measures import IdempotentMeasure


@dataclass(frozen=True)
class WeakNeighborhood:
    """Basic weak neighborhood: center, test tables, strict epsilon."""

    center: IdempotentMeasure
    tests: tuple[FunctionTable, ...]
    epsilon: float
    _center_values: tuple[float, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        tests = tuple(self.tests)
        object.__setattr__(self, "tests", tests)
        if not tests:
            raise ValidationError("a weak neighborhood needs at least one test table")
        if not (self.epsilon > 0.0) or not math.isfinite(self.epsilon):
            raise ValidationError(f"epsilon must be a positive real, got {self.epsilon!r}")
        for phi in tests:
            if phi.space_id != self.center.space_id:
                raise SpaceMismatchError(
                    f"test table on {phi.space_id!r} does not match the"
                    f" neighborhood center on {self.center.space_id!r}"
                )
        object.__setattr__(
            self,
            "_center_values",
            tuple(self.center.integrate(phi).as_float() for phi in tests),
        )

    def discrepancies(self, nu: IdempotentMeasure) -> tuple[float, ...]:
        """Per-test absolute integral gaps between ``nu`` and the center."""
        if nu.space_id != self.center.space_id:
            raise SpaceMismatchError(
                f"measure on {nu.space_id!r} cannot be tested against a"
                f" neighborhood on {self.center.space_id!r}"
            )
        return tuple(
            abs(nu.integrate(phi).as_float() - c)
            for phi, c in zip(self.tests, self._center_values)
        )

    def contains(self, nu: IdempotentMeasure) -> bool:
        """Strict membership: every test discrepancy is below epsilon."""
        return all(d < self.epsilon for d in self.discrepancies(nu))


def contains(nbhd: WeakNeighborhood, nu: IdempotentMeasure) -> bool:
    return nbhd.contains(nu)


def nearest_dense_point(space: GroundSpace, dense_ordered: Sequence[str], pid: str) -> str:
    """The dense point nearest to ``pid``; ties go to the earliest in space order."""
    target = space.coords(pid)
    best = None
    best_d = math.inf
    for y in dense_ordered:
        d = math.dist(space.coords(y), target)
        if d < best_d:
            best, best_d = y, d
    return best


def approximate_on_dense(
    mu: IdempotentMeasure,
    dense: Iterable[str],
    tests: Sequence[FunctionTable],
    epsilon: float,
) -> IdempotentMeasure:
    """Approximate a measure by one supported on a designated dense subset.

    Each atom moves to its nearest dense point, weights ride along
    unchanged, and atoms that land together merge by max. The result
    must lie strictly inside the weak neighborhood of ``mu`` cut out by
    ``tests`` and ``epsilon`` — otherwise the dense set cannot resolve
    the measure at this epsilon and the call raises, reporting the worst
    test discrepancy.
    """
    space = mu.space
    dense_ordered = space.ordered(set(dense))
    if not dense_ordered:
        raise ValidationError("dense subset must be nonempty")
    nbhd = WeakNeighborhood(mu, tuple(tests), epsilon)

    out: dict[str, float] = {}
    for x, w in mu.atoms():
        y = nearest_dense_point(space, dense_ordered, x)
        cur = out.get(y)
        if cur is None or w > cur:
            out[y] = w
    ordered = {y: out[y] for y in dense_ordered if y in out}
    nu = IdempotentMeasure._trusted(space, ordered)

    gaps = nbhd.discrepancies(nu)
    worst = max(gaps)
    if not worst < epsilon:
        raise DenseSetTooCoarseError(worst, epsilon)
    return nu


def convergence_tail(
    sequence: Sequence[IdempotentMeasure],
    nbhd: WeakNeighborhood,
) -> int | None:
    """Start index of the longest all-contained tail, or None if there is none.

    A finite sequence stands in for a net: it "converges into" the
    neighborhood when some nonempty tail lies entirely inside, i.e. when
    its final element does.
    """
    if not sequence:
        raise ValidationError("convergence is undefined for an empty sequence")
    start = None
    for i in range(len(sequence) - 1, -1, -1):
        if not nbhd.contains(sequence[i]):
            break
        start = i
    return start


def converges(
    sequence: Sequence[IdempotentMeasure],
    limit: IdempotentMeasure,
    tests: Sequence[FunctionTable],
    epsilon: float,
) -> bool:
    """Whether some tail of the sequence stays inside the limit's neighborhood."""
    nbhd = WeakNeighborhood(limit, tuple(tests), epsilon)
    return convergence_tail(sequence, nbhd) is not None
