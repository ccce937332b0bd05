"""Idempotent probability measures with finite support.

A measure is a weighted family ``(lambda_i, x_i)`` over a ground space,
normalized so the largest weight is exactly 0 (the max-plus unit) and
trimmed so no stored weight is bottom. Integration of a function table
is ``max_i (lambda_i + phi(x_i))``; the three defining axioms (norm,
homogeneity, max-additivity) hold exactly in floating point because
``max`` never rounds and a shared shift commutes with it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import (
    CoefficientError,
    NoMassError,
    NormAxiomError,
    SpaceMismatchError,
    ValidationError,
)
from .ground import FunctionTable, GroundSpace, constant_table, pointwise_max, shift
from .semiring import NEG_INF, UNIT, MaxPlusValue, Scalar, as_value


class IdempotentMeasure:
    """Normalized finite-support measure on a ground space.

    ``weights`` maps point ids to max-plus weights; bottom weights are
    trimmed away. The remaining weights must peak at exactly 0 — use
    :meth:`from_weights` to normalize arbitrary non-empty weights first.
    """

    __slots__ = ("_space", "_weights")

    def __init__(self, space: GroundSpace, weights: Mapping[str, Scalar]):
        finite: dict[str, float] = {}
        for pid, raw in weights.items():
            if pid not in space:
                space.index(pid)  # raises UnknownPointError with context
            w = as_value(raw)
            if not w.is_bottom:
                finite[pid] = w.value
        if not finite:
            raise NoMassError(f"no mass: measure on space {space.id!r} has empty support")
        peak = max(finite.values())
        if peak != 0.0:
            raise NormAxiomError(
                f"norm axiom violated: peak weight is {peak!r}, expected 0.0"
            )
        self._space = space
        self._weights = {pid: finite[pid] for pid in space.point_ids if pid in finite}

    @classmethod
    def _trusted(cls, space: GroundSpace, weights: dict[str, float]) -> IdempotentMeasure:
        # internal fast path: weights already validated, ordered, normalized
        obj = cls.__new__(cls)
        obj._space = space
        obj._weights = weights
        return obj

    @classmethod
    def from_weights(cls, space: GroundSpace, weights: Mapping[str, Scalar]) -> IdempotentMeasure:
        """Normalize arbitrary weights (at least one finite) into a measure.

        Subtracting the peak weight from every atom is the max-plus analogue
        of dividing by total mass. The peak atom lands at exactly 0.0 since
        ``w - w == 0.0`` for every finite float.
        """
        finite: dict[str, float] = {}
        for pid, raw in weights.items():
            if pid not in space:
                space.index(pid)
            w = as_value(raw)
            if not w.is_bottom:
                finite[pid] = w.value
        if not finite:
            raise NoMassError(f"no mass: measure on space {space.id!r} has empty support")
        peak = max(finite.values())
        shifted = {pid: finite[pid] - peak for pid in space.point_ids if pid in finite}
        return cls._trusted(space, shifted)

    @classmethod
    def dirac(cls, space: GroundSpace, point_id: str) -> IdempotentMeasure:
        """The point measure concentrated at one point with weight 0."""
        space.index(point_id)
        return cls._trusted(space, {point_id: 0.0})

    @property
    def space(self) -> GroundSpace:
        return self._space

    @property
    def space_id(self) -> str:
        return self._space.id

    @property
    def support(self) -> tuple[str, ...]:
        """Support points in space order."""
        return tuple(self._weights)

    def atoms(self) -> Iterable[tuple[str, float]]:
        """(point id, weight) pairs in space order."""
        return self._weights.items()

    def weight(self, point_id: str) -> MaxPlusValue:
        """The weight at a point: bottom off the support."""
        if point_id not in self._space:
            self._space.index(point_id)
        w = self._weights.get(point_id)
        return NEG_INF if w is None else MaxPlusValue(w)

    def integrate(self, phi: FunctionTable) -> MaxPlusValue:
        """Maslov integral: the peak of ``weight + phi`` over the support."""
        if phi.space_id != self.space_id:
            raise SpaceMismatchError(
                f"cannot integrate a table on {phi.space_id!r}"
                f" against a measure on {self.space_id!r}"
            )
        values = phi.values
        return MaxPlusValue(max(w + values[pid] for pid, w in self._weights.items()))

    __call__ = integrate

    def is_dirac(self) -> bool:
        return len(self._weights) == 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IdempotentMeasure):
            return NotImplemented
        return self.space_id == other.space_id and self._weights == other._weights

    __hash__ = None  # type: ignore[assignment]

    def __len__(self) -> int:
        return len(self._weights)

    def __repr__(self) -> str:
        inner = ", ".join(f"{pid}: {w}" for pid, w in self._weights.items())
        return f"IdempotentMeasure({self.space_id!r}, {{{inner}}})"


def combine(
    alpha: Scalar,
    mu: IdempotentMeasure,
    beta: Scalar,
    nu: IdempotentMeasure,
) -> IdempotentMeasure:
    """Max-plus convex combination ``alpha * mu (+) beta * nu``.

    The coefficients must satisfy ``max(alpha, beta) == 0``; a bottom
    coefficient wipes out its side entirely, so the result collapses to
    the other measure. With both coefficients finite the combined support
    is the union of the two supports and the result is normalized
    bit-exactly (its new peak is ``max(alpha, beta) == 0``).
    """
    if mu.space_id != nu.space_id:
        raise SpaceMismatchError(
            f"cannot combine measures on {mu.space_id!r} and {nu.space_id!r}"
        )
    a = as_value(alpha)
    b = as_value(beta)
    if a.oplus(b) != UNIT:
        raise CoefficientError(
            f"coefficient constraint violated: max({a}, {b}) != 0"
        )
    if a.is_bottom:
        return nu
    if b.is_bottom:
        return mu
    space = mu.space
    mw = mu._weights
    nw = nu._weights
    av = a.value
    bv = b.value
    out: dict[str, float] = {}
    for pid in space.point_ids:
        lhs = mw.get(pid)
        rhs = nw.get(pid)
        if lhs is None and rhs is None:
            continue
        if lhs is None:
            out[pid] = bv + rhs
        elif rhs is None:
            out[pid] = av + lhs
        else:
            out[pid] = max(av + lhs, bv + rhs)
    peak = max(out.values())
    if peak != 0.0:  # unreachable: max(alpha, beta) == 0 and each side peaks at 0
        raise NormAxiomError(f"norm axiom violated: combination peak is {peak!r}")
    return IdempotentMeasure._trusted(space, out)


def make_measure(
    space: GroundSpace,
    raw_atoms: Iterable[tuple[str, Scalar]],
    normalize: bool = False,
) -> IdempotentMeasure:
    """Build a measure from (point, weight) pairs.

    Duplicate points merge by max (idempotent addition), bottom weights
    drop. With ``normalize`` the weights are shifted so the peak is 0;
    without it, a peak other than 0 is rejected.
    """
    merged: dict[str, MaxPlusValue] = {}
    for pid, raw in raw_atoms:
        w = as_value(raw)
        prev = merged.get(pid)
        merged[pid] = w if prev is None else prev.oplus(w)
    if not merged:
        raise NoMassError(f"no mass: measure on space {space.id!r} has no atoms")
    if normalize:
        return IdempotentMeasure.from_weights(space, merged)
    return IdempotentMeasure(space, merged)


def measure_equal(mu: IdempotentMeasure, nu: IdempotentMeasure, tol: float = 0.0) -> bool:
    """Same support and weights within tol (tol 0 = atom-exact)."""
    return max_weight_gap(mu, nu) <= tol


UNBOUNDED = math.inf
"""Support-cardinality bound standing for "no bound"."""


def card_class(mu: IdempotentMeasure, bound: float) -> bool:
    """Whether the support size is within the given bound.

    ``UNBOUNDED`` always holds; integer bounds pick out the measures of
    support cardinality at most that integer.
    """
    if bound != UNBOUNDED and (bound != int(bound) or bound < 1):
        raise ValidationError(f"cardinality bound must be a positive integer or UNBOUNDED, got {bound!r}")
    return len(mu) <= bound


def supports_equal(mu: IdempotentMeasure, nu: IdempotentMeasure) -> bool:
    return mu.space_id == nu.space_id and mu.support == nu.support


def max_weight_gap(mu: IdempotentMeasure, nu: IdempotentMeasure) -> float:
    """Largest absolute weight difference across the union of supports.

    Off-support points count as an infinite gap, so a finite return value
    certifies equal supports as well.
    """
    if mu.space_id != nu.space_id:
        raise SpaceMismatchError(
            f"cannot compare measures on {mu.space_id!r} and {nu.space_id!r}"
        )
    if mu.support != nu.support:
        return math.inf
    nw = nu._weights
    return max(abs(w - nw[pid]) for pid, w in mu._weights.items())


# --- black-box axiom checking -------------------------------------------


@dataclass(frozen=True)
class AxiomCheckReport:
    """Outcome of a randomized axiom check on a functional.

    ``counterexample`` holds the first violation found (axiom name and
    the offending inputs/values); ``None`` when every trial passed.
    """

    name: str
    passed: bool
    trials_run: int
    counterexample: dict | None

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "trials_run": self.trials_run,
            "counterexample": self.counterexample,
        }


def _as_real(x: float | MaxPlusValue) -> float:
    return x.as_float() if isinstance(x, MaxPlusValue) else float(x)


def check_axioms(
    functional,
    space: GroundSpace,
    trials: int,
    seed: int,
    tol: float = 1e-12,
    name: str = "functional",
) -> AxiomCheckReport:
    """Probe a black-box functional against the three defining axioms.

    Each trial draws function tables ``phi``, ``psi`` with values in
    [-10, 10] and a scalar ``lam`` in [-5, 5], then checks, within tol:

    * norm: the constant table ``lam`` maps to ``lam``;
    * homogeneity: shifting the argument by ``lam`` shifts the value;
    * max-additivity: the pointwise max maps to the max of the values.

    Stops at the first violation, which is recorded in full so the trial
    can be replayed from (seed, trial index).
    """
    if trials < 1:
        raise ValidationError(f"trials must be at least 1, got {trials}")
    from .rng import trial_rng  # local import: keeps the module numpy-free for pure use

    pids = space.point_ids
    n = len(pids)
    for t in range(trials):
        rng = trial_rng(seed, t)
        phi_vals = {p: float(v) for p, v in zip(pids, rng.uniform(-10.0, 10.0, n))}
        psi_vals = {p: float(v) for p, v in zip(pids, rng.uniform(-10.0, 10.0, n))}
        lam = float(rng.uniform(-5.0, 5.0))
        phi = FunctionTable._trusted(space, phi_vals)
        psi = FunctionTable._trusted(space, psi_vals)

        got_norm = _as_real(functional(constant_table(space, lam)))
        if not abs(got_norm - lam) <= tol:
            return AxiomCheckReport(name, False, t + 1, {
                "axiom": "norm",
                "trial": t,
                "lambda": lam,
                "expected": lam,
                "actual": got_norm,
            })

        base = _as_real(functional(phi))
        shifted = _as_real(functional(shift(phi, lam)))
        if not abs(shifted - (base + lam)) <= tol:
            return AxiomCheckReport(name, False, t + 1, {
                "axiom": "homogeneity",
                "trial": t,
                "lambda": lam,
                "phi": phi_vals,
                "expected": base + lam,
                "actual": shifted,
            })

        lhs = _as_real(functional(pointwise_max(phi, psi)))
        rhs = max(base, _as_real(functional(psi)))
        if not abs(lhs - rhs) <= tol:
            return AxiomCheckReport(name, False, t + 1, {
                "axiom": "max-additivity",
                "trial": t,
                "phi": phi_vals,
                "psi": psi_vals,
                "expected": rhs,
                "actual": lhs,
            })
    return AxiomCheckReport(name, True, trials, None)


def min_plus_functional(mu: IdempotentMeasure):
    """Negative control: min in place of max (breaks max-additivity)."""

    def evaluate(phi: FunctionTable) -> float:
        values = phi.values
        return min(w + values[pid] for pid, w in mu.atoms())

    return evaluate


def sum_functional(mu: IdempotentMeasure):
    """Negative control: plain summation over the support (breaks the norm axiom)."""

    def evaluate(phi: FunctionTable) -> float:
        values = phi.values
        return sum(values[pid] for pid in mu.support)

    return evaluate
