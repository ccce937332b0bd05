"""Finite ground models.

A ``GroundSpace`` is an ordered finite point set, optionally embedded in
Euclidean space; a ``FunctionTable`` is a total real-valued table on a
space (totality stands in for continuity on a finite discrete model);
a ``PointMap`` is a total point-to-point map between spaces. All three
are immutable after construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence, Union

from .errors import (
    EmptyFiberError,
    MetricUnavailableError,
    SpaceMismatchError,
    UnknownPointError,
    ValidationError,
)

PointLike = Union["Point", str, tuple]


@dataclass(frozen=True)
class Point:
    id: str
    coords: tuple[float, ...] | None = None


class GroundSpace:
    """Ordered finite point set with optional coordinates.

    Point ids must be unique; coordinates, when present, must be carried
    by every point, have a common dimension, and be pairwise distinct
    (so the Euclidean distance separates points).
    """

    def __init__(self, space_id: str, points: Iterable[PointLike]):
        self._id = str(space_id)
        normalized: list[Point] = []
        for entry in points:
            if isinstance(entry, Point):
                p = entry
            elif isinstance(entry, str):
                p = Point(entry)
            else:
                pid, coords = entry
                p = Point(str(pid), _as_coords(coords))
            if p.coords is not None:
                p = Point(p.id, _as_coords(p.coords))
            normalized.append(p)
        if not normalized:
            raise ValidationError(f"space {space_id!r} must contain at least one point")

        index: dict[str, int] = {}
        for i, p in enumerate(normalized):
            if p.id in index:
                raise ValidationError(f"duplicate point id {p.id!r} in space {space_id!r}")
            index[p.id] = i

        with_coords = [p for p in normalized if p.coords is not None]
        if with_coords and len(with_coords) != len(normalized):
            raise ValidationError(
                f"space {space_id!r}: either every point carries coordinates or none does"
            )
        if with_coords:
            dims = {len(p.coords) for p in with_coords}
            if len(dims) != 1:
                raise ValidationError(f"space {space_id!r}: mixed coordinate dimensions {sorted(dims)}")
            seen: dict[tuple[float, ...], str] = {}
            for p in with_coords:
                if p.coords in seen:
                    raise ValidationError(
                        f"space {space_id!r}: points {seen[p.coords]!r} and {p.id!r}"
                        f" share coordinates {p.coords}"
                    )
                seen[p.coords] = p.id

        self._points = tuple(normalized)
        self._index = index
        self._id_set = frozenset(index)
        self._coords = (
            {p.id: p.coords for p in normalized} if with_coords else None
        )

    @property
    def id(self) -> str:
        return self._id

    @property
    def points(self) -> tuple[Point, ...]:
        return self._points

    @property
    def point_ids(self) -> tuple[str, ...]:
        return tuple(p.id for p in self._points)

    @property
    def has_coords(self) -> bool:
        return self._coords is not None

    def __len__(self) -> int:
        return len(self._points)

    def __contains__(self, point_id: object) -> bool:
        return point_id in self._index

    def index(self, point_id: str) -> int:
        try:
            return self._index[point_id]
        except KeyError:
            raise UnknownPointError(point_id, self._id) from None

    def coords(self, point_id: str) -> tuple[float, ...]:
        if self._coords is None:
            raise MetricUnavailableError(f"metric unavailable: space {self._id!r} has no coordinates")
        try:
            return self._coords[point_id]
        except KeyError:
            raise UnknownPointError(point_id, self._id) from None

    def ordered(self, point_ids: Iterable[str]) -> list[str]:
        """Sort the given ids by their position in the space (validates membership)."""
        return sorted(point_ids, key=self.index)

    def __repr__(self) -> str:
        return f"GroundSpace({self._id!r}, {len(self._points)} points)"


def _as_coords(coords: Sequence[float] | None) -> tuple[float, ...] | None:
    if coords is None:
        return None
    out = tuple(float(c) for c in coords)
    if not out:
        raise ValidationError("coordinates must be non-empty when present")
    if not all(math.isfinite(c) for c in out):
        raise ValidationError(f"coordinates must be finite, got {out}")
    return out


def distance(space: GroundSpace, x: str, y: str) -> float:
    """Euclidean distance between two points of a coordinate-carrying space."""
    return math.dist(space.coords(x), space.coords(y))


class FunctionTable:
    """Total real-valued function on a ground space."""

    def __init__(self, space: GroundSpace, values: Mapping[str, float]):
        if values.keys() != space._id_set:
            missing = space._id_set - values.keys()
            extra = values.keys() - space._id_set
            raise ValidationError(
                f"function table on space {space.id!r} is not total:"
                f" missing {sorted(missing)}, extraneous {sorted(extra)}"
            )
        vals = {p: float(values[p]) for p in space.point_ids}
        if not all(math.isfinite(v) for v in vals.values()):
            raise ValidationError(f"function table on space {space.id!r} has non-finite values")
        self._space = space
        self._values = vals

    @classmethod
    def _trusted(cls, space: GroundSpace, values: dict[str, float]) -> FunctionTable:
        # internal fast path: caller guarantees totality and finiteness
        obj = cls.__new__(cls)
        obj._space = space
        obj._values = values
        return obj

    @property
    def space(self) -> GroundSpace:
        return self._space

    @property
    def space_id(self) -> str:
        return self._space.id

    @property
    def values(self) -> Mapping[str, float]:
        return MappingProxyType(self._values)

    def __call__(self, point_id: str) -> float:
        try:
            return self._values[point_id]
        except KeyError:
            raise UnknownPointError(point_id, self.space_id) from None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FunctionTable):
            return NotImplemented
        return self.space_id == other.space_id and self._values == other._values

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"FunctionTable({self.space_id!r}, {len(self._values)} values)"


def constant_table(space: GroundSpace, value: float) -> FunctionTable:
    """The constant function table with the given finite value."""
    v = float(value)
    if not math.isfinite(v):
        raise ValidationError(f"constant table value must be finite, got {value!r}")
    return FunctionTable._trusted(space, {p: v for p in space.point_ids})


def shift(phi: FunctionTable, value: float) -> FunctionTable:
    """The table phi + value (max-plus scalar multiple of phi)."""
    v = float(value)
    if not math.isfinite(v):
        raise ValidationError(f"shift value must be finite, got {value!r}")
    return FunctionTable._trusted(phi.space, {p: w + v for p, w in phi._values.items()})


def pointwise_max(phi: FunctionTable, psi: FunctionTable) -> FunctionTable:
    """The pointwise maximum of two tables on the same space."""
    if phi.space_id != psi.space_id:
        raise SpaceMismatchError(
            f"pointwise max across spaces {phi.space_id!r} and {psi.space_id!r}"
        )
    pv, sv = phi._values, psi._values
    return FunctionTable._trusted(
        phi.space, {p: v if v >= sv[p] else sv[p] for p, v in pv.items()}
    )


class PointMap:
    """Total map between the points of two ground spaces."""

    def __init__(self, source: GroundSpace, target: GroundSpace, assign: Mapping[str, str]):
        if assign.keys() != source._id_set:
            missing = source._id_set - assign.keys()
            extra = assign.keys() - source._id_set
            raise ValidationError(
                f"map from {source.id!r} is not total: missing {sorted(missing)},"
                f" extraneous {sorted(extra)}"
            )
        fibers: dict[str, list[str]] = {t: [] for t in target.point_ids}
        for x in source.point_ids:
            y = assign[x]
            if y not in fibers:
                raise UnknownPointError(y, target.id)
            fibers[y].append(x)
        self._source = source
        self._target = target
        self._assign = {x: assign[x] for x in source.point_ids}
        self._fibers = {y: tuple(xs) for y, xs in fibers.items()}
        self._image = frozenset(y for y, xs in self._fibers.items() if xs)

    @property
    def source(self) -> GroundSpace:
        return self._source

    @property
    def target(self) -> GroundSpace:
        return self._target

    @property
    def from_space(self) -> str:
        return self._source.id

    @property
    def to_space(self) -> str:
        return self._target.id

    @property
    def assign(self) -> Mapping[str, str]:
        return MappingProxyType(self._assign)

    @property
    def image(self) -> frozenset[str]:
        return self._image

    @property
    def is_surjective(self) -> bool:
        return len(self._image) == len(self._target)

    def __call__(self, point_id: str) -> str:
        try:
            return self._assign[point_id]
        except KeyError:
            raise UnknownPointError(point_id, self.from_space) from None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PointMap):
            return NotImplemented
        return (
            self.from_space == other.from_space
            and self.to_space == other.to_space
            and self._assign == other._assign
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"PointMap({self.from_space!r} -> {self.to_space!r})"


def fiber(f: PointMap, y: str) -> frozenset[str]:
    """The preimage of a target point: all source points mapping onto it."""
    try:
        return frozenset(f._fibers[y])
    except KeyError:
        raise UnknownPointError(y, f.to_space) from None


def fiber_points(f: PointMap, y: str) -> tuple[str, ...]:
    """Like :func:`fiber` but in source order (deterministic iteration)."""
    try:
        return f._fibers[y]
    except KeyError:
        raise UnknownPointError(y, f.to_space) from None


def compose(g: PointMap, f: PointMap) -> PointMap:
    """The composite map ``g after f``."""
    if f.to_space != g.from_space:
        raise SpaceMismatchError(
            f"cannot compose: {f!r} lands in {f.to_space!r}, {g!r} starts at {g.from_space!r}"
        )
    return PointMap(f.source, g.target, {x: g._assign[y] for x, y in f._assign.items()})


def identity_map(space: GroundSpace) -> PointMap:
    return PointMap(space, space, {p: p for p in space.point_ids})


def pullback(phi: FunctionTable, f: PointMap) -> FunctionTable:
    """The composite table ``phi after f`` on the source space of f."""
    if phi.space_id != f.to_space:
        raise SpaceMismatchError(
            f"pullback: table on {phi.space_id!r} does not match map target {f.to_space!r}"
        )
    values = phi._values
    return FunctionTable._trusted(f.source, {x: values[y] for x, y in f._assign.items()})


def require_nonempty_fiber(f: PointMap, y: str) -> tuple[str, ...]:
    pts = fiber_points(f, y)
    if not pts:
        raise EmptyFiberError(f"undefined on non-image point {y!r} of space {f.to_space!r}")
    return pts


def uniform_grid_1d(space_id: str, n: int, lo: float = 0.0, hi: float = 1.0) -> GroundSpace:
    """n equally spaced points on [lo, hi], ids ``g0`` .. ``g{n-1}``."""
    if n < 2:
        raise ValidationError("1-D grid needs at least two points")
    pitch = (hi - lo) / (n - 1)
    return GroundSpace(space_id, [(f"g{i}", (lo + i * pitch,)) for i in range(n)])


def uniform_grid_2d(space_id: str, n: int, lo: float = 0.0, hi: float = 1.0) -> GroundSpace:
    """n-by-n grid on [lo, hi]^2, row-major ids ``g{i}_{j}``."""
    if n < 2:
        raise ValidationError("2-D grid needs at least two points per side")
    pitch = (hi - lo) / (n - 1)
    pts = [
        (f"g{i}_{j}", (lo + i * pitch, lo + j * pitch))
        for i in range(n)
        for j in range(n)
    ]
    return GroundSpace(space_id, pts)
