"""JSON schemas for spaces, tables, maps, measures, and neighborhoods.

Wire formats:

* space        ``{"id": "X", "points": [{"id": "a", "coords": [0.5, 0.5]}, ...]}``
  (``coords`` optional, but all points of a space must agree on having it)
* function     ``{"space": "X", "values": {"a": 2.0, ...}}``
* map          ``{"from": "X", "to": "Y", "assign": {"a": "u", ...}}``
* measure      ``{"space": "X", "atoms": [{"point": "a", "weight": 0.0}, ...]}``
  (weights are numbers or the string ``"-inf"``, which is trimmed away)
* dense subset ``{"space": "X", "points": ["g0", "g1", ...]}``
* neighborhood ``{"center": <measure>, "tests": [<function>, ...], "epsilon": 0.1}``

Schema problems raise :class:`~maxplus.errors.ValidationError` with the
offending key in the message.
"""

from __future__ import annotations

import json
from typing import Any

from .errors import ValidationError
from .ground import FunctionTable, GroundSpace, Point, PointMap
from .measures import IdempotentMeasure, make_measure
from .semiring import MaxPlusValue
from .weaktop import WeakNeighborhood


def load_json_file(path: str) -> Any:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ValidationError(f"cannot read {path!r}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ValidationError(f"invalid JSON in {path!r}: {exc}") from exc


def _require(obj: Any, key: str, kind: str) -> Any:
    if not isinstance(obj, dict):
        raise ValidationError(f"malformed {kind}: expected an object, got {type(obj).__name__}")
    if key not in obj:
        raise ValidationError(f"malformed {kind}: missing key {key!r}")
    return obj[key]


# --- spaces ---------------------------------------------------------------

def space_from_dict(obj: Any) -> GroundSpace:
    space_id = _require(obj, "id", "space")
    raw_points = _require(obj, "points", "space")
    if not isinstance(raw_points, list):
        raise ValidationError("malformed space: 'points' must be a list")
    points = []
    for entry in raw_points:
        pid = _require(entry, "id", "space point")
        coords = entry.get("coords")
        if coords is not None and not isinstance(coords, list):
            raise ValidationError(f"malformed space point {pid!r}: 'coords' must be a list")
        points.append(Point(str(pid), tuple(float(c) for c in coords) if coords is not None else None))
    return GroundSpace(str(space_id), points)


def space_to_dict(space: GroundSpace) -> dict:
    points = []
    for p in space.points:
        entry: dict[str, Any] = {"id": p.id}
        if p.coords is not None:
            entry["coords"] = list(p.coords)
        points.append(entry)
    return {"id": space.id, "points": points}


# --- function tables ------------------------------------------------------

def function_from_dict(obj: Any, space: GroundSpace) -> FunctionTable:
    space_id = _require(obj, "space", "function")
    if space_id != space.id:
        raise ValidationError(
            f"function addresses space {space_id!r} but was resolved against {space.id!r}"
        )
    values = _require(obj, "values", "function")
    if not isinstance(values, dict):
        raise ValidationError("malformed function: 'values' must be an object")
    try:
        parsed = {str(k): float(v) for k, v in values.items()}
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"malformed function: non-numeric value ({exc})") from exc
    return FunctionTable(space, parsed)


def function_to_dict(phi: FunctionTable) -> dict:
    return {"space": phi.space_id, "values": dict(phi.values)}


# --- point maps -----------------------------------------------------------

def map_from_dict(obj: Any, source: GroundSpace, target: GroundSpace) -> PointMap:
    from_id = _require(obj, "from", "map")
    to_id = _require(obj, "to", "map")
    if from_id != source.id or to_id != target.id:
        raise ValidationError(
            f"map addresses {from_id!r} -> {to_id!r} but was resolved against"
            f" {source.id!r} -> {target.id!r}"
        )
    assign = _require(obj, "assign", "map")
    if not isinstance(assign, dict):
        raise ValidationError("malformed map: 'assign' must be an object")
    return PointMap(source, target, {str(k): str(v) for k, v in assign.items()})


def map_to_dict(f: PointMap) -> dict:
    return {"from": f.from_space, "to": f.to_space, "assign": dict(f.assign)}


# --- measures ---------------------------------------------------------------

def measure_from_dict(obj: Any, space: GroundSpace, normalize: bool = False) -> IdempotentMeasure:
    space_id = _require(obj, "space", "measure")
    if space_id != space.id:
        raise ValidationError(
            f"measure addresses space {space_id!r} but was resolved against {space.id!r}"
        )
    atoms = _require(obj, "atoms", "measure")
    if not isinstance(atoms, list):
        raise ValidationError("malformed measure: 'atoms' must be a list")
    pairs = []
    for entry in atoms:
        point = _require(entry, "point", "measure atom")
        weight = _require(entry, "weight", "measure atom")
        pairs.append((str(point), MaxPlusValue.from_json(weight)))
    return make_measure(space, pairs, normalize=normalize)


def measure_to_dict(mu: IdempotentMeasure) -> dict:
    return {
        "space": mu.space_id,
        "atoms": [{"point": pid, "weight": w} for pid, w in mu.atoms()],
    }


# --- dense subsets and neighborhoods ---------------------------------------

def dense_from_dict(obj: Any) -> tuple[str, list[str]]:
    space_id = _require(obj, "space", "dense subset")
    points = _require(obj, "points", "dense subset")
    if not isinstance(points, list):
        raise ValidationError("malformed dense subset: 'points' must be a list")
    return str(space_id), [str(p) for p in points]


def neighborhood_from_dict(obj: Any, space: GroundSpace) -> WeakNeighborhood:
    center = measure_from_dict(_require(obj, "center", "neighborhood"), space)
    raw_tests = _require(obj, "tests", "neighborhood")
    if not isinstance(raw_tests, list):
        raise ValidationError("malformed neighborhood: 'tests' must be a list")
    tests = tuple(function_from_dict(t, space) for t in raw_tests)
    epsilon = _require(obj, "epsilon", "neighborhood")
    try:
        eps = float(epsilon)
    except (TypeError, ValueError) as exc:
        raise ValidationError("malformed neighborhood: 'epsilon' must be a number") from exc
    return WeakNeighborhood(center, tests, eps)


def neighborhood_to_dict(nbhd: WeakNeighborhood) -> dict:
    return {
        "center": measure_to_dict(nbhd.center),
        "tests": [function_to_dict(t) for t in nbhd.tests],
        "epsilon": nbhd.epsilon,
    }


# --- space inference for files that only name their space -------------------

def referenced_points(kind: str, obj: Any) -> dict[str, list[str]]:
    """Point ids each space id must contain for the object to make sense.

    Used to infer coordinate-less spaces when no space file is supplied:
    the inferred space is the sorted union of every id referenced under
    that space id.
    """
    refs: dict[str, list[str]] = {}
    if kind == "function":
        values = _require(obj, "values", "function")
        refs[str(_require(obj, "space", "function"))] = [str(k) for k in values]
    elif kind == "measure":
        atoms = _require(obj, "atoms", "measure")
        refs[str(_require(obj, "space", "measure"))] = [
            str(_require(a, "point", "measure atom")) for a in atoms
        ]
    elif kind == "map":
        assign = _require(obj, "assign", "map")
        from_id = str(_require(obj, "from", "map"))
        to_id = str(_require(obj, "to", "map"))
        refs.setdefault(from_id, []).extend(str(k) for k in assign)
        refs.setdefault(to_id, []).extend(str(v) for v in assign.values())
    elif kind == "dense":
        space_id, points = dense_from_dict(obj)
        refs[space_id] = points
    else:
        raise ValueError(f"unknown schema kind {kind!r}")
    return refs
