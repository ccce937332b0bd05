"""Command-line front end.

JSON goes in through files, reports come out as JSON on stdout with a
human summary on stderr. Exit codes: 0 all good, 1 a legitimate negative
outcome (failing suite, false membership check, too-coarse dense set),
2 malformed input.

Ground spaces may be supplied explicitly with ``--space FILE`` (required
whenever an operation needs coordinates); otherwise a coordinate-less
space is inferred per space id from the sorted union of point ids the
input files mention.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .errors import DenseSetTooCoarseError, MetricUnavailableError, ValidationError
from .functor import lift_toward, preimage_contains, pushforward, support_displacement
from .ground import GroundSpace
from .jsonio import (
    dense_from_dict,
    function_from_dict,
    load_json_file,
    map_from_dict,
    measure_from_dict,
    measure_to_dict,
    referenced_points,
    space_from_dict,
)
from .measures import combine
from .semiring import as_value
from .suites import DEFAULT_TRIALS, SUITES
from .weaktop import WeakNeighborhood, approximate_on_dense

DEFAULT_TOL = 1e-9


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True, indent=2))


def _info(message: str) -> None:
    print(message, file=sys.stderr)


def _resolve_tol(value: float | None) -> float:
    if value is not None:
        return value
    raw = os.environ.get("MAXPLUS_TOL")
    if raw is None:
        return DEFAULT_TOL
    try:
        return float(raw)
    except ValueError:
        raise ValidationError(f"MAXPLUS_TOL is not a number: {raw!r}") from None


def _load_registry(space_files) -> dict[str, GroundSpace]:
    registry: dict[str, GroundSpace] = {}
    for path in space_files or []:
        space = space_from_dict(load_json_file(path))
        if space.id in registry:
            raise ValidationError(f"space {space.id!r} supplied more than once")
        registry[space.id] = space
    return registry


def _merge_refs(*ref_dicts) -> dict[str, list[str]]:
    merged: dict[str, list[str]] = {}
    for refs in ref_dicts:
        for sid, pts in refs.items():
            merged.setdefault(sid, []).extend(pts)
    return merged


def _ensure_spaces(registry: dict[str, GroundSpace], refs: dict[str, list[str]]) -> None:
    for sid, pts in refs.items():
        if sid not in registry:
            if not pts:
                raise ValidationError(
                    f"cannot infer space {sid!r}: no points referenced; supply --space"
                )
            registry[sid] = GroundSpace(sid, sorted(set(pts)))


def _space_of(registry: dict[str, GroundSpace], obj, kind: str) -> GroundSpace:
    sid = obj.get("space") if isinstance(obj, dict) else None
    if not isinstance(sid, str):
        raise ValidationError(f"malformed {kind}: missing key 'space'")
    return registry[sid]


# --- handlers ---------------------------------------------------------------

def cmd_integrate(args) -> int:
    mobj = load_json_file(args.measure)
    fobj = load_json_file(args.function)
    registry = _load_registry(args.space)
    _ensure_spaces(registry, _merge_refs(
        referenced_points("measure", mobj), referenced_points("function", fobj)
    ))
    mu = measure_from_dict(mobj, _space_of(registry, mobj, "measure"))
    phi = function_from_dict(fobj, _space_of(registry, fobj, "function"))
    value = mu.integrate(phi)
    _emit({"integral": value.to_json()})
    _info(f"integral of the table against the measure: {value}")
    return 0


def cmd_pushforward(args) -> int:
    mapobj = load_json_file(args.map)
    mobj = load_json_file(args.measure)
    registry = _load_registry(args.space)
    _ensure_spaces(registry, _merge_refs(
        referenced_points("map", mapobj), referenced_points("measure", mobj)
    ))
    from_id = mapobj.get("from")
    to_id = mapobj.get("to")
    if not isinstance(from_id, str) or not isinstance(to_id, str):
        raise ValidationError("malformed map: missing 'from'/'to'")
    f = map_from_dict(mapobj, registry[from_id], registry[to_id])
    mu = measure_from_dict(mobj, _space_of(registry, mobj, "measure"))
    result = pushforward(f, mu)
    _emit(measure_to_dict(result))
    _info(f"pushforward onto {result.space_id!r}: {len(result)} atoms")
    return 0


def cmd_combine(args) -> int:
    m1obj = load_json_file(args.m1)
    m2obj = load_json_file(args.m2)
    registry = _load_registry(args.space)
    _ensure_spaces(registry, _merge_refs(
        referenced_points("measure", m1obj), referenced_points("measure", m2obj)
    ))
    mu1 = measure_from_dict(m1obj, _space_of(registry, m1obj, "measure"))
    mu2 = measure_from_dict(m2obj, _space_of(registry, m2obj, "measure"))
    result = combine(as_value(args.alpha), mu1, as_value(args.beta), mu2)
    _emit(measure_to_dict(result))
    _info(f"combination on {result.space_id!r}: {len(result)} atoms")
    return 0


def cmd_approx(args) -> int:
    mobj = load_json_file(args.measure)
    dobj = load_json_file(args.dense)
    tobj = load_json_file(args.tests)
    raw_tests = tobj.get("tests") if isinstance(tobj, dict) else tobj
    if not isinstance(raw_tests, list) or not raw_tests:
        raise ValidationError("malformed tests file: expected a nonempty list of function objects")
    registry = _load_registry(args.space)
    _ensure_spaces(registry, _merge_refs(
        referenced_points("measure", mobj),
        referenced_points("dense", dobj),
        *(referenced_points("function", t) for t in raw_tests),
    ))
    mu = measure_from_dict(mobj, _space_of(registry, mobj, "measure"))
    dense_sid, dense_pts = dense_from_dict(dobj)
    if dense_sid != mu.space_id:
        raise ValidationError(
            f"dense subset addresses space {dense_sid!r} but the measure"
            f" lives on {mu.space_id!r}"
        )
    tests = [function_from_dict(t, _space_of(registry, t, "function")) for t in raw_tests]
    nu = approximate_on_dense(mu, dense_pts, tests, args.eps)
    _emit(measure_to_dict(nu))
    worst = max(WeakNeighborhood(mu, tuple(tests), args.eps).discrepancies(nu))
    _info(f"approximation landed inside epsilon {args.eps}: worst discrepancy {worst}")
    return 0


def cmd_lift(args) -> int:
    mapobj = load_json_file(args.map)
    bobj = load_json_file(args.base)
    tobj = load_json_file(args.target)
    registry = _load_registry(args.space)
    _ensure_spaces(registry, _merge_refs(
        referenced_points("map", mapobj),
        referenced_points("measure", bobj),
        referenced_points("measure", tobj),
    ))
    from_id = mapobj.get("from")
    to_id = mapobj.get("to")
    if not isinstance(from_id, str) or not isinstance(to_id, str):
        raise ValidationError("malformed map: missing 'from'/'to'")
    f = map_from_dict(mapobj, registry[from_id], registry[to_id])
    base = measure_from_dict(bobj, _space_of(registry, bobj, "measure"))
    target = measure_from_dict(tobj, _space_of(registry, tobj, "measure"))
    lifted = lift_toward(f, base, target)
    _emit(measure_to_dict(lifted))
    try:
        moved = support_displacement(base, lifted)
        _info(f"lift onto {lifted.space_id!r}: {len(lifted)} atoms, displacement {moved}")
    except MetricUnavailableError:
        _info(f"lift onto {lifted.space_id!r}: {len(lifted)} atoms (no metric: earliest representatives)")
    return 0


def cmd_preimage_check(args) -> int:
    mapobj = load_json_file(args.map)
    nobj = load_json_file(args.nu)
    mobj = load_json_file(args.mu)
    registry = _load_registry(args.space)
    _ensure_spaces(registry, _merge_refs(
        referenced_points("map", mapobj),
        referenced_points("measure", nobj),
        referenced_points("measure", mobj),
    ))
    from_id = mapobj.get("from")
    to_id = mapobj.get("to")
    if not isinstance(from_id, str) or not isinstance(to_id, str):
        raise ValidationError("malformed map: missing 'from'/'to'")
    f = map_from_dict(mapobj, registry[from_id], registry[to_id])
    nu = measure_from_dict(nobj, _space_of(registry, nobj, "measure"))
    mu = measure_from_dict(mobj, _space_of(registry, mobj, "measure"))
    ok = preimage_contains(f, nu, mu, args.tol)
    _emit({"contains": ok, "tolerance": args.tol})
    _info(
        f"measure {'is' if ok else 'is NOT'} in the pushforward preimage"
        f" (tolerance {args.tol})"
    )
    return 0 if ok else 1


def cmd_check(args) -> int:
    suite = SUITES[args.suite]
    trials = args.trials if args.trials is not None else DEFAULT_TRIALS[args.suite]
    if trials < 1:
        raise ValidationError(f"trials must be at least 1, got {trials}")
    report = suite(trials=trials, seed=args.seed, tol=args.tol)
    _emit(report.to_json_dict())
    _info(report.human_summary())
    return 0 if report.passed else 1


# --- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="maxplus",
        description=(
            "Finite-support idempotent probability measures over the"
            " max-plus semiring: integration, pushforward, convex"
            " combination, dense approximation, lifting, and property suites."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_space_option(p):
        p.add_argument(
            "--space",
            action="append",
            metavar="FILE",
            help="ground-space JSON (repeatable); omitted spaces are inferred without coordinates",
        )

    p = sub.add_parser("integrate", help="Maslov integral of a function table against a measure")
    p.add_argument("--measure", required=True, metavar="FILE")
    p.add_argument("--function", required=True, metavar="FILE")
    add_space_option(p)
    p.set_defaults(func=cmd_integrate)

    p = sub.add_parser("pushforward", help="transport a measure along a point map")
    p.add_argument("--map", required=True, metavar="FILE")
    p.add_argument("--measure", required=True, metavar="FILE")
    add_space_option(p)
    p.set_defaults(func=cmd_pushforward)

    p = sub.add_parser("combine", help="max-plus convex combination of two measures")
    p.add_argument("--alpha", required=True, type=float, help="first coefficient (-inf allowed)")
    p.add_argument("--beta", required=True, type=float, help="second coefficient (-inf allowed)")
    p.add_argument("--m1", required=True, metavar="FILE")
    p.add_argument("--m2", required=True, metavar="FILE")
    add_space_option(p)
    p.set_defaults(func=cmd_combine)

    p = sub.add_parser("approx", help="approximate a measure on a designated dense subset")
    p.add_argument("--measure", required=True, metavar="FILE")
    p.add_argument("--dense", required=True, metavar="FILE")
    p.add_argument("--tests", required=True, metavar="FILE")
    p.add_argument("--eps", required=True, type=float)
    add_space_option(p)
    p.set_defaults(func=cmd_approx)

    p = sub.add_parser("lift", help="lift a target measure through a map, staying near a base measure")
    p.add_argument("--map", required=True, metavar="FILE")
    p.add_argument("--base", required=True, metavar="FILE")
    p.add_argument("--target", required=True, metavar="FILE")
    add_space_option(p)
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("preimage-check", help="test membership in a pushforward preimage")
    p.add_argument("--map", required=True, metavar="FILE")
    p.add_argument("--nu", required=True, metavar="FILE")
    p.add_argument("--mu", required=True, metavar="FILE")
    p.add_argument("--tol", type=float, default=None, help="comparison tolerance (default: MAXPLUS_TOL or 1e-9)")
    add_space_option(p)
    p.set_defaults(func=cmd_preimage_check)

    p = sub.add_parser("check", help="run a seeded property suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--trials", type=int, default=None, help="trial count (default: per-suite)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=None, help="comparison tolerance (default: MAXPLUS_TOL or 1e-9)")
    p.set_defaults(func=cmd_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if hasattr(args, "tol"):
        try:
            args.tol = _resolve_tol(args.tol)
        except ValidationError as exc:
            _info(f"error: {exc}")
            return 2
    try:
        return args.func(args)
    except ValidationError as exc:
        _info(f"error: {exc}")
        return 2
    except DenseSetTooCoarseError as exc:
        _info(f"error: {exc}")
        return 1


if __name__ == "__main__":
    sys.exit(main())
