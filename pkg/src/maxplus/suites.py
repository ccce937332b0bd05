"""Seeded property suites behind ``check``.

Each suite draws every trial from its own generator seeded by (master
seed, trial index), so single trials replay independently and results
never depend on execution order. Reports carry one record per failed
check with an input digest sufficient to reproduce the trial.

Wall-clock time is kept on the report object for human summaries but
deliberately left out of the JSON rendering, which must be byte-stable
across runs.
"""

from __future__ import annotations

import hashlib
import json
import math
import time
from dataclasses import dataclass, field

from .errors import DenseSetTooCoarseError
from .functor import (
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
    PointMap,
    compose,
    constant_table,
    fiber_points,
    identity_map,
    pullback,
    uniform_grid_1d,
    uniform_grid_2d,
)
from .kappametric import (
    check_kappa_axioms,
    constant_candidate,
    distance_candidate,
    squared_distance_candidate,
)
from .measures import (
    IdempotentMeasure,
    check_axioms,
    combine,
    min_plus_functional,
    sum_functional,
)
from .rng import choose, rand_int, rand_uniform, subset, trial_rng
from .semiring import NEG_INF, MaxPlusValue
from .weaktop import WeakNeighborhood, approximate_on_dense


@dataclass
class SuiteReport:
    """Outcome of one suite run.

    ``failures`` is empty exactly when the suite passed; each record
    identifies the trial, the master seed, the check that failed, and a
    digest of the inputs for replay.
    """

    suite: str
    trials: int
    failures: list = field(default_factory=list)
    details: dict = field(default_factory=dict)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json_dict(self) -> dict:
        # wall_time intentionally omitted: the JSON report is byte-stable
        return {
            "suite": self.suite,
            "trials": self.trials,
            "pass": self.passed,
            "failures": self.failures,
            "details": self.details,
        }

    def human_summary(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return (
            f"suite {self.suite}: {self.trials} trials,"
            f" {len(self.failures)} failures, {verdict} ({self.wall_time:.2f}s)"
        )


def _digest(obj) -> str:
    blob = json.dumps(obj, sort_keys=True, default=str).encode("utf-8")
    return hashlib.sha256(blob).hexdigest()[:16]


def _failure(trial: int, seed: int, check: str, inputs, expected, actual) -> dict:
    return {
        "trial": trial,
        "seed": seed,
        "check": check,
        "inputs": _digest(inputs),
        "expected": str(expected),
        "actual": str(actual),
    }


def _plain_space(space_id: str, size: int) -> GroundSpace:
    return GroundSpace(space_id, [f"p{i}" for i in range(size)])


def _random_measure(rng, space: GroundSpace, max_atoms: int = 8) -> IdempotentMeasure:
    pids = list(space.point_ids)
    k = rand_int(rng, 1, min(max_atoms, len(pids)))
    support = subset(rng, pids, k)
    weights = {p: -rand_uniform(rng, 0.0, 10.0) for p in support}
    weights[choose(rng, support)] = 0.0
    return IdempotentMeasure(space, weights)


def _random_table(rng, space: GroundSpace, lo: float = -10.0, hi: float = 10.0) -> FunctionTable:
    pids = space.point_ids
    row = rng.uniform(lo, hi, len(pids)).tolist()
    return FunctionTable._trusted(space, dict(zip(pids, row)))


def _random_map(rng, source: GroundSpace, target: GroundSpace) -> PointMap:
    tpids = list(target.point_ids)
    return PointMap(source, target, {x: choose(rng, tpids) for x in source.point_ids})


def _random_surjective_map(rng, source: GroundSpace, target: GroundSpace) -> PointMap:
    spids = list(source.point_ids)
    tpids = list(target.point_ids)
    assign = {x: choose(rng, tpids) for x in spids}
    chosen = rng.choice(len(spids), size=len(tpids), replace=False)
    for y, i in zip(tpids, chosen):
        assign[spids[int(i)]] = y
    return PointMap(source, target, assign)


def _measure_dict(mu: IdempotentMeasure) -> dict:
    return {"space": mu.space_id, "atoms": dict(mu.atoms())}


# --- axioms ----------------------------------------------------------------

def run_axioms(trials: int = 1000, seed: int = 0, tol: float = 1e-12) -> SuiteReport:
    """Norm, homogeneity, max-additivity, and order preservation.

    Random normalized measures (support 1-8, weights in [-10, 0]) are
    probed with 100 random function tables each; the integral must obey
    all four laws within tol. Two counterfeit functionals (min-plus and
    summation) are then fed to the black-box checker and must be
    rejected.
    """
    started = time.perf_counter()
    report = SuiteReport("axioms", trials)
    space = _plain_space("A", 10)
    pids = space.point_ids
    n = len(pids)
    inner = 100

    for t in range(trials):
        rng = trial_rng(seed, t)
        mu = _random_measure(rng, space)
        phis = rng.uniform(-10.0, 10.0, (inner, n)).tolist()
        psis = rng.uniform(-10.0, 10.0, (inner, n)).tolist()
        lams = rng.uniform(-5.0, 5.0, inner).tolist()
        etas = rng.uniform(0.0, 5.0, (inner, n)).tolist()
        inputs = {"measure": _measure_dict(mu), "trial": t}

        for i in range(inner):
            phi_row = phis[i]
            psi_row = psis[i]
            lam = lams[i]
            phi = FunctionTable._trusted(space, dict(zip(pids, phi_row)))
            psi = FunctionTable._trusted(space, dict(zip(pids, psi_row)))

            got = mu.integrate(constant_table(space, lam)).as_float()
            if not abs(got - lam) <= tol:
                report.failures.append(
                    _failure(t, seed, "norm", inputs, lam, got)
                )
                break

            m_phi = mu.integrate(phi).as_float()
            shifted = FunctionTable._trusted(
                space, {p: v + lam for p, v in zip(pids, phi_row)}
            )
            got = mu.integrate(shifted).as_float()
            if not abs(got - (m_phi + lam)) <= tol:
                report.failures.append(
                    _failure(t, seed, "homogeneity", inputs, m_phi + lam, got)
                )
                break

            m_psi = mu.integrate(psi).as_float()
            joined = FunctionTable._trusted(
                space, {p: a if a >= b else b for p, a, b in zip(pids, phi_row, psi_row)}
            )
            got = mu.integrate(joined).as_float()
            want = max(m_phi, m_psi)
            if not abs(got - want) <= tol:
                report.failures.append(
                    _failure(t, seed, "max-additivity", inputs, want, got)
                )
                break

            above = FunctionTable._trusted(
                space, {p: a + e for p, a, e in zip(pids, phi_row, etas[i])}
            )
            got = mu.integrate(above).as_float()
            if not got >= m_phi - tol:
                report.failures.append(
                    _failure(t, seed, "order-preservation", inputs, f">= {m_phi}", got)
                )
                break

    witness = _plain_space("B", 2)
    flat = IdempotentMeasure(witness, {"p0": 0.0, "p1": 0.0})
    two = IdempotentMeasure(witness, {"p0": 0.0, "p1": -1.0})
    min_plus = check_axioms(
        min_plus_functional(flat), witness, 1000, seed, tol, name="min-plus"
    )
    summation = check_axioms(
        sum_functional(two), witness, 1000, seed, tol, name="summation"
    )
    report.details["counterfeits"] = {
        "min_plus": min_plus.as_dict(),
        "summation": summation.as_dict(),
    }
    if min_plus.passed:
        report.failures.append(
            _failure(-1, seed, "counterfeit-min-plus", {"name": "min-plus"},
                     "rejected", "passed all trials")
        )
    if summation.passed:
        report.failures.append(
            _failure(-1, seed, "counterfeit-summation", {"name": "summation"},
                     "rejected", "passed all trials")
        )
    report.details["inner_tables_per_measure"] = inner
    report.wall_time = time.perf_counter() - started
    return report


# --- functoriality -----------------------------------------------------------

def run_functor(trials: int = 500, seed: int = 0, tol: float = 1e-12) -> SuiteReport:
    """Identity and composition laws, support image, and duality.

    Random chains X -> Y -> Z with spaces of up to 12 points; identity
    and composition must hold atom-exactly, the pushforward support must
    equal the set-image of the support, and integrating against the
    image measure must agree with integrating the pulled-back table.
    """
    started = time.perf_counter()
    report = SuiteReport("functor", trials)
    by_check = {"identity": 0, "composition": 0, "support_image": 0, "duality": 0}

    for t in range(trials):
        rng = trial_rng(seed, t)
        sx = _plain_space(f"X{t}", rand_int(rng, 2, 12))
        sy = _plain_space(f"Y{t}", rand_int(rng, 2, 12))
        sz = _plain_space(f"Z{t}", rand_int(rng, 2, 12))
        f = _random_map(rng, sx, sy)
        g = _random_map(rng, sy, sz)
        mu = _random_measure(rng, sx)
        inputs = {
            "trial": t,
            "f": dict(f.assign),
            "g": dict(g.assign),
            "measure": _measure_dict(mu),
        }

        if pushforward(identity_map(sx), mu) != mu:
            by_check["identity"] += 1
            report.failures.append(
                _failure(t, seed, "identity", inputs, "mu", "changed by identity pushforward")
            )

        direct = pushforward(compose(g, f), mu)
        staged = pushforward(g, pushforward(f, mu))
        if direct != staged:
            by_check["composition"] += 1
            report.failures.append(
                _failure(t, seed, "composition", inputs,
                         _measure_dict(direct), _measure_dict(staged))
            )

        if not (support_image_check(f, mu) and support_image_check(compose(g, f), mu)):
            by_check["support_image"] += 1
            report.failures.append(
                _failure(t, seed, "support_image", inputs,
                         "support equals image of support", "mismatch")
            )

        image_mu = pushforward(f, mu)
        for _ in range(3):
            phi = _random_table(rng, sy)
            lhs = image_mu.integrate(phi).as_float()
            rhs = mu.integrate(pullback(phi, f)).as_float()
            if not abs(lhs - rhs) <= tol:
                by_check["duality"] += 1
                report.failures.append(
                    _failure(t, seed, "duality", inputs, rhs, lhs)
                )
                break

    report.details["failures_by_check"] = by_check
    report.wall_time = time.perf_counter() - started
    return report


# --- convexity of pushforward preimages --------------------------------------

_COEFF_CASES = ("both-zero", "beta-negative", "alpha-negative", "alpha-bottom", "beta-bottom")


def run_convexity(trials: int = 500, seed: int = 0, tol: float = 0.0) -> SuiteReport:
    """Max-plus convexity of pushforward preimages, plus support laws.

    Two sampled preimages of a random target measure are combined with
    admissible coefficients (cycling through both-finite and bottom
    cases); the combination must push forward to the target atom-exactly,
    its support must sit inside the union of the two supports (with
    equality when both coefficients are finite), and the support size is
    bounded by the sum of the two sizes.
    """
    started = time.perf_counter()
    report = SuiteReport("convexity", trials)
    by_check = {
        "preimage": 0,
        "support_subset": 0,
        "support_union": 0,
        "cardinality": 0,
    }

    for t in range(trials):
        rng = trial_rng(seed, t)
        sx = _plain_space(f"X{t}", rand_int(rng, 2, 12))
        sy = _plain_space(f"Y{t}", rand_int(rng, 1, 12))
        f = _random_map(rng, sx, sy)
        image = [y for y in sy.point_ids if y in f.image]
        k = rand_int(rng, 1, min(8, len(image)))
        support = subset(rng, image, k)
        weights = {p: -rand_uniform(rng, 0.0, 10.0) for p in support}
        weights[choose(rng, support)] = 0.0
        nu = IdempotentMeasure(sy, weights)

        mu1 = sample_preimage(f, nu, rand_int(rng, 0, 2**31 - 1))
        mu2 = sample_preimage(f, nu, rand_int(rng, 0, 2**31 - 1))

        case = _COEFF_CASES[t % len(_COEFF_CASES)]
        if case == "both-zero":
            alpha, beta = MaxPlusValue(0.0), MaxPlusValue(0.0)
        elif case == "beta-negative":
            alpha, beta = MaxPlusValue(0.0), MaxPlusValue(-rand_uniform(rng, 0.1, 8.0))
        elif case == "alpha-negative":
            alpha, beta = MaxPlusValue(-rand_uniform(rng, 0.1, 8.0)), MaxPlusValue(0.0)
        elif case == "alpha-bottom":
            alpha, beta = NEG_INF, MaxPlusValue(0.0)
        else:
            alpha, beta = MaxPlusValue(0.0), NEG_INF
        combo = combine(alpha, mu1, beta, mu2)

        inputs = {
            "trial": t,
            "f": dict(f.assign),
            "nu": _measure_dict(nu),
            "mu1": _measure_dict(mu1),
            "mu2": _measure_dict(mu2),
            "case": case,
        }

        if not preimage_contains(f, nu, combo, tol):
            by_check["preimage"] += 1
            report.failures.append(
                _failure(t, seed, "preimage", inputs,
                         _measure_dict(nu), _measure_dict(pushforward(f, combo)))
            )

        union = set(mu1.support) | set(mu2.support)
        combo_support = set(combo.support)
        if not combo_support <= union:
            by_check["support_subset"] += 1
            report.failures.append(
                _failure(t, seed, "support_subset", inputs,
                         sorted(union), sorted(combo_support))
            )
        if case in ("both-zero", "beta-negative", "alpha-negative") and combo_support != union:
            by_check["support_union"] += 1
            report.failures.append(
                _failure(t, seed, "support_union", inputs,
                         sorted(union), sorted(combo_support))
            )
        if not len(combo) <= len(mu1) + len(mu2):
            by_check["cardinality"] += 1
            report.failures.append(
                _failure(t, seed, "cardinality", inputs,
                         f"<= {len(mu1) + len(mu2)}", len(combo))
            )

    report.details["failures_by_check"] = by_check
    report.details["coefficient_cases"] = list(_COEFF_CASES)
    report.wall_time = time.perf_counter() - started
    return report


# --- density of dense-supported measures --------------------------------------

def _lipschitz_table(rng, space: GroundSpace, grid_ids, grid_coords, atom_ids) -> FunctionTable:
    """A random 1-Lipschitz table: a bounded-step walk on the grid,
    extended to off-grid points by the tightest 1-Lipschitz extension."""
    n = len(grid_ids)
    pitch = grid_coords[1] - grid_coords[0]
    steps = rng.uniform(-pitch, pitch, n - 1).tolist()
    values = {}
    v = rand_uniform(rng, -5.0, 5.0)
    values[grid_ids[0]] = v
    for g, s in zip(grid_ids[1:], steps):
        v = v + s
        values[g] = v
    for a in atom_ids:
        c = space.coords(a)[0]
        values[a] = min(values[g] + abs(c - x) for g, x in zip(grid_ids, grid_coords))
    return FunctionTable._trusted(space, {p: values[p] for p in space.point_ids})


def run_density(trials: int = 200, seed: int = 0, tol: float = 1e-12) -> SuiteReport:
    """Dense-subset approximation at grid scale.

    Measures supported off a 101-point grid of [0, 1] are approximated
    on the grid against up to five random 1-Lipschitz test tables with
    epsilon alternating between 0.1 and 0.01 — both above the resolution
    threshold L/(2(N-1)) = 0.005, so every trial must land strictly
    inside the neighborhood. One deliberately under-resolved call
    (epsilon 0.001, atom mid-cell) must fail with a coarseness error.
    """
    started = time.perf_counter()
    report = SuiteReport("density", trials)
    n_grid = 101
    epsilons = (0.1, 0.01)
    pitch = 1.0 / (n_grid - 1)
    grid_ids = tuple(f"g{i}" for i in range(n_grid))
    grid_coords = tuple(i * pitch for i in range(n_grid))

    for t in range(trials):
        rng = trial_rng(seed, t)
        s = rand_int(rng, 1, 8)
        used = set(grid_coords)
        atom_coords = []
        for _ in range(s):
            c = rand_uniform(rng, 0.0, 1.0)
            while c in used:
                c = (c + 1.3e-7) % 1.0
            used.add(c)
            atom_coords.append(c)
        atom_ids = tuple(f"a{j}" for j in range(s))
        points = [(g, (x,)) for g, x in zip(grid_ids, grid_coords)]
        points += [(a, (c,)) for a, c in zip(atom_ids, atom_coords)]
        space = GroundSpace(f"D{t}", points)

        weights = {a: -rand_uniform(rng, 0.0, 10.0) for a in atom_ids}
        weights[choose(rng, list(atom_ids))] = 0.0
        mu = IdempotentMeasure(space, weights)

        k = rand_int(rng, 1, 5)
        tests = [
            _lipschitz_table(rng, space, grid_ids, grid_coords, atom_ids)
            for _ in range(k)
        ]
        eps = epsilons[t % 2]
        inputs = {"trial": t, "epsilon": eps, "atoms": dict(mu.atoms()), "tables": k}

        try:
            nu = approximate_on_dense(mu, grid_ids, tests, eps)
        except DenseSetTooCoarseError as exc:
            report.failures.append(
                _failure(t, seed, "approximation", inputs,
                         f"discrepancy below {eps}", exc.worst_discrepancy)
            )
            continue
        if not WeakNeighborhood(mu, tuple(tests), eps).contains(nu):
            report.failures.append(
                _failure(t, seed, "containment", inputs, "inside neighborhood", "outside")
            )
        if not set(nu.support) <= set(grid_ids):
            report.failures.append(
                _failure(t, seed, "support_in_dense", inputs,
                         "support inside the dense set", sorted(nu.support))
            )
        if not len(nu) <= len(mu):
            report.failures.append(
                _failure(t, seed, "support_size", inputs, f"<= {len(mu)}", len(nu))
            )

    # Deliberately under-resolved: a mid-cell atom at epsilon far below
    # the half-pitch resolution bound must be rejected.
    demo_points = [(g, (x,)) for g, x in zip(grid_ids, grid_coords)]
    demo_points.append(("a0", (0.505,)))
    demo_space = GroundSpace("Ddemo", demo_points)
    demo_mu = IdempotentMeasure.dirac(demo_space, "a0")
    identity_table = FunctionTable._trusted(
        demo_space, {p: demo_space.coords(p)[0] for p in demo_space.point_ids}
    )
    demo_eps = 0.001
    demo = {"epsilon": demo_eps, "raised": False, "worst_discrepancy": None}
    try:
        approximate_on_dense(demo_mu, grid_ids, [identity_table], demo_eps)
    except DenseSetTooCoarseError as exc:
        demo["raised"] = True
        demo["worst_discrepancy"] = exc.worst_discrepancy
    if not demo["raised"]:
        report.failures.append(
            _failure(-1, seed, "coarseness_demo", {"epsilon": demo_eps},
                     "dense set too coarse", "approximation unexpectedly succeeded")
        )
    report.details["coarseness_demo"] = demo
    report.details["epsilon_values"] = list(epsilons)
    report.details["resolution_threshold"] = 1.0 / (2 * (n_grid - 1))
    report.wall_time = time.perf_counter() - started
    return report


# --- openness of grid projections ---------------------------------------------

def _grid_projection(plane: GroundSpace, line: GroundSpace, n: int, axis: int) -> PointMap:
    assign = {
        f"g{i}_{j}": f"g{i if axis == 0 else j}"
        for i in range(n)
        for j in range(n)
    }
    return PointMap(plane, line, assign)


def run_openmap(trials: int = 200, seed: int = 0, tol: float = 0.0) -> SuiteReport:
    """Constructive lifting along coordinate projections of square grids.

    Target measures are made by sliding the atoms of a pushforward at
    most delta along the line; the lift must push forward to the target
    bit-exactly while staying within delta plus one grid pitch of the
    base support.
    """
    started = time.perf_counter()
    report = SuiteReport("openmap", trials)
    delta = 0.2
    sizes = (10, 15, 20, 25)
    planes = {n: uniform_grid_2d(f"G{n}", n) for n in sizes}
    lines = {n: uniform_grid_1d(f"H{n}", n) for n in sizes}
    projections = {
        (n, axis): _grid_projection(planes[n], lines[n], n, axis)
        for n in sizes
        for axis in (0, 1)
    }
    by_check = {"target_near_base": 0, "exact_pushforward": 0, "displacement": 0}

    for t in range(trials):
        rng = trial_rng(seed, t)
        n = sizes[t % len(sizes)]
        axis = t % 2
        pitch = 1.0 / (n - 1)
        f = projections[(n, axis)]
        plane, line = planes[n], lines[n]

        mu0 = _random_measure(rng, plane)
        nu0 = pushforward(f, mu0)
        max_offset = int(delta * (n - 1))
        atoms = []
        for y, w in nu0.atoms():
            i = line.index(y)
            o = rand_int(rng, -max_offset, max_offset)
            i2 = min(max(i + o, 0), n - 1)
            atoms.append((f"g{i2}", w))
        merged: dict[str, float] = {}
        for pid, w in atoms:
            cur = merged.get(pid)
            if cur is None or w > cur:
                merged[pid] = w
        nu_prime = IdempotentMeasure(line, merged)

        inputs = {
            "trial": t,
            "grid": n,
            "axis": axis,
            "mu0": _measure_dict(mu0),
            "nu_prime": _measure_dict(nu_prime),
        }

        if not support_displacement(nu0, nu_prime) <= delta:
            by_check["target_near_base"] += 1
            report.failures.append(
                _failure(t, seed, "target_near_base", inputs,
                         f"<= {delta}", support_displacement(nu0, nu_prime))
            )

        lifted = lift_toward(f, mu0, nu_prime)
        if pushforward(f, lifted) != nu_prime:
            by_check["exact_pushforward"] += 1
            report.failures.append(
                _failure(t, seed, "exact_pushforward", inputs,
                         _measure_dict(nu_prime), _measure_dict(pushforward(f, lifted)))
            )
        moved = support_displacement(mu0, lifted)
        if not moved <= delta + pitch + tol:
            by_check["displacement"] += 1
            report.failures.append(
                _failure(t, seed, "displacement", inputs, f"<= {delta + pitch}", moved)
            )

    report.details["failures_by_check"] = by_check
    report.details["delta"] = delta
    report.details["grid_sizes"] = list(sizes)
    report.wall_time = time.perf_counter() - started
    return report


# --- fiber extremes and fiber bounds -------------------------------------------

def run_lemmas(trials: int = 500, seed: int = 0, tol: float = 1e-12) -> SuiteReport:
    """Fiber extremes dominate correctly and fiber-supported integrals stay bounded.

    On random surjective maps, the per-fiber minimum table must sit below
    the source table (with the minimum attained in every fiber) and the
    per-fiber maximum above it; measures supported inside a single fiber
    must integrate any table to a value between the fiber extremes.
    """
    started = time.perf_counter()
    report = SuiteReport("lemmas", trials)
    by_check = {"dominated": 0, "extreme_attained": 0, "fiber_bounds": 0}

    for t in range(trials):
        rng = trial_rng(seed, t)
        ny = rand_int(rng, 1, 6)
        nx = rand_int(rng, ny, 12)
        sx = _plain_space(f"X{t}", nx)
        sy = _plain_space(f"Y{t}", ny)
        f = _random_surjective_map(rng, sx, sy)
        phi = _random_table(rng, sx)
        lower = fiber_inf(f, phi)
        upper = fiber_sup(f, phi)
        inputs = {"trial": t, "f": dict(f.assign), "phi": dict(phi.values)}

        low_pull = pullback(lower, f)
        up_pull = pullback(upper, f)
        if not all(
            low_pull(x) <= phi(x) <= up_pull(x) for x in sx.point_ids
        ):
            by_check["dominated"] += 1
            report.failures.append(
                _failure(t, seed, "dominated", inputs,
                         "fiber min <= phi <= fiber max pointwise", "violated")
            )

        attained = True
        for y in sy.point_ids:
            fiber_values = [phi(x) for x in fiber_points(f, y)]
            if lower(y) not in fiber_values or upper(y) not in fiber_values:
                attained = False
                break
        if not attained:
            by_check["extreme_attained"] += 1
            report.failures.append(
                _failure(t, seed, "extreme_attained", inputs,
                         "extremes attained in every fiber", f"not attained over {y!r}")
            )

        y0 = choose(rng, list(sy.point_ids))
        pts = list(fiber_points(f, y0))
        sub = subset(rng, pts, rand_int(rng, 1, len(pts)))
        weights = {p: -rand_uniform(rng, 0.0, 10.0) for p in sub}
        weights[choose(rng, sub)] = 0.0
        nu = IdempotentMeasure(sx, weights)
        bound = check_fiber_bounds(f, y0, nu, phi, tol)
        if not (bound.applicable and bound.passed):
            by_check["fiber_bounds"] += 1
            report.failures.append(
                _failure(t, seed, "fiber_bounds",
                         {**inputs, "nu": _measure_dict(nu), "y0": y0},
                         f"{bound.lower} <= integral <= {bound.upper}",
                         bound.integral if bound.applicable else "inapplicable")
            )

    report.details["failures_by_check"] = by_check
    report.wall_time = time.perf_counter() - started
    return report


# --- set-distance axioms ---------------------------------------------------------

def _random_metric_space(rng, space_id: str, max_points: int = 20) -> GroundSpace:
    m = rand_int(rng, 3, max_points)
    seen = set()
    points = []
    for i in range(m):
        c = (rand_uniform(rng, 0.0, 10.0), rand_uniform(rng, 0.0, 10.0))
        while c in seen:
            c = (c[0], rand_uniform(rng, 0.0, 10.0))
        seen.add(c)
        points.append((f"k{i}", c))
    return GroundSpace(space_id, points)


def run_kappa(trials: int = 100, seed: int = 0, tol: float = 1e-12) -> SuiteReport:
    """Set-distance axioms on random metric models, plus negative controls.

    The distance candidate must pass all four axioms on every random
    space; the constant candidate must fail belonging (K1) and the
    squared-distance candidate must fail the Lipschitz check (K3), each
    with a concrete counterexample.
    """
    started = time.perf_counter()
    report = SuiteReport("kappa", trials)
    inner = 10

    for t in range(trials):
        rng = trial_rng(seed, t)
        space = _random_metric_space(rng, f"K{t}")
        child_seed = rand_int(rng, 0, 2**31 - 1)
        result = check_kappa_axioms(distance_candidate(space), inner, child_seed, tol)
        if not result.passed:
            failed = {
                k: v for k, v in result.axioms.items() if v["status"] == "fail"
            }
            report.failures.append(
                _failure(t, seed, "distance_axioms",
                         {"trial": t, "points": len(space)},
                         "all axioms pass", json.dumps(failed, sort_keys=True))
            )

    witness_rng = trial_rng(seed, trials)
    witness = _random_metric_space(witness_rng, "Kwitness", max_points=12)
    const_report = check_kappa_axioms(constant_candidate(witness), 1000, seed, tol)
    squared_report = check_kappa_axioms(squared_distance_candidate(witness), 1000, seed, tol)
    report.details["counterfeits"] = {
        "constant": const_report.as_dict(),
        "squared_distance": squared_report.as_dict(),
    }
    if const_report.axioms["K1"]["status"] != "fail":
        report.failures.append(
            _failure(-1, seed, "counterfeit-constant", {"candidate": "constant"},
                     "K1 rejected", const_report.axioms["K1"]["status"])
        )
    if squared_report.axioms["K3"]["status"] != "fail":
        report.failures.append(
            _failure(-1, seed, "counterfeit-squared", {"candidate": "squared-distance"},
                     "K3 rejected", squared_report.axioms["K3"]["status"])
        )
    report.details["inner_trials_per_space"] = inner
    report.wall_time = time.perf_counter() - started
    return report


SUITES = {
    "axioms": run_axioms,
    "functor": run_functor,
    "convexity": run_convexity,
    "density": run_density,
    "openmap": run_openmap,
    "lemmas": run_lemmas,
    "kappa": run_kappa,
}

DEFAULT_TRIALS = {
    "axioms": 1000,
    "functor": 500,
    "convexity": 500,
    "density": 200,
    "openmap": 200,
    "lemmas": 500,
    "kappa": 100,
}
