"""Sharpness thresholds, observer-count tables and setting-angle search.

For a fixed chain prefix the inequality value seen by the next observer
is affine in that observer's sharpness, so the smallest violating
sharpness is found by bisection.  Tables are built by pinning each
observer just above their own threshold and asking how far the chain
extends before even a projective measurement stops violating.
"""

import json
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .cascade import (
    _NUMBERED_DIR,
    _PAULI_DIR,
    _SETTING_INDEX,
    Scenario,
    ScenarioSpec,
    propagate,
    value_from_state,
)
from .inequalities import required_terms
from .measurement import SettingTriple
from .qop import BlochDirection, X_DIR, Y_DIR, Z_DIR, direction_observable, tensor3, I2
from .states import build_state

# Strict violation means strictly negative; the guard band keeps
# floating-point zeros from being counted as violations.
VIOLATION_GUARD = 1e-9

# Smallest sharpness probed.  Exactly zero is not a valid measurement
# (the effects become trivial), so the bisection bracket starts here.
LAMBDA_FLOOR = 1e-9


class SearchError(RuntimeError):
    """A search precondition failed or an iteration cap was hit."""


class Optimizer(Enum):
    """How each observer's three measurement directions are chosen."""

    FIXED_XYZ = "fixed-xyz"
    GRID_REFINE = "grid-refine"
    NELDER_MEAD_LIKE = "nelder-mead-like"


@dataclass(frozen=True)
class AngleGrid:
    """Sampling plan for direction search on the Bloch sphere.

    The first pass covers the whole sphere; each refinement round
    re-samples the same number of points in a window shrunk around the
    running best.
    """

    theta_samples: int = 13
    phi_samples: int = 25
    refine_rounds: int = 2
    shrink: float = 4.0

    def __post_init__(self):
        if self.theta_samples < 2 or self.phi_samples < 2:
            raise ValueError("grid needs at least 2 samples per angle")
        if self.refine_rounds < 0:
            raise ValueError("refine_rounds must be non-negative")
        if self.shrink <= 1.0:
            raise ValueError("shrink must exceed 1")


@dataclass(frozen=True)
class SearchConfig:
    tol: float = 1e-4
    max_iter: int = 200
    optimizer: Optimizer = Optimizer.FIXED_XYZ
    grid: AngleGrid = field(default_factory=AngleGrid)
    guard: float = VIOLATION_GUARD
    # When True (the reported convention) every observer in a table is
    # pinned just above their own threshold, so all of them violate.
    # When False the predecessors measure at the sharpness floor
    # instead; they learn essentially nothing and never violate, and
    # the chain no longer degrades, so the table is cut at max_rows.
    require_all_violate: bool = True
    max_rows: int = 64

    def __post_init__(self):
        if not 0.0 < self.tol < 1.0:
            raise ValueError("tol must lie in (0, 1)")
        if self.max_iter < 1:
            raise ValueError("max_iter must be positive")
        if self.max_rows < 1:
            raise ValueError("max_rows must be positive")


def worker_count():
    """Worker cap from the SEQSTEER_THREADS environment variable."""
    raw = os.environ.get("SEQSTEER_THREADS", "")
    if not raw.strip():
        return 1
    try:
        n = int(raw)
    except ValueError:
        raise SearchError(f"SEQSTEER_THREADS must be an integer, got {raw!r}")
    return max(1, n)


def direction_coefficients(rho, scenario, inequality, lam):
    """Decompose the inequality value over the sequential observer's
    directions.

    Every correlation term uses at most one of the observer's three
    settings, so for fixed trusted-wing directions the value is

        base + sum_i  n_i . vec_i

    where n_i is the unit vector of setting i.  Returns (base, vecs)
    with vecs a list of three length-3 arrays; the sharpness lam is
    already folded into the vectors.
    """
    seq_wing = scenario.sequential_wing
    tl = required_terms(inequality)
    base = tl.constant
    vecs = [np.zeros(3) for _ in range(3)]
    paulis = [direction_observable(d) for d in (X_DIR, Y_DIR, Z_DIR)]
    for term in tl.terms:
        mats = []
        for wing, sym in enumerate(term.ops):
            if sym == "I" or wing == seq_wing:
                mats.append(I2)
            elif sym in _PAULI_DIR:
                mats.append(direction_observable(_PAULI_DIR[sym]))
            else:
                mats.append(direction_observable(_NUMBERED_DIR[sym]))
        sym = term.ops[seq_wing]
        if sym == "I":
            base += term.coeff * float(
                np.trace(rho @ tensor3(*mats)).real
            )
            continue
        setting = _SETTING_INDEX[sym]
        component = np.empty(3)
        for k, sigma in enumerate(paulis):
            mats[seq_wing] = sigma
            component[k] = np.trace(rho @ tensor3(*mats)).real
        vecs[setting] += term.coeff * lam * component
    return base, vecs


def _unit_vector(theta, phi):
    return np.array(
        [
            math.sin(theta) * math.cos(phi),
            math.sin(theta) * math.sin(phi),
            math.cos(theta),
        ]
    )


def _direction_from_vector(v):
    norm = float(np.linalg.norm(v))
    if norm < 1e-15:
        return Z_DIR
    theta = math.acos(max(-1.0, min(1.0, float(v[2]) / norm)))
    phi = math.atan2(float(v[1]), float(v[0])) % (2.0 * math.pi)
    return BlochDirection(theta, phi)


def _window_samples(center, half_width, lo, hi, count):
    a = max(lo, center - half_width)
    b = min(hi, center + half_width)
    return np.linspace(a, b, count)


def _scan_direction(vec, grid, workers=1):
    """Direction minimizing n . vec over the sampling plan.

    The exact optimum is -|vec| at n = -vec/|vec|; the grid search is
    kept because it is the documented behaviour, but the analytic
    direction is added to the candidate pool, as are the three
    coordinate axes, so the result can never be worse than either.
    """
    thetas = np.linspace(0.0, math.pi, grid.theta_samples)
    phis = np.linspace(0.0, 2.0 * math.pi, grid.phi_samples)
    best = None

    def chunk_min(pairs):
        low = None
        for theta, phi in pairs:
            value = float(_unit_vector(theta, phi) @ vec)
            if low is None or value < low[0] - 1e-15:
                low = (value, theta, phi)
        return low

    for round_index in range(grid.refine_rounds + 1):
        pairs = [(t, p) for t in thetas for p in phis]
        if workers > 1 and len(pairs) > 64:
            # chunks partition the grid in order, so reducing their
            # minima in chunk order is deterministic
            chunks = np.array_split(np.array(pairs), workers)
            with ThreadPoolExecutor(max_workers=workers) as pool:
                candidates = [c for c in pool.map(chunk_min, chunks) if c]
        else:
            candidates = [chunk_min(pairs)]
        for low in candidates:
            if best is None or low[0] < best[0] - 1e-15:
                best = low
        if round_index == grid.refine_rounds:
            break
        shrink = grid.shrink ** (round_index + 1)
        _, theta0, phi0 = best
        thetas = _window_samples(
            theta0, math.pi / (2.0 * shrink), 0.0, math.pi, grid.theta_samples
        )
        phis = _window_samples(
            phi0, math.pi / shrink, 0.0, 2.0 * math.pi, grid.phi_samples
        )

    for d in (X_DIR, Y_DIR, Z_DIR, _direction_from_vector(-np.asarray(vec))):
        value = float(d.unit_vector() @ vec)
        if value < best[0] - 1e-15:
            best = (value, d.theta, d.phi)
    return BlochDirection(best[1], best[2]), best[0]


def _polish_direction(vec, start):
    """Local simplex descent of n(theta, phi) . vec from a grid start."""
    from scipy.optimize import minimize

    def objective(x):
        return float(_unit_vector(x[0], x[1]) @ vec)

    res = minimize(
        objective,
        x0=[start.theta, start.phi],
        method="Nelder-Mead",
        options={"xatol": 1e-10, "fatol": 1e-13, "maxiter": 400},
    )
    direction = _direction_from_vector(_unit_vector(res.x[0], res.x[1]))
    return direction, float(direction.unit_vector() @ vec)


def optimize_angles(spec, m, config=None):
    """Best measurement directions for observer m (1-based) of a chain.

    Predecessor observers keep the settings recorded in the spec; only
    observer m's three directions are searched.  Returns the optimized
    SettingTriple together with the inequality value it attains.  With
    the FIXED_XYZ optimizer no search happens and the x, y, z settings
    are scored as-is.
    """
    config = config or SearchConfig()
    if not 1 <= m <= len(spec.observers):
        raise ValueError(f"observer index must lie in 1..{len(spec.observers)}, got {m}")
    seq = spec.sequential_wing
    rho = propagate(build_state(spec.state), seq, spec.observers[: m - 1])
    lam = spec.observers[m - 1].lam
    if config.optimizer is Optimizer.FIXED_XYZ:
        triple = SettingTriple.xyz(lam)
        return triple, value_from_state(rho, spec.scenario, spec.inequality, triple)

    base, vecs = direction_coefficients(rho, spec.scenario, spec.inequality, lam)
    workers = worker_count()
    directions = []
    total = base
    for vec in vecs:
        direction, low = _scan_direction(vec, config.grid, workers)
        if config.optimizer is Optimizer.NELDER_MEAD_LIKE:
            polished, polished_low = _polish_direction(vec, direction)
            if polished_low < low:
                direction, low = polished, polished_low
        directions.append(direction)
        total += low
    triple = SettingTriple.from_directions(directions, lam)
    return triple, total


def _value_at(rho, scenario, inequality, lam, config):
    """Inequality value for the candidate observer at sharpness lam."""
    if config.optimizer is Optimizer.FIXED_XYZ:
        return value_from_state(rho, scenario, inequality, SettingTriple.xyz(lam))
    base, vecs = direction_coefficients(rho, scenario, inequality, lam)
    workers = worker_count()
    total = base
    for vec in vecs:
        direction, low = _scan_direction(vec, config.grid, workers)
        if config.optimizer is Optimizer.NELDER_MEAD_LIKE:
            _, polished_low = _polish_direction(vec, direction)
            low = min(low, polished_low)
        total += low
    return total


def threshold_lambda(prefix, config=None):
    """Minimal sharpness at which the next observer still violates.

    prefix is a ScenarioSpec holding the observers that have already
    measured (possibly none).  The candidate observer is appended with
    settings chosen per the configured optimizer and their sharpness is
    bisected.  Returns the smallest sharpness verified to violate, to
    within config.tol, or None when even a projective measurement does
    not violate.
    """
    config = config or SearchConfig()
    seq = prefix.sequential_wing
    rho = propagate(build_state(prefix.state), seq, prefix.observers)

    def f(lam):
        return _value_at(rho, prefix.scenario, prefix.inequality, lam, config)

    f_sharp = f(1.0)
    if f_sharp >= -config.guard:
        return None
    f_floor = f(LAMBDA_FLOOR)
    if not f_sharp < f_floor:
        raise SearchError(
            "the inequality value does not decrease with sharpness "
            f"({f_sharp:.6g} at 1 vs {f_floor:.6g} near 0); bisection "
            "would return a wrong root"
        )

    lo, hi = LAMBDA_FLOOR, 1.0
    iterations = 0
    while hi - lo > config.tol:
        iterations += 1
        if iterations > config.max_iter:
            raise SearchError(
                f"bisection failed to converge within {config.max_iter} "
                f"iterations; bracket [{lo}, {hi}]"
            )
        mid = 0.5 * (lo + hi)
        if f(mid) < -config.guard:
            hi = mid
        else:
            lo = mid
    return hi


@dataclass(frozen=True)
class ThresholdTable:
    """Per-observer minimal sharpness for one scenario column.

    rows holds (m, lambda_min) pairs with lambda_min None on the row
    where the chain ends; truncated marks a table cut by the row cap
    rather than by a non-violating row.
    """

    state: str
    scenario: Scenario
    inequality: object
    rows: tuple
    truncated: bool = False

    @property
    def max_observers(self):
        return sum(1 for _, lam in self.rows if lam is not None)

    def to_csv(self):
        lines = ["m,lambda_min,status"]
        for m, lam in self.rows:
            if lam is None:
                lines.append(f"{m},,none")
            else:
                lines.append(f"{m},{lam:.6f},ok")
        return "\n".join(lines) + "\n"

    def to_json(self):
        rows = []
        for m, lam in self.rows:
            rows.append(
                {
                    "m": m,
                    "lambda_min": lam,
                    "status": "none" if lam is None else "ok",
                }
            )
        return json.dumps(
            {
                "state": self.state,
                "scenario": self.scenario.value,
                "direction": self.inequality.direction.value,
                "inequality": self.inequality.value,
                "rows": rows,
                "truncated": self.truncated,
            },
            indent=2,
        )

    @classmethod
    def from_json(cls, text):
        from .inequalities import InequalityKind

        data = json.loads(text)
        rows = tuple((r["m"], r["lambda_min"]) for r in data["rows"])
        return cls(
            state=data["state"],
            scenario=Scenario(data["scenario"]),
            inequality=InequalityKind(data["inequality"]),
            rows=rows,
            truncated=data.get("truncated", False),
        )


def build_table(scenario, inequality, state, config=None):
    """Threshold ladder: sharpness minima row by row until the chain ends.

    Observer m's threshold is computed with observers 1..m-1 pinned at
    their own reported minima plus the bisection tolerance, so each of
    them violates in their own right.  The table ends on the first
    "none" row, or at config.max_rows if every row keeps violating.
    """
    config = config or SearchConfig()
    pins = []
    rows = []
    truncated = False
    for m in range(1, config.max_rows + 1):
        prefix = ScenarioSpec(
            scenario=scenario,
            inequality=inequality,
            state=state,
            observers=tuple(SettingTriple.xyz(p) for p in pins),
        )
        lam = threshold_lambda(prefix, config)
        if lam is None:
            rows.append((m, None))
            break
        rows.append((m, lam))
        if config.require_all_violate:
            pins.append(min(1.0, lam + config.tol))
        else:
            pins.append(LAMBDA_FLOOR)
    else:
        truncated = True
    return ThresholdTable(
        state=state.kind.value,
        scenario=scenario,
        inequality=inequality,
        rows=tuple(rows),
        truncated=truncated,
    )


def max_observers(scenario, inequality, state, config=None):
    """How many observers in a row can each see a violation."""
    return build_table(scenario, inequality, state, config).max_observers
