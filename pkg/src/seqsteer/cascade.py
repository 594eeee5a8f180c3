"""Chains of observers measuring one wing of a shared three-qubit state.

Scenario A puts the chain on the first qubit (a line of Alices), Scenario
B on the third (a line of Charlies). Every observer in the chain measures
unsharply except the last, whose measurement is projective. The remaining
two wings each host a single projective observer.

Observer m's inequality value is computed on the state left behind by
observers 1..m-1. Two independent computations are provided: the fast
path propagates the state through the averaged non-selective channel,
while the oracle path enumerates every predecessor setting and outcome
explicitly and marginalizes at the probability level.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from itertools import product

import numpy as np

from .inequalities import InequalityKind, SteeringDirection, required_terms
from .measurement import (
    SettingTriple,
    UnsharpSetting,
    averaged_channel,
    correlation1,
    correlation2,
    correlation3,
    joint_probability,
    luders_update,
)
from .qop import I2, X_DIR, Y_DIR, Z_DIR, direction_observable, tensor3
from .states import StateSpec, build_state

ORACLE_MAX_OBSERVERS = 4


class Scenario(Enum):
    A = "A"
    B = "B"

    @property
    def sequential_wing(self):
        return 0 if self is Scenario.A else 2


_PAULI_DIR = {"X": X_DIR, "Y": Y_DIR, "Z": Z_DIR}
# numbered settings of a non-sequential untrusted wing stay at the
# published optimum: x, y, z in that order
_NUMBERED_DIR = {
    "A1": X_DIR, "A2": Y_DIR, "A3": Z_DIR,
    "B1": X_DIR, "B2": Y_DIR, "B3": Z_DIR,
}
_SETTING_INDEX = {
    "A1": 0, "A2": 1, "A3": 2,
    "B1": 0, "B2": 1, "B3": 2,
    "X": 0, "Y": 1, "Z": 2,
}


@dataclass(frozen=True)
class ScenarioSpec:
    """A full chain description: who measures, what they measure, on what.

    observers holds one SettingTriple per chain member in order; the
    steering direction defaults to the one the inequality is built for
    and is rejected if it disagrees.
    """

    scenario: Scenario
    inequality: InequalityKind
    state: StateSpec
    observers: tuple
    direction: SteeringDirection = None

    def __post_init__(self):
        # an empty chain is allowed as a search prefix; running a cascade
        # on it is rejected by require_projective_last
        object.__setattr__(self, "observers", tuple(self.observers))
        if self.direction is None:
            object.__setattr__(self, "direction", self.inequality.direction)
        elif self.direction is not self.inequality.direction:
            raise ValueError(
                f"direction {self.direction.value} is inconsistent with "
                f"{self.inequality.value}, which detects "
                f"{self.inequality.direction.value} steering"
            )

    @property
    def sequential_wing(self):
        return self.scenario.sequential_wing

    @property
    def lambdas(self):
        return tuple(t.lam for t in self.observers)

    def require_projective_last(self):
        if not self.observers:
            raise ValueError("the chain has no observers")
        if self.observers[-1].lam != 1.0:
            raise ValueError(
                f"the last observer's measurement must be projective "
                f"(sharpness 1), got {self.observers[-1].lam}"
            )


def xyz_spec(scenario, inequality, state, lambdas):
    """Spec with every observer on the x, y, z settings at the given
    sharpness values."""
    return ScenarioSpec(
        scenario=scenario,
        inequality=inequality,
        state=state,
        observers=tuple(SettingTriple.xyz(lam) for lam in lambdas),
    )


def _resolve_term(ops, seq_wing, triple):
    """Per-wing measurement directions for one term.

    Returns a list of three entries, each None (identity) or a
    BlochDirection. On the sequential wing the symbol picks one of the
    observer's own settings; elsewhere trusted symbols are fixed Paulis
    and numbered symbols sit at the published optimum.
    """
    resolved = []
    for wing, sym in enumerate(ops):
        if sym == "I":
            resolved.append(None)
        elif wing == seq_wing:
            resolved.append(triple.directions[_SETTING_INDEX[sym]])
        elif sym in _PAULI_DIR:
            resolved.append(_PAULI_DIR[sym])
        else:
            resolved.append(_NUMBERED_DIR[sym])
    return resolved


def value_from_state(rho, scenario, inequality, triple):
    """Inequality value for one observer given the state they receive.

    Correlations involving the observer's own wing scale with the
    sharpness, because the unsharp observable's moment operator is
    lam times the spin component.
    """
    seq_wing = scenario.sequential_wing
    tl = required_terms(inequality)
    value = tl.constant
    for term in tl.terms:
        dirs = _resolve_term(term.ops, seq_wing, triple)
        mats = [I2 if d is None else direction_observable(d) for d in dirs]
        e = float(np.trace(tensor3(*mats) @ rho).real)
        if dirs[seq_wing] is not None:
            e *= triple.lam
        value += term.coeff * e
    return value


def propagate(rho, seq_wing, triples):
    """Fold the averaged channel over a list of predecessor triples."""
    for triple in triples:
        rho = averaged_channel(rho, seq_wing, triple)
    return rho


@dataclass(frozen=True)
class CascadeResult:
    """Per-observer inequality values for one chain."""

    inequality: InequalityKind
    lambdas: tuple
    values: tuple

    @property
    def detected(self):
        """Strict negativity per observer; a value of exactly zero does
        not count as detection."""
        return tuple(v < 0.0 for v in self.values)

    def to_json(self):
        doc = {
            "inequality": self.inequality.value,
            "observers": [
                {
                    "observer": m + 1,
                    "lambda": self.lambdas[m],
                    "value": self.values[m],
                    "detected": bool(self.values[m] < 0.0),
                }
                for m in range(len(self.values))
            ],
        }
        return json.dumps(doc, indent=2)

    @classmethod
    def from_json(cls, text):
        doc = json.loads(text)
        rows = doc["observers"]
        return cls(
            inequality=InequalityKind(doc["inequality"]),
            lambdas=tuple(r["lambda"] for r in rows),
            values=tuple(r["value"] for r in rows),
        )


def run_cascade(spec: ScenarioSpec) -> CascadeResult:
    """Channel-path evaluation of every observer in the chain."""
    spec.require_projective_last()
    seq_wing = spec.sequential_wing
    rho = build_state(spec.state)
    values = []
    for m, triple in enumerate(spec.observers):
        values.append(value_from_state(rho, spec.scenario, spec.inequality, triple))
        if m + 1 < len(spec.observers):
            rho = averaged_channel(rho, seq_wing, triple)
    return CascadeResult(spec.inequality, spec.lambdas, tuple(values))


def _predecessor_branches(rho0, seq_wing, triples):
    """All selective-update branches over predecessor settings and
    outcomes. Branch states are unnormalized; each branch's setting
    string carries probability weight (1/3) per predecessor."""
    branches = [rho0]
    for triple in triples:
        nxt = []
        for rho in branches:
            for setting in triple.settings:
                for outcome in (1, -1):
                    updated, _prob = luders_update(rho, seq_wing, setting, outcome)
                    nxt.append(updated)
        branches = nxt
    return branches, (1.0 / 3.0) ** len(triples)


def _term_correlation(rho, seq_wing, triple, ops):
    """One term's expectation from outcome probabilities.

    Linear in rho, so unnormalized branch states may be passed directly.
    Wings whose symbol is the identity are marginalized over.
    """
    dirs = _resolve_term(ops, seq_wing, triple)
    seq_dir = dirs[seq_wing] if dirs[seq_wing] is not None else triple.directions[0]
    setting = UnsharpSetting(seq_dir, triple.lam)
    proj_wings = [w for w in (0, 1, 2) if w != seq_wing]
    proj_dirs = tuple(dirs[w] if dirs[w] is not None else Z_DIR for w in proj_wings)
    measured = [w for w in (0, 1, 2) if dirs[w] is not None]
    if len(measured) == 3:
        return correlation3(rho, seq_wing, setting, proj_dirs)
    if len(measured) == 2:
        (dropped,) = (w for w in (0, 1, 2) if dirs[w] is None)
        return correlation2(rho, seq_wing, setting, proj_dirs, dropped)
    return correlation1(rho, seq_wing, setting, proj_dirs, measured[0])


def run_cascade_oracle(spec: ScenarioSpec) -> CascadeResult:
    """Tree-path evaluation: identical contract to run_cascade, computed
    by explicit enumeration instead of the averaged channel.

    Cost grows as 6^(n-1), so chains longer than 4 are refused.
    """
    spec.require_projective_last()
    n = len(spec.observers)
    if n > ORACLE_MAX_OBSERVERS:
        raise ValueError(
            f"explicit enumeration is limited to {ORACLE_MAX_OBSERVERS} observers "
            f"({6 ** (ORACLE_MAX_OBSERVERS - 1)} branches); got n={n}. "
            "Use run_cascade for longer chains."
        )
    seq_wing = spec.sequential_wing
    rho0 = build_state(spec.state)
    tl_cache = required_terms(spec.inequality)
    values = []
    for m, triple in enumerate(spec.observers):
        branches, weight = _predecessor_branches(rho0, seq_wing, spec.observers[:m])
        value = tl_cache.constant
        for term in tl_cache.terms:
            e = sum(
                _term_correlation(rho, seq_wing, triple, term.ops) for rho in branches
            )
            value += term.coeff * weight * e
        values.append(value)
    return CascadeResult(spec.inequality, spec.lambdas, tuple(values))


def _marginal(prob_fn, rho, seq_wing, setting, proj_dirs, wing):
    """P(outcome = +1) on one wing, all other outcomes summed over."""
    total = 0.0
    for outcomes in product((1, -1), repeat=3):
        if outcomes[wing] == 1:
            total += prob_fn(rho, seq_wing, setting, proj_dirs, outcomes)
    return total


def no_signalling_audit(spec: ScenarioSpec, prob_fn=None) -> float:
    """Largest dependence of any single-wing marginal on a remote setting.

    For every observer in the chain, each wing's outcome distribution is
    compared across all choices of the other wings' measurement
    directions. Quantum mechanics makes every such difference vanish, so
    anything above numerical round-off (about 1e-10) indicates a broken
    probability model. An alternative probability function may be passed
    to audit a foreign model with the same signature as
    measurement.joint_probability.
    """
    if prob_fn is None:
        prob_fn = joint_probability
    seq_wing = spec.sequential_wing
    proj_wings = [w for w in (0, 1, 2) if w != seq_wing]
    candidates = (X_DIR, Y_DIR, Z_DIR)
    rho = build_state(spec.state)
    worst = 0.0
    for m, triple in enumerate(spec.observers):
        if m > 0:
            rho = averaged_channel(rho, seq_wing, spec.observers[m - 1])
        # sequential wing's marginal must ignore both projective wings
        for setting in triple.settings:
            seen = [
                _marginal(prob_fn, rho, seq_wing, setting, (d1, d2), seq_wing)
                for d1 in candidates
                for d2 in candidates
            ]
            worst = max(worst, max(seen) - min(seen))
        # each projective wing's marginal must ignore the sequential
        # setting and the other projective wing's direction
        for probe_pos, probe_wing in enumerate(proj_wings):
            other_pos = 1 - probe_pos
            for own_dir in candidates:
                seen = []
                for setting in triple.settings:
                    for remote in candidates:
                        proj_dirs = [None, None]
                        proj_dirs[probe_pos] = own_dir
                        proj_dirs[other_pos] = remote
                        seen.append(
                            _marginal(
                                prob_fn, rho, seq_wing, setting,
                                tuple(proj_dirs), probe_wing,
                            )
                        )
                worst = max(worst, max(seen) - min(seen))
    return worst
