"""Sequential unsharp observers on three-qubit states.

One wing of a shared GHZ, W or user-supplied state is measured by a
chain of observers whose measurements trade information gain against
disturbance.  Each observer's statistics, joined with the two
untouched wings, are scored against genuine tripartite steering
inequalities; searches find how weak a measurement can be while still
violating, and how long the chain can get.
"""

from .qop import (
    ALICE,
    BOB,
    CHARLIE,
    BlochDirection,
    X_DIR,
    Y_DIR,
    Z_DIR,
    direction_observable,
    effect_sqrt,
    partial_trace,
    pauli,
    tensor3,
)
from .states import (
    GHZ,
    W,
    StateFormatError,
    StateKind,
    StateSpec,
    build_state,
    custom_spec,
    ghz_state,
    load_state_file,
    save_state_file,
    w_state,
)
from .measurement import (
    QualityPrecision,
    SettingTriple,
    UnsharpSetting,
    averaged_channel,
    bloch_shrink_factor,
    correlation1,
    correlation2,
    correlation3,
    effect,
    joint_probability,
    luders_update,
)
from .inequalities import (
    InequalityKind,
    SteeringDirection,
    Term,
    TermList,
    evaluate,
    required_terms,
    terms_as_json,
)
from .cascade import (
    CascadeResult,
    Scenario,
    ScenarioSpec,
    no_signalling_audit,
    propagate,
    run_cascade,
    run_cascade_oracle,
    value_from_state,
    xyz_spec,
)
from .search import (
    AngleGrid,
    Optimizer,
    SearchConfig,
    SearchError,
    ThresholdTable,
    build_table,
    direction_coefficients,
    max_observers,
    optimize_angles,
    threshold_lambda,
)

__version__ = "0.1.0"

__all__ = [
    "ALICE",
    "BOB",
    "CHARLIE",
    "AngleGrid",
    "BlochDirection",
    "CascadeResult",
    "GHZ",
    "InequalityKind",
    "Optimizer",
    "QualityPrecision",
    "Scenario",
    "ScenarioSpec",
    "SearchConfig",
    "SearchError",
    "SettingTriple",
    "StateFormatError",
    "StateKind",
    "StateSpec",
    "SteeringDirection",
    "Term",
    "TermList",
    "ThresholdTable",
    "UnsharpSetting",
    "W",
    "X_DIR",
    "Y_DIR",
    "Z_DIR",
    "averaged_channel",
    "bloch_shrink_factor",
    "build_state",
    "build_table",
    "correlation1",
    "correlation2",
    "correlation3",
    "custom_spec",
    "direction_coefficients",
    "direction_observable",
    "effect",
    "effect_sqrt",
    "evaluate",
    "ghz_state",
    "joint_probability",
    "load_state_file",
    "luders_update",
    "max_observers",
    "no_signalling_audit",
    "optimize_angles",
    "partial_trace",
    "pauli",
    "propagate",
    "required_terms",
    "run_cascade",
    "run_cascade_oracle",
    "save_state_file",
    "tensor3",
    "terms_as_json",
    "threshold_lambda",
    "value_from_state",
    "w_state",
    "xyz_spec",
]
