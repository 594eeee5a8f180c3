"""Initial three-qubit states: GHZ, W, or a user-supplied density matrix."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .qop import validate_density


class StateKind(Enum):
    GHZ = "ghz"
    W = "w"
    CUSTOM = "custom"


@dataclass(frozen=True)
class StateSpec:
    """Which initial state to share between the three wings.

    For CUSTOM, `custom` holds a validated 8x8 density matrix.
    """

    kind: StateKind
    custom: object = None

    def __post_init__(self):
        if self.kind is StateKind.CUSTOM:
            if self.custom is None:
                raise ValueError("custom state requires an 8x8 density matrix")
            validate_density(self.custom, name="custom state")
        elif self.custom is not None:
            raise ValueError(f"{self.kind.value} state takes no custom matrix")


GHZ = StateSpec(StateKind.GHZ)
W = StateSpec(StateKind.W)


def ghz_state():
    """Projector onto (|000> + |111>)/sqrt(2)."""
    psi = np.zeros(8, dtype=complex)
    psi[0] = psi[7] = 1 / np.sqrt(2)
    return np.outer(psi, psi.conj())


def w_state():
    """Projector onto (|001> + |010> + |100>)/sqrt(3)."""
    psi = np.zeros(8, dtype=complex)
    psi[1] = psi[2] = psi[4] = 1 / np.sqrt(3)
    return np.outer(psi, psi.conj())


def build_state(spec: StateSpec):
    """Materialize the 8x8 density matrix for a StateSpec."""
    if spec.kind is StateKind.GHZ:
        return ghz_state()
    if spec.kind is StateKind.W:
        return w_state()
    return np.array(spec.custom, dtype=complex)


class StateFormatError(ValueError):
    """Raised when a state file cannot be parsed or fails validation."""


def load_state_file(path):
    """Read an 8x8 complex density matrix from a plain-text file.

    The format is 8 rows of 8 whitespace-separated entries, each written
    like `0.5+0.0j` or `-0.25-0.1j`. Parse failures report the offending
    row and column (1-based).
    """
    with open(path) as fh:
        lines = [ln for ln in (raw.strip() for raw in fh) if ln]
    if len(lines) != 8:
        raise StateFormatError(f"{path}: expected 8 matrix rows, found {len(lines)}")
    mat = np.zeros((8, 8), dtype=complex)
    for r, line in enumerate(lines, start=1):
        tokens = line.split()
        if len(tokens) != 8:
            raise StateFormatError(
                f"{path}: row {r}: expected 8 entries, found {len(tokens)}"
            )
        for c, tok in enumerate(tokens, start=1):
            try:
                mat[r - 1, c - 1] = complex(tok)
            except ValueError:
                raise StateFormatError(
                    f"{path}: row {r}, column {c}: cannot parse {tok!r} as a complex "
                    "number (expected the form re+imj, e.g. 0.5-0.25j)"
                ) from None
    try:
        validate_density(mat, name=f"state file {path}")
    except ValueError as exc:
        raise StateFormatError(str(exc)) from None
    return mat


def save_state_file(path, rho):
    """Write a density matrix in the format understood by load_state_file."""
    rho = validate_density(rho, name="state")
    with open(path, "w") as fh:
        for row in rho:
            fh.write(" ".join(f"{z.real:+.17g}{z.imag:+.17g}j" for z in row))
            fh.write("\n")


def custom_spec(path):
    """StateSpec for a density matrix loaded from a file."""
    return StateSpec(StateKind.CUSTOM, load_state_file(path))
