"""Dense qubit and three-qubit linear algebra primitives.

Everything here is plain numpy on 2x2, 4x4 and 8x8 complex arrays. Wing
ordering is fixed throughout the package: index 0 is Alice, 1 is Bob,
2 is Charlie, and basis labels read |abc> in that order.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

ALICE, BOB, CHARLIE = 0, 1, 2
WING_NAMES = {"alice": ALICE, "bob": BOB, "charlie": CHARLIE}

HERMITICITY_TOL = 1e-12
TRACE_TOL = 1e-12
PSD_TOL = 1e-10

I2 = np.eye(2, dtype=complex)

_PAULI = {
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
    "I": I2,
}


def pauli(axis):
    """Return the 2x2 Pauli matrix for axis 'X', 'Y' or 'Z'."""
    key = str(axis).upper()
    if key not in ("X", "Y", "Z"):
        raise ValueError(f"unknown Pauli axis {axis!r}; expected one of X, Y, Z")
    return _PAULI[key].copy()


def resolve_wing(wing):
    """Map a wing identifier (0/1/2 or alice/bob/charlie) to its index."""
    if isinstance(wing, str):
        try:
            return WING_NAMES[wing.lower()]
        except KeyError:
            raise ValueError(
                f"unknown wing {wing!r}; expected 0, 1, 2 or alice, bob, charlie"
            ) from None
    wing = int(wing)
    if wing not in (0, 1, 2):
        raise ValueError(f"unknown wing {wing!r}; expected 0, 1, 2 or alice, bob, charlie")
    return wing


@dataclass(frozen=True)
class BlochDirection:
    """A unit direction on the Bloch sphere, polar angle theta in [0, pi]
    and azimuth phi in [0, 2*pi]."""

    theta: float
    phi: float

    def __post_init__(self):
        object.__setattr__(self, "theta", float(self.theta))
        object.__setattr__(self, "phi", float(self.phi))
        if not 0.0 <= self.theta <= np.pi + 1e-12:
            raise ValueError(f"theta must lie in [0, pi], got {self.theta}")
        if not 0.0 <= self.phi <= 2 * np.pi + 1e-12:
            raise ValueError(f"phi must lie in [0, 2*pi], got {self.phi}")

    def unit_vector(self):
        """Cartesian components (sin t cos p, sin t sin p, cos t)."""
        st = np.sin(self.theta)
        return np.array(
            [st * np.cos(self.phi), st * np.sin(self.phi), np.cos(self.theta)]
        )


X_DIR = BlochDirection(np.pi / 2, 0.0)
Y_DIR = BlochDirection(np.pi / 2, np.pi / 2)
Z_DIR = BlochDirection(0.0, 0.0)


def direction_observable(d: BlochDirection):
    """Spin component observable n.sigma for the direction d.

    Hermitian with eigenvalues +1 and -1.
    """
    n = d.unit_vector()
    return n[0] * _PAULI["X"] + n[1] * _PAULI["Y"] + n[2] * _PAULI["Z"]


def tensor3(a, b, c):
    """Kronecker product a (x) b (x) c of three 2x2 matrices, wing order
    Alice (x) Bob (x) Charlie."""
    for name, m in (("a", a), ("b", b), ("c", c)):
        if np.shape(m) != (2, 2):
            raise ValueError(f"tensor3 factor {name} must be 2x2, got {np.shape(m)}")
    return np.kron(np.kron(a, b), c)


def partial_trace(rho, keep):
    """Reduce an 8x8 state to the single kept wing's 2x2 state."""
    keep = resolve_wing(keep)
    if np.shape(rho) != (8, 8):
        raise ValueError(f"partial_trace expects an 8x8 matrix, got {np.shape(rho)}")
    t = np.asarray(rho).reshape(2, 2, 2, 2, 2, 2)
    if keep == 0:
        return np.einsum("ijkljk->il", t)
    if keep == 1:
        return np.einsum("ijkimk->jm", t)
    return np.einsum("ijkijn->kn", t)


def effect_sqrt(d: BlochDirection, lam, outcome):
    """Square root of the unsharp effect for outcome +1 or -1 along d.

    The effect lam*P_a + (1-lam)*I/2 is diagonal in the measurement basis,
    so its root is sqrt((1+lam)/2)*P_a + sqrt((1-lam)/2)*P_(-a) in closed
    form, with P_a the projector onto outcome a.

    Args:
        d: measurement direction.
        lam: sharpness in (0, 1].
        outcome: +1 or -1.
    """
    if not 0.0 < lam <= 1.0:
        raise ValueError(f"sharpness must lie in (0, 1], got {lam}")
    if outcome not in (1, -1):
        raise ValueError(f"outcome must be +1 or -1, got {outcome}")
    obs = direction_observable(d)
    proj_a = (I2 + outcome * obs) / 2
    proj_b = (I2 - outcome * obs) / 2
    return np.sqrt((1 + lam) / 2) * proj_a + np.sqrt((1 - lam) / 2) * proj_b


def validate_density(rho, dim=8, name="state"):
    """Check Hermiticity, unit trace and positive semidefiniteness.

    Returns the matrix as a complex ndarray; raises ValueError with the
    offending property otherwise.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (dim, dim):
        raise ValueError(f"{name} must be {dim}x{dim}, got {rho.shape}")
    herm = np.max(np.abs(rho - rho.conj().T))
    if herm > HERMITICITY_TOL:
        raise ValueError(f"{name} is not Hermitian (max deviation {herm:.3e})")
    tr = rho.trace()
    if abs(tr - 1) > TRACE_TOL:
        raise ValueError(f"{name} trace is {tr:.12f}, expected 1")
    smallest = float(np.linalg.eigvalsh(rho)[0])
    if smallest < -PSD_TOL:
        raise ValueError(f"{name} is not positive semidefinite (eigenvalue {smallest:.3e})")
    return rho
