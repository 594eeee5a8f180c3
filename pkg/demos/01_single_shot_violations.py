"""Score one projective observer against all four steering functionals.

A negative value certifies genuine tripartite steering of the shared
state. The GHZ state is paired with the g-family functionals and the W
state with the w-family; a product state is included to show none of
them fire on an unentangled input.
"""

import numpy as np

from seqsteer import (
    GHZ,
    W,
    InequalityKind,
    Scenario,
    StateKind,
    StateSpec,
    run_cascade,
    xyz_spec,
)


def score(state, kind):
    spec = xyz_spec(Scenario.A, kind, state, (1.0,))
    return run_cascade(spec).values[0]


def main():
    print("one sharp observer, published settings\n")
    print(f"{'state':<10}{'functional':<12}{'value':>10}  detected")
    for state, kind in (
        (GHZ, InequalityKind.G1),
        (GHZ, InequalityKind.G2),
        (W, InequalityKind.W1),
        (W, InequalityKind.W2),
    ):
        v = score(state, kind)
        print(
            f"{state.kind.value:<10}{kind.value:<12}{v:>+10.4f}  "
            f"{'yes' if v < 0 else 'no'}"
        )

    rho = np.zeros((8, 8), dtype=complex)
    rho[0, 0] = 1.0
    product = StateSpec(StateKind.CUSTOM, custom=rho)
    print("\nproduct state |000> for comparison")
    for kind in InequalityKind:
        v = score(product, kind)
        print(f"{'product':<10}{kind.value:<12}{v:>+10.4f}  "
              f"{'yes' if v < 0 else 'no'}")


if __name__ == "__main__":
    main()
