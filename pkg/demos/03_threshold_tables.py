"""Minimal-sharpness ladders for every state, wing and functional.

Observer m's entry is the smallest sharpness that still violates when
observers 1..m-1 are pinned just above their own minima. The ladder
ends at the first row where even a sharp measurement fails; the number
of numeric rows is the largest chain in which every member detects
steering.
"""

from seqsteer import GHZ, W, InequalityKind, Scenario, build_table

CASES = [
    (GHZ, Scenario.A, InequalityKind.G1),
    (GHZ, Scenario.A, InequalityKind.G2),
    (GHZ, Scenario.B, InequalityKind.G1),
    (GHZ, Scenario.B, InequalityKind.G2),
    (W, Scenario.A, InequalityKind.W1),
    (W, Scenario.A, InequalityKind.W2),
    (W, Scenario.B, InequalityKind.W1),
    (W, Scenario.B, InequalityKind.W2),
]


def main():
    for state, scenario, kind in CASES:
        table = build_table(scenario, kind, state)
        label = f"{state.kind.value} / wing {scenario.value} / {kind.value}"
        entries = ", ".join(
            "none" if lam is None else f"{lam:.3f}" for _, lam in table.rows
        )
        print(f"{label:<24} -> {entries}")
        print(f"{'':<24}    ({table.max_observers} observers can violate)")
    print("\nsame ladders are exportable: table.to_csv() / table.to_json()")


if __name__ == "__main__":
    main()
