import json

import pytest

from seqsteer import (
    InequalityKind,
    SteeringDirection,
    evaluate,
    required_terms,
    terms_as_json,
)

EXPECTED_TERM_COUNTS = {
    InequalityKind.G1: 7,
    InequalityKind.G2: 7,
    InequalityKind.W1: 19,
    InequalityKind.W2: 19,
}


@pytest.mark.parametrize("kind", list(InequalityKind))
def test_term_counts(kind):
    tl = required_terms(kind)
    assert tl.constant == 1.0
    assert len(tl.terms) == EXPECTED_TERM_COUNTS[kind]


@pytest.mark.parametrize("kind", list(InequalityKind))
def test_every_term_is_unique(kind):
    ops = [t.ops for t in required_terms(kind).terms]
    assert len(ops) == len(set(ops))


def test_direction_pairing():
    assert InequalityKind.G1.direction is SteeringDirection.ONE_TO_TWO
    assert InequalityKind.W1.direction is SteeringDirection.ONE_TO_TWO
    assert InequalityKind.G2.direction is SteeringDirection.TWO_TO_ONE
    assert InequalityKind.W2.direction is SteeringDirection.TWO_TO_ONE


def test_untrusted_wings_follow_direction():
    assert InequalityKind.G1.untrusted_wings == (0,)
    assert InequalityKind.G2.untrusted_wings == (0, 1)


def test_one_to_two_terms_never_number_the_trusted_wings():
    # with one untrusted party, wings 1 and 2 only carry fixed Paulis
    for kind in (InequalityKind.G1, InequalityKind.W1):
        for term in required_terms(kind).terms:
            for sym in term.ops[1:]:
                assert sym in ("I", "X", "Y", "Z")


def test_two_to_one_terms_number_both_untrusted_wings():
    seen_numbered_bob = False
    for term in required_terms(InequalityKind.G2).terms:
        assert term.ops[2] in ("I", "X", "Y", "Z")
        if term.ops[1].startswith("B"):
            seen_numbered_bob = True
    assert seen_numbered_bob


def test_g1_coefficients():
    tl = required_terms(InequalityKind.G1)
    by_ops = {t.ops: t.coeff for t in tl.terms}
    assert by_ops[("I", "Z", "Z")] == pytest.approx(0.1547)
    assert by_ops[("A3", "Z", "I")] == pytest.approx(-1 / 3)
    assert by_ops[("A1", "X", "X")] == pytest.approx(-1 / 3)
    assert by_ops[("A1", "Y", "Y")] == pytest.approx(1 / 3)
    assert by_ops[("A2", "X", "Y")] == pytest.approx(1 / 3)


def test_g2_coefficients():
    by_ops = {t.ops: t.coeff for t in required_terms(InequalityKind.G2).terms}
    assert by_ops[("A3", "B3", "I")] == pytest.approx(-0.183)
    assert by_ops[("A1", "B1", "X")] == pytest.approx(-0.258)
    assert by_ops[("A1", "B2", "Y")] == pytest.approx(0.258)


def test_evaluate_from_mapping():
    # product state with every correlation zero scores the bare constant
    table = {t.ops: 0.0 for t in required_terms(InequalityKind.G1).terms}
    assert evaluate(InequalityKind.G1, table) == pytest.approx(1.0)


def test_evaluate_detects_ghz_violation():
    # perfect GHZ correlations entered by hand
    table = {
        ("I", "Z", "Z"): 1.0,
        ("A3", "Z", "I"): 1.0,
        ("A3", "I", "Z"): 1.0,
        ("A1", "X", "X"): 1.0,
        ("A1", "Y", "Y"): -1.0,
        ("A2", "X", "Y"): -1.0,
        ("A2", "Y", "X"): -1.0,
    }
    assert evaluate(InequalityKind.G1, table) == pytest.approx(-0.8453)


def test_evaluate_rejects_out_of_range_expectations():
    table = {t.ops: 0.0 for t in required_terms(InequalityKind.G1).terms}
    table[("A3", "Z", "I")] = 3.0
    with pytest.raises(ValueError, match="out of"):
        evaluate(InequalityKind.G1, table)


def test_missing_term_is_a_hard_error_naming_it():
    table = {t.ops: 0.0 for t in required_terms(InequalityKind.G2).terms}
    del table[("A1", "B2", "Y")]
    with pytest.raises(LookupError, match=r"\('A1', 'B2', 'Y'\)"):
        evaluate(InequalityKind.G2, table)


def test_provider_object_protocol():
    class Flat:
        def expectation(self, ops):
            return 0.0

    assert evaluate(InequalityKind.W2, Flat()) == pytest.approx(1.0)


def test_terms_as_json_round_trip():
    for kind in InequalityKind:
        doc = json.loads(terms_as_json(kind))
        assert doc["inequality"] == kind.value
        assert doc["direction"] == kind.direction.value
        assert doc["constant"] == 1.0
        assert len(doc["terms"]) == EXPECTED_TERM_COUNTS[kind]
        tl = required_terms(kind)
        for entry, term in zip(doc["terms"], tl.terms):
            assert tuple(entry["ops"]) == term.ops
            assert entry["coeff"] == term.coeff


def test_w1_zz_coefficient_is_small_and_negative():
    by_ops = {t.ops: t.coeff for t in required_terms(InequalityKind.W1).terms}
    assert by_ops[("I", "Z", "Z")] == pytest.approx(-0.0037)
    # the eight cross terms share one magnitude
    for ops in (
        ("A1", "X", "I"),
        ("A1", "I", "X"),
        ("A2", "Y", "I"),
        ("A2", "I", "Y"),
        ("A1", "X", "Z"),
        ("A1", "Z", "X"),
        ("A2", "Y", "Z"),
        ("A2", "Z", "Y"),
    ):
        assert by_ops[ops] == pytest.approx(-0.2533)


def test_w2_coefficients_spot_checks():
    by_ops = {t.ops: t.coeff for t in required_terms(InequalityKind.W2).terms}
    assert by_ops[("I", "I", "Z")] == pytest.approx(0.3520)
    assert by_ops[("A3", "B3", "Z")] == pytest.approx(0.2228)
    assert by_ops[("A1", "B3", "X")] == pytest.approx(-0.2298)
    assert by_ops[("A3", "B1", "X")] == pytest.approx(-0.2298)
