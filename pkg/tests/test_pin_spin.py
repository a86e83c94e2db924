from itertools import product

import pytest

from realorient.pin_spin import (
    Flavor,
    PinCycleData,
    cycle_pin_minus_sign,
    enumerate_pin_cycles,
    pin_action_signature,
    pin_e,
    pin_group,
    pin_reversal_preserves,
    stabilized_pin_plus_preserved,
    verify_pinori,
)
from realorient.errors import ConstraintViolation


@pytest.mark.parametrize("flavor", list(Flavor))
def test_group_axioms(flavor):
    G = pin_group(flavor)
    for a, b, c in product(G, repeat=3):
        assert (a * b) * c == a * (b * c)
    for a, b in product(G, repeat=2):
        assert a * b in G
    minus_one = -G[0]
    assert all(minus_one * a == a * minus_one for a in G)
    assert pin_e(flavor) * pin_e(flavor) == (G[0] if flavor is Flavor.PLUS else minus_one)


def test_mixed_flavors_rejected():
    with pytest.raises(ConstraintViolation):
        pin_e(Flavor.PLUS) * pin_e(Flavor.MINUS)


@pytest.mark.parametrize("e_sign", [1, -1])
def test_reversal_lift_search(e_sign):
    assert pin_reversal_preserves(True, Flavor.PLUS, e_sign)
    assert pin_reversal_preserves(False, Flavor.PLUS, e_sign)
    assert pin_reversal_preserves(True, Flavor.MINUS, e_sign)
    assert not pin_reversal_preserves(False, Flavor.MINUS, e_sign)


def test_cycle_minus_sign_examples():
    assert cycle_pin_minus_sign(PinCycleData(1, True, -1, 1)) == 1
    assert cycle_pin_minus_sign(PinCycleData(1, False, -1, 1)) == -1
    assert cycle_pin_minus_sign(PinCycleData(1, False, 1, -1)) == -1


def test_action_signature_examples():
    c = lambda s: PinCycleData(1, True, 1, s)  # noqa: E731
    assert pin_action_signature([c(1), c(1)], Flavor.PLUS) == 1
    assert pin_action_signature([c(-1)], Flavor.PLUS) == -1
    assert pin_action_signature([c(-1), c(-1)], Flavor.PLUS) == 1


def test_action_signature_multiplicative():
    cyc = list(enumerate_pin_cycles(2, max_length=1))
    for a in cyc[:40]:
        for b in cyc[:40]:
            for fl in Flavor:
                assert pin_action_signature(a + b, fl) == pin_action_signature(a, fl) * pin_action_signature(b, fl)


def test_pinori_small_and_e_choice_independent():
    assert verify_pinori([])
    for s in (1, -1):
        assert verify_pinori([PinCycleData(1, False, -1, s)])
    for cyc in enumerate_pin_cycles(3):
        assert verify_pinori(cyc, 1) and verify_pinori(cyc, -1)
        for fl in Flavor:
            assert pin_action_signature(cyc, fl, 1) == pin_action_signature(cyc, fl, -1)


def test_stabilized_pin_plus():
    assert stabilized_pin_plus_preserved(True, True)
    assert not stabilized_pin_plus_preserved(True, False)
    assert not stabilized_pin_plus_preserved(False, True)


def test_cycle_data_validation():
    with pytest.raises(ConstraintViolation):
        PinCycleData(0, True, 1, 1)
    with pytest.raises(ConstraintViolation):
        PinCycleData(1, True, 2, 1)
