from itertools import product

import pytest
from hypothesis import given, strategies as st

from realorient.errors import CaseMismatch, ConstraintViolation, DegreeOutOfRange, NoFixedPoint, OutOfRange
from realorient.moduli import (
    GENERATORS,
    HypersurfaceSpin,
    ZERO,
    Branch,
    ClassExpression,
    ModuliSetup,
    Recipe,
    apply_spin_vanishings,
    cp3_orientability_verdict,
    det_pi_decomposition,
    genus0_orientable,
    hypersurface_branch,
    hypersurface_spin_check,
    hypersurface_w1,
    marked_bundle_orientable,
    polarization_recipe,
)

expressions = st.frozensets(st.sampled_from(GENERATORS)).map(ClassExpression)


@given(expressions, expressions, expressions)
def test_class_expression_group_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert a + ZERO == a
    assert (a + a).is_zero


def test_unknown_generator_rejected():
    with pytest.raises(ConstraintViolation):
        ClassExpression.of("w1_typo")
    with pytest.raises(ConstraintViolation):
        ClassExpression.from_coefficients({"w1_H": 1, "w1_nope": 0})


def setup(case, **kw):
    base = dict(ambient_half_dim=3, genus=2, marked_points=0, case=case, c1d=4)
    base.update(kw)
    return ModuliSetup(**base)


def test_decomposition_spin_genus_parity():
    for g in range(11):
        expr = det_pi_decomposition(setup("spin", genus=g))
        assert expr.coefficient("w1_OX_spin") == (1 - g) % 2


def test_decomposition_separating_h():
    expr = det_pi_decomposition(setup("separating", c1d=4, k_minus=2))
    assert expr.coefficient("w1_H") == 1
    assert det_pi_decomposition(setup("separating", c1d=4, k_minus=0)).coefficient("w1_H") == 0


def test_decomposition_polarized():
    with_section = det_pi_decomposition(setup("polarized-transverse", has_polarizing_section=True))
    without = det_pi_decomposition(setup("polarized-transverse", has_polarizing_section=False))
    assert with_section.coefficient("w1_frakD") == 0
    assert without.coefficient("w1_frakD") == 1
    assert with_section.coefficient("w1_Tpol") == 1


def test_decomposition_general():
    expr = det_pi_decomposition(setup("general", ambient_half_dim=2, marked_points=2))
    assert expr.support == {"w1_pin_plus", "w1_frakD", "w1_Tpol", "w1_detH1_minus", "w1_Lr"}
    assert det_pi_decomposition(setup("general")).coefficient("w1_Lr") == 0


def test_setup_case_fields():
    with pytest.raises(CaseMismatch):
        setup("general", k_minus=1)
    with pytest.raises(CaseMismatch):
        setup("separating")
    with pytest.raises(CaseMismatch):
        setup("spin", has_polarizing_section=True)
    with pytest.raises(CaseMismatch):
        setup("bogus")
    with pytest.raises(ConstraintViolation):
        setup("spin", c1d=3)


def test_spin_check_examples():
    assert hypersurface_spin_check(4, 1) == HypersurfaceSpin(True, True, True, True)
    s = hypersurface_spin_check(4, 3)
    assert s.unique_real_spin and not s.w_xi_zero
    assert not hypersurface_spin_check(5, 2).unique_real_spin
    with pytest.raises(OutOfRange):
        hypersurface_spin_check(2, 1)
    with pytest.raises(OutOfRange):
        hypersurface_spin_check(4, 0)


def test_spin_implies_orientable():
    for N, d in product(range(3, 30), range(1, 40)):
        s = hypersurface_spin_check(N, d)
        assert not s.rx_spin or s.rx_orientable
        assert not s.w_xi_zero or s.unique_real_spin


def test_hypersurface_w1_branches():
    cp3 = hypersurface_w1(4, 1, 0, True)
    assert cp3.support == {"w1_pin_pm"}
    assert apply_spin_vanishings(cp3, hypersurface_spin_check(4, 1)).is_zero
    assert hypersurface_w1(3, 2, 1, True).coefficient("w1_Tpol") == 1
    assert hypersurface_branch(3, 2) is Branch.EMPTY_QUADRIC
    e = hypersurface_w1(4, 4, 2, True)
    assert e.coefficient("w1_pin_plus") == 1 and e.coefficient("w1_pin_pm") == 0
    with pytest.raises(DegreeOutOfRange):
        hypersurface_w1(4, 0, 0, True)
    with pytest.raises(DegreeOutOfRange):
        hypersurface_w1(4, 6, 0, True)
    with pytest.raises(NoFixedPoint):
        hypersurface_w1(4, 1, 0, False)


def test_det_h1_coefficient_matches_delta_minus_one_in_conjugate_branch():
    for N in range(3, 13):
        for d in range(1, N + 2):
            if hypersurface_branch(N, d) is Branch.CONJUGATE:
                assert hypersurface_w1(N, d, 1, True).coefficient("w1_detH1_minus") == (d - 1) % 2


def test_cp3_verdict():
    assert cp3_orientability_verdict()
    assert hypersurface_w1(4, 5, 0, True).coefficient("w1_pin_pm") == 1


def test_marked_bundle():
    sep = setup("separating", k_minus=0, tau_is_identity=False)
    r = marked_bundle_orientable(sep, [0, 1])
    assert (r.Lr_orientable, r.H_orientable) == (True, True)
    sep_id = setup("separating", k_minus=0)
    assert marked_bundle_orientable(sep_id, [3, 0]).H_orientable
    undecided = marked_bundle_orientable(sep_id, [2, 2])
    assert not undecided.Lr_orientable and not undecided.Lr_determined
    spin = setup("spin")
    assert marked_bundle_orientable(spin, [3, 4]).Lr_orientable
    assert not marked_bundle_orientable(spin, [3, 2]).Lr_orientable
    with pytest.raises(CaseMismatch):
        marked_bundle_orientable(setup("general"), [3])


def test_genus0():
    assert genus0_orientable(3, True, True, 2)
    assert not genus0_orientable(2, True, True, 2)
    assert not genus0_orientable(3, False, True, 2)
    assert not genus0_orientable(3, True, True, -1)


def test_polarization_recipe():
    assert polarization_recipe(4, 1) is Recipe.ConjugateQuadricPairs
    assert polarization_recipe(4, 4) is Recipe.PlusRealHyperplane
    assert polarization_recipe(3, 2) is Recipe.PlusEmptyRealQuadric
    with pytest.raises(DegreeOutOfRange):
        polarization_recipe(3, 5)
