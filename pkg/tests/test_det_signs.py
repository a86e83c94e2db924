import random
from dataclasses import replace
from itertools import permutations

import pytest

from realorient.bundles import RealBundle, dual_bundle
from realorient.det_signs import (
    AutomorphismData,
    epsilon_dmin,
    sign_general,
    sign_general_breakdown,
    sign_rank_reduction,
    sign_separating,
    sign_separating_breakdown,
    sign_spin,
    sign_trivial_bundle,
    tensor_nonmultiplicativity_witness,
    verify_duality,
)
from realorient.errors import (
    CurveMismatch,
    EmptyRealPart,
    InconsistentFlags,
    NotSeparating,
    PreconditionViolated,
    RankTooSmall,
)
from realorient.surface_topology import RealCurveType, RealDiffeoData
from realorient.verification import curve_types, random_separating_input, sweep_factor_flips


def ident(N, **kw):
    det = kw.pop("det_h1_sign", 1)
    return replace(AutomorphismData.identity(N, det), **kw)


NSEP = RealCurveType(2, 1, False)
SEP = RealCurveType(1, 2, True)


def test_trivial_bundle_examples():
    N = RealBundle(NSEP, 1, 0, (0,))
    assert sign_trivial_bundle(ident(N), 5) == 1
    assert sign_trivial_bundle(ident(N, det_h1_sign=-1), 2) == 1
    assert sign_trivial_bundle(ident(N, det_h1_sign=-1), 3) == -1


def test_epsilon_dmin_examples():
    N = RealBundle(NSEP, 1, 1, (1,))
    assert epsilon_dmin(RealDiffeoData.identity(NSEP), N) == 1
    N = RealBundle(SEP, 1, 2, (0, 0))
    assert epsilon_dmin(RealDiffeoData.on_separating(SEP, (1, 2), True), N) == -1
    N = RealBundle(SEP, 1, 6, (1, 1))
    assert epsilon_dmin(RealDiffeoData.on_separating(SEP, (2, 1), True), N) == -1
    assert epsilon_dmin(RealDiffeoData.on_separating(SEP, (2, 1), False), N) == -1


def test_general_examples():
    N = RealBundle(NSEP, 2, 0, (0,))
    assert sign_general(N, ident(N)) == 1
    assert sign_general(N, ident(N, d_min_sign=-1)) == -1
    assert sign_general(N, ident(N, det_h1_sign=-1)) == 1
    empty = RealBundle(RealCurveType(2, 0, False), 1, 0, ())
    with pytest.raises(EmptyRealPart):
        sign_general(empty, ident(empty))


def test_separating_examples():
    N = RealBundle(SEP, 1, 4, (1, 1))
    a = AutomorphismData.build(N, RealDiffeoData.on_separating(SEP, (1, 2), True))
    assert sign_separating(N, a) == -1
    assert sign_separating_breakdown(N, a).exponents["H"] == 3
    N = RealBundle(SEP, 1, 4, (0, 0))
    a = AutomorphismData.build(N, RealDiffeoData.on_separating(SEP, (1, 2), True))
    assert sign_separating(N, a) == 1
    assert sign_separating(N, ident(N)) == 1
    with pytest.raises(NotSeparating):
        M = RealBundle(NSEP, 1, 0, (0,))
        sign_separating(M, ident(M))


def test_spin_examples():
    g1 = RealBundle(RealCurveType(1, 1, False), 1, 0, (0,))
    assert sign_spin(g1, ident(g1, spin_semiorientation_sign=-1)) == 1
    N = RealBundle(NSEP, 1, 0, (0,))
    assert sign_spin(N, ident(N, spin_semiorientation_sign=-1)) == -1
    assert sign_spin(N, ident(N)) == 1
    with pytest.raises(PreconditionViolated):
        odd = RealBundle(NSEP, 1, 1, (1,))
        sign_spin(odd, ident(odd))
    with pytest.raises(PreconditionViolated):
        sign_spin(N, ident(N, spin_w_bits=(1,)))


def test_rank_reduction_examples():
    N2 = RealBundle(NSEP, 2, 0, (0,))
    N3 = RealBundle(NSEP, 3, 0, (0,))
    assert sign_rank_reduction(N2, ident(N2), 1) == 1
    assert sign_rank_reduction(N3, ident(N3, det_h1_sign=-1), 1) == 1
    assert sign_rank_reduction(N2, ident(N2, det_h1_sign=-1), -1) == 1
    with pytest.raises(RankTooSmall):
        N1 = RealBundle(NSEP, 1, 0, (0,))
        sign_rank_reduction(N1, ident(N1), 1)


def test_input_consistency_errors():
    N = RealBundle(NSEP, 1, 0, (0,))
    other = RealBundle(RealCurveType(3, 1, False), 1, 0, (0,))
    with pytest.raises(CurveMismatch):
        sign_general(other, ident(N))
    bad = AutomorphismData.build(RealBundle(NSEP, 1, 1, (1,)), RealDiffeoData.identity(NSEP))
    with pytest.raises(InconsistentFlags):
        sign_general(N, bad)


def test_duality_examples_and_sweep():
    N = RealBundle(SEP, 1, 4, (0, 0))
    a = AutomorphismData.build(N, RealDiffeoData.on_separating(SEP, (1, 2), True))
    assert sign_separating(N, a) == sign_separating(dual_bundle(N), a)
    assert verify_duality(N, a)
    assert verify_duality(N, ident(N))
    rng = random.Random(3)
    for _ in range(300):
        assert verify_duality(*random_separating_input(rng))
    with pytest.raises(PreconditionViolated):
        M = RealBundle(NSEP, 1, 1, (1,))
        verify_duality(M, ident(M))


def test_tensor_witness():
    w = tensor_nonmultiplicativity_witness()
    assert w.sign_pair == (1, -1)
    assert w.automorphism.diffeo.det_h1_sign == -1
    assert verify_duality(w.bundle, w.automorphism)


def small_family():
    """Orientable-real-part bundles on small separating curves with every permutation."""
    for curve in curve_types(3, min_k=1):
        if not curve.separating:
            continue
        for perm in permutations(range(1, curve.k + 1)):
            for swaps in (False, True):
                d = RealDiffeoData.on_separating(curve, perm, swaps)
                for det in (1, -1):
                    yield curve, replace(d, det_h1_sign=det)


def test_separating_equals_spin_on_overlap():
    checked = 0
    for curve, d in small_family():
        for deg in (-4, -2, 0, 2, 4):
            for rank in (1, 2):
                N = RealBundle(curve, rank, deg, (0,) * curve.k)
                for mask in range(2 ** len(d.cycles)):
                    w = [0] * curve.k
                    for i, cyc in enumerate(d.cycles):
                        if mask >> i & 1:
                            for c in cyc:
                                w[c - 1] = 1
                    if (sum(w) - deg // 2) % 2:
                        continue
                    a = AutomorphismData.build(N, d, spin_w_bits=tuple(w))
                    assert sign_separating(N, a) == sign_spin(N, a)
                    checked += 1
    assert checked > 100


def test_general_agrees_with_separating():
    # with d_min_sign = o_sign the two corollaries must coincide
    rng = random.Random(5)
    for curve, d in small_family():
        for deg in range(-4, 5):
            for bits in range(2 ** curve.k):
                w1 = tuple(bits >> i & 1 for i in range(curve.k))
                if (sum(w1) - deg) % 2 or any(len({w1[c - 1] for c in cyc}) > 1 for cyc in d.cycles):
                    continue
                N = RealBundle(curve, rng.randint(1, 3), deg, w1)
                s = rng.choice((1, -1))
                pins = [rng.choice((1, -1)) for _ in d.cycles]
                a = AutomorphismData.build(N, d, pins, d_min_sign=s, o_sign=s)
                assert sign_general(N, a) == sign_separating(N, a)


def test_general_reduces_to_trivial():
    for curve in curve_types(3, min_k=1):
        N = RealBundle(curve, 1, 0, (0,) * curve.k)
        for det in (1, -1):
            for s in (1, -1):
                a = ident(N, det_h1_sign=det, d_min_sign=s, s_trivial=s)
                assert sign_general(N, a) == sign_trivial_bundle(a, 1)


def test_breakdown_product():
    N = RealBundle(SEP, 3, 2, (1, 1))
    a = AutomorphismData.build(N, RealDiffeoData.on_separating(SEP, (2, 1), True, -1), [-1], d_min_sign=-1)
    bd = sign_general_breakdown(N, a)
    prod = 1
    for v in bd.factors.values():
        prod *= v
    assert prod == bd.sign == sign_general(N, a)


def test_factor_flips():
    report = sweep_factor_flips(3)
    assert report.cases_checked > 1000
    assert report.failures == []
