"""Sign of the action of a real automorphism on orientations of the determinant bundle.

Each calculator exists in two forms: ``sign_*`` returns the sign and
``*_breakdown`` returns a :class:`SignBreakdown` listing every factor, so a
disagreement can be traced term by term.  Signs that have no combinatorial
normal form (action on the D_min bundle, on orientations of the real part,
on Spin semi-orientations, on the trivial-bundle determinant) are inputs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import prod

from .bundles import RealBundle, dual_bundle
from .errors import (
    ConstraintViolation,
    CurveMismatch,
    EmptyRealPart,
    InconsistentFlags,
    NotSeparating,
    PreconditionViolated,
    RankTooSmall,
)
from .pin_spin import Flavor, PinCycleData, check_pin_cycles_match, pin_action_signature
from .surface_topology import (
    RealCurveType,
    RealDiffeoData,
    check_sign,
    flags_on,
    orientation_double_signature,
    restrict,
    signature,
)


@dataclass(frozen=True)
class AutomorphismData:
    diffeo: RealDiffeoData
    pin_cycles: tuple
    s_trivial: int = 1
    d_min_sign: int = 1
    o_sign: int = 1
    spin_semiorientation_sign: int = 1
    spin_w_bits: tuple = None

    def __post_init__(self):
        object.__setattr__(self, "pin_cycles", tuple(self.pin_cycles))
        bits = self.spin_w_bits
        bits = (0,) * self.diffeo.curve.k if bits is None else tuple(bits)
        object.__setattr__(self, "spin_w_bits", bits)
        for name in ("s_trivial", "d_min_sign", "o_sign", "spin_semiorientation_sign"):
            check_sign(getattr(self, name), name)
        if len(bits) != self.diffeo.curve.k or any(isinstance(b, bool) or b not in (0, 1) for b in bits):
            raise InconsistentFlags("spin_w_bits needs one 0/1 entry per real component", "spin_w_bits")
        if len(self.pin_cycles) != len(self.diffeo.cycles):
            raise InconsistentFlags("pin_cycles must align with the component cycles", "pin_cycles")

    @classmethod
    def build(cls, bundle, diffeo, pin_plus_signs=None, **signs):
        """Assemble the data for ``bundle``, deriving the per-cycle Pin records.

        ``pin_plus_signs`` lists ``s_{p+}`` per cycle (default all ``+1``).
        """
        cycs = diffeo.cycles
        if pin_plus_signs is None:
            pin_plus_signs = (1,) * len(cycs)
        pin_cycles = tuple(
            PinCycleData(len(c), bundle.w1_bits[c[0] - 1] == 0, flag, s)
            for c, flag, s in zip(cycs, diffeo.cycle_return_flags, pin_plus_signs)
        )
        return cls(diffeo, pin_cycles, **signs)

    @classmethod
    def identity(cls, bundle, det_h1_sign=1):
        return cls.build(bundle, RealDiffeoData.identity(bundle.curve, det_h1_sign))

    @property
    def pin_plus_sign(self):
        return pin_action_signature(self.pin_cycles, Flavor.PLUS)


@dataclass(frozen=True)
class SignBreakdown:
    sign: int
    factors: dict
    exponents: dict = field(default_factory=dict)

    def as_dict(self):
        out = dict(self.factors)
        out.update({f"{k}_exponent": v for k, v in self.exponents.items()})
        return out


def _finish(factors, exponents=None):
    sign = prod(factors.values())
    return SignBreakdown(sign, factors, exponents or {})


def _check(bundle, auto):
    if bundle.curve != auto.diffeo.curve:
        raise CurveMismatch("bundle and automorphism live on different curves", "curve")
    check_pin_cycles_match(auto.pin_cycles, auto.diffeo, bundle.w1_bits)


def _perm_on(diffeo, subset):
    return restrict(diffeo.component_perm, subset)


def sign_trivial_bundle_breakdown(auto, n):
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise PreconditionViolated(f"rank n must be a positive integer, got {n!r}", "n")
    curve = auto.diffeo.curve
    check_pin_cycles_match(auto.pin_cycles, auto.diffeo, (0,) * curve.k)
    det = auto.diffeo.det_h1_sign
    return _finish(
        {"eps(Phi_p)": auto.pin_plus_sign, "s_C^n(Phi)": auto.s_trivial, "det(phi*)^n": det**n},
        {"det(phi*)": n},
    )


def sign_trivial_bundle(auto, n):
    return sign_trivial_bundle_breakdown(auto, n).sign


def epsilon_dmin(diffeo, bundle):
    """Action on the orientations of the jet space of a minimal divisor.

    Signature of the permutation of the non-orientable components, corrected
    on separating curves whose halves are swapped when ``deg(bundle) - r+_min`` is
    not a multiple of 4.
    """
    eps_minus = signature(_perm_on(diffeo, bundle.non_orientable))
    if not diffeo.curve.separating:
        return eps_minus
    if (bundle.degree - bundle.k_minus) % 4 == 0 or not diffeo.swaps_halves:
        return eps_minus
    return -eps_minus


def sign_general_breakdown(bundle, auto):
    if bundle.curve.k < 1:
        raise EmptyRealPart("the curve has no real component", "curve")
    _check(bundle, auto)
    d = auto.diffeo
    sigma_minus = orientation_double_signature(
        _perm_on(d, bundle.non_orientable), flags_on(d, bundle.non_orientable)
    )
    return _finish(
        {
            "eps(Phi_p+)": auto.pin_plus_sign,
            "eps(Phi_Dmin)": auto.d_min_sign,
            "eps(phi_dmin)": epsilon_dmin(d, bundle),
            "eps(sigma^-_phi)": sigma_minus,
            "det(phi*)^rank": d.det_h1_sign**bundle.rank,
        },
        {"det(phi*)": bundle.rank},
    )


def sign_general(bundle, auto):
    return sign_general_breakdown(bundle, auto).sign


def sign_separating_breakdown(bundle, auto):
    if not bundle.curve.separating:
        raise NotSeparating("the curve is not separating", "curve")
    _check(bundle, auto)
    d = auto.diffeo
    # (deg + k_-) is even by the parity invariant of RealBundle
    h_exp = (bundle.degree + bundle.k_minus) // 2
    return _finish(
        {
            "eps(Phi_p+)": auto.pin_plus_sign,
            "det(Phi_o)": auto.o_sign,
            "eps(sigma^RSigma)^H": d.halves_sign ** (h_exp % 2),
            "eps(phi^-_RSigma)": signature(_perm_on(d, bundle.non_orientable)),
            "det(phi*)^rank": d.det_h1_sign**bundle.rank,
        },
        {"H": h_exp, "det(phi*)": bundle.rank},
    )


def sign_separating(bundle, auto):
    return sign_separating_breakdown(bundle, auto).sign


def spin_support(auto):
    return tuple(i + 1 for i, b in enumerate(auto.spin_w_bits) if b)


def check_spin_preconditions(bundle, auto):
    if bundle.curve.k < 1:
        raise EmptyRealPart("the curve has no real component", "curve")
    if bundle.degree % 2:
        raise PreconditionViolated("the Spin formula needs an even degree", "degree")
    if any(bundle.w1_bits):
        raise PreconditionViolated("the Spin formula needs w1 = 0 on every component", "w1_bits")
    # a real square root of the determinant line has degree deg/2, so w_xi has that parity
    if (sum(auto.spin_w_bits) - bundle.degree // 2) % 2:
        raise PreconditionViolated("sum(spin_w_bits) must have the parity of deg/2", "spin_w_bits")


def sign_spin_breakdown(bundle, auto):
    check_spin_preconditions(bundle, auto)
    _check(bundle, auto)
    d = auto.diffeo
    support = spin_support(auto)
    try:
        perm_w = _perm_on(d, support)
    except ConstraintViolation:
        raise PreconditionViolated("w_xi must be preserved by the diffeomorphism", "spin_w_bits") from None
    sigma_w = orientation_double_signature(perm_w, flags_on(d, support))
    semi_exp = (1 - bundle.curve.genus) % 2
    pin_plus = auto.pin_plus_sign
    if pin_plus != pin_action_signature(auto.pin_cycles, Flavor.MINUS):
        raise InconsistentFlags("Pin+ and Pin- actions must agree on an orientable real part", "pin_cycles")
    return _finish(
        {
            "eps(Phi_p+-)": pin_plus,
            "eps(Phi_o,xi)^(1-g)": auto.spin_semiorientation_sign**semi_exp,
            "eps(sigma^w_xi)": sigma_w,
            "det(phi*)^rank": d.det_h1_sign**bundle.rank,
        },
        {"eps(Phi_o,xi)": semi_exp, "det(phi*)": bundle.rank},
    )


def sign_spin(bundle, auto):
    return sign_spin_breakdown(bundle, auto).sign


def sign_rank_reduction_breakdown(bundle, auto, sign_det_line):
    if bundle.rank < 2:
        raise RankTooSmall(f"rank reduction needs rank >= 2, got {bundle.rank}", "rank")
    check_sign(sign_det_line, "sign_det_line")
    _check(bundle, auto)
    det = auto.diffeo.det_h1_sign
    return _finish(
        {
            "eps(Phi_p+)": auto.pin_plus_sign,
            "det(phi*)^(rank-1)": det ** (bundle.rank - 1),
            "sign_det_line": sign_det_line,
        },
        {"det(phi*)": bundle.rank - 1},
    )


def sign_rank_reduction(bundle, auto, sign_det_line):
    return sign_rank_reduction_breakdown(bundle, auto, sign_det_line).sign


def applicable_formulas(bundle, auto):
    """Names of the sign formulas whose preconditions ``(bundle, auto)`` meets."""
    names = []
    if bundle.curve.k >= 1:
        names.append("general")
    if bundle.curve.separating:
        names.append("separating")
    try:
        check_spin_preconditions(bundle, auto)
        names.append("spin")
    except (PreconditionViolated, EmptyRealPart):
        pass
    return names


FORMULAS = {"general": sign_general, "separating": sign_separating, "spin": sign_spin}


def verify_duality(bundle, auto):
    """Compare every applicable formula on ``bundle`` and on its dual.

    With orientable real part the automorphism transports to the dual with all
    its combinatorial signs unchanged.
    """
    if any(bundle.w1_bits):
        raise PreconditionViolated("duality needs an orientable real part", "w1_bits")
    names = applicable_formulas(bundle, auto)
    if not names:
        raise PreconditionViolated("no sign formula applies to this input", "curve")
    dual = dual_bundle(bundle)
    return all(FORMULAS[name](bundle, auto) == FORMULAS[name](dual, auto) for name in names)


@dataclass(frozen=True)
class TensorWitness:
    bundle: RealBundle
    automorphism: AutomorphismData
    sign_on_bundle: int
    sign_on_dual: int
    tensor_sign: int

    @property
    def product_sign(self):
        return self.sign_on_bundle * self.sign_on_dual

    @property
    def sign_pair(self):
        return (self.product_sign, self.tensor_sign)


def tensor_nonmultiplicativity_witness():
    """A line bundle ``L`` where ``Det L (x) Det L*`` and ``Det(L (x) L*)`` disagree.

    Duality makes the action on the product ``+1`` while ``L (x) L*`` is the
    trivial bundle, on which the induced map acts by ``det(phi*) = -1``.
    """
    curve = RealCurveType(2, 1, False)
    bundle = RealBundle(curve, 1, 0, (0,))
    auto = AutomorphismData.identity(bundle, det_h1_sign=-1)
    on_bundle = sign_general(bundle, auto)
    on_dual = sign_general(dual_bundle(bundle), auto)
    trivial = RealBundle(curve, 1, 0, (0,))
    induced = AutomorphismData.identity(trivial, det_h1_sign=auto.diffeo.det_h1_sign)
    return TensorWitness(bundle, auto, on_bundle, on_dual, sign_trivial_bundle(induced, 1))


__all__ = [
    "AutomorphismData",
    "FORMULAS",
    "SignBreakdown",
    "TensorWitness",
    "applicable_formulas",
    "check_spin_preconditions",
    "epsilon_dmin",
    "sign_general",
    "sign_general_breakdown",
    "sign_rank_reduction",
    "sign_rank_reduction_breakdown",
    "sign_separating",
    "sign_separating_breakdown",
    "sign_spin",
    "sign_spin_breakdown",
    "sign_trivial_bundle",
    "sign_trivial_bundle_breakdown",
    "spin_support",
    "tensor_nonmultiplicativity_witness",
]
