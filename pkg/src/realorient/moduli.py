"""Symbolic first Stiefel-Whitney classes of real moduli spaces of maps.

Classes are formal mod-2 sums over a closed vocabulary of generators; the
zero sum is the orientable verdict.  Nothing here evaluates a class on a
cycle.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import CaseMismatch, ConstraintViolation, DegreeOutOfRange, NoFixedPoint, OutOfRange

GENERATORS = (
    "w1_pin_plus",
    "w1_pin_pm",
    "w1_Lr",
    "w1_Tpol",
    "w1_detH1_minus",
    "w1_Rw",
    "w1_H",
    "w1_OX",
    "w1_OX_spin",
    "w1_frakD",
    "w1_H1w",
)


@dataclass(frozen=True)
class ClassExpression:
    """Mod-2 combination of the generators in :data:`GENERATORS`.

    Stored as the frozenset of generators with coefficient 1.
    """

    support: frozenset = frozenset()

    def __post_init__(self):
        support = frozenset(self.support)
        unknown = support - set(GENERATORS)
        if unknown:
            raise ConstraintViolation(f"unknown generator(s): {sorted(unknown)}", "coefficients")
        object.__setattr__(self, "support", support)

    @classmethod
    def from_coefficients(cls, coefficients):
        for name, c in coefficients.items():
            if name not in GENERATORS:
                raise ConstraintViolation(f"unknown generator {name!r}", "coefficients")
            if isinstance(c, bool) or not isinstance(c, int):
                raise ConstraintViolation(f"coefficient of {name} must be an integer", "coefficients")
        return cls(frozenset(n for n, c in coefficients.items() if c % 2))

    @classmethod
    def of(cls, *names):
        return cls.from_coefficients({n: names.count(n) for n in names})

    @property
    def coefficients(self):
        return {g: int(g in self.support) for g in GENERATORS}

    def coefficient(self, name):
        if name not in GENERATORS:
            raise ConstraintViolation(f"unknown generator {name!r}", "coefficients")
        return int(name in self.support)

    @property
    def is_zero(self):
        return not self.support

    def __add__(self, other):
        return ClassExpression(self.support ^ other.support)

    def without(self, *names):
        """Set the given generators to zero (they are known to vanish)."""
        return ClassExpression(self.support - set(names))

    def __str__(self):
        return " + ".join(g for g in GENERATORS if g in self.support) or "0"


ZERO = ClassExpression()


class Case(str, Enum):
    GENERAL = "general"
    SEPARATING = "separating"
    SPIN = "spin"
    POLARIZED = "polarized-transverse"


@dataclass(frozen=True)
class ModuliSetup:
    """Discrete data of a real moduli problem.

    ``k_minus`` is used only in the separating case and
    ``has_polarizing_section`` only in the polarized case; both must be
    ``None`` otherwise.
    """

    ambient_half_dim: int
    genus: int
    marked_points: int
    case: Case
    c1d: int
    tau_has_fixed_point: bool = True
    tau_is_identity: bool = True
    k_minus: int = None
    real_part_spin: bool = False
    real_part_pin_plus: bool = False
    has_polarizing_section: bool = None

    def __post_init__(self):
        try:
            object.__setattr__(self, "case", Case(self.case))
        except ValueError:
            raise CaseMismatch(f"unknown case {self.case!r}", "case") from None
        for name, low in (("ambient_half_dim", 2), ("genus", 0), ("marked_points", 0)):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int) or v < low:
                raise ConstraintViolation(f"{name} must be an integer >= {low}, got {v!r}", name)
        if isinstance(self.c1d, bool) or not isinstance(self.c1d, int):
            raise ConstraintViolation("c1d must be an integer", "c1d")
        for name in ("tau_has_fixed_point", "tau_is_identity", "real_part_spin", "real_part_pin_plus"):
            if not isinstance(getattr(self, name), bool):
                raise ConstraintViolation(f"{name} must be a boolean", name)
        sep = self.case is Case.SEPARATING
        if sep != (self.k_minus is not None):
            raise CaseMismatch("k_minus is given exactly in the separating case", "k_minus")
        if sep:
            if isinstance(self.k_minus, bool) or not isinstance(self.k_minus, int) or self.k_minus < 0:
                raise ConstraintViolation("k_minus must be a nonnegative integer", "k_minus")
            if (self.c1d + self.k_minus) % 2:
                raise ConstraintViolation("c1d + k_minus must be even", "k_minus")
        pol = self.case is Case.POLARIZED
        if pol != (self.has_polarizing_section is not None):
            raise CaseMismatch(
                "has_polarizing_section is given exactly in the polarized case", "has_polarizing_section"
            )
        if pol and not isinstance(self.has_polarizing_section, bool):
            raise ConstraintViolation("has_polarizing_section must be a boolean", "has_polarizing_section")
        if self.case is Case.SPIN and self.c1d % 2:
            raise ConstraintViolation("the spin case needs c1d even", "c1d")


def _det_h1_term(n):
    return ("w1_detH1_minus",) * ((n - 1) % 2)


def det_pi_decomposition(s):
    """``w_1`` of the pulled-back determinant line of the family of operators."""
    if not isinstance(s, ModuliSetup):
        raise CaseMismatch("expected a ModuliSetup", "setup")
    terms = list(_det_h1_term(s.ambient_half_dim))
    if s.case is Case.GENERAL:
        terms += ["w1_pin_plus", "w1_frakD", "w1_Tpol"]
        if s.marked_points > 0:
            terms.append("w1_Lr")
    elif s.case is Case.SEPARATING:
        h_exp = (s.c1d + s.k_minus) // 2
        terms += ["w1_Rw", "w1_pin_plus", "w1_OX"] + ["w1_H"] * (h_exp % 2)
    elif s.case is Case.SPIN:
        terms += ["w1_H1w", "w1_pin_pm"] + ["w1_OX_spin"] * ((1 - s.genus) % 2)
    else:
        terms += ["w1_pin_plus", "w1_Tpol"]
        # a polarizing section orients the bundle D
        if not s.has_polarizing_section:
            terms.append("w1_frakD")
    return ClassExpression.of(*terms)


@dataclass(frozen=True)
class HypersurfaceSpin:
    rx_orientable: bool
    rx_spin: bool
    unique_real_spin: bool
    w_xi_zero: bool


def _check_n(N):
    if isinstance(N, bool) or not isinstance(N, int) or N < 3:
        raise OutOfRange(f"N must be an integer >= 3, got {N!r}", "N")


def hypersurface_spin_check(N, delta):
    """Orientability and Spin data of the real part of a degree-``delta`` hypersurface of CP^N."""
    _check_n(N)
    if isinstance(delta, bool) or not isinstance(delta, int) or delta < 1:
        raise OutOfRange(f"delta must be an integer >= 1, got {delta!r}", "delta")
    orientable = (N + 1 - delta) % 2 == 0
    # w2 of the real part is N(N+1)/2 times the square of the generator
    spin = orientable and (N * (N + 1) // 2) % 2 == 0
    unique = N >= 4 and N % 4 in (0, 3) and (delta - N - 1) % 2 == 0
    return HypersurfaceSpin(orientable, spin, unique, unique and (delta - N - 1) % 4 == 0)


class Branch(str, Enum):
    CONJUGATE = "delta=N+1 mod 4"
    EMPTY_QUADRIC = "delta=N+3 mod 4"
    HYPERPLANE = "delta=N mod 2"


def hypersurface_branch(N, delta):
    _check_n(N)
    if isinstance(delta, bool) or not isinstance(delta, int) or not 1 <= delta <= N + 1:
        raise DegreeOutOfRange(f"delta must lie in 1..{N + 1}, got {delta!r}", "delta")
    if (delta - N) % 2 == 0:
        return Branch.HYPERPLANE
    return Branch.CONJUGATE if (delta - N - 1) % 4 == 0 else Branch.EMPTY_QUADRIC


def hypersurface_w1(N, delta, r, tau_has_fixed_point):
    """``w_1`` of the real moduli space of maps to a polarized hypersurface.

    In the ``delta = N mod 2`` branch the class lives on the locus transverse
    to the polarization.  ``L_0`` is the trivial line, so ``r = 0`` drops it.
    """
    branch = hypersurface_branch(N, delta)
    if isinstance(r, bool) or not isinstance(r, int) or r < 0:
        raise ConstraintViolation(f"r must be a nonnegative integer, got {r!r}", "r")
    if not tau_has_fixed_point:
        raise NoFixedPoint("tau must fix at least one marked point", "tau_has_fixed_point")
    terms = ["w1_detH1_minus"] * (N % 2)
    if r > 0:
        terms.append("w1_Lr")
    if branch is Branch.HYPERPLANE:
        terms += ["w1_pin_plus", "w1_Tpol"]
    else:
        terms.append("w1_pin_pm")
        if branch is Branch.EMPTY_QUADRIC:
            terms.append("w1_Tpol")
    return ClassExpression.of(*terms)


def apply_spin_vanishings(expr, spin):
    """Drop the classes killed by a Spin real part and by ``w_1(xi_0) = 0``."""
    if spin.rx_spin:
        expr = expr.without("w1_pin_pm")
    if spin.w_xi_zero:
        expr = expr.without("w1_H1w")
    return expr


def cp3_orientability_verdict():
    spin = hypersurface_spin_check(4, 1)
    return apply_spin_vanishings(hypersurface_w1(4, 1, 0, True), spin).is_zero


@dataclass(frozen=True)
class MarkedOrientability:
    """``False`` with ``*_determined = False`` means no criterion applied."""

    Lr_orientable: bool
    H_orientable: bool
    Lr_determined: bool
    H_determined: bool


def marked_bundle_orientable(s, real_points_per_component):
    counts = list(real_points_per_component)
    if any(isinstance(c, bool) or not isinstance(c, int) or c < 0 for c in counts):
        raise ConstraintViolation("marked point counts must be nonnegative integers", "real_points_per_component")
    if s.case is Case.SEPARATING:
        ok = not s.tau_is_identity or any(c >= 3 for c in counts)
        return MarkedOrientability(ok, ok, ok, ok)
    if s.case is Case.SPIN:
        ok = bool(counts) and all(c >= 3 for c in counts)
        return MarkedOrientability(ok, False, ok, False)
    raise CaseMismatch(f"marked-point criteria exist for separating and spin, not {s.case.value}", "case")


def genus0_orientable(r, tau_has_fixed_point, rx_spin, c1d):
    return bool(rx_spin and c1d >= 0 and r >= 3 and tau_has_fixed_point)


class Recipe(str, Enum):
    ConjugateQuadricPairs = "ConjugateQuadricPairs"
    PlusRealHyperplane = "PlusRealHyperplane"
    PlusEmptyRealQuadric = "PlusEmptyRealQuadric"


_RECIPES = {
    Branch.CONJUGATE: Recipe.ConjugateQuadricPairs,
    Branch.HYPERPLANE: Recipe.PlusRealHyperplane,
    Branch.EMPTY_QUADRIC: Recipe.PlusEmptyRealQuadric,
}


def polarization_recipe(N, delta):
    return _RECIPES[hypersurface_branch(N, delta)]


__all__ = [
    "Branch",
    "Case",
    "ClassExpression",
    "GENERATORS",
    "HypersurfaceSpin",
    "MarkedOrientability",
    "ModuliSetup",
    "Recipe",
    "ZERO",
    "apply_spin_vanishings",
    "cp3_orientability_verdict",
    "det_pi_decomposition",
    "genus0_orientable",
    "hypersurface_branch",
    "hypersurface_spin_check",
    "hypersurface_w1",
    "marked_bundle_orientable",
    "polarization_recipe",
]
