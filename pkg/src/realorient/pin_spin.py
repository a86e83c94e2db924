"""Finite Pin_1 arithmetic and the action of real automorphisms on Pin structures.

``Pin_1^+`` and ``Pin_1^-`` are modelled by the four elements ``{+1, -1, +e, -e}``
with ``e**2 = +1`` or ``e**2 = -1``.  The projection to ``O_1`` sends ``±1`` to
the identity and ``±e`` to the reflection.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import product as iproduct
from math import prod

from .errors import ConstraintViolation, InconsistentFlags
from .surface_topology import check_sign, orientation_double_signature


class Flavor(str, Enum):
    PLUS = "plus"
    MINUS = "minus"

    @property
    def e_squared(self):
        return 1 if self is Flavor.PLUS else -1


@dataclass(frozen=True)
class PinElement:
    """``sign * e**has_e`` in ``Pin_1`` of the given flavor."""

    sign: int
    has_e: bool
    flavor: Flavor

    def __mul__(self, other):
        if self.flavor is not other.flavor:
            raise ConstraintViolation("cannot multiply Pin+ and Pin- elements", "flavor")
        s = self.sign * other.sign
        if self.has_e and other.has_e:
            s *= self.flavor.e_squared
        return PinElement(s, self.has_e != other.has_e, self.flavor)

    def __neg__(self):
        return PinElement(-self.sign, self.has_e, self.flavor)

    @property
    def covers_reflection(self):
        return self.has_e

    def __repr__(self):
        return f"{'+' if self.sign > 0 else '-'}{'e' if self.has_e else '1'}[{self.flavor.value}]"


def pin_group(flavor):
    flavor = Flavor(flavor)
    return [PinElement(s, h, flavor) for h in (False, True) for s in (1, -1)]


def pin_unit(flavor):
    return PinElement(1, False, Flavor(flavor))


def pin_e(flavor, sign=1):
    """A lift of the reflection; ``sign=-1`` picks the other lift ``-e``."""
    return PinElement(sign, True, Flavor(flavor))


@lru_cache(maxsize=None)
def pin_reversal_preserves(orientable, flavor, e_sign=1):
    """Whether the base-reversing map ``(t, v) -> (1 - t, v)`` lifts to the Pin structure.

    The model bundle is ``[0,1] x Pin / (0, p) ~ (1, g1 p)`` with ``g1 = 1`` over
    an orientable circle and ``g1 = e`` otherwise.  Lifts of the identity on
    fibres are left multiplications by ``c`` with ``c`` over the identity of
    ``O_1``; a lift exists iff some ``c`` satisfies
    ``c p = g1 (c (g1 p))`` for all ``p``.  ``e_sign`` selects which of the two
    lifts of the reflection is used as ``e``.
    """
    flavor = Flavor(flavor)
    group = pin_group(flavor)
    glue = pin_unit(flavor) if orientable else pin_e(flavor, e_sign)
    candidates = [c for c in group if not c.covers_reflection]
    return any(all(c * p == glue * (c * (glue * p)) for p in group) for c in candidates)


@dataclass(frozen=True)
class PinCycleData:
    """Per-cycle data of a real automorphism acting on Pin structures."""

    length: int
    bundle_orientable_over_cycle: bool
    s_phi: int
    s_pin_plus: int

    def __post_init__(self):
        if isinstance(self.length, bool) or not isinstance(self.length, int) or self.length < 1:
            raise ConstraintViolation(f"cycle length must be >= 1, got {self.length!r}", "length")
        if not isinstance(self.bundle_orientable_over_cycle, bool):
            raise ConstraintViolation("bundle_orientable_over_cycle must be a boolean", "bundle_orientable_over_cycle")
        check_sign(self.s_phi, "s_phi")
        check_sign(self.s_pin_plus, "s_pin_plus")


def cycle_pin_minus_sign(c, e_sign=1):
    """``s_{p-}(c)`` recovered from ``s_{p+}(c)``.

    The two actions differ exactly when the base is reversed (``s_phi = -1``)
    and the reversal lifts to one flavor but not the other.
    """
    if c.s_phi == 1:
        return c.s_pin_plus
    orientable = c.bundle_orientable_over_cycle
    same = pin_reversal_preserves(orientable, Flavor.PLUS, e_sign) == pin_reversal_preserves(
        orientable, Flavor.MINUS, e_sign
    )
    return c.s_pin_plus if same else -c.s_pin_plus


def pin_action_signature(cycles, flavor, e_sign=1):
    """Signature of the permutation induced on the Pin structures of the real part."""
    flavor = Flavor(flavor)
    if flavor is Flavor.PLUS:
        return prod(c.s_pin_plus for c in cycles)
    return prod(cycle_pin_minus_sign(c, e_sign) for c in cycles)


def permutation_from_cycles(lengths, start=1):
    """One-line mapping whose cycles are consecutive blocks of the given lengths."""
    mapping = {}
    x = start
    for length in lengths:
        block = list(range(x, x + length))
        for i, j in enumerate(block):
            mapping[j] = block[(i + 1) % length]
        x += length
    return mapping


def verify_pinori(cycles, e_sign=1):
    """Check ``eps(Phi_p+) = eps(Phi_p-) * eps(sigma^-_phi)`` from independent pieces."""
    cycles = list(cycles)
    plus = pin_action_signature(cycles, Flavor.PLUS)
    minus = prod(cycle_pin_minus_sign(c, e_sign) for c in cycles)
    bad = [c for c in cycles if not c.bundle_orientable_over_cycle]
    sigma_minus = _orientation_sign_of_blocks(tuple(c.length for c in bad), tuple(c.s_phi for c in bad))
    return plus == minus * sigma_minus


@lru_cache(maxsize=None)
def _orientation_sign_of_blocks(lengths, flags):
    return orientation_double_signature(permutation_from_cycles(lengths), flags)


def enumerate_pin_cycles(max_cycles, max_length=2):
    """Every list of at most ``max_cycles`` cycles over all flag combinations."""
    per_cycle = [
        PinCycleData(length, orientable, s_phi, s_p)
        for length in range(1, max_length + 1)
        for orientable in (True, False)
        for s_phi in (1, -1)
        for s_p in (1, -1)
    ]
    for n in range(max_cycles + 1):
        yield from (list(combo) for combo in iproduct(per_cycle, repeat=n))


def stabilized_pin_plus_preserved(block_diagonal, trivial_factors_orientation_preserving):
    """Whether ``Phi_L + Phi_1 + ... + Phi_n`` is known to preserve the stabilized Pin+ structure.

    Only maps of that block form, with orientation-preserving trivial factors,
    are covered; the underlying fact is ``e0 * e0 = 1`` in ``Pin+``.
    """
    if not (block_diagonal and trivial_factors_orientation_preserving):
        return False
    e0 = pin_e(Flavor.PLUS)
    return e0 * e0 == pin_unit(Flavor.PLUS)


def check_pin_cycles_match(pin_cycles, diffeo, w1_bits):
    """Pin cycle data must align with the cycles of ``diffeo`` and the bundle's ``w_1``."""
    cycs = diffeo.cycles
    if len(pin_cycles) != len(cycs):
        raise InconsistentFlags(
            f"{len(pin_cycles)} pin cycles for {len(cycs)} component cycles", "pin_cycles"
        )
    for i, (pc, cyc, flag) in enumerate(zip(pin_cycles, cycs, diffeo.cycle_return_flags)):
        where = f"pin_cycles[{i}]"
        if pc.length != len(cyc):
            raise InconsistentFlags(f"{where}: length {pc.length} but cycle {cyc}", where)
        if pc.s_phi != flag:
            raise InconsistentFlags(f"{where}: s_phi disagrees with the diffeo return flag", where)
        bits = {w1_bits[c - 1] for c in cyc}
        if len(bits) != 1:
            raise InconsistentFlags(f"{where}: w1 is not constant along cycle {cyc}", where)
        if pc.bundle_orientable_over_cycle != (bits == {0}):
            raise InconsistentFlags(f"{where}: orientability disagrees with w1_bits", where)


__all__ = [
    "Flavor",
    "PinCycleData",
    "PinElement",
    "check_pin_cycles_match",
    "cycle_pin_minus_sign",
    "enumerate_pin_cycles",
    "permutation_from_cycles",
    "pin_action_signature",
    "pin_e",
    "pin_group",
    "pin_reversal_preserves",
    "pin_unit",
    "stabilized_pin_plus_preserved",
    "verify_pinori",
]
