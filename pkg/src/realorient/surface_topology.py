"""Topological types of real curves, permutation machinery, Teichmüller data.

Permutations of real components are given in one-line notation on
``1..k``: ``perm[i - 1]`` is the image of component ``i``.  Functions that
act on an arbitrary finite set (e.g. a stable subset of components) also
accept a mapping ``{x: perm(x)}``.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass
from math import prod

from .errors import ConstraintViolation, GenusTooSmall, InconsistentFlags, OracleMismatch

SIGNS = (1, -1)


def check_sign(value, name="sign"):
    if isinstance(value, bool) or value not in SIGNS:
        raise ConstraintViolation(f"{name} must be +1 or -1, got {value!r}", name)
    return value


# ---------------------------------------------------------------------------
# permutations
# ---------------------------------------------------------------------------


def as_mapping(perm):
    """Return ``perm`` as a dict, reading sequences as one-line notation on 1..n."""
    if isinstance(perm, Mapping):
        mapping = dict(perm)
    else:
        mapping = {i + 1: v for i, v in enumerate(perm)}
    if sorted(mapping) != sorted(mapping.values()):
        raise ConstraintViolation(f"not a permutation: {perm!r}", "perm")
    return mapping


def cycles(perm):
    """Disjoint cycles of ``perm`` (fixed points included).

    Each cycle starts at its smallest element and cycles are ordered by that
    element, so flag lists indexed by cycle have a canonical alignment.
    """
    mapping = as_mapping(perm)
    seen = set()
    result = []
    for start in sorted(mapping):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        x = mapping[start]
        while x != start:
            cyc.append(x)
            seen.add(x)
            x = mapping[x]
        result.append(tuple(cyc))
    return result


def signature(perm):
    """Signature ``(-1)**inversions`` of a permutation."""
    mapping = as_mapping(perm)
    domain = sorted(mapping)
    rank = {x: i for i, x in enumerate(domain)}
    images = [rank[mapping[x]] for x in domain]
    inversions = sum(
        1 for i in range(len(images)) for j in range(i + 1, len(images)) if images[i] > images[j]
    )
    return -1 if inversions % 2 else 1


def compose(p, q):
    """``p o q`` (apply ``q`` first) for one-line permutations of equal length."""
    if len(p) != len(q):
        raise ConstraintViolation("cannot compose permutations of different sizes", "perm")
    return tuple(p[q[i] - 1] for i in range(len(q)))


def restrict(perm, subset):
    """Restriction of ``perm`` to a stable subset, as a mapping."""
    mapping = as_mapping(perm)
    subset = set(subset)
    if any(mapping[x] not in subset for x in subset):
        raise ConstraintViolation(f"subset {sorted(subset)} is not stable under {perm!r}", "perm")
    return {x: mapping[x] for x in sorted(subset)}


def _cycle_type_signature(mapping):
    # (-1)^(n - #cycles); deliberately not the inversion count used by signature()
    return -1 if (len(mapping) - len(cycles(mapping))) % 2 else 1


def orientation_permutation(perm, return_flags):
    """Explicit permutation induced on the ``2|S|`` orientations of the components.

    Orientation symbols are pairs ``(component, +1|-1)`` relative to an
    arbitrary reference orientation of every component.  Along a cycle
    ``(j1 ... jl)`` orientations are transported rigidly, and the last step
    ``jl -> j1`` applies the cycle's return flag, so ``phi**l`` acts on the
    orientations of ``j1`` by exactly that flag.
    """
    cycs = cycles(perm)
    flags = tuple(return_flags)
    if len(flags) != len(cycs):
        raise InconsistentFlags(
            f"{len(flags)} return flags given for {len(cycs)} cycles", "return_flags"
        )
    for f in flags:
        if isinstance(f, bool) or f not in SIGNS:
            raise InconsistentFlags(f"return flag must be +1 or -1, got {f!r}", "return_flags")
    out = {}
    for cyc, flag in zip(cycs, flags):
        for pos, comp in enumerate(cyc):
            nxt = cyc[(pos + 1) % len(cyc)]
            twist = flag if pos == len(cyc) - 1 else 1
            for o in SIGNS:
                out[(comp, o)] = (nxt, o * twist)
    return out


def orientation_double_signature(perm, return_flags):
    """Signature of the permutation induced on orientations of a stable set of components.

    Computed twice, as the product of the per-cycle return flags and as the
    signature of the explicitly built permutation on ``2|S|`` symbols; the
    two must agree.
    """
    on_orientations = orientation_permutation(perm, return_flags)
    formula = prod(return_flags)
    oracle = _cycle_type_signature(on_orientations)
    if formula != oracle:
        raise OracleMismatch(
            f"flag product {formula} != orientation signature {oracle} for {perm!r}"
        )
    return formula


# ---------------------------------------------------------------------------
# real curves and real diffeomorphisms
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RealCurveType:
    """Topological type ``(g, k, separating)`` of a real curve."""

    genus: int
    num_real_components: int
    separating: bool

    def __post_init__(self):
        g, k, sep = self.genus, self.num_real_components, self.separating
        for name, v in (("genus", g), ("num_real_components", k)):
            if isinstance(v, bool) or not isinstance(v, int):
                raise ConstraintViolation(f"{name} must be an integer", name)
        if not isinstance(sep, bool):
            raise ConstraintViolation("separating must be a boolean", "separating")
        if g < 0:
            raise ConstraintViolation(f"genus >= 0 fails (genus={g})", "genus")
        if k < 0:
            raise ConstraintViolation(f"k >= 0 fails (k={k})", "num_real_components")
        if k > g + 1:
            raise ConstraintViolation(f"k <= g+1 fails (k={k}, g={g})", "num_real_components")
        if sep:
            if k < 1:
                raise ConstraintViolation("separating curve needs k >= 1", "num_real_components")
            if (k - g - 1) % 2:
                raise ConstraintViolation(
                    f"separating parity k = g+1 mod 2 fails (k={k}, g={g})", "num_real_components"
                )
        elif k == g + 1:
            # a curve with g+1 real components always separates
            raise ConstraintViolation(
                f"k = g+1 forces a separating curve (k={k}, g={g})", "separating"
            )

    @property
    def k(self):
        return self.num_real_components


def validate_curve_type(g, k, separating):
    return RealCurveType(g, k, separating)


def separating_return_flags(perm, swaps_halves):
    """Return flags forced on a separating curve.

    The complex orientation of the real locus is preserved when the two halves
    are preserved and reversed otherwise, so a cycle of length ``l`` returns
    with sign ``(-1)**l`` exactly when the halves are swapped.
    """
    return tuple((-1) ** len(c) if swaps_halves else 1 for c in cycles(perm))


@dataclass(frozen=True)
class RealDiffeoData:
    """Combinatorial shadow of an orientation-preserving real diffeomorphism."""

    curve: RealCurveType
    component_perm: tuple
    cycle_return_flags: tuple
    swaps_halves: bool = False
    det_h1_sign: int = 1

    def __post_init__(self):
        object.__setattr__(self, "component_perm", tuple(self.component_perm))
        object.__setattr__(self, "cycle_return_flags", tuple(self.cycle_return_flags))
        k = self.curve.k
        if sorted(self.component_perm) != list(range(1, k + 1)):
            raise ConstraintViolation(
                f"component_perm must permute 1..{k}, got {self.component_perm!r}",
                "component_perm",
            )
        if len(self.cycle_return_flags) != len(cycles(self.component_perm)):
            raise InconsistentFlags(
                "cycle_return_flags must have one entry per cycle of component_perm",
                "cycle_return_flags",
            )
        for f in self.cycle_return_flags:
            if isinstance(f, bool) or f not in SIGNS:
                raise InconsistentFlags(f"return flag must be +1 or -1, got {f!r}", "cycle_return_flags")
        check_sign(self.det_h1_sign, "det_h1_sign")
        if not isinstance(self.swaps_halves, bool):
            raise ConstraintViolation("swaps_halves must be a boolean", "swaps_halves")
        if not self.curve.separating and self.swaps_halves:
            raise ConstraintViolation("swaps_halves is only meaningful on separating curves", "swaps_halves")
        if self.curve.separating:
            forced = separating_return_flags(self.component_perm, self.swaps_halves)
            if self.cycle_return_flags != forced:
                raise InconsistentFlags(
                    f"on a separating curve the return flags are {forced}, got {self.cycle_return_flags}",
                    "cycle_return_flags",
                )

    @property
    def cycles(self):
        return cycles(self.component_perm)

    @property
    def halves_sign(self):
        """Sign of the transposition induced on the two complex orientations."""
        return -1 if self.swaps_halves else 1

    @classmethod
    def identity(cls, curve, det_h1_sign=1):
        k = curve.k
        return cls(curve, tuple(range(1, k + 1)), (1,) * k, False, det_h1_sign)

    @classmethod
    def on_separating(cls, curve, perm, swaps_halves, det_h1_sign=1):
        """Build diffeo data on a separating curve, deriving the return flags."""
        return cls(curve, tuple(perm), separating_return_flags(perm, swaps_halves), swaps_halves, det_h1_sign)


def flags_on(diffeo, subset):
    """Return flags of the cycles of ``diffeo`` lying in ``subset`` (which must be stable)."""
    subset = set(subset)
    out = []
    for cyc, flag in zip(diffeo.cycles, diffeo.cycle_return_flags):
        inside = [c in subset for c in cyc]
        if all(inside):
            out.append(flag)
        elif any(inside):
            raise ConstraintViolation(f"cycle {cyc} straddles the subset {sorted(subset)}", "component_perm")
    return tuple(out)


# ---------------------------------------------------------------------------
# Teichmüller space
# ---------------------------------------------------------------------------


def teichmuller_dimension(g):
    if g < 2:
        raise GenusTooSmall(f"real Teichmüller space needs genus >= 2, got {g}", "genus")
    return 3 * g - 3


def teichmuller_action_sign(d):
    """Action of a real mapping class on the orientations of real Teichmüller space.

    This is the sign of ``phi_*`` on the ``+1`` eigenspace of ``H_1(Sigma, R)``.
    """
    if d.curve.genus < 2:
        raise GenusTooSmall(f"real Teichmüller space needs genus >= 2, got {d.curve.genus}", "genus")
    return d.det_h1_sign


def moduli_orientation_sign(d):
    """Value of ``w_1`` of the automorphism-free real moduli space on the loop of ``d``.

    Valid from genus 4 on, where curves with automorphisms sit in codimension 2.
    """
    if d.curve.genus < 4:
        raise GenusTooSmall(f"needs genus >= 4, got {d.curve.genus}", "genus")
    return teichmuller_action_sign(d)


def is_prime(p):
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def riemann_hurwitz_strata(g, p):
    """All ``(g', h, d)`` for a prime-order ``p`` automorphism of a genus-``g`` curve.

    ``g'`` is the genus of the quotient, ``h`` the number of branch points and
    ``d = 3g' - 3 + h`` the dimension of the locus where the automorphism
    survives.  The search covers ``g' <= g`` and ``h <= 2g + 2``.
    """
    if g < 2:
        raise GenusTooSmall(f"needs genus >= 2, got {g}", "genus")
    if not is_prime(p):
        raise ConstraintViolation(f"{p} is not prime", "p")
    strata = []
    for gq in range(g + 1):
        for h in range(2 * g + 3):
            if 2 * g - 2 != p * (2 * gq - 2) + h * (p - 1):
                continue
            d = 3 * gq - 3 + h
            if d < 0:
                continue
            # doubled to stay in integers
            if 2 * (3 * g - 3 - d) != 2 * (p - 1) * (3 * gq - 3) + h * (3 * p - 5):
                raise OracleMismatch(f"codimension identity fails at g={g}, p={p}, g'={gq}, h={h}")
            strata.append((gq, h, d))
    return strata


def automorphism_locus_codim_ok(g):
    """True iff every prime-order automorphism locus has codimension >= 2."""
    if g < 4:
        raise GenusTooSmall(f"needs genus >= 4, got {g}", "genus")
    for p in range(2, 2 * g + 2):
        if not is_prime(p):
            continue
        for _, _, d in riemann_hurwitz_strata(g, p):
            if 3 * g - 3 - d < 2:
                return False
    return True


__all__ = [
    "RealCurveType",
    "RealDiffeoData",
    "as_mapping",
    "automorphism_locus_codim_ok",
    "check_sign",
    "compose",
    "cycles",
    "flags_on",
    "is_prime",
    "moduli_orientation_sign",
    "orientation_double_signature",
    "orientation_permutation",
    "restrict",
    "riemann_hurwitz_strata",
    "separating_return_flags",
    "signature",
    "teichmuller_action_sign",
    "teichmuller_dimension",
    "validate_curve_type",
]
