"""Real bundles, real divisors, minimal quadruples and jet-space bookkeeping.

Divisor points are abstract: a real point is a (component, multiplicity)
pair and a conjugate pair ``{z, conj(z)}`` is a multiplicity alone.
Components are numbered ``1..k``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement

from .errors import ConstraintViolation, CurveMismatch, IllegalRelabeling
from .surface_topology import RealCurveType, as_mapping, compose


@dataclass(frozen=True)
class RealBundle:
    """Rank, degree and per-component ``w_1`` bits of a real vector bundle."""

    curve: RealCurveType
    rank: int
    degree: int
    w1_bits: tuple

    def __post_init__(self):
        object.__setattr__(self, "w1_bits", tuple(self.w1_bits))
        if isinstance(self.rank, bool) or not isinstance(self.rank, int) or self.rank < 1:
            raise ConstraintViolation(f"rank must be a positive integer, got {self.rank!r}", "rank")
        if isinstance(self.degree, bool) or not isinstance(self.degree, int):
            raise ConstraintViolation(f"degree must be an integer, got {self.degree!r}", "degree")
        if len(self.w1_bits) != self.curve.k:
            raise ConstraintViolation(
                f"w1_bits has length {len(self.w1_bits)}, curve has {self.curve.k} real components",
                "w1_bits",
            )
        if any(isinstance(b, bool) or b not in (0, 1) for b in self.w1_bits):
            raise ConstraintViolation("w1_bits entries must be 0 or 1", "w1_bits")
        if (sum(self.w1_bits) - self.degree) % 2:
            raise ConstraintViolation("sum(w1_bits) must have the parity of the degree", "w1_bits")

    @property
    def non_orientable(self):
        """Components (1-based) over which the real part is not orientable."""
        return tuple(i + 1 for i, b in enumerate(self.w1_bits) if b)

    @property
    def k_minus(self):
        return sum(self.w1_bits)


@dataclass(frozen=True)
class RealDivisor:
    real_points: tuple = ()
    pair_points: tuple = ()

    def __post_init__(self):
        real = tuple(tuple(p) for p in self.real_points)
        pairs = tuple(self.pair_points)
        object.__setattr__(self, "real_points", real)
        object.__setattr__(self, "pair_points", pairs)
        for comp, mult in real:
            if isinstance(comp, bool) or not isinstance(comp, int) or comp < 1:
                raise ConstraintViolation(f"component index must be >= 1, got {comp!r}", "real_points")
            if isinstance(mult, bool) or not isinstance(mult, int) or mult == 0:
                raise ConstraintViolation(f"multiplicity must be a nonzero integer, got {mult!r}", "real_points")
        for mult in pairs:
            if isinstance(mult, bool) or not isinstance(mult, int) or mult == 0:
                raise ConstraintViolation(f"multiplicity must be a nonzero integer, got {mult!r}", "pair_points")

    def __add__(self, other):
        return RealDivisor(self.real_points + other.real_points, self.pair_points + other.pair_points)


@dataclass(frozen=True)
class Quadruple:
    """Point counts ``(r+, r-, s+, s-)`` of simple real points and simple conjugate pairs."""

    r_plus: int
    r_minus: int
    s_plus: int
    s_minus: int

    def __post_init__(self):
        for name in ("r_plus", "r_minus", "s_plus", "s_minus"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int) or v < 0:
                raise ConstraintViolation(f"{name} must be a nonnegative integer, got {v!r}", name)

    def as_tuple(self):
        return (self.r_plus, self.r_minus, self.s_plus, self.s_minus)


def divisor_degree(D):
    return sum(m for _, m in D.real_points) + 2 * sum(D.pair_points)


def component_degrees(D, k):
    """Degree of the restriction of ``D`` to each real component ``1..k``."""
    out = [0] * k
    for comp, mult in D.real_points:
        if comp > k:
            raise CurveMismatch(f"divisor uses component {comp} but the curve has {k}", "real_points")
        out[comp - 1] += mult
    return out


def is_compatible(D, bundle):
    degs = component_degrees(D, bundle.curve.k)
    if divisor_degree(D) != bundle.degree:
        return False
    return all((d - b) % 2 == 0 for d, b in zip(degs, bundle.w1_bits))


def minimal_quadruple(bundle):
    """One simple point per non-orientable component, conjugate pairs balance the degree.

    Each conjugate pair carries degree 2, so the pair count is half the
    remaining degree.
    """
    r_min = bundle.k_minus
    excess = bundle.degree - r_min
    # even by the parity invariant of RealBundle
    if excess >= 0:
        return Quadruple(r_min, 0, excess // 2, 0)
    return Quadruple(r_min, 0, 0, -excess // 2)


def quadruple_realizes(q, bundle):
    """Exhaustive search for a compatible divisor with point counts ``q``."""
    k = bundle.curve.k
    if k == 0 and q.r_plus + q.r_minus > 0:
        return False
    pairs = (1,) * q.s_plus + (-1,) * q.s_minus
    comps = range(1, k + 1)
    for plus in combinations_with_replacement(comps, q.r_plus):
        for minus in combinations_with_replacement(comps, q.r_minus):
            real = tuple((c, 1) for c in plus) + tuple((c, -1) for c in minus)
            if is_compatible(RealDivisor(real, pairs), bundle):
                return True
    return False


def split_divisor(D):
    """Positive and negative parts ``(D+, D-)``, both effective."""
    pos = RealDivisor(
        tuple((c, m) for c, m in D.real_points if m > 0), tuple(m for m in D.pair_points if m > 0)
    )
    neg = RealDivisor(
        tuple((c, -m) for c, m in D.real_points if m < 0), tuple(-m for m in D.pair_points if m < 0)
    )
    return pos, neg


def jet_space_dimension(D):
    # the negative part enters through its dual, which has the same dimension
    pos, neg = split_divisor(D)
    return sum(
        sum(m for _, m in part.real_points) + 2 * sum(part.pair_points) for part in (pos, neg)
    )


def block_dimensions(D):
    """Real dimension of each real-point block, then each pair block."""
    return [abs(m) for _, m in D.real_points], [2 * abs(m) for m in D.pair_points]


@dataclass(frozen=True)
class JetRelabeling:
    """Action of a diffeomorphism on the points of a divisor.

    ``real_perm`` and ``pair_perm`` are one-line permutations of the real
    points and of the conjugate pairs (1-based, in divisor order);
    ``reversed_tangents[i]`` says whether real point ``i`` has the
    orientation of its tangent line reversed on the way to its image.
    """

    real_perm: tuple
    pair_perm: tuple = ()
    reversed_tangents: tuple = field(default=None)

    def __post_init__(self):
        object.__setattr__(self, "real_perm", tuple(self.real_perm))
        object.__setattr__(self, "pair_perm", tuple(self.pair_perm))
        rev = self.reversed_tangents
        rev = (False,) * len(self.real_perm) if rev is None else tuple(bool(x) for x in rev)
        object.__setattr__(self, "reversed_tangents", rev)
        for name in ("real_perm", "pair_perm"):
            try:
                as_mapping(getattr(self, name))
            except ConstraintViolation as exc:
                raise IllegalRelabeling(str(exc), name) from None
        if len(rev) != len(self.real_perm):
            raise IllegalRelabeling("one tangent flag per real point is required", "reversed_tangents")

    @classmethod
    def identity(cls, D):
        n, m = len(D.real_points), len(D.pair_points)
        return cls(tuple(range(1, n + 1)), tuple(range(1, m + 1)))

    def then(self, other):
        """The relabeling ``other o self`` (apply ``self`` first)."""
        rev = tuple(
            a != other.reversed_tangents[self.real_perm[i] - 1]
            for i, a in enumerate(self.reversed_tangents)
        )
        return JetRelabeling(
            compose(other.real_perm, self.real_perm), compose(other.pair_perm, self.pair_perm), rev
        )


def _check_relabeling(D, rel):
    if len(rel.real_perm) != len(D.real_points) or len(rel.pair_perm) != len(D.pair_points):
        raise IllegalRelabeling("relabeling size does not match the divisor", "relabeling")
    for i, j in enumerate(rel.real_perm):
        if D.real_points[i][1] != D.real_points[j - 1][1]:
            raise IllegalRelabeling(
                f"real point {i + 1} (mult {D.real_points[i][1]}) sent to point {j} "
                f"(mult {D.real_points[j - 1][1]})",
                "real_perm",
            )
    for i, j in enumerate(rel.pair_perm):
        if D.pair_points[i] != D.pair_points[j - 1]:
            raise IllegalRelabeling(f"pair {i + 1} sent to pair {j} of another multiplicity", "pair_perm")


def _block_permutation_sign(perm, dims):
    # moving a block of dim a past a block of dim b costs (-1)^(ab)
    parity = 0
    n = len(perm)
    for i in range(n):
        for j in range(i + 1, n):
            if perm[i] > perm[j]:
                parity += dims[i] * dims[j]
    return -1 if parity % 2 else 1


def tangent_reversal_sign(m):
    """Sign on ``det`` of ``(T*)^0 + ... + (T*)^(m-1)`` when ``T`` is reversed."""
    return -1 if (m * (m - 1) // 2) % 2 else 1


def jet_det_sign(D, relabeling):
    """Sign of the induced action on ``det`` of the jet space of ``D``."""
    _check_relabeling(D, relabeling)
    real_dims, pair_dims = block_dimensions(D)
    sign = _block_permutation_sign(relabeling.real_perm, real_dims)
    sign *= _block_permutation_sign(relabeling.pair_perm, pair_dims)
    for m, rev in zip(real_dims, relabeling.reversed_tangents):
        if rev:
            sign *= tangent_reversal_sign(m)
    return sign


def dual_bundle(bundle):
    return RealBundle(bundle.curve, bundle.rank, -bundle.degree, bundle.w1_bits)


__all__ = [
    "JetRelabeling",
    "Quadruple",
    "RealBundle",
    "RealDivisor",
    "block_dimensions",
    "component_degrees",
    "divisor_degree",
    "dual_bundle",
    "is_compatible",
    "jet_det_sign",
    "jet_space_dimension",
    "minimal_quadruple",
    "quadruple_realizes",
    "split_divisor",
    "tangent_reversal_sign",
]
