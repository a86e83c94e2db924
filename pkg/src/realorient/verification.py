"""Exhaustive and seeded sweeps checking closed formulas against oracles.

Every sweep returns a :class:`Report`; an empty ``failures`` list means the
formula agreed with its oracle on every case.  Sampled sweeps take a
``seed`` and are deterministic given it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field, replace
from itertools import permutations, product

from .bundles import (
    JetRelabeling,
    RealBundle,
    RealDivisor,
    jet_det_sign,
    minimal_quadruple,
    quadruple_realizes,
)
from .det_signs import (
    AutomorphismData,
    sign_general,
    sign_separating,
    sign_spin,
    verify_duality,
)
from .errors import BoundTooLarge, ConstraintViolation, OracleMismatch, ValidationError
from .moduli import Branch, hypersurface_branch, hypersurface_spin_check
from .pin_spin import enumerate_pin_cycles, verify_pinori
from .surface_topology import (
    RealCurveType,
    RealDiffeoData,
    automorphism_locus_codim_ok,
    cycles,
    orientation_double_signature,
    orientation_permutation,
    riemann_hurwitz_strata,
    signature,
    teichmuller_dimension,
)

DEFAULT_SEED = 20240101


@dataclass
class Report:
    cases_checked: int = 0
    failures: list = field(default_factory=list)

    def check(self, ok, case):
        self.cases_checked += 1
        if not ok:
            self.failures.append(case)

    def as_dict(self):
        return {"cases_checked": self.cases_checked, "failures": self.failures}


def curve_types(max_genus, min_k=0, max_k=None):
    for g in range(max_genus + 1):
        for k in range(min_k, min(g + 1, max_k if max_k is not None else g + 1) + 1):
            for sep in (False, True):
                try:
                    yield RealCurveType(g, k, sep)
                except ConstraintViolation:
                    pass


def sweep_orientation_double(max_k=5):
    """Product of return flags vs. the signature of the explicit map on ``2k`` orientations."""
    report = Report()
    for k in range(1, max_k + 1):
        for perm in permutations(range(1, k + 1)):
            n_cycles = len(cycles(perm))
            for flags in product((1, -1), repeat=n_cycles):
                explicit = signature(orientation_permutation(perm, flags))
                try:
                    formula = orientation_double_signature(perm, flags)
                except OracleMismatch:
                    formula = None
                report.check(formula == explicit, {"perm": list(perm), "flags": list(flags)})
    return report


def sweep_pinori(max_cycles=4):
    report = Report()
    for e_sign in (1, -1):
        for cyc in enumerate_pin_cycles(max_cycles):
            report.check(
                verify_pinori(cyc, e_sign),
                {"e_sign": e_sign, "cycles": [c.__dict__ for c in cyc]},
            )
    return report


def random_separating_input(rng, max_genus=6):
    """A valid separating-curve bundle with orientable real part and random automorphism data."""
    g = rng.randint(0, max_genus)
    k = rng.choice([k for k in range(1, g + 2) if (k - g - 1) % 2 == 0])
    curve = RealCurveType(g, k, True)
    perm = list(range(1, k + 1))
    rng.shuffle(perm)
    diffeo = RealDiffeoData.on_separating(curve, perm, rng.random() < 0.5, rng.choice((1, -1)))
    N = RealBundle(curve, rng.randint(1, 3), 2 * rng.randint(-4, 4), (0,) * k)
    w_bits = [0] * k
    for cyc in diffeo.cycles:
        bit = rng.randint(0, 1)
        for c in cyc:
            w_bits[c - 1] = bit
    signs = {name: rng.choice((1, -1)) for name in ("s_trivial", "d_min_sign", "o_sign", "spin_semiorientation_sign")}
    a = AutomorphismData.build(
        N,
        diffeo,
        pin_plus_signs=[rng.choice((1, -1)) for _ in diffeo.cycles],
        spin_w_bits=tuple(w_bits),
        **signs,
    )
    return N, a


def sweep_duality(samples=100, seed=DEFAULT_SEED):
    rng = random.Random(seed)
    report = Report()
    for i in range(samples):
        N, a = random_separating_input(rng)
        report.check(verify_duality(N, a), {"sample": i, "degree": N.degree, "rank": N.rank})
    return report


def sweep_minimal_quadruples(max_k=4, max_degree=6):
    """Every bundle type with ``k <= max_k`` and ``|deg| <= max_degree``.

    Rank does not enter, so rank 1 stands for all ranks.
    """
    report = Report()
    for k in range(max_k + 1):
        g = max(k, 1)
        curve = RealCurveType(g, k, False)
        for deg in range(-max_degree, max_degree + 1):
            for bits in product((0, 1), repeat=k):
                if (sum(bits) - deg) % 2:
                    continue
                N = RealBundle(curve, 1, deg, bits)
                q = minimal_quadruple(N)
                report.check(quadruple_realizes(q, N), {"k": k, "degree": deg, "w1_bits": list(bits)})
    return report


def random_divisor(rng, max_points=4):
    mults = [-2, -1, 1, 2, 3]
    real = tuple((rng.randint(1, 3), rng.choice(mults)) for _ in range(rng.randint(0, max_points)))
    pairs = tuple(rng.choice(mults) for _ in range(rng.randint(0, max_points)))
    return RealDivisor(real, pairs)


def _perm_preserving(rng, labels):
    """Random one-line permutation mapping each index to one with the same label."""
    image = [0] * len(labels)
    groups = {}
    for i, lab in enumerate(labels):
        groups.setdefault(lab, []).append(i)
    for idx in groups.values():
        shuffled = idx[:]
        rng.shuffle(shuffled)
        for src, dst in zip(idx, shuffled):
            image[src] = dst + 1
    return tuple(image)


def random_relabeling(rng, D):
    real = _perm_preserving(rng, [m for _, m in D.real_points])
    pairs = _perm_preserving(rng, list(D.pair_points))
    rev = tuple(rng.random() < 0.5 for _ in D.real_points)
    return JetRelabeling(real, pairs, rev)


def sweep_jet_composition(samples=1000, seed=DEFAULT_SEED):
    rng = random.Random(seed)
    report = Report()
    for i in range(samples):
        D = random_divisor(rng)
        r1, r2 = random_relabeling(rng, D), random_relabeling(rng, D)
        lhs = jet_det_sign(D, r1.then(r2))
        rhs = jet_det_sign(D, r1) * jet_det_sign(D, r2)
        report.check(lhs == rhs, {"sample": i})
    return report


def sweep_hypersurfaces(max_n=12):
    """Each degree falls in exactly one branch; Spin implies orientable."""
    report = Report()
    for N in range(3, max_n + 1):
        for delta in range(1, N + 2):
            # branch membership tested predicate by predicate
            hits = [
                (delta - (N + 1)) % 4 == 0,
                (delta - (N + 3)) % 4 == 0,
                (delta - N) % 2 == 0,
            ]
            expected = [Branch.CONJUGATE, Branch.EMPTY_QUADRIC, Branch.HYPERPLANE][hits.index(True)]
            spin = hypersurface_spin_check(N, delta)
            ok = sum(hits) == 1 and hypersurface_branch(N, delta) is expected
            ok = ok and (not spin.rx_spin or spin.rx_orientable)
            ok = ok and (not spin.w_xi_zero or spin.unique_real_spin)
            report.check(ok, {"N": N, "delta": delta})
    return report


def sweep_teichmuller(max_genus=8):
    report = Report()
    for g in range(2, max(max_genus, 10) + 1):
        report.check(teichmuller_dimension(g) == 3 * g - 3, {"genus": g, "check": "dimension"})
    for g in range(2, max_genus + 1):
        for p in range(2, 2 * g + 2):
            if any(p % q == 0 for q in range(2, p)):
                continue
            for gq, h, d in riemann_hurwitz_strata(g, p):
                rh = 2 * g - 2 == p * (2 * gq - 2) + h * (p - 1)
                codim = 3 * g - 3 - d
                # re-evaluated in rationals rather than the doubled form
                codim_ok = codim == (p - 1) * (3 * gq - 3) + h * (3 * p - 5) / 2
                report.check(rh and codim_ok, {"genus": g, "p": p, "stratum": [gq, h, d]})
    for g in range(4, max_genus + 1):
        report.check(automorphism_locus_codim_ok(g), {"genus": g, "check": "codim"})
    return report


# parity of the exponent with which each input sign enters each formula
def flip_exponents(formula, N):
    det = N.rank % 2
    semi = (1 - N.curve.genus) % 2
    table = {
        "general": {"pin": 1, "d_min_sign": 1, "o_sign": 0, "spin_semiorientation_sign": 0, "det_h1_sign": det},
        "separating": {"pin": 1, "d_min_sign": 0, "o_sign": 1, "spin_semiorientation_sign": 0, "det_h1_sign": det},
        "spin": {"pin": 1, "d_min_sign": 0, "o_sign": 0, "spin_semiorientation_sign": semi, "det_h1_sign": det},
    }
    return table[formula]


_FORMULAS = {"general": sign_general, "separating": sign_separating, "spin": sign_spin}


def _flip(a, what, index=None):
    if what == "pin":
        cyc = list(a.pin_cycles)
        cyc[index] = replace(cyc[index], s_pin_plus=-cyc[index].s_pin_plus)
        return replace(a, pin_cycles=tuple(cyc))
    if what == "det_h1_sign":
        return replace(a, diffeo=replace(a.diffeo, det_h1_sign=-a.diffeo.det_h1_sign))
    return replace(a, **{what: -getattr(a, what)})


def flip_bases(max_genus=3):
    """Base cases (separating curves, orientable real part, even degree) for the flip sweep."""
    for curve in curve_types(max_genus, min_k=1):
        if not curve.separating:
            continue
        k = curve.k
        for rank in (1, 2):
            for deg in (-2, 0, 2):
                N = RealBundle(curve, rank, deg, (0,) * k)
                for perm in permutations(range(1, k + 1)):
                    for swaps in (False, True):
                        diffeo = RealDiffeoData.on_separating(curve, perm, swaps)
                        w = [0] * k
                        if (deg // 2) % 2:
                            for c in diffeo.cycles[0]:
                                w[c - 1] = 1
                        if (sum(w) - deg // 2) % 2:
                            continue
                        yield N, AutomorphismData.build(N, diffeo, spin_w_bits=tuple(w))


def sweep_factor_flips(max_genus=3):
    report = Report()
    for N, a in flip_bases(max_genus):
        for name, fn in _FORMULAS.items():
            base = fn(N, a)
            exps = flip_exponents(name, N)
            flips = [("pin", i) for i in range(len(a.pin_cycles))]
            flips += [(w, None) for w in exps if w != "pin"]
            for what, idx in flips:
                expected = base * (-1) ** exps[what]
                got = fn(N, _flip(a, what, idx))
                report.check(
                    got == expected,
                    {"formula": name, "flip": what, "index": idx, "genus": N.curve.genus, "rank": N.rank},
                )
    return report


# lemma name -> (sweep, bound parameter, default bound, maximum bound)
LEMMAS = {
    "orientation-double": (sweep_orientation_double, "max_k", 5, 6),
    "pinori": (sweep_pinori, "max_cycles", 4, 4),
    "duality": (sweep_duality, "samples", 100, 10000),
    "quadruple": (sweep_minimal_quadruples, "max_k", 4, 5),
    "jet": (sweep_jet_composition, "samples", 1000, 20000),
    "hypersurface": (sweep_hypersurfaces, "max_n", 12, 64),
    "teichmuller": (sweep_teichmuller, "max_genus", 8, 12),
    "flips": (sweep_factor_flips, "max_genus", 3, 4),
}
SEEDED = {"duality", "jet"}


def run_lemma(name, bound=None, seed=DEFAULT_SEED):
    if name not in LEMMAS:
        raise ValidationError(f"unknown lemma {name!r}; choose from {sorted(LEMMAS)}", "lemma")
    sweep, param, default, maximum = LEMMAS[name]
    bound = default if bound is None else bound
    if isinstance(bound, bool) or not isinstance(bound, int) or bound < 0:
        raise ValidationError("bound must be a nonnegative integer", "bound")
    if bound > maximum:
        raise BoundTooLarge(f"{name} accepts {param} <= {maximum}, got {bound}", "bound")
    kwargs = {param: bound}
    if name in SEEDED:
        kwargs["seed"] = seed
    return sweep(**kwargs)


__all__ = [
    "DEFAULT_SEED",
    "LEMMAS",
    "Report",
    "flip_exponents",
    "run_lemma",
    "sweep_duality",
    "sweep_factor_flips",
    "sweep_hypersurfaces",
    "sweep_jet_composition",
    "sweep_minimal_quadruples",
    "sweep_orientation_double",
    "sweep_pinori",
    "sweep_teichmuller",
]
