"""Command-line front end: JSON in, JSON out.

Exit codes: 0 success, 1 invalid input, 2 a verification sweep found a
failure.  Sampled sweeps use ``--seed`` (default ``DEFAULT_SEED``).
"""

from __future__ import annotations

import argparse
import json
import sys

from .bundles import (
    Quadruple,
    RealBundle,
    RealDivisor,
    divisor_degree,
    is_compatible,
    jet_space_dimension,
    minimal_quadruple,
    quadruple_realizes,
)
from .det_signs import (
    AutomorphismData,
    sign_general_breakdown,
    sign_rank_reduction_breakdown,
    sign_separating_breakdown,
    sign_spin_breakdown,
    sign_trivial_bundle_breakdown,
)
from .errors import OracleMismatch, RealOrientError, ValidationError
from .moduli import (
    apply_spin_vanishings,
    hypersurface_branch,
    hypersurface_spin_check,
    hypersurface_w1,
    polarization_recipe,
)
from .serialization import Request, Response, from_dict, to_dict
from .surface_topology import (
    RealDiffeoData,
    automorphism_locus_codim_ok,
    riemann_hurwitz_strata,
    teichmuller_action_sign,
    teichmuller_dimension,
)
from .verification import DEFAULT_SEED, LEMMAS, run_lemma


class VerificationFailed(Exception):
    def __init__(self, result):
        super().__init__("verification failed")
        self.result = result


def _require(payload, key, path="$"):
    if key not in payload:
        raise ValidationError(f"missing field {key!r}", f"{path}.{key}")
    return payload[key]


def _int(payload, key, default=None):
    value = payload.get(key, default)
    if value is None:
        raise ValidationError(f"missing field {key!r}", f"$.{key}")
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValidationError(f"{key} must be an integer", f"$.{key}")
    return value


def _bool(payload, key, default=None):
    value = payload.get(key, default)
    if not isinstance(value, bool):
        raise ValidationError(f"{key} must be a boolean", f"$.{key}")
    return value


SIGN_CASES = ("general", "separating", "spin", "trivial", "rank_reduction")


def cmd_sign(payload):
    case = payload.get("case", "general")
    if case not in SIGN_CASES:
        raise ValidationError(f"case must be one of {list(SIGN_CASES)}", "$.case")
    a = from_dict(AutomorphismData, _require(payload, "automorphism"), "$.automorphism")
    if case == "trivial":
        bd = sign_trivial_bundle_breakdown(a, _int(payload, "n"))
    else:
        N = from_dict(RealBundle, _require(payload, "bundle"), "$.bundle")
        if case == "rank_reduction":
            bd = sign_rank_reduction_breakdown(N, a, _int(payload, "sign_det_line"))
        else:
            fn = {
                "general": sign_general_breakdown,
                "separating": sign_separating_breakdown,
                "spin": sign_spin_breakdown,
            }[case]
            bd = fn(N, a)
    return {"case": case, "sign": bd.sign, "factors": bd.as_dict()}


def cmd_classify_hypersurface(payload):
    N, delta = _int(payload, "N"), _int(payload, "delta")
    r = _int(payload, "r", 0)
    tau_fixed = _bool(payload, "tau_fixed_point", True)
    w1 = hypersurface_w1(N, delta, r, tau_fixed)
    spin = hypersurface_spin_check(N, delta)
    reduced = apply_spin_vanishings(w1, spin)
    return {
        "N": N,
        "delta": delta,
        "r": r,
        "spin_check": to_dict(spin),
        "branch": hypersurface_branch(N, delta).value,
        "w1": to_dict(w1),
        "w1_after_spin_vanishing": to_dict(reduced),
        "w1_expression": str(reduced),
        "polarization_recipe": polarization_recipe(N, delta).value,
        "orientable": reduced.is_zero,
    }


def cmd_verify(payload, seed=DEFAULT_SEED):
    lemma = _require(payload, "lemma")
    if lemma not in LEMMAS:
        raise ValidationError(f"unknown lemma {lemma!r}; choose from {sorted(LEMMAS)}", "$.lemma")
    bound = payload.get("bound")
    seed = payload.get("seed", seed)
    if isinstance(seed, bool) or not isinstance(seed, int):
        raise ValidationError("seed must be an integer", "$.seed")
    report = run_lemma(lemma, bound, seed)
    _, param, default, maximum = LEMMAS[lemma]
    result = {
        "lemma": lemma,
        "bound": {param: default if bound is None else bound, "maximum": maximum},
        "seed": seed,
        **report.as_dict(),
    }
    if report.failures:
        raise VerificationFailed(result)
    return result


def cmd_teichmuller(payload):
    g = _int(payload, "genus")
    result = {"genus": g, "dimension": teichmuller_dimension(g)}
    result["automorphism_locus_codim_ok"] = automorphism_locus_codim_ok(g) if g >= 4 else None
    if "diffeo" in payload:
        d = from_dict(RealDiffeoData, payload["diffeo"], "$.diffeo")
        if d.curve.genus != g:
            raise ValidationError("diffeo lives on a curve of another genus", "$.diffeo.curve.genus")
        result["action_sign"] = teichmuller_action_sign(d)
    return result


def cmd_rh_strata(payload):
    g, p = _int(payload, "genus"), _int(payload, "p")
    strata = riemann_hurwitz_strata(g, p)
    return {
        "genus": g,
        "p": p,
        "strata": [
            {"quotient_genus": gq, "branch_points": h, "locus_dimension": d, "codimension": 3 * g - 3 - d}
            for gq, h, d in strata
        ],
    }


def cmd_divisor_check(payload):
    N = from_dict(RealBundle, _require(payload, "bundle"), "$.bundle")
    q_min = minimal_quadruple(N)
    result = {"minimal_quadruple": list(q_min.as_tuple()), "minimal_realizes": quadruple_realizes(q_min, N)}
    if "quadruple" in payload:
        q = payload["quadruple"]
        if isinstance(q, list):
            q = dict(zip(("r_plus", "r_minus", "s_plus", "s_minus"), q)) if len(q) == 4 else {}
        q = from_dict(Quadruple, q, "$.quadruple")
        result["quadruple_realizes"] = quadruple_realizes(q, N)
    if "divisor" in payload:
        D = from_dict(RealDivisor, payload["divisor"], "$.divisor")
        result["divisor"] = {
            "degree": divisor_degree(D),
            "compatible": is_compatible(D, N),
            "jet_space_dimension": jet_space_dimension(D),
        }
    return result


COMMANDS = {
    "sign": cmd_sign,
    "classify-hypersurface": cmd_classify_hypersurface,
    "verify": cmd_verify,
    "teichmuller": cmd_teichmuller,
    "rh-strata": cmd_rh_strata,
    "divisor-check": cmd_divisor_check,
}


def dispatch(command, payload, seed=DEFAULT_SEED):
    """Run one command and return ``(Response, exit_code)``."""
    try:
        if not isinstance(payload, dict):
            raise ValidationError("payload must be a JSON object", "$")
        if command == "verify":
            result = cmd_verify(payload, seed)
        else:
            result = COMMANDS[command](payload)
        return Response(command, result=result), 0
    except VerificationFailed as exc:
        return Response(command, result=exc.result), 2
    except OracleMismatch as exc:
        return Response(command, error={"code": "OracleMismatch", "message": str(exc), "offending_field": None}), 2
    except RealOrientError as exc:
        return Response.failure(command, exc), 1


def _inline_payload(args):
    keys = {
        "classify-hypersurface": ("N", "delta", "r", "tau_fixed_point"),
        "verify": ("lemma", "bound"),
        "teichmuller": ("genus",),
        "rh-strata": ("genus", "p"),
    }.get(args.command, ())
    return {k: getattr(args, k) for k in keys if getattr(args, k, None) is not None}


def _load_payload(args):
    if args.input:
        try:
            with open(args.input, encoding="utf-8") as fh:
                raw = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ValidationError(f"cannot read {args.input}: {exc}", "$") from None
    elif args.payload:
        try:
            raw = json.loads(args.payload)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"invalid JSON: {exc}", "$") from None
    else:
        return _inline_payload(args)
    req = Request.from_dict(raw)
    if req.command and req.command != args.command:
        raise ValidationError(f"envelope is for {req.command!r}, not {args.command!r}", "$.command")
    payload = dict(req.payload)
    if req.command == "" and "command" in payload:
        payload.pop("command")
    # inline flags override the file
    payload.update(_inline_payload(args))
    return payload


def build_parser():
    parser = argparse.ArgumentParser(prog="realorient", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="JSON file holding a request envelope or a bare payload")
    common.add_argument("--payload", help="the payload as an inline JSON string")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help=f"seed for sampled sweeps (default {DEFAULT_SEED})")
    common.add_argument("--indent", type=int, default=2)
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("sign", parents=[common], help="determinant-orientation sign with factor breakdown")

    p = sub.add_parser("classify-hypersurface", parents=[common], help="w1 of moduli of maps to a hypersurface")
    p.add_argument("--N", type=int, dest="N")
    p.add_argument("--delta", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--tau-fixed-point", dest="tau_fixed_point", action=argparse.BooleanOptionalAction, default=None)

    p = sub.add_parser("verify", parents=[common], help="run an exhaustive or sampled sweep")
    p.add_argument("--lemma", choices=sorted(LEMMAS))
    p.add_argument("--bound", type=int)

    p = sub.add_parser("teichmuller", parents=[common], help="real Teichmüller dimension and codimension check")
    p.add_argument("--genus", type=int)

    p = sub.add_parser("rh-strata", parents=[common], help="Riemann-Hurwitz strata of prime-order automorphisms")
    p.add_argument("--genus", type=int)
    p.add_argument("--p", type=int)

    sub.add_parser("divisor-check", parents=[common], help="minimal quadruple and divisor compatibility")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        payload = _load_payload(args)
    except RealOrientError as exc:
        response, code = Response.failure(args.command, exc), 1
    else:
        response, code = dispatch(args.command, payload, args.seed)
    json.dump(response.to_dict(), sys.stdout, indent=args.indent, sort_keys=False)
    sys.stdout.write("\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
