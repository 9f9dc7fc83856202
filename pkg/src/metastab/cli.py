"""JSON command line.

    metastab <command> [JSON] [--input FILE|-] [--suite S] [--nmax N] [--seed N]

Each command reads one JSON object (inline, from a file, or from stdin with
``--input -``) and prints ``{"ok": ..., "result": ..., "paper_ref": ...}``.
Commands with several operations pick one with the ``"op"`` key.  Exit
status: 0 success, 1 domain error or failed verification, 2 malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import classparam, endoscopy, exactnum, localsym, motive, rootsys, verify
from .classparam import GroupShape, param_from_json
from .endoscopy import EndoDatum, EquiSingPair
from .errors import MetastabError, SchemaError
from .exactnum import PolyQ, QuadElem, decode_rational
from .localsym import PlaceQ
from .motive import TateMotive


# ---------------------------------------------------------------------------
# JSON in and out


def to_jsonable(x):
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return exactnum.encode_rational(x)
    if hasattr(x, "to_json"):
        return x.to_json()
    if isinstance(x, dict):
        return {str(k): to_jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [to_jsonable(v) for v in x]
    raise TypeError(f"no JSON encoding for {type(x).__name__}")


def _need(args: dict, key: str):
    if key not in args:
        raise SchemaError(f"missing key {key!r}")
    return args[key]


def _int(args, key, default=None):
    v = args.get(key, default) if default is not None else _need(args, key)
    if isinstance(v, bool) or not isinstance(v, int):
        raise SchemaError(f"{key!r} must be an integer")
    return v


def _rat(v, what="value"):
    try:
        return decode_rational(v)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise SchemaError(f"{what}: {exc}") from None


def _poly(v, what="poly"):
    try:
        return PolyQ.from_json(v)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise SchemaError(f"{what}: {exc}") from None


def _scalar(v):
    if isinstance(v, dict):
        try:
            return QuadElem.from_json(v)
        except (KeyError, TypeError) as exc:
            raise SchemaError(f"quadratic element: {exc}") from None
    return _rat(v)


def _param(v):
    if not isinstance(v, dict):
        raise SchemaError("class parameter must be a JSON object")
    return param_from_json(v)


def _gamma(args):
    g = _need(args, "gamma")
    if not isinstance(g, list) or len(g) != 2:
        raise SchemaError("'gamma' must be a pair of SO parameters")
    return _param(g[0]), _param(g[1])


def _datum(args, key="datum"):
    v = _need(args, key)
    if not isinstance(v, list) or len(v) != 2:
        raise SchemaError(f"{key!r} must be [n', n'']")
    return EndoDatum.from_json(v)


def _pair(args):
    return EquiSingPair.from_json(_need(args, "pair") if "pair" in args else args)


def _rd(args):
    fam, rank = _need(args, "family"), _int(args, "rank")
    return rootsys.RootDatum(fam, rank)


def _place(args, key="v"):
    v = _need(args, key)
    if not (v == "inf" or (isinstance(v, int) and not isinstance(v, bool))):
        raise SchemaError(f"{key!r} must be 'inf' or a prime")
    return PlaceQ.from_json(v)


def _shape(v):
    try:
        return GroupShape.from_json(v)
    except (KeyError, TypeError) as exc:
        raise SchemaError(f"group shape: {exc}") from None


def _rats(v, what):
    if not isinstance(v, list):
        raise SchemaError(f"{what} must be a list")
    return [_rat(x, what) for x in v]


# ---------------------------------------------------------------------------
# command registry


@dataclass
class Command:
    name: str
    ops: dict  # op name -> (module function, handler, anchor)
    default: str
    help: str


COMMANDS: dict[str, Command] = {}


def command(name: str, help: str, default: str | None = None):
    def deco(table: dict):
        COMMANDS[name] = Command(name, table, default or next(iter(table)), help)
        return table
    return deco


command("poly", "polynomial operations over Q")({
    "reciprocal": (exactnum.poly_reciprocal,
                   lambda a: exactnum.poly_reciprocal(_poly(_need(a, "poly"))),
                   "involution x -> 1/x"),
    "self-reciprocal": (exactnum.is_self_reciprocal,
                        lambda a: exactnum.is_self_reciprocal(_poly(_need(a, "poly"))),
                        "unitary factors: K_i a field"),
    "neg-arg": (exactnum.poly_neg_arg,
                lambda a: exactnum.poly_neg_arg(_poly(_need(a, "poly"))),
                "sign flip of eigenvalues -a''"),
    "eval": (exactnum.poly_eval,
             lambda a: exactnum.poly_eval(_poly(_need(a, "poly")), _scalar(_need(a, "x"))),
             "evaluation P_a'(a'')"),
    "irreducible": (exactnum.is_irreducible_q,
                    lambda a: _irreducible(_poly(_need(a, "poly"))),
                    "K# a field needs irreducible presentations"),
})


def _irreducible(p):
    verdict, method = exactnum.irreducibility_check(p)
    return {"irreducible": "unknown" if verdict is None else verdict, "method": method}


command("endo-data", "elliptic endoscopic data (n', n'') of Sp(2n)")({
    "enumerate": (endoscopy.enumerate_endo_data,
                  lambda a: endoscopy.enumerate_endo_data(_int(a, "n")),
                  "pairs (n', n'') with n' + n'' = n"),
})

command("correspond", "the class of Sp(2n) matched with (gamma', gamma'')")({
    "correspond": (endoscopy.correspond, lambda a: endoscopy.correspond(_gamma(a)),
                   "eigenvalues a'_i, 1 vs -a''_i; fusion merged"),
})


def _equising(a):
    verdict = endoscopy.is_equi_singular(_gamma(a))
    return {"equi_singular": verdict.equi_singular, "witness": verdict.witness}


command("equising", "equi-singularity and good-reduction tests for gamma")({
    "check": (endoscopy.is_equi_singular, _equising, "no fusion, V'_- = V''_- = 0"),
    "nonramified": (endoscopy.nonramified_pair_check,
                    lambda a: endoscopy.nonramified_pair_check(_pair(a), _int(a, "p")),
                    "good reduction modulo the maximal ideal"),
})

command("fiber", "all gamma over a class delta for a datum")({
    "fiber": (endoscopy.fiber,
              lambda a: endoscopy.fiber(_param(_need(a, "delta")), _datum(a)),
              "finite fibers of the correspondence"),
})


def _forward(a):
    delta = _param(_need(a, "delta"))
    gl = a.get("gl_second")
    datum, gp = endoscopy.bijection_forward(delta, _need(a, "isecond"), gl,
                                            elliptic=bool(a.get("elliptic", gl is None)))
    return {"datum": datum, "gamma": list(gp)}


def _inverse(a):
    pre = endoscopy.bijection_inverse(_datum(a), _gamma(a))
    return {"delta": pre.delta, "isecond": list(pre.isecond), "gl_second": list(pre.gl_second)}


command("bijection", "(delta, kappa) <-> (n', n'', gamma)")({
    "forward": (endoscopy.bijection_forward, _forward, "n' = (dim W'_K' + dim W_+)/2"),
    "inverse": (endoscopy.bijection_inverse, _inverse, "these conditions characterize (n',n'',gamma)"),
})

command("kappa", "the kappa character of an equi-singular pair")({
    "kappa": (endoscopy.kappa_of, lambda a: endoscopy.kappa_of(_pair(a)),
              "trivial on {+-1}^s', product on {+-1}^s''"),
})

command("iota", "stabilization coefficient iota(G~, H)")({
    "iota": (endoscopy.iota, lambda a: endoscopy.iota(_datum(a)), "iota = tau(H)^-1"),
})


def _tamagawa(a):
    if "datum" in a:
        return endoscopy.tamagawa(endoscopy.endoscopic_group_shape(_datum(a)))
    return endoscopy.tamagawa(_shape(_need(a, "shape")))


command("tamagawa", "Tamagawa number of a product of Sp and SO(2k+1)")({
    "tamagawa": (endoscopy.tamagawa, _tamagawa, "tau(SO(2k+1)) = 2 for k >= 1"),
    "h-shape": (endoscopy.endoscopic_group_shape,
                lambda a: endoscopy.endoscopic_group_shape(_datum(a)),
                "H = SO(2n'+1) x SO(2n''+1)"),
})


def _sp(a):
    p = _param(_need(a, "param"))
    if not isinstance(p, classparam.SpClassParam):
        raise SchemaError("expected an Sp parameter")
    return p


def _so(a):
    p = _param(_need(a, "param"))
    if not isinstance(p, classparam.SoClassParam):
        raise SchemaError("expected an SO parameter")
    return p


def _shape_of(a):
    p = _param(_need(a, "param"))
    if isinstance(p, classparam.SpClassParam):
        return classparam.commutant_shape_sp(p)
    return classparam.commutant_shape_so(p)


command("commutants", "class parameters: validation, char poly, commutants", default="shape")({
    "validate": (classparam.validate, lambda a: classparam.validate(_param(_need(a, "param"))),
                 "dim W_K + dim W_+ + dim W_- = dim W"),
    "validate-sp": (classparam.validate_sp, lambda a: classparam.validate_sp(_sp(a)),
                    "dim W_K + dim W_+ + dim W_- = dim W"),
    "validate-so": (classparam.validate_so, lambda a: classparam.validate_so(_so(a)),
                    "dim V_K + dim V_+ + dim V_- = dim V"),
    "charpoly": (classparam.char_poly,
                 lambda a: [[p, m] for p, m in classparam.char_poly(_param(_need(a, "param")))],
                 "eigenvalue list with multiplicities"),
    "shape": (classparam.commutant_shape_sp, _shape_of, "U(W_K) x Sp(W_+) x Sp(W_-)"),
    "shape-so": (classparam.commutant_shape_so,
                 lambda a: classparam.commutant_shape_so(_param(_need(a, "param"))),
                 "U(V_K) x SO(V_+) (V_- caveat)"),
    "pair": (endoscopy.commutant_pair, lambda a: endoscopy.commutant_pair(_pair(a)),
             "G_delta and H_gamma, inner forms matched"),
    "germ": (rootsys.germ_exponent,
             lambda a: rootsys.germ_exponent(_shape(a.get("shape", [])),
                                             a.get("unipotent", "identity")),
             "germ homogeneity exponent dim G/G_u"),
})

command("tvalue", "t = half the multiplicity of eigenvalues +-1 of delta")({
    "tvalue": (endoscopy.t_value, lambda a: endoscopy.t_value(_pair(a)),
               "exponent of |2|^-t in the transfer"),
})


def _motive_arg(v):
    if isinstance(v, dict) and "atoms" in v or isinstance(v, list) and v and isinstance(v[0], dict) \
            and "kind" in v[0]:
        return motive.motive_of_shape(_shape(v))
    try:
        return TateMotive.from_json(v)
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError(f"motive: {exc}") from None


command("motive", "Artin-Tate motives of commutant shapes")({
    "of-shape": (motive.motive_of_shape,
                 lambda a: motive.motive_of_shape(_shape(_need(a, "shape"))),
                 "M = Q(-1) + Q(-3) + ... + Q(1-2n)"),
    "equal": (motive.motive_equal,
              lambda a: motive.motive_equal(_motive_arg(_need(a, "a")), _motive_arg(_need(a, "b"))),
              "inner forms have the same motive"),
})


def _point_count(a):
    kind = _need(a, "kind")
    n, q = _int(a, "n"), _int(a, "q")
    return {"count": motive.point_count(kind, n, q),
            "normalized_volume": motive.normalized_volume(kind, n, q)}


command("point-count", "|G(F_q)| for Sp(2n) and SO(2n+1)")({
    "count": (motive.point_count, _point_count, "non-ramified measure cross-check"),
})

command("lfactor", "local L-value of M^v(1)")({
    "lfactor": (motive.local_L_dual1,
                lambda a: motive.local_L_dual1(_motive_arg(_need(a, "motive")), _int(a, "q")),
                "L(M^v(1)) and the non-ramified measure"),
})

command("hilbert", "Hilbert and Legendre symbols, absolute values", default="hilbert")({
    "hilbert": (localsym.hilbert,
                lambda a: localsym.hilbert(_rat(_need(a, "a")), _rat(_need(a, "b")), _place(a)),
                "quadratic Hilbert symbols"),
    "legendre": (localsym.legendre, lambda a: localsym.legendre(_int(a, "a"), _int(a, "p")),
                 "quadratic residue symbol"),
    "sgn": (localsym.sgn_quadext,
            lambda a: localsym.sgn_quadext(_int(a, "d"), _rat(_need(a, "x")), _place(a)),
            "quadratic character of K''#"),
    "abs": (localsym.abs_norm, lambda a: localsym.abs_norm(_rat(_need(a, "x")), _place(a)),
            "normalized absolute value"),
})


def _delta0(a):
    v = _place(a)
    if "pair" in a or "gamma" in a:
        return localsym.delta_zero_for_pair(_pair(a), v)
    vals = [None if x is None else _scalar(x) for x in _need(a, "a_second")]
    labels = _need(a, "field_labels")
    if not isinstance(labels, list) or any(x != "split" and not isinstance(x, int) for x in labels):
        raise SchemaError("'field_labels' entries are 'split' or a squarefree integer d")
    return localsym.delta_zero(_poly(_need(a, "charpoly")), vals, _int(a, "nprime"),
                               _rat(_need(a, "det")), labels, v)


command("delta0", "the Delta_0 sign of the transfer factor")({
    "explicit": (localsym.delta_zero, _delta0,
                 "sgn(P_a'(a'') (-a'')^-n' det(delta'+1))"),
    "pair": (localsym.delta_zero_for_pair, _delta0, "Delta_0 from an equi-singular pair"),
})

command("theta", "constants |2|^-n and the sign ledger", default="theta")({
    "theta": (localsym.theta_minus_one,
              lambda a: localsym.theta_minus_one(_int(a, "n"), _place(a)),
              "(Theta+ - Theta-)(1) = |2|^-n"),
    "two-power": (localsym.two_power_product,
                  lambda a: localsym.two_power_product(_int(a, "t")),
                  "prod_v |2|_v^-t = 1"),
    "sign-ledger": (localsym.sign_ledger,
                    lambda a: localsym.sign_ledger(_rat(_need(a, "q1")), _rat(_need(a, "q2")),
                                                   _int(a, "e1"), _int(a, "e2")),
                    "(-1)^(q1 - q2) = e(G1) e(G2)^-1"),
})


def _dim_q(a):
    dim, q = rootsys.dim_and_q(_need(a, "kind"), _int(a, "n"), _need(a, "context"))
    return {"dim": dim, "q": q}


command("roots", "root data of type A, B, C", default="positive")({
    "positive": (rootsys.positive_roots, lambda a: rootsys.positive_roots(_rd(a)),
                 "eps_i +- eps_j, eps_i, 2 eps_i"),
    "coroot": (rootsys.coroot_btr,
               lambda a: rootsys.coroot_btr(_rats(_need(a, "alpha"), "alpha"), _rd(a)),
               "H_alpha under B_tr"),
    "exponents": (rootsys.exponents, lambda a: rootsys.exponents(_rd(a)),
                  "exponents 1, 3, ..., 2n-1"),
    "weyl-order": (rootsys.weyl_order, lambda a: rootsys.weyl_order(_rd(a)),
                   "W(G_C, T_C) = W(H_C, T_C)"),
    "dim-q": (rootsys.dim_and_q, _dim_q, "q_G = q_H = n(n+1)/2"),
})

command("rho", "half-sum of positive roots")({
    "rho": (rootsys.rho, lambda a: rootsys.rho(_rd(a)), "rho as half-sum of positive roots"),
})

command("varpi", "varpi(lambda) = prod <lambda, H_alpha>")({
    "varpi": (rootsys.varpi_eval,
              lambda a: rootsys.varpi_eval(_rd(a), _rats(_need(a, "lambda"), "lambda")),
              "varpi = prod over positive roots of H_alpha"),
})

command("lemma2n", "the ratios 2^-n and 2^-2n")({
    "lemma2n": (rootsys.lemma_2n_ratios, lambda a: list(rootsys.lemma_2n_ratios(_int(a, "n"))),
                "varpi^G(rho^H) / varpi^G(rho^G) = 2^-n"),
})

command("steinberg", "Steinberg's closed form for varpi(rho)")({
    "steinberg": (rootsys.steinberg_rho_value,
                  lambda a: {"steinberg": rootsys.steinberg_rho_value(_rd(a)),
                             "direct": rootsys.varpi_eval(_rd(a), rootsys.rho(_rd(a)))},
                  "computation by Steinberg"),
})


def _ratio(a):
    n, t = _int(a, "n"), _rats(_need(a, "t"), "t")
    return {"value": rootsys.discriminant_ratio(n, t),
            "kind": rootsys.discriminant_ratio_kind(n, t)}


command("discriminant", "Weyl discriminants and their B/C ratio", default="weyl")({
    "weyl": (rootsys.weyl_discriminant,
             lambda a: rootsys.weyl_discriminant(_rd(a), _rats(_need(a, "t"), "t")),
             "D(delta) = det(1 - Ad(delta) | g/g_delta)"),
    "ratio": (rootsys.discriminant_ratio, _ratio, "2^2n when X -> 0"),
})


def _verify(a):
    suite = a.get("suite", "all")
    if suite not in ("all",) + verify.SUITES:
        raise SchemaError(f"unknown suite {suite!r}")
    nmax, seed = _int(a, "nmax", 4), _int(a, "seed", 0)
    if nmax < 1:
        raise SchemaError("nmax must be >= 1")
    rows = verify.run_suite(suite, nmax, seed)
    return {"suite": suite, "nmax": nmax, "seed": seed,
            "passed": all(r.passed for r in rows), "checks": [r.to_json() for r in rows]}


command("verify", "run the invariant suites")({
    "verify": (verify.run_suite, _verify, "invariant sweeps"),
})


def registry() -> dict[str, list]:
    """Module function -> names of the commands that reach it."""
    out: dict = {}
    for cmd in COMMANDS.values():
        for fn, _, _ in cmd.ops.values():
            key = f"{fn.__module__}.{fn.__name__}"
            if cmd.name not in out.setdefault(key, []):
                out[key].append(cmd.name)
    return out


# ---------------------------------------------------------------------------
# running


def run(name: str, args: dict) -> tuple[dict, int]:
    """Execute one command; returns (document, exit status)."""
    cmd = COMMANDS.get(name)
    if cmd is None:
        return {"ok": False, "error": {"type": "SchemaError", "message": f"unknown command {name!r}"},
                "paper_ref": ""}, 2
    anchor = ""
    try:
        if not isinstance(args, dict):
            raise SchemaError("input must be a JSON object")
        op = args.get("op", cmd.default)
        if op not in cmd.ops:
            raise SchemaError(f"{name}: unknown op {op!r}; choose from {', '.join(cmd.ops)}")
        _, handler, anchor = cmd.ops[op]
        result = to_jsonable(handler(args))
    except (SchemaError, KeyError, TypeError, json.JSONDecodeError) as exc:
        return _error(exc, anchor), 2
    except (MetastabError, ValueError, ArithmeticError, NotImplementedError) as exc:
        return _error(exc, anchor), 1
    doc = {"ok": True, "result": result, "paper_ref": anchor}
    if name == "verify" and not result["passed"]:
        return doc, 1
    return doc, 0


def _error(exc, anchor):
    msg = str(exc) if not isinstance(exc, KeyError) else f"missing key {exc}"
    return {"ok": False, "error": {"type": type(exc).__name__, "message": msg}, "paper_ref": anchor}


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="metastab", description=__doc__.splitlines()[0])
    ap.add_argument("command", choices=sorted(COMMANDS), metavar="command",
                    help="one of: " + ", ".join(sorted(COMMANDS)))
    ap.add_argument("json", nargs="?", help="inline JSON arguments")
    ap.add_argument("--input", help="read JSON arguments from a file, or '-' for stdin")
    ap.add_argument("--suite", help="verify: all, rootsys, endoscopy, motive or localsym")
    ap.add_argument("--nmax", type=int, help="verify: largest rank swept")
    ap.add_argument("--seed", type=int, help="verify: seed for randomized corpora")
    return ap


def main(argv=None) -> int:
    ns = _build_parser().parse_args(argv)
    try:
        if ns.input == "-":
            text = sys.stdin.read()
        elif ns.input:
            with open(ns.input, encoding="utf-8") as fh:
                text = fh.read()
        else:
            text = ns.json or "{}"
        args = json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"metastab: cannot read input: {exc}", file=sys.stderr)
        print(json.dumps(_error(exc, ""), ensure_ascii=False))
        return 2
    if isinstance(args, dict):
        for key in ("suite", "nmax", "seed"):
            if getattr(ns, key) is not None:
                args[key] = getattr(ns, key)
    doc, status = run(ns.command, args)
    if not doc["ok"]:
        print(f"metastab: {doc['error']['message']}", file=sys.stderr)
    print(json.dumps(doc, ensure_ascii=False))
    return status


if __name__ == "__main__":
    sys.exit(main())
