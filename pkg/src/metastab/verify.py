"""Invariant sweeps over the desk-scale generator families.

Every check returns how many cases it looked at and the first counterexample,
if any.  Randomness comes from one ``random.Random(seed)`` per suite, so a
report is a pure function of (suite, nmax, seed).
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import oracles
from .classparam import (
    Atom,
    GroupShape,
    SoClassParam,
    SpClassParam,
    UnitaryFactor,
    char_poly,
    commutant_shape_so,
    commutant_shape_sp,
    expand,
    param_from_char_poly,
)
from .endoscopy import (
    EquiSingPair,
    bijection_forward,
    bijection_inverse,
    commutant_pair,
    correspond,
    endoscopic_group_shape,
    enumerate_endo_data,
    fiber,
    gamma_pair_key,
    iota,
    is_equi_singular,
    kappa_of,
    t_value,
    tamagawa,
)
from .exactnum import PolyQ, QuadElem, is_self_reciprocal, poly_neg_arg, poly_reciprocal
from .families import bijection_inputs, so_params, sp_params
from .localsym import (
    INF,
    PlaceQ,
    delta_zero,
    hilbert,
    relevant_places,
    sign_ledger,
    theta_minus_one,
    two_power_product,
)
from .motive import local_L_dual1, motive_equal, motive_of_shape, normalized_volume, point_count
from .rootsys import (
    RootDatum,
    dim_and_q,
    discriminant_ratio,
    exponents,
    is_regular,
    lemma_2n_ratios,
    positive_roots,
    rho,
    steinberg_rho_value,
    varpi_eval,
    varpi_factors,
    weyl_discriminant,
    weyl_order,
)

SUITES = ("rootsys", "endoscopy", "motive", "localsym")

# The endoscopy family grows quickly with n (588 Sp(8) parameters); beyond
# this rank the exhaustive sweeps are capped.
ENDO_RANK_CAP = 4


@dataclass
class CheckResult:
    suite: str
    name: str
    anchor: str
    passed: bool
    cases: int
    counterexample: object = None

    def to_json(self):
        out = {"suite": self.suite, "check": self.name, "anchor": self.anchor,
               "passed": self.passed, "cases": self.cases}
        if not self.passed:
            out["counterexample"] = self.counterexample
        return out


class _Sweep:
    """Counts cases and keeps the first failure."""

    def __init__(self):
        self.cases = 0
        self.failure = None

    def check(self, ok: bool, witness):
        self.cases += 1
        if not ok and self.failure is None:
            self.failure = witness


Check = Callable[[int, random.Random, _Sweep], None]


def _rand_fraction(rng: random.Random, size: int = 30, nonzero: bool = True) -> Fraction:
    while True:
        x = Fraction(rng.randint(-size, size), rng.randint(1, size))
        if x or not nonzero:
            return x


def _rand_unit_monic(rng: random.Random, deg: int) -> PolyQ:
    coeffs = [_rand_fraction(rng, 9, nonzero=False) for _ in range(deg)] + [1]
    if coeffs[0] == 0:
        coeffs[0] = Fraction(1)
    return PolyQ(coeffs)


# ---------------------------------------------------------------------------
# rootsys


def _rs_lemma2n(nmax, rng, sw):
    for n in range(1, nmax + 1):
        got = lemma_2n_ratios(n)
        sw.check(got == (Fraction(1, 2**n), Fraction(1, 4**n)), {"n": n, "got": [str(g) for g in got]})


def _rs_steinberg(nmax, rng, sw):
    for fam in "BC":
        for n in range(1, min(nmax, 8) + 1):
            rd = RootDatum(fam, n)
            a, b = steinberg_rho_value(rd), varpi_eval(rd, rho(rd))
            sw.check(a == b, {"datum": str(rd), "steinberg": str(a), "direct": str(b)})


def _rs_twinning(nmax, rng, sw):
    for n in range(1, nmax + 1):
        b, c = RootDatum("B", n), RootDatum("C", n)
        ok = (exponents(b) == exponents(c) == list(range(1, 2 * n, 2))
              and weyl_order(b) == weyl_order(c)
              and len(positive_roots(b)) == len(positive_roots(c)) == n * n)
        sw.check(ok, {"n": n})


def _rs_q_values(nmax, rng, sw):
    for n in range(1, nmax + 1):
        sp = dim_and_q("Sp", n, "real-split")
        so = dim_and_q("SO", n, "real-split")
        sw.check(sp == so == (n * (2 * n + 1), Fraction(n * (n + 1), 2)), {"n": n})


def _rs_rho_sum(nmax, rng, sw):
    for fam in "ABC":
        for n in range(1, nmax + 1):
            rd = RootDatum(fam, n)
            total = [sum(c) for c in zip(*positive_roots(rd))] or [0] * rd.dim
            sw.check([2 * r for r in rho(rd)] == total, {"datum": str(rd)})


def _rs_varpi_shuffle(nmax, rng, sw):
    for fam in "BC":
        for n in range(1, nmax + 1):
            rd = RootDatum(fam, n)
            lam = [_rand_fraction(rng, 7) for _ in range(n)]
            fs = varpi_factors(rd)
            rng.shuffle(fs)
            sw.check(varpi_eval(rd, lam) == varpi_eval(rd, lam, fs), {"datum": str(rd)})


def _rs_discriminant(nmax, rng, sw):
    for n in range(1, min(nmax, 6) + 1):
        b, c = RootDatum("B", n), RootDatum("C", n)
        found = 0
        while found < 50:
            t = [_rand_fraction(rng, 9) for _ in range(n)]
            if not (is_regular(b, t) and is_regular(c, t)) or Fraction(-1) in t:
                continue
            found += 1
            q = weyl_discriminant(c, t) / weyl_discriminant(b, t)
            sw.check(discriminant_ratio(n, t) == q, {"n": n, "t": [str(x) for x in t]})
        sw.check(discriminant_ratio(n, [1] * n) == 4**n, {"n": n, "t": "1"})


ROOTSYS: list[tuple[str, str, Check]] = [
    ("lemma2n: 2^-n ratio", "varpi^G(rho^H) / varpi^G(rho^G) = 2^-n", _rs_lemma2n),
    ("steinberg: formula = direct varpi(rho)", "Steinberg's formula", _rs_steinberg),
    ("B/C twinning: exponents, Weyl order, root count", "exponents 1,3,...,2n-1", _rs_twinning),
    ("q real-split = n(n+1)/2 for Sp and SO", "q_G = q_H", _rs_q_values),
    ("rho: 2 rho = sum of positive roots", "half-sum of positive roots", _rs_rho_sum),
    ("varpi: factor order irrelevant", "varpi = prod H_alpha", _rs_varpi_shuffle),
    ("discriminant ratio: closed form = D_C/D_B, limit 2^2n", "limit X -> 0", _rs_discriminant),
]


# ---------------------------------------------------------------------------
# exactnum / classparam / endoscopy


def _ex_involutions(nmax, rng, sw):
    for _ in range(200):
        p = _rand_unit_monic(rng, rng.randint(1, 6))
        r, m = poly_reciprocal(p), poly_neg_arg(p)
        ok = (poly_reciprocal(r) == p and poly_neg_arg(m) == p
              and poly_reciprocal(m) == poly_neg_arg(r))
        sw.check(ok, {"p": p.to_json()})


def _ex_eval_hom(nmax, rng, sw):
    for _ in range(20):
        p = _rand_unit_monic(rng, rng.randint(1, 5))
        q = _rand_unit_monic(rng, rng.randint(1, 5))
        pq = p * q
        for _ in range(100):
            x = _rand_fraction(rng, 50, nonzero=False)
            sw.check(pq(x) == p(x) * q(x), {"p": p.to_json(), "q": q.to_json(), "x": str(x)})


def _ex_norm(nmax, rng, sw):
    for _ in range(200):
        d = rng.choice([-7, -5, -3, -2, -1, 2, 3, 5, 6, 7, 10])
        x = QuadElem(d, _rand_fraction(rng), _rand_fraction(rng, nonzero=False))
        y = QuadElem(d, _rand_fraction(rng), _rand_fraction(rng, nonzero=False))
        sw.check((x * y).norm() == x.norm() * y.norm(), {"d": d, "x": str(x), "y": str(y)})


def _family(nmax):
    for n in range(0, min(nmax, ENDO_RANK_CAP) + 1):
        yield from sp_params(n)


def _so_family(nmax):
    for k in range(0, min(nmax, ENDO_RANK_CAP) + 1):
        yield from so_params(2 * k + 1)


def _cp_degree(nmax, rng, sw):
    for p in list(_family(nmax)) + list(_so_family(nmax)):
        full = expand(char_poly(p))
        ok = full.degree == p.size
        if isinstance(p, SpClassParam) and p.size:
            ok = ok and is_self_reciprocal(full)
        sw.check(ok, {"param": p.to_json()})


def _cp_roundtrip(nmax, rng, sw):
    for p in list(_family(nmax)) + list(_so_family(nmax)):
        group = "Sp" if isinstance(p, SpClassParam) else "SO"
        back = param_from_char_poly(group, p.size, char_poly(p))
        sw.check(back == p, {"param": p.to_json()})


def _cp_commutant_dim(nmax, rng, sw):
    for p in _family(nmax):
        sw.check(commutant_shape_sp(p).dim == oracles.centralizer_dim(p, "Sp"),
                 {"param": p.to_json()})
    for p in _so_family(nmax):
        if p.dim_minus == 0:
            sw.check(commutant_shape_so(p).dim == oracles.centralizer_dim(p, "SO"),
                     {"param": p.to_json()})


def _bijection_cases(nmax):
    for delta in _family(nmax):
        for isecond, gl_second in bijection_inputs(delta):
            yield delta, isecond, gl_second


def _en_bijection(nmax, rng, sw):
    for delta, isecond, gl_second in _bijection_cases(nmax):
        elliptic = not delta.split_factors
        witness = {"delta": delta.to_json(), "isecond": list(isecond), "gl_second": list(gl_second)}
        datum, gp = bijection_forward(delta, isecond, gl_second, elliptic=elliptic)
        verdict = is_equi_singular(gp)
        back = bijection_inverse(datum, gp)
        pair = EquiSingPair.from_gamma(gp)
        kappa = kappa_of(pair)
        ok = (bool(verdict) and back.delta == delta and back.isecond == tuple(sorted(isecond))
              and back.gl_second == tuple(sorted(gl_second))
              and kappa.ssecond == len(isecond)
              and kappa.sprime == len(delta.field_factors) - len(isecond))
        fwd_again = bijection_forward(back.delta, back.isecond, back.gl_second, elliptic=elliptic)
        ok = ok and fwd_again == (datum, gp)
        sw.check(ok, witness)


def _en_fiber(nmax, rng, sw):
    for delta in _family(nmax):
        for datum in enumerate_endo_data(delta.n):
            got = fiber(delta, datum)
            sound = all(correspond(gp) == delta for gp in got)
            keys = {gamma_pair_key(gp) for gp in got}
            expected = {gamma_pair_key(gp)
                        for gp in oracles.fiber_oracle(delta, datum.nprime, datum.nsecond)}
            sw.check(sound and keys == expected and len(keys) == len(got),
                     {"delta": delta.to_json(), "datum": datum.to_json()})


def _equising_pairs(nmax):
    for delta, isecond, gl_second in _bijection_cases(nmax):
        _, gp = bijection_forward(delta, isecond, gl_second, elliptic=not delta.split_factors)
        yield EquiSingPair.from_gamma(gp)


def _en_tvalue(nmax, rng, sw):
    for pair in _equising_pairs(nmax):
        g1, g2 = pair.gamma
        try:
            t = t_value(pair)
            ok = 2 * t == g1.dim_plus + g2.dim_plus - 2 == pair.delta.dim_plus + pair.delta.dim_minus
        except AssertionError:
            ok = False
        sw.check(ok, pair.to_json())


def _en_commutants(nmax, rng, sw):
    for pair in _equising_pairs(nmax):
        cp = commutant_pair(pair)
        g1, g2 = pair.gamma
        inner_ok = all(a == b for a, b in cp.inner_forms)
        inner_ok = inner_ok and len(cp.inner_forms) == len(pair.delta.factors)
        (sp_plus, so_plus), (sp_minus, so_minus) = cp.nonstandard
        dims_ok = (so_plus.size == sp_plus.size + 1 == g1.dim_plus
                   and so_minus.size == sp_minus.size + 1 == g2.dim_plus)
        shapes_ok = (Counter(cp.g_shape.atoms) == Counter(commutant_shape_sp(pair.delta).atoms)
                     and Counter(cp.h_shape.atoms)
                     == Counter(commutant_shape_so(g1).atoms + commutant_shape_so(g2).atoms))
        sw.check(inner_ok and dims_ok and shapes_ok, pair.to_json())


def _en_iota(nmax, rng, sw):
    for n in range(1, nmax + 1):
        for datum in enumerate_endo_data(n):
            sw.check(iota(datum) * tamagawa(endoscopic_group_shape(datum)) == 1,
                     {"datum": datum.to_json()})


def _en_correspond_invariance(nmax, rng, sw):
    for k1 in range(0, min(nmax, 2) + 1):
        for k2 in range(0, min(nmax, 2) + 1 - k1):
            for g1 in so_params(2 * k1 + 1):
                for g2 in so_params(2 * k2 + 1):
                    try:
                        ref = correspond((g1, g2))
                    except Exception:
                        continue
                    shuffled = []
                    for g in (g1, g2):
                        fs = [UnitaryFactor.of(poly_reciprocal(f.poly), f.rank, True)
                              for f in g.factors]
                        rng.shuffle(fs)
                        shuffled.append(SoClassParam(g.size, tuple(fs), g.dim_plus, g.dim_minus))
                    sw.check(correspond(tuple(shuffled)) == ref,
                             {"gamma": [g1.to_json(), g2.to_json()]})


def _en_kappa_order(nmax, rng, sw):
    from itertools import product

    for pair in _equising_pairs(min(nmax, 3)):
        k = kappa_of(pair)
        for x in product((1, -1), repeat=k.sprime):
            for y in product((1, -1), repeat=k.ssecond):
                sw.check(k(x, y) ** 2 == 1 and k(x, [1] * k.ssecond) == 1, pair.to_json())


ENDOSCOPY: list[tuple[str, str, Check]] = [
    ("exactnum: reciprocal and sign flip are commuting involutions", "x -> 1/x", _ex_involutions),
    ("exactnum: evaluation is multiplicative at 100 points", "characteristic polynomials",
     _ex_eval_hom),
    ("exactnum: quadratic norm is multiplicative", "quadratic K''", _ex_norm),
    ("classparam: char poly degree and self-reciprocity", "eigenvalue list", _cp_degree),
    ("classparam: parameter <- char poly round trip", "eigenvalue list", _cp_roundtrip),
    ("classparam: commutant dim = centralizer oracle", "commutant U x Sp x Sp", _cp_commutant_dim),
    ("bijection: forward/inverse round trip, equi-singular, kappa recovers I''",
     "(delta, kappa) <-> (n', n'', gamma)", _en_bijection),
    ("fiber: sound and equal to char-poly oracle", "finite fibers", _en_fiber),
    ("t_value: both formulas agree", "|2|^-t exponent", _en_tvalue),
    ("commutant_pair: inner forms matched, dim V'_+ = dim W_+ + 1", "equi-singular commutants",
     _en_commutants),
    ("iota * tau(H) = 1", "iota = tau(H)^-1", _en_iota),
    ("correspond: insensitive to order and representative", "eigenvalue correspondence",
     _en_correspond_invariance),
    ("kappa: order divides 2, trivial on first block", "kappa character", _en_kappa_order),
]


# ---------------------------------------------------------------------------
# motive


def _mo_lfactor(nmax, rng, sw):
    for n in range(0, min(nmax, 5) + 1):
        for q in (3, 5, 7, 9):
            for kind, atom in (("Sp", f"Sp({2 * n})"), ("SO", f"SO({2 * n + 1})")):
                m = motive_of_shape(_shape(kind, n))
                sw.check(1 / local_L_dual1(m, q) == normalized_volume(kind, n, q),
                         {"group": atom, "q": q})


def _shape(kind, n):
    if kind == "Sp":
        return GroupShape((Atom("Sp", 2 * n),))
    return GroupShape((Atom("SO_odd", 2 * n + 1),))


def _mo_bc_counts(nmax, rng, sw):
    for n in range(0, min(nmax, 5) + 1):
        for q in (3, 5, 7, 9):
            sw.check(point_count("Sp", n, q) == point_count("SO", n, q), {"n": n, "q": q})


def _mo_enumeration(nmax, rng, sw):
    sw.check(point_count("Sp", 1, 3) == oracles.count_sl2(3) == 24, "Sp(2), q=3")
    sw.check(point_count("SO", 1, 3) == oracles.count_so3(3) == 24, "SO(3), q=3")
    if nmax >= 2:
        sw.check(point_count("Sp", 2, 3) == oracles.count_sp(2, 3), "Sp(4), q=3")


def _mo_additive(nmax, rng, sw):
    for n in range(0, nmax + 1):
        for m in range(0, nmax + 1):
            a, b = _shape("Sp", n), _shape("SO", m)
            sw.check(motive_equal(motive_of_shape(a + b), motive_of_shape(a) + motive_of_shape(b)),
                     {"n": n, "m": m})


def _mo_pairs(nmax, rng, sw):
    for pair in _equising_pairs(nmax):
        cp = commutant_pair(pair)
        sw.check(motive_equal(motive_of_shape(cp.g_shape), motive_of_shape(cp.h_shape)),
                 pair.to_json())


MOTIVE: list[tuple[str, str, Check]] = [
    ("L(M^v(1))^-1 = q^-dim |G(F_q)|", "non-ramified measure", _mo_lfactor),
    ("|Sp(2n, F_q)| = |SO(2n+1, F_q)|", "same motive for B and C", _mo_bc_counts),
    ("point counts match matrix enumeration over F_3", "finite group orders", _mo_enumeration),
    ("motive of a product is the sum", "M_{G1 x G2} = M_G1 + M_G2", _mo_additive),
    ("commutant pairs have equal motives", "same Artin-Tate motive", _mo_pairs),
]


# ---------------------------------------------------------------------------
# localsym


def _ls_oracle(nmax, rng, sw):
    for p in (2, 3, 5, 7, 11, 13):
        v = PlaceQ(p)
        for a in range(-30, 31):
            for b in range(-30, 31):
                if a and b:
                    sw.check(hilbert(a, b, v) == oracles.hilbert_oracle(a, b, p),
                             {"a": a, "b": b, "p": p})


def _ls_product_formula(nmax, rng, sw):
    for _ in range(500):
        a, b = _rand_fraction(rng, 200), _rand_fraction(rng, 200)
        prod = 1
        for v in relevant_places(a, b):
            prod *= hilbert(a, b, v)
        sw.check(prod == 1, {"a": str(a), "b": str(b)})


def _ls_bimultiplicative(nmax, rng, sw):
    places = [INF] + [PlaceQ(p) for p in (2, 3, 5, 7, 11)]
    for _ in range(300):
        a, a2, b = (_rand_fraction(rng, 60) for _ in range(3))
        v = rng.choice(places)
        ok = (hilbert(a * a2, b, v) == hilbert(a, b, v) * hilbert(a2, b, v)
              and hilbert(a, b, v) == hilbert(b, a, v)
              and hilbert(a, -a, v) == 1)
        sw.check(ok, {"a": str(a), "a2": str(a2), "b": str(b), "v": str(v)})


def _ls_products(nmax, rng, sw):
    for n in range(0, max(nmax, 10) + 1):
        prod = theta_minus_one(n, INF) * theta_minus_one(n, PlaceQ(2))
        for p in (3, 5, 7):
            prod *= theta_minus_one(n, PlaceQ(p))
        sw.check(prod == 1 and two_power_product(n) == 1, {"n": n})


def _ls_delta_square_class(nmax, rng, sw):
    # gamma' charpoly X^2 - 3X + 1, a'' = i in Q(i), n' = 1: argument 5 * det
    P = PolyQ([1, -3, 1])
    i = QuadElem(-1, 0, 1)
    places = [INF] + [PlaceQ(p) for p in (2, 3, 5, 7)]
    for _ in range(100):
        det = _rand_fraction(rng, 40)
        s = _rand_fraction(rng, 20)
        v = rng.choice(places)
        base = delta_zero(P, [i], 1, det, [-1], v)
        scaled = delta_zero(P, [i], 1, det * s * s, [-1], v)
        sw.check(base == scaled, {"det": str(det), "square": str(s * s), "v": str(v)})


def _ls_sign_ledger(nmax, rng, sw):
    for n in range(1, nmax + 1):
        _, q1 = dim_and_q("Sp", n, "real-split")
        _, q2 = dim_and_q("SO", n, "real-split")
        sw.check(sign_ledger(q1, q2, 1, 1), {"n": n})


LOCALSYM: list[tuple[str, str, Check]] = [
    ("hilbert = conic oracle, p <= 13, |a|,|b| <= 30", "quadratic Hilbert symbols", _ls_oracle),
    ("product formula over all places", "quadratic Hilbert symbols", _ls_product_formula),
    ("bimultiplicative, symmetric, (a,-a) = 1", "quadratic Hilbert symbols", _ls_bimultiplicative),
    ("theta(-1) and |2|^-t products over places = 1", "(Theta+ - Theta-)(1) = |2|^-n",
     _ls_products),
    ("delta_zero depends on square class only", "Delta_0 sign", _ls_delta_square_class),
    ("sign ledger with quasi-split B/C", "(-1)^(q1-q2) = e1/e2", _ls_sign_ledger),
]

REGISTRY = {"rootsys": ROOTSYS, "endoscopy": ENDOSCOPY, "motive": MOTIVE, "localsym": LOCALSYM}


def run_suite(suite: str, nmax: int = 4, seed: int = 0) -> list[CheckResult]:
    if suite == "all":
        return [r for s in SUITES for r in run_suite(s, nmax, seed)]
    if suite not in REGISTRY:
        raise ValueError(f"unknown suite {suite!r}; choose from all, {', '.join(SUITES)}")
    if nmax < 1:
        raise ValueError("nmax must be >= 1")
    rng = random.Random(f"{suite}:{seed}")
    out = []
    for name, anchor, fn in REGISTRY[suite]:
        sw = _Sweep()
        try:
            fn(nmax, rng, sw)
        except Exception as exc:  # a crash is a failed check, not a crashed report
            sw.check(False, {"exception": f"{type(exc).__name__}: {exc}"})
        out.append(CheckResult(suite, name, anchor, sw.failure is None, sw.cases, sw.failure))
    return out
