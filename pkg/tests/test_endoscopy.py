from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from metastab import oracles
from metastab.classparam import (
    Atom,
    GroupShape,
    SoClassParam,
    SpClassParam,
    UnitaryFactor,
    identity_so,
    identity_sp,
    minus_identity_sp,
)
from metastab.endoscopy import (
    EndoDatum,
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
    nonramified_pair_check,
    t_value,
    tamagawa,
)
from metastab.errors import InvalidParameter, NotEquiSingular, Unsupported
from metastab.exactnum import PolyQ
from metastab.families import FACTOR_POOL, bijection_inputs, pool_is_negation_closed, sp_params

X = PolyQ.x()
Q3 = PolyQ([1, -3, 1])
I2 = PolyQ([1, 0, 1])
SO1 = identity_so(0)
SO3 = identity_so(1)


def fld(p, r=1):
    return UnitaryFactor("field", p, r)


def spl(p, r=1):
    return UnitaryFactor.of(p, r)


# --- examples ---------------------------------------------------------------


def test_enumerate_endo_data():
    assert enumerate_endo_data(2) == [EndoDatum(2, 0), EndoDatum(1, 1), EndoDatum(0, 2)]
    assert enumerate_endo_data(0) == [EndoDatum(0, 0)]
    assert enumerate_endo_data(1) == [EndoDatum(1, 0), EndoDatum(0, 1)]


def test_correspond_examples():
    assert correspond((SO3, SO1)) == identity_sp(1)
    assert correspond((SO1, SO3)) == minus_identity_sp(1)
    g1 = SoClassParam(3, (spl(X - 2),), 1, 0)
    assert correspond((g1, SO1)) == SpClassParam(1, (spl(X - 2),), 0, 0)


def test_correspond_dims_and_invalid_input():
    # V'_+ odd and V''_- even force W_+ even; likewise W_-
    d = correspond((SoClassParam(3, (), 1, 2), SoClassParam(3, (), 1, 2)))
    assert (d.dim_plus, d.dim_minus) == (2, 2)
    with pytest.raises(InvalidParameter):
        correspond((SoClassParam(3, (), 2, 1), SO1))


def test_equi_singular_examples():
    assert is_equi_singular((SO3, SO1)).equi_singular
    g1 = SoClassParam(3, (spl(X - 2),), 1, 0)
    g2 = SoClassParam(3, (spl(X + 2),), 1, 0)
    verdict = is_equi_singular((g1, g2))
    assert not verdict.equi_singular
    assert "X - 2" in str(verdict.witness)
    fused = correspond((g1, g2))
    assert fused.factors == (spl(X - 2, 2),)
    minus = is_equi_singular((SoClassParam(3, (), 1, 2), SO1))
    assert not minus.equi_singular and "V'_-" in str(minus.witness)


def test_fiber_examples():
    assert fiber(identity_sp(1), EndoDatum(1, 0)) == [(SO3, SO1)]
    assert fiber(identity_sp(1), EndoDatum(0, 1)) == [(SO1, SoClassParam(3, (), 1, 2))]
    assert fiber(minus_identity_sp(1), EndoDatum(0, 1)) == [(SO1, SO3)]


def test_commutant_pair_examples():
    for n in (1, 2, 3):
        cp = commutant_pair(EquiSingPair.from_gamma((identity_so(n), SO1)))
        assert cp.g_shape.atoms == (Atom("Sp", 2 * n),)
        assert cp.h_shape.atoms == (Atom("SO_odd", 2 * n + 1),)
        cp = commutant_pair(EquiSingPair.from_gamma((SO1, identity_so(n))))
        assert cp.g_shape.atoms == (Atom("Sp", 2 * n),)
        assert cp.h_shape.atoms == (Atom("SO_odd", 2 * n + 1),)
    g1 = SoClassParam(5, (fld(Q3),), 3, 0)
    cp = commutant_pair(EquiSingPair.from_gamma((g1, SO1)))
    assert [a.kind for a in cp.g_shape.atoms] == ["U", "Sp"]
    assert [a.kind for a in cp.h_shape.atoms] == ["U", "SO_odd"]
    assert cp.inner_forms[0][0] == cp.inner_forms[0][1]


def test_t_value_examples():
    for n in (1, 2, 4):
        assert t_value(EquiSingPair.from_gamma((identity_so(n), SO1))) == n
    regular = EquiSingPair.from_gamma((SoClassParam(3, (fld(I2),), 1, 0), SO1))
    assert t_value(regular) == 0
    assert t_value(EquiSingPair.from_gamma((SoClassParam(5, (fld(Q3),), 3, 0), SO1))) == 1


def test_kappa_examples():
    k = kappa_of(EquiSingPair.from_gamma((SO3, SO1)))
    assert (k.sprime, k.ssecond, k.is_trivial) == (0, 0, True)
    pair = EquiSingPair.from_gamma((SO1, SoClassParam(3, (fld(I2),), 1, 0)))
    k = kappa_of(pair)
    assert (k.sprime, k.ssecond, k.is_trivial) == (0, 1, False)
    assert k((), (-1,)) == -1
    g1 = SoClassParam(5, (fld(Q3), fld(PolyQ([1, 1, 1]))), 1, 0)
    g2 = SoClassParam(3, (fld(I2),), 1, 0)
    k = kappa_of(EquiSingPair.from_gamma((g1, g2)))
    assert (k.sprime, k.ssecond) == (2, 1)


def test_bijection_forward_examples():
    assert bijection_forward(identity_sp(1), ()) == (EndoDatum(1, 0), (SO3, SO1))
    assert bijection_forward(minus_identity_sp(1), ()) == (EndoDatum(0, 1), (SO1, SO3))
    delta = SpClassParam(2, (fld(Q3),), 2, 0)
    datum, (g1, g2) = bijection_forward(delta, (0,))
    assert datum == EndoDatum(1, 1)
    assert g1 == SO3
    assert g2 == SoClassParam(3, (fld(PolyQ([1, 3, 1])),), 1, 0)


def test_bijection_inverse_examples():
    assert bijection_inverse(EndoDatum(1, 0), (SO3, SO1)).delta == identity_sp(1)
    assert bijection_inverse(EndoDatum(0, 1), (SO1, SO3)).delta == minus_identity_sp(1)
    delta = SpClassParam(2, (fld(Q3),), 2, 0)
    datum, gp = bijection_forward(delta, (0,))
    back = bijection_inverse(datum, gp)
    assert (back.delta, back.isecond) == (delta, (0,))


def test_bijection_errors():
    with pytest.raises(NotEquiSingular):
        bijection_inverse(EndoDatum(1, 1), (SoClassParam(3, (spl(X - 2),), 1, 0),
                                            SoClassParam(3, (spl(X + 2),), 1, 0)))
    delta = SpClassParam(1, (spl(X - 2),), 0, 0)
    with pytest.raises(Unsupported):
        bijection_forward(delta, ())
    with pytest.raises(InvalidParameter):
        bijection_forward(delta, (), elliptic=False)
    with pytest.raises(InvalidParameter):
        bijection_forward(delta, (0,), (), elliptic=False)
    with pytest.raises(InvalidParameter):
        bijection_forward(SpClassParam(2, (fld(Q3),), 1, 1), ())


def test_iota_examples():
    assert iota(EndoDatum(1, 1)) == Fraction(1, 4)
    assert iota(EndoDatum(2, 0)) == Fraction(1, 2)
    assert iota(EndoDatum(0, 0)) == 1


def test_tamagawa_examples():
    so = lambda m: Atom("SO_odd", m)  # noqa: E731
    assert tamagawa(GroupShape((so(3), so(3)))) == 4
    assert tamagawa(GroupShape((Atom("Sp", 6),))) == 1
    assert tamagawa(GroupShape((so(1), so(5)))) == 2
    with pytest.raises(Unsupported):
        tamagawa(GroupShape((Atom("GL", 1, X - 2),)))


def test_nonramified_examples():
    plus = EquiSingPair.from_gamma((SO3, SO1))
    assert all(nonramified_pair_check(plus, p) for p in (3, 5, 7, 11))
    q3 = EquiSingPair.from_gamma((SoClassParam(5, (fld(Q3),), 3, 0), SO1))
    assert not nonramified_pair_check(q3, 5)
    assert nonramified_pair_check(q3, 7)
    with pytest.raises(Unsupported):
        nonramified_pair_check(plus, 2)


def test_pair_json_round_trip():
    g1 = SoClassParam(5, (fld(Q3),), 3, 0)
    g2 = SoClassParam(3, (fld(I2),), 1, 0)
    pair = EquiSingPair.from_gamma((g1, g2))
    assert EquiSingPair.from_json(pair.to_json()) == pair
    doc = pair.to_json()
    doc["split"] = {"iprime": [1], "isecond": [0]}
    with pytest.raises(InvalidParameter):
        EquiSingPair.from_json(doc)


def test_datum_is_ordered():
    assert EndoDatum(2, 1) != EndoDatum(1, 2)
    assert iota(EndoDatum(2, 1)) == iota(EndoDatum(1, 2))
    assert fiber(identity_sp(1), EndoDatum(1, 0)) != fiber(identity_sp(1), EndoDatum(0, 1))


# --- properties -------------------------------------------------------------

FAMILY = [d for n in range(0, 4) for d in sp_params(n)]
CASES = [(d, i2, gl2) for d in FAMILY for i2, gl2 in bijection_inputs(d)]


def test_pool_is_closed_under_sign_flip():
    assert pool_is_negation_closed()
    assert len(FACTOR_POOL) >= 6


@given(st.sampled_from(CASES))
@settings(max_examples=300)
def test_bijection_round_trip(case):
    delta, isecond, gl_second = case
    elliptic = not delta.split_factors
    datum, gp = bijection_forward(delta, isecond, gl_second, elliptic=elliptic)
    assert is_equi_singular(gp).equi_singular
    back = bijection_inverse(datum, gp)
    assert back == (delta, tuple(sorted(isecond)), tuple(sorted(gl_second)))
    assert bijection_forward(*back, elliptic=elliptic) == (datum, gp)
    k = kappa_of(EquiSingPair.from_gamma(gp))
    assert k.ssecond == len(isecond)


@given(st.sampled_from(FAMILY), st.data())
@settings(max_examples=200)
def test_fiber_matches_oracle(delta, data):
    datum = data.draw(st.sampled_from(enumerate_endo_data(delta.n)))
    got = fiber(delta, datum)
    assert all(correspond(gp) == delta for gp in got)
    want = oracles.fiber_oracle(delta, datum.nprime, datum.nsecond)
    assert {gamma_pair_key(g) for g in got} == {gamma_pair_key(g) for g in want}


@given(st.sampled_from(CASES))
@settings(max_examples=200)
def test_equi_singular_pairs_are_coherent(case):
    delta, isecond, gl_second = case
    _, gp = bijection_forward(delta, isecond, gl_second, elliptic=not delta.split_factors)
    pair = EquiSingPair.from_gamma(gp)
    g1, g2 = gp
    assert 2 * t_value(pair) == g1.dim_plus + g2.dim_plus - 2
    cp = commutant_pair(pair)
    assert all(a == b for a, b in cp.inner_forms)
    assert len(cp.inner_forms) == len(delta.factors)
    (sp1, so1), (sp2, so2) = cp.nonstandard
    assert so1.size == sp1.size + 1 and so2.size == sp2.size + 1
    k = kappa_of(pair)
    assert k((1,) * k.sprime, (-1,) * k.ssecond) ** 2 == 1


@pytest.mark.parametrize("n", range(1, 9))
def test_iota_inverts_tau(n):
    for datum in enumerate_endo_data(n):
        assert iota(datum) * tamagawa(endoscopic_group_shape(datum)) == 1


@given(st.sampled_from(FAMILY), st.randoms(use_true_random=False))
@settings(max_examples=100)
def test_correspond_ignores_order_and_representative(delta, rnd):
    for datum in enumerate_endo_data(delta.n):
        for g1, g2 in fiber(delta, datum):
            flipped = []
            for g in (g1, g2):
                fs = [UnitaryFactor.of(f.polys[-1], f.rank) for f in g.factors]
                rnd.shuffle(fs)
                flipped.append(SoClassParam(g.size, tuple(fs), g.dim_plus, g.dim_minus))
            assert correspond(tuple(flipped)) == delta
