from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from metastab import oracles
from metastab.classparam import SoClassParam, UnitaryFactor
from metastab.endoscopy import EquiSingPair
from metastab.errors import DegenerateInput, Unsupported
from metastab.exactnum import PolyQ, QuadElem
from metastab.localsym import (
    INF,
    PlaceQ,
    abs_norm,
    delta_zero,
    delta_zero_for_pair,
    hilbert,
    legendre,
    relevant_places,
    sgn_quadext,
    sign_ledger,
    theta_minus_one,
    two_power_product,
)

Q3 = PolyQ([1, -3, 1])
I = QuadElem(-1, 0, 1)
SMALL = [INF] + [PlaceQ(p) for p in (2, 3, 5, 7, 11, 13)]


def test_abs_norm_examples():
    assert abs_norm(8, PlaceQ(2)) == Fraction(1, 8)
    assert abs_norm(8, INF) == 8
    assert abs_norm(Fraction(3, 4), PlaceQ(3)) == Fraction(1, 3)
    with pytest.raises(DegenerateInput):
        abs_norm(0, INF)


def test_two_power_product_examples():
    assert two_power_product(1) == two_power_product(0) == two_power_product(3) == 1


def test_theta_examples():
    assert theta_minus_one(1, PlaceQ(2)) == 2
    assert theta_minus_one(2, INF) == Fraction(1, 4)
    assert theta_minus_one(3, PlaceQ(5)) == 1


def test_legendre_examples():
    assert legendre(2, 7) == 1 == oracles.legendre_oracle(2, 7)
    assert legendre(3, 7) == -1 == oracles.legendre_oracle(3, 7)
    assert legendre(7, 7) == 0


def test_hilbert_examples():
    assert hilbert(-1, -1, INF) == -1
    assert hilbert(-1, -1, PlaceQ(2)) == -1 == oracles.hilbert_oracle(-1, -1, 2)
    assert hilbert(-1, -1, PlaceQ(3)) == 1 == oracles.hilbert_oracle(-1, -1, 3)


def test_sgn_quadext_examples():
    assert sgn_quadext(-1, -1, INF) == -1
    # 2 = 1^2 + 1^2 is a norm from Q(i)
    assert sgn_quadext(-1, 2, PlaceQ(5)) == 1 == oracles.hilbert_oracle(-1, 2, 5)
    assert sgn_quadext(5, 3, INF) == 1
    with pytest.raises(ValueError):
        sgn_quadext(4, 3, INF)


def test_delta_zero_examples():
    assert delta_zero(Q3, [], 1, 5, [], PlaceQ(3)) == 1
    assert delta_zero(Q3, [None], 1, 5, ["split"], PlaceQ(3)) == 1
    # P(i) (-i)^-1 det = (-3i)(i)(5) = 15; 15 is a norm from Q(i) locally at 5 but not at 3
    assert delta_zero(Q3, [I], 1, 5, [-1], PlaceQ(5)) == 1 == oracles.hilbert_oracle(-1, 15, 5)
    assert delta_zero(Q3, [I], 1, 5, [-1], PlaceQ(3)) == -1 == oracles.hilbert_oracle(-1, 15, 3)


def test_delta_zero_errors():
    with pytest.raises(DegenerateInput):
        delta_zero(Q3, [I], 1, 0, [-1], INF)
    with pytest.raises(DegenerateInput):
        delta_zero(PolyQ([1, 0, 1]), [I], 1, 5, [-1], INF)  # P(i) = 0
    with pytest.raises(DegenerateInput):
        delta_zero(Q3, [I], 0, 5, [-1], INF)  # -3i is not rational
    with pytest.raises(Unsupported):
        delta_zero(Q3, [Fraction(2)], 1, 5, [-1], INF)


def test_delta_zero_for_pair_matches_hand_computation():
    g1 = SoClassParam(3, (UnitaryFactor.of(Q3),), 1, 0)
    g2 = SoClassParam(3, (UnitaryFactor.of(PolyQ([1, 0, 1])),), 1, 0)
    pair = EquiSingPair.from_gamma((g1, g2))
    signs = {str(v): delta_zero_for_pair(pair, v) for v in SMALL}
    assert signs == {str(v): oracles.hilbert_oracle(-1, 15, v.p) for v in SMALL}
    assert [signs[k] for k in ("inf", "2", "3", "5")] == [1, -1, -1, 1]
    prod = 1
    for v in relevant_places(15):
        prod *= delta_zero_for_pair(pair, v)
    assert prod == 1


def test_sign_ledger_examples():
    assert sign_ledger(3, 3, 1, 1)
    assert sign_ledger(3, 2, -1, 1)
    assert not sign_ledger(3, 2, 1, 1)
    with pytest.raises(ValueError):
        sign_ledger(Fraction(1, 2), 0, 1, 1)


def test_place_requires_prime():
    with pytest.raises(ValueError):
        PlaceQ(9)


# --- properties -------------------------------------------------------------


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13])
def test_hilbert_matches_conic_oracle(p):
    v = PlaceQ(p)
    for a in range(-30, 31):
        for b in range(-30, 31):
            if a and b:
                assert hilbert(a, b, v) == oracles.hilbert_oracle(a, b, p), (a, b)


nonzero = st.builds(Fraction, st.integers(1, 300) | st.integers(-300, -1), st.integers(1, 300))
places = st.sampled_from(SMALL)


@given(nonzero, nonzero)
@settings(max_examples=500)
def test_product_formula(a, b):
    prod = 1
    for v in relevant_places(a, b):
        prod *= hilbert(a, b, v)
    assert prod == 1


@given(nonzero, nonzero, nonzero, places)
@settings(max_examples=300)
def test_bimultiplicative_and_symmetric(a, a2, b, v):
    assert hilbert(a * a2, b, v) == hilbert(a, b, v) * hilbert(a2, b, v)
    assert hilbert(a, b, v) == hilbert(b, a, v)
    assert hilbert(a, -a, v) == 1
    assert hilbert(a, 1 - a, v) == 1 if a != 1 else True


@given(nonzero, nonzero, places)
@settings(max_examples=200)
def test_delta_zero_depends_on_square_class(det, s, v):
    assert delta_zero(Q3, [I], 1, det, [-1], v) == delta_zero(Q3, [I], 1, det * s * s, [-1], v)


@pytest.mark.parametrize("n", range(0, 11))
def test_global_products(n):
    prod = Fraction(1)
    for v in SMALL:
        prod *= theta_minus_one(n, v)
    assert prod == 1
    assert two_power_product(n) == 1
