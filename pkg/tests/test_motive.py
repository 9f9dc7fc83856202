from fractions import Fraction

import pytest

from metastab import oracles
from metastab.classparam import Atom, GroupShape
from metastab.errors import Unsupported
from metastab.exactnum import PolyQ
from metastab.motive import (
    Summand,
    TateMotive,
    local_L_dual1,
    motive_equal,
    motive_of_shape,
    normalized_volume,
    point_count,
)

Q3 = PolyQ([1, -3, 1])


def shape(*atoms):
    return GroupShape(tuple(atoms))


def test_motive_of_shape_examples():
    assert motive_of_shape(shape(Atom("Sp", 4))).exponents == [1, 3]
    assert motive_of_shape(shape(Atom("SO_odd", 5))).exponents == [1, 3]
    u2 = Atom("U", 2, Q3, 1)
    g = motive_of_shape(shape(u2, Atom("Sp", 2)))
    h = motive_of_shape(shape(u2, Atom("SO_odd", 3)))
    assert motive_equal(g, h)
    other = Atom("U", 2, PolyQ([1, 0, 1]), 1)
    assert not motive_equal(g, motive_of_shape(shape(other, Atom("SO_odd", 3))))


def test_motive_equal_examples():
    assert not motive_equal(TateMotive.of_exponents([1, 3]), TateMotive.of_exponents([1, 5]))
    assert motive_equal(TateMotive(), TateMotive())
    assert motive_equal(TateMotive.of_exponents([3, 1]), TateMotive.of_exponents([1, 3]))


def test_lfactor_examples():
    assert local_L_dual1(TateMotive.of_exponents([1]), 3) == Fraction(9, 8)
    assert local_L_dual1(TateMotive.of_exponents([1, 3]), 2) == Fraction(64, 45)
    assert local_L_dual1(TateMotive(), 7) == 1
    with pytest.raises(Unsupported):
        local_L_dual1(TateMotive((Summand(label=("U", 1, ())),)), 3)
    with pytest.raises(Unsupported):
        local_L_dual1(TateMotive((Summand(1, "quadratic(-1)"),)), 3)
    with pytest.raises(ValueError):
        local_L_dual1(TateMotive.of_exponents([1]), 6)


def test_point_count_examples():
    assert point_count("Sp", 1, 3) == 24
    assert point_count("SO", 1, 3) == 24
    assert point_count("Sp", 2, 3) == 51840
    with pytest.raises(Unsupported):
        point_count("Sp", 1, 4)


def test_point_counts_by_enumeration():
    assert oracles.count_sl2(3) == 24
    assert oracles.count_so3(3) == 24
    assert oracles.count_sl2(5) == point_count("Sp", 1, 5)
    assert oracles.count_sp(2, 3) == 51840


def test_motive_json_round_trip():
    m = motive_of_shape(shape(Atom("U", 2, Q3, 1), Atom("Sp", 4)))
    assert TateMotive.from_json(m.to_json()) == m


def test_exponents_must_be_positive():
    with pytest.raises(ValueError):
        TateMotive.of_exponents([0])


@pytest.mark.parametrize("q", [3, 5, 7, 9])
@pytest.mark.parametrize("n", range(0, 6))
def test_lfactor_is_inverse_normalized_volume(n, q):
    for kind, atom in (("Sp", Atom("Sp", 2 * n)), ("SO", Atom("SO_odd", 2 * n + 1))):
        m = motive_of_shape(shape(atom))
        assert 1 / local_L_dual1(m, q) == normalized_volume(kind, n, q)
    assert point_count("Sp", n, q) == point_count("SO", n, q)


@pytest.mark.parametrize("n,m", [(1, 2), (2, 2), (3, 0), (0, 4)])
def test_motive_is_additive(n, m):
    a, b = shape(Atom("Sp", 2 * n)), shape(Atom("SO_odd", 2 * m + 1))
    assert motive_equal(motive_of_shape(a + b), motive_of_shape(a) + motive_of_shape(b))
