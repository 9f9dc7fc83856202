import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from metastab.classparam import Atom, GroupShape
from metastab.errors import InvalidRoot, RankMismatch, SingularPoint, Unsupported
from metastab.rootsys import (
    RootDatum,
    all_roots,
    coroot_btr,
    dim_and_q,
    discriminant_ratio,
    discriminant_ratio_kind,
    exponents,
    germ_exponent,
    lemma_2n_ratios,
    positive_roots,
    rho,
    steinberg_rho_value,
    varpi_eval,
    varpi_factors,
    weyl_discriminant,
    weyl_order,
)

B = lambda n: RootDatum("B", n)  # noqa: E731
C = lambda n: RootDatum("C", n)  # noqa: E731


def ints(v):
    return tuple(int(x) for x in v)


def test_positive_roots_examples():
    assert [ints(r) for r in positive_roots(C(1))] == [(2,)]
    assert [ints(r) for r in positive_roots(B(2))] == [(1, -1), (1, 1), (1, 0), (0, 1)]
    assert [ints(r) for r in positive_roots(RootDatum("A", 1))] == [(1, -1)]


def test_rho_examples():
    assert rho(C(2)) == (2, 1)
    assert rho(B(2)) == (F(3, 2), F(1, 2))
    assert rho(C(1)) == (1,)


def test_coroot_examples():
    assert coroot_btr((2, 0, 0), C(3)) == (2, 0, 0)
    assert coroot_btr((1, 0), B(2)) == (1, 0)
    for rd in (B(3), C(3)):
        assert coroot_btr((1, -1, 0), rd) == (1, -1, 0)
    with pytest.raises(InvalidRoot):
        coroot_btr((1, 0, 0), C(3))


def test_varpi_examples():
    assert varpi_eval(C(1), rho(C(1))) == 2
    assert varpi_eval(C(1), rho(B(1))) == 1
    assert varpi_eval(B(1), rho(B(1))) == F(1, 2)
    with pytest.raises(RankMismatch):
        varpi_eval(C(2), (1,))


def test_lemma_2n_examples():
    assert lemma_2n_ratios(1) == (F(1, 2), F(1, 4))
    assert lemma_2n_ratios(2) == (F(1, 4), F(1, 16))
    assert lemma_2n_ratios(5) == (F(1, 32), F(1, 1024))


def test_exponents_examples():
    assert exponents(C(3)) == [1, 3, 5]
    assert exponents(B(3)) == [1, 3, 5]
    assert exponents(RootDatum("A", 1)) == [1]


def test_steinberg_examples():
    assert steinberg_rho_value(C(1)) == 2
    assert steinberg_rho_value(B(1)) == F(1, 2)
    # direct: (2+1)(2-1) * 2*2 * 2*1 = 24
    assert steinberg_rho_value(C(2)) == 24 == varpi_eval(C(2), (2, 1))
    with pytest.raises(Unsupported):
        steinberg_rho_value(RootDatum("A", 2))


def test_weyl_order_examples():
    assert weyl_order(C(2)) == 8
    assert weyl_order(B(2)) == 8
    assert weyl_order(RootDatum("A", 2)) == 6


def _reflect(v, a):
    # s_a(v) = v - 2 (v,a)/(a,a) a in the epsilon basis
    c = F(2 * sum(x * y for x, y in zip(v, a)), sum(x * x for x in a))
    return tuple(x - c * y for x, y in zip(v, a))


@pytest.mark.parametrize("rd", [B(2), C(2), B(3), C(3), RootDatum("A", 3)])
def test_weyl_order_by_generating_the_group(rd):
    # oracle: close the set of root permutations under all reflections
    roots = [tuple(r) for r in all_roots(rd)]
    index = {r: i for i, r in enumerate(roots)}
    gens = [tuple(index[_reflect(r, a)] for r in roots) for a in positive_roots(rd)]
    group = {tuple(range(len(roots)))}
    frontier = list(group)
    while frontier:
        g = frontier.pop()
        for s in gens:
            h = tuple(s[i] for i in g)
            if h not in group:
                group.add(h)
                frontier.append(h)
    assert len(group) == weyl_order(rd)


def test_dim_and_q_examples():
    assert dim_and_q("Sp", 2, "real-split") == (10, 3)
    assert dim_and_q("SO", 2, "real-split") == (10, 3)
    assert dim_and_q("Sp", 3, "nonarch-split") == (21, 3)
    with pytest.raises(Unsupported):
        dim_and_q("GL", 2, "real-split")
    with pytest.raises(Unsupported):
        dim_and_q("Sp", 2, "quasi-split")


def test_weyl_discriminant_examples():
    assert weyl_discriminant(C(1), (4,)) == F(-225, 16)
    assert weyl_discriminant(B(1), (4,)) == F(-9, 4)
    assert weyl_discriminant(C(1), (2,)) == F(-9, 4)
    with pytest.raises(SingularPoint):
        weyl_discriminant(C(1), (-1,))


def test_discriminant_ratio_examples():
    assert discriminant_ratio(1, (4,)) == F(25, 4)
    assert discriminant_ratio(1, (1,)) == 4
    assert discriminant_ratio(2, (1, 1)) == 16
    assert discriminant_ratio_kind(1, (1,)) == "limit"
    assert discriminant_ratio_kind(1, (4,)) == "pointwise"
    with pytest.raises(SingularPoint):
        discriminant_ratio(1, (-1,))


def test_germ_exponent_examples():
    for shape in (GroupShape((Atom("Sp", 4),)), GroupShape((Atom("SO_odd", 5),)),
                  GroupShape((Atom("GL", 3),))):
        assert germ_exponent(shape) == 0
    with pytest.raises(Unsupported):
        germ_exponent(GroupShape((Atom("Sp", 4),)), "regular")


# --- properties -------------------------------------------------------------


@pytest.mark.parametrize("n", range(1, 13))
def test_lemma_2n_sweep(n):
    assert lemma_2n_ratios(n) == (F(1, 2**n), F(1, 4**n))


@pytest.mark.parametrize("fam", "BC")
@pytest.mark.parametrize("n", range(1, 9))
def test_steinberg_matches_direct(fam, n):
    rd = RootDatum(fam, n)
    assert steinberg_rho_value(rd) == varpi_eval(rd, rho(rd))


@pytest.mark.parametrize("n", range(1, 13))
def test_bc_twins(n):
    assert exponents(B(n)) == exponents(C(n))
    assert weyl_order(B(n)) == weyl_order(C(n))
    assert len(positive_roots(B(n))) == len(positive_roots(C(n))) == n * n


@pytest.mark.parametrize("rd", [RootDatum(f, n) for f in "ABC" for n in range(1, 8)])
def test_two_rho_is_root_sum(rd):
    total = [sum(c) for c in zip(*positive_roots(rd))]
    assert [2 * x for x in rho(rd)] == total


weights = st.lists(st.builds(F, st.integers(-9, 9), st.integers(1, 5)), min_size=1, max_size=5)


@given(st.sampled_from("BC"), weights, st.randoms(use_true_random=False))
@settings(max_examples=60)
def test_varpi_ignores_factor_order(fam, lam, rnd):
    rd = RootDatum(fam, len(lam))
    fs = varpi_factors(rd)
    rnd.shuffle(fs)
    assert varpi_eval(rd, lam) == varpi_eval(rd, lam, fs)


@pytest.mark.parametrize("n", range(1, 7))
def test_discriminant_ratio_random_points(n):
    rng = random.Random(n)
    done = 0
    while done < 50:
        t = [F(rng.choice([-1, 1]) * rng.randint(1, 12), rng.randint(1, 12)) for _ in range(n)]
        try:
            q = weyl_discriminant(C(n), t) / weyl_discriminant(B(n), t)
        except SingularPoint:
            continue
        done += 1
        assert discriminant_ratio(n, t) == q
    assert discriminant_ratio(n, [1] * n) == 2 ** (2 * n)
