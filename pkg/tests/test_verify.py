import pytest

from metastab import verify


@pytest.fixture(scope="module")
def all_rows():
    return verify.run_suite("all", nmax=4, seed=7)


def test_all_suites_pass(all_rows):
    failed = [r.to_json() for r in all_rows if not r.passed]
    assert not failed
    assert {r.suite for r in all_rows} == set(verify.SUITES)
    assert all(r.cases > 0 and r.anchor for r in all_rows)


def test_rootsys_rows_include_lemma_2n():
    rows = verify.run_suite("rootsys", nmax=10, seed=0)
    lemma = [r for r in rows if r.name.startswith("lemma2n: 2^-n ratio")]
    assert lemma and lemma[0].passed and lemma[0].cases == 10


def test_localsym_rows_include_product_formula():
    rows = verify.run_suite("localsym", nmax=2, seed=1)
    pf = [r for r in rows if "product formula" in r.name]
    assert pf and all(r.passed for r in pf) and pf[0].cases >= 500


def test_reports_are_deterministic():
    a = [r.to_json() for r in verify.run_suite("localsym", 2, 5)]
    b = [r.to_json() for r in verify.run_suite("localsym", 2, 5)]
    assert a == b


def test_a_crashing_check_is_a_failed_row(monkeypatch):
    def boom(nmax, rng, sw):
        raise ZeroDivisionError("x")

    monkeypatch.setitem(verify.REGISTRY, "motive", [("boom", "anchor", boom)])
    (row,) = verify.run_suite("motive", 1, 0)
    assert not row.passed and "ZeroDivisionError" in row.counterexample["exception"]
    assert row.to_json()["counterexample"]


def test_bad_arguments():
    with pytest.raises(ValueError):
        verify.run_suite("nope")
    with pytest.raises(ValueError):
        verify.run_suite("rootsys", nmax=0)
