import pytest

from apnforge.theorems import (
    run_suite, verify_dobbertin, verify_dobbertin_inverse, verify_kasami,
    verify_kasami_inverse, verify_lemmas, verify_niho, verify_welch,
)


def test_welch_suite():
    rep = verify_welch(t_max=10)
    assert rep.ok, rep.failures
    assert rep.details[1]["direct"] and rep.details[2]["inverse"]
    assert not rep.details[5]["direct"] and not rep.details[5]["inverse"]


def test_kasami_suite():
    rep = verify_kasami(t_max=8, n_max=30)
    assert rep.ok, rep.failures
    assert rep.details["n5_companion_hits"] == [5, 7, 9, 25]
    # the catalog formula meets e(l,k) at n=5 only inside the class of Gold 3
    assert rep.details["n5_catalog_hits"] == [3, 11, 17, 21]
    assert rep.details["theorem"] == []


def test_kasami_inverse_suite():
    rep = verify_kasami_inverse(n_max=21)
    assert rep.ok, rep.failures
    assert rep.details[7][1] and rep.details[7][6]
    assert all(not rep.details[7][t] for t in (2, 3, 4, 5))
    # the n = 5 collapse: every Kasami class is the Gold-3 class there
    assert all(rep.details[5][t] for t in (1, 2, 3, 4))


def test_niho_suite():
    rep = verify_niho(t_max=13)
    assert rep.ok, rep.failures
    assert not rep.details["even"][4]["direct"]
    assert not rep.details["odd"][3]["direct"]


def test_dobbertin_suites():
    rep = verify_dobbertin(n_max=50)
    assert rep.ok, rep.failures
    assert rep.details[5] and rep.details[10]
    assert not rep.details[15] and not rep.details[20]
    rep = verify_dobbertin_inverse(n_max=50)
    assert rep.ok, rep.failures


def test_lemmas_suite():
    rep = verify_lemmas(reflect_n_max=20, weight_n_max=24, gold_n_max=21)
    assert rep.ok, rep.failures
    assert all(v > 0 for v in rep.details["checked"].values())


def test_run_suite_dispatch():
    reports = run_suite("welch", t_max=6)
    assert len(reports) == 1 and reports[0].suite == "welch"
    assert {r.suite for r in run_suite("all")} == {
        "welch", "kasami", "kasami-inverse", "niho",
        "dobbertin", "dobbertin-inverse", "lemmas",
    }
    with pytest.raises(ValueError):
        run_suite("nope")
    rep = reports[0].to_json_dict()
    assert rep["ok"] is True and rep["suite"] == "welch"
