import pytest

import exspec


def test_build_and_spectrum_of_triangle():
    s = exspec.spectrum("Bw")
    assert (s["p"], s["q"], s["exceptional_count"]) == (1, 2, 0)


def test_family_member_has_two_exceptional_eigenvalues():
    g6 = exspec.graph6("I(3,4)")
    s = exspec.spectrum(g6)
    assert s["exceptional_count"] == 2
    v = exspec.classify(g6)
    assert v["case"] == "MemberOfF"
    assert v["descriptor"] == "I(a=3,k=4)"
    assert v["violations"] == []


def test_numeric_mode_agrees_with_exact():
    g6 = exspec.graph6("II(3,2)")
    exact = exspec.spectrum(g6)
    numeric = exspec.spectrum(g6, numeric=True)
    assert (exact["p"], exact["q"]) == (numeric["p"], numeric["q"])
    for a, b in zip(exact["exceptional"], numeric["exceptional"]):
        assert abs(a["value"] - b["value"]) < 1e-6


def test_certify_and_char_poly():
    r = exspec.certify("IV(3)")
    assert r["passed"]
    cp = exspec.char_poly("Bw")
    assert cp == [-2, -3, 0, 1]  # x^3 - 3x - 2


def test_cospectral_pair_is_certified():
    out = exspec.cospectral("I(3,4)")
    rights = {w["right"]["descriptor"] for w in out["witnesses"]}
    assert "II(k=2,l=2)" in rights
    assert all(w["certified"] for w in out["witnesses"])


def test_ds_verdict():
    assert not exspec.ds("I(3,6)")["is_ds"]
    assert exspec.ds("I(1,2)")["is_ds"]


def test_survey_and_enumeration():
    assert len(exspec.connected_graphs(5)) == 21
    r = exspec.survey(7)
    assert r["connected"] == 853
    assert r["catalog_matches"] == {"I(a=1,k=2)": 1}
    assert r["passed"]


def test_canonical_form_is_label_invariant():
    # path a-b-c written with two different centres
    assert exspec.canonical_form("Bg") == exspec.canonical_form("BW")


def test_errors_are_value_errors():
    with pytest.raises(ValueError):
        exspec.build("I(0,2)")
    with pytest.raises(ValueError):
        exspec.spectrum("!!")
    with pytest.raises(ValueError):
        exspec.survey(10)


def test_acceptance_subset():
    rows = exspec.acceptance(only=[3])
    assert [r["id"] for r in rows] == [3]
    assert rows[0]["passed"]
