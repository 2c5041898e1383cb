import json

import pytest

import knotcert


def test_rho_and_words():
    assert knotcert.rho("x") == (1, 1, 0, 1)
    assert knotcert.rho("xyxxyx") == (-1, 0, 0, -1)
    assert knotcert.reduce_word("xXyxY") == "yxY"
    w = knotcert.matrix_to_word(7, 11, 5, 8)
    assert knotcert.rho(w) == (7, 11, 5, 8)
    assert knotcert.same_element("xyx", "yxy")
    assert knotcert.same_class("xxxYxxy", "xxxxyyX")


def test_invariants():
    assert knotcert.determinant("5_2") == 7
    assert knotcert.alexander("5_2") == {-1: 2, 0: -3, 1: 2}
    assert knotcert.alexander("P(-3,3,5)") == {-1: -2, 0: 5, 1: -2}
    assert knotcert.jones("T(2,3)") == {1.0: 1, 3.0: 1, 4.0: -1}
    assert knotcert.determinant("closure:xxxxxY") == knotcert.h1_from_trace("xxxxxY") == 5
    assert knotcert.homfly("unknot") == {(0, 0): 1}


def test_budget_and_errors():
    with pytest.raises(knotcert.BudgetExceeded):
        knotcert.jones("Wh+T23_2", 10)
    with pytest.raises(knotcert.PDError):
        knotcert.pd("X[1,2,3]")
    with pytest.raises(IndexError):
        knotcert.pd("7_4")


def test_certificates():
    cert = knotcert.certificate("torus")
    assert cert["status"] == "consistent"
    assert cert["knots"] == ["mirror(15n43522)", "15n43522"]
    text = json.dumps(cert, separators=(",", ":"))
    assert knotcert.replay(text) == text
    wh = knotcert.certificate("whitehead")
    assert wh["braids"] == ["x", "X"]
    assert knotcert.braid_to_knot("unknot", "X") == "5_2"


def test_tau_refutation():
    ok, witness = knotcert.unknot_certificate(knotcert.tau_cable_unknot("xY"))
    assert not ok and witness == "jones"
    ok, _ = knotcert.unknot_certificate(knotcert.tau_cable_unknot("xxYxy"))
    assert ok


def test_thin_profiles():
    assert knotcert.thin_profiles(7, False) == [[2, 3, 2]]
    assert knotcert.thin_profiles(9, False, genus=1, alexander_filter=False) == [[2, 5, 2], [3, 3, 3]]


def test_verify():
    assert all(ok for _, _, ok in knotcert.verify())
