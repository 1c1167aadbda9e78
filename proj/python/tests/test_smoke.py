import pytest

import mouldkit as mk


def test_ma_monomials():
    assert mk.ma("c3") == {1: "u1^2"}
    assert mk.ma("c1*c2") == {2: "-u2"}
    assert mk.ma("c2*c1-c1*c2") == {2: "-u1+u2"}


def test_canonical_poly():
    assert mk.canonical_poly("-2*u2^3+2*u1^3-3*u1*u2^2+3*u1^2*u2", 2) == "2*u1^3+3*u1^2*u2-3*u1*u2^2-2*u2^3"
    with pytest.raises(ValueError):
        mk.canonical_poly("u3", 2)


def test_lie():
    assert mk.lie_bracket("a", "b") == "ab-ba"
    assert mk.is_lie("ab-ba")
    assert not mk.is_lie("ab")
    assert mk.to_c_coordinates("ab-ba") == "c2"


def test_epsilon0():
    va, vb = mk.epsilon(0, 6)
    assert va == "b"
    assert vb == "0"


def test_bracket_eps():
    assert mk.bracket_eps(0, 4) == "2*u1^3+3*u1^2*u2-3*u1*u2^2-2*u2^3"
    with pytest.raises(mk.InsufficientCap):
        mk.bracket_eps(0, 4, 4)


def test_checks():
    assert mk.check("alternal", {2: "u1-u2"})
    assert not mk.check("alternal", {2: "u1"})
    assert mk.check("push-invariant", {2: "u1^2+u1*u2+u2^2"})
    assert mk.check("push-neutral", {2: "u1"})
    assert not mk.check("delta-bialternal", {2: "u1^3*u2-u1*u2^3"})


def test_ops():
    assert mk.op("push", {2: "u1^2"}) == {2: "u2^2"}
    assert mk.op("arit", {1: "u1^2"}, {1: "u1"}, max_depth=2) == {2: "u1^3+u1^2*u2-u1*u2^2-u2^3"}
    assert mk.op("lu", {1: "u1"}, {1: "u1"}) == {}
    with pytest.raises(ValueError):
        mk.op("mu", {1: "u1"})


def test_dimensions():
    assert mk.eds2_space(11)["dim"] == 2
    assert mk.fs2_space(11)["dim"] == 4
    rows = {r["n"]: r for r in mk.rank_table(15)}
    assert (rows[15]["brackets"], rows[15]["rank"], rows[15]["relations"]) == (3, 2, 1)


def test_eisenstein():
    g4 = mk.gseries(2, 3)
    assert g4 == [(0, 0, "1/240"), (1, 0, "1"), (2, 0, "9"), (3, 0, "28")]
    assert mk.iter_integral([0], 4) == [(0, 1, "1")]


def test_verify_report_shape():
    items = mk.verify_paper(13)
    assert items
    assert {"item", "expected_source", "pass", "sigma"} <= set(items[0])
