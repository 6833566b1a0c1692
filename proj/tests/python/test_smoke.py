import pytest

import denseaut


def test_field_units():
    r = denseaut.aut("Q + Q*sqrt(2)")
    assert r["aut"]["kind"] == "FieldUnits"
    assert r["aut"]["d"] == 2


def test_bounds_only():
    r = denseaut.aut("(Z*1 + Q*sqrt(2)) x (Z*1 + Q*sqrt(2))")
    assert "aut" not in r
    assert r["bounds"]["lower"] == ["EZ(2)", "PM1"]
    assert denseaut.dim("(Z*1 + Q*sqrt(2))^2") is None


def test_membership():
    r = denseaut.member("Z*1 + Q*sqrt(2)", "3 + 1/2*sqrt(2)")
    assert r == {"member": True, "witness": ["3", "1/2"]}
    assert not denseaut.member("Z*1 + Q*sqrt(2)", "1/2")["member"]


def test_aut_member_and_certificate():
    assert not denseaut.aut_member("Z*1 + Q*sqrt(2)", "2")
    assert denseaut.aut_member("Q x R", "[1/2, 7; 0, sqrt(2)]")
    c = denseaut.certificate("Q x Q*sqrt(2)", "[1, 1; 0, 1]")
    assert c["verdict"] is False
    assert c["image"] == ["1", "1"]


def test_predicates():
    assert denseaut.is_dense("Z*1 + Q*sqrt(2)")
    assert not denseaut.is_divisible("Z*1 + Q*sqrt(2)")
    assert denseaut.is_cyclic("cyclic(sqrt(2))")
    assert denseaut.dim("Q x R") == 2


def test_oracle():
    assert denseaut.oracle("Q", 4)["candidates"] == 22
    assert denseaut.cross_check("Q x Q*sqrt(2)", 2)["agreement"] is True
    a = denseaut.oracle("Q*sqrt(2) + Q*sqrt(3)", 2)
    assert a == denseaut.oracle("Q*sqrt(2) + Q*sqrt(3)", 2)


def test_normalize_and_scalars():
    assert denseaut.scalar("sqrt(8)") == denseaut.scalar("2*sqrt(2)")
    assert denseaut.normalize("Q*sqrt(2) + Z*1") == denseaut.normalize("Z*1 + Q*sqrt(2)")


def test_errors():
    with pytest.raises(ValueError):
        denseaut.aut("Q + ")
    with pytest.raises(ValueError):
        denseaut.aut("Z*1 + Z*1")
