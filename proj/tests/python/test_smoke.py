import pytest

import garside_orders as go


def test_normal_form_and_delta_form():
    b3 = go.braid_group(2)
    assert b3.name == "A2"
    assert b3.normal_form("s1 s2 s1") == "W"
    assert b3.equal("s1 s2 s1", "s2 s1 s2")
    unmovable, power = b3.delta_form("s1^-1")
    assert power == -1
    assert b3.equal(unmovable, "s2^2 s1 s2^2")


def test_sign_and_compare():
    b3 = go.braid_group(2)
    assert b3.sign("s1^-1") == "negative"
    assert b3.sign("s2^3") == "in-g1"
    assert b3.compare("1", "s1", epsilon="++") == "less"
    assert go.handle_reduction_sign(b3, "s1 s2 s1^-1") == "positive"


def test_dihedral():
    d = go.dihedral_group(5)
    factors, breadth, depth = d.alternating_form("s t")
    assert breadth == len(factors)
    assert d.depth("W^2") == 4
    report = d.verify("condA", max_power=3)
    assert report["passed"]
    assert report["notes"] == ["depths 4 7 10"]


def test_errors_and_cli():
    with pytest.raises(go.ParseError):
        go.braid_group(2).sign("s1 x")
    code, out, _ = go.run(["compare", "--group", "an", "--n", "2", "--epsilon", "++", "1", "s1"])
    assert (code, out) == (0, "Less\n")
    assert go.run(["bogus"])[0] == 2
