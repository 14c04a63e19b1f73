import pytest

import thetaring


def test_valuation_and_bound():
    assert thetaring.vp("250", 5) == 3
    assert thetaring.nilpotence_bound(12) == "6"
    with pytest.raises(ValueError):
        thetaring.nilpotence_bound(0)


def test_F_and_operations():
    assert thetaring.F(2, 2) == "s^4 - 4*s^2*t + 2*t^2"
    assert thetaring.psi("x", 2) == "x^2 - 2*y"
    assert thetaring.theta("x", 3) == "y"
    assert thetaring.theta("x^2 - 2*y", 2) == "y^2"
    assert all(thetaring.check_axioms("x + 1/3", "y^2", 2).values())


def test_membership_with_certificate():
    r = thetaring.is_member("x^3", 2, 1, 2)
    assert r["member"]
    assert thetaring.verify_certificate(r["certificate"])
    r = thetaring.is_member("x^2", 2, 1, 2)
    assert not r["member"]
    assert r["residue"] == "2*y"
    assert r["certificate"] is None


def test_example_ring():
    ring = thetaring.ExampleRing(3)
    assert ring.nilpotence_exponent(2) == 12
    assert ring.verify_nilpotence(2, 3)["holds"]
    assert ring.verify_sharpness(2)["holds"]
    assert ring.check_theta_stability(1, 2)["holds"]
    assert ring.verify_prop2(2, 3, 1)["holds"]
    assert ring.verify_prop3(2, 3, 1)["holds"]


def test_parse_error():
    with pytest.raises(ValueError):
        thetaring.theta("x +", 2)
