from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kronkit.cyclo import (
    Cyclotomic,
    NotRationalError,
    cyc_root,
    cyclotomic_polynomial,
    euler_phi,
)


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(8) == (1, 0, 0, 0, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)
    # x^105 has the first coefficient of magnitude 2
    assert 2 in {abs(c) for c in cyclotomic_polynomial(105)}


def test_euler_phi():
    assert [euler_phi(e) for e in range(1, 13)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]


def test_roots_of_unity():
    z = Cyclotomic.root(5)
    total = Cyclotomic.zero(5)
    p = Cyclotomic.rational(1, 5)
    for _ in range(5):
        total = total + p
        p = p * z
    assert total.is_zero()
    # primitive-root sum equals the Moebius value
    s = Cyclotomic.zero(6)
    for k in (1, 5):
        s = s + Cyclotomic.root(6, k)
    assert s.to_rational() == 1  # mu(6) = 1


def test_root_power_wraps():
    z = Cyclotomic.root(4)
    assert z * z == Cyclotomic.rational(-1, 4)
    assert cyc_root(4, 2) == Cyclotomic.rational(-1)


def test_galois_and_conjugate():
    z = Cyclotomic.root(7, 3)
    assert z.galois(2) == Cyclotomic.root(7, 6)
    assert z.conjugate() == Cyclotomic.root(7, 4)
    v = z + z.conjugate()
    assert v.conjugate() == v
    with pytest.raises(ValueError):
        z.galois(7)  # not coprime to the conductor


def test_rationality():
    z = Cyclotomic.root(3)
    r = z + z.conjugate()  # = -1
    assert r.is_rational() and r.to_rational() == -1
    assert not z.is_rational()
    with pytest.raises(NotRationalError):
        z.to_rational()


def test_division_by_rational():
    z = Cyclotomic.root(8)
    assert (z + z) / 2 == z
    half = Cyclotomic.rational(Fraction(1, 2))
    assert (half + half).to_rational() == 1
    assert not half.is_integral()
    assert (z + 1).is_integral()


def test_promotion_and_equality():
    one_a = Cyclotomic.rational(1, 1)
    one_b = Cyclotomic.rational(1, 12)
    assert one_a == one_b
    z3 = Cyclotomic.root(3)
    z12 = Cyclotomic.root(12, 4)  # zeta_12^4 = zeta_3
    assert z3 == z12


def test_serialize_parse_round_trip():
    vals = [
        Cyclotomic.root(8) + Cyclotomic.rational(Fraction(-3, 2), 8),
        Cyclotomic.zero(5),
        Cyclotomic.rational(7),
        Cyclotomic.root(12, 5) * 3,
    ]
    for v in vals:
        assert Cyclotomic.parse(v.serialize()) == v
    with pytest.raises(ValueError):
        Cyclotomic.parse("not a value")


def test_approx_matches_exponential():
    import cmath

    z = Cyclotomic.root(7, 2)
    assert abs(z.approx() - cmath.exp(4j * cmath.pi / 7)) < 1e-12


small = st.integers(min_value=-5, max_value=5)


@st.composite
def elements(draw, e):
    return sum(
        (Cyclotomic.root(e, k) * draw(small) for k in range(1, e)),
        Cyclotomic.rational(draw(small), e),
    )


@settings(max_examples=60, deadline=None)
@given(st.data(), st.sampled_from([3, 4, 6, 8, 12]))
def test_ring_axioms(data, e):
    a = data.draw(elements(e))
    b = data.draw(elements(e))
    c = data.draw(elements(e))
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a - a).is_zero()
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
