import pytest
from hypothesis import given, strategies as st

from braidkit import DomainError, LaurentMatrix, LaurentPoly


polys = st.dictionaries(
    st.integers(-6, 6), st.integers(-9, 9), max_size=5
).map(LaurentPoly)

# evaluation at |v| != 1 needs nonnegative exponents to stay integral
plain_polys = st.dictionaries(
    st.integers(0, 6), st.integers(-9, 9), max_size=5
).map(LaurentPoly)


def test_basic_identities():
    t = LaurentPoly.monomial(1)
    one = LaurentPoly.one()
    assert (one - t) + t == one
    assert (one - t) * (one + t) == one - t * t
    assert LaurentPoly.monomial(3).substitute_power(-1) == LaurentPoly.monomial(-3)


def test_zero_coefficients_never_stored():
    p = LaurentPoly({2: 1, 3: 0})
    assert p.terms() == {2: 1}
    q = LaurentPoly({0: 1}) - LaurentPoly({0: 1})
    assert q.is_zero and q.terms() == {}


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert p + q == q + p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p * LaurentPoly.one() == p
    assert p + LaurentPoly.zero() == p


@given(plain_polys, plain_polys, st.integers(-3, 3))
def test_eval_int_is_ring_map(p, q, v):
    assert (p + q).eval_int(v) == p.eval_int(v) + q.eval_int(v)
    assert (p * q).eval_int(v) == p.eval_int(v) * q.eval_int(v)


def test_eval_int_rejects_non_integer():
    p = LaurentPoly.monomial(-1)
    with pytest.raises(DomainError):
        p.eval_int(2)
    assert p.eval_int(1) == 1
    assert (p * LaurentPoly.constant(4)).eval_int(2) == 2


def test_pow():
    t = LaurentPoly.monomial(1)
    assert t**0 == LaurentPoly.one()
    assert t**5 == LaurentPoly.monomial(5)
    with pytest.raises(DomainError):
        t ** (-1)


def test_substitute_power_validates():
    with pytest.raises(DomainError):
        LaurentPoly.one().substitute_power(0)


def test_json_roundtrip():
    p = LaurentPoly({-2: 3, 0: -1, 5: 7})
    blob = p.to_json("a")
    assert blob["variable"] == "a"
    assert LaurentPoly.from_json(blob) == p


def test_format():
    p = LaurentPoly({0: 1, 1: -1})
    assert p.format("t") == "1 - t"
    assert LaurentPoly.zero().format() == "0"
    assert LaurentPoly({3: -1}).format("a") == "-a^3"


def test_matrix_identity_and_mul():
    t = LaurentPoly.monomial(1)
    one, zero = LaurentPoly.one(), LaurentPoly.zero()
    m = LaurentMatrix(((one - t, t), (one, zero)))
    inv = LaurentMatrix(((zero, one), (LaurentPoly.monomial(-1), one - LaurentPoly.monomial(-1))))
    assert m * inv == LaurentMatrix.identity(2)
    with pytest.raises(DomainError):
        m * LaurentMatrix.identity(3)


def test_matrix_must_be_square():
    one = LaurentPoly.one()
    with pytest.raises(DomainError):
        LaurentMatrix(((one, one),))


def test_matrix_det():
    t = LaurentPoly.monomial(1)
    one, zero = LaurentPoly.one(), LaurentPoly.zero()
    m = LaurentMatrix(((one - t, t), (one, zero)))
    assert m.det() == LaurentPoly.monomial(1, -1)
    assert LaurentMatrix.identity(4).det() == one


def test_matrix_eval_and_row_sums():
    t = LaurentPoly.monomial(1)
    one, zero = LaurentPoly.one(), LaurentPoly.zero()
    m = LaurentMatrix(((one - t, t), (one, zero)))
    assert m.eval_int(1) == ((0, 1), (1, 0))
    assert m.row_sums() == (one, one)
