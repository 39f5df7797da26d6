from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from virtmod.arith import (
    QQx,
    ZZ,
    Element,
    Fpx,
    euclidean_divide,
    extended_gcd,
    factor,
    is_prime_element,
    is_squarefree,
    normalize_unit,
    parse_ring,
    prime_split,
    ring_to_json,
)
from virtmod.arith.factor import factor_int
from virtmod.errors import (
    BothZero,
    DivisionByZero,
    FactorizationTooHard,
    ParseError,
    RingMismatch,
    UnsupportedRing,
    ZeroElement,
    ZeroOrUnit,
)

F2, F5 = Fpx(2), Fpx(5)


def test_normalize_unit_examples():
    assert normalize_unit(ZZ(-6)) == (ZZ(-1), ZZ(6))
    assert normalize_unit(QQx([3, 3])) == (QQx([3]), QQx([1, 1]))
    assert normalize_unit(ZZ(1)) == (ZZ(1), ZZ(1))
    with pytest.raises(ZeroElement):
        normalize_unit(ZZ(0))


def test_euclidean_divide_examples():
    assert euclidean_divide(ZZ(7), ZZ(3)) == (ZZ(2), ZZ(1))
    assert euclidean_divide(F2([1, 0, 1]), F2([1, 1])) == (F2([1, 1]), F2(0))
    assert euclidean_divide(ZZ(0), ZZ(5)) == (ZZ(0), ZZ(0))
    assert euclidean_divide(ZZ(-7), ZZ(3)) == (ZZ(-3), ZZ(2))
    with pytest.raises(DivisionByZero):
        euclidean_divide(ZZ(1), ZZ(0))
    with pytest.raises(RingMismatch):
        euclidean_divide(ZZ(1), F2([1]))


def test_extended_gcd_examples():
    g, u, v = extended_gcd(ZZ(4), ZZ(6))
    assert g == 2 and u * 4 + v * 6 == g
    assert extended_gcd(QQx([0, 0, 1]), QQx([0, 1]))[0] == QQx([0, 1])
    assert extended_gcd(ZZ(5), ZZ(0)) == (ZZ(5), ZZ(1), ZZ(0))
    with pytest.raises(BothZero):
        extended_gcd(ZZ(0), ZZ(0))


def test_squarefree_and_factor_examples():
    assert is_squarefree(ZZ(6))
    assert not is_squarefree(ZZ(4))
    assert not is_squarefree(QQx([1, 2, 1]))
    f = factor(ZZ(12))
    assert f.unit == 1 and f.factors == ((ZZ(2), 2), (ZZ(3), 1))
    assert factor(F2([0, 1, 1])).factors == ((F2([0, 1]), 1), (F2([1, 1]), 1))
    with pytest.raises(UnsupportedRing):
        factor(QQx([1, 0, 1]))
    with pytest.raises(ZeroOrUnit):
        is_squarefree(ZZ(-1))
    with pytest.raises(ZeroOrUnit):
        factor(ZZ(0))


def test_element_invariants():
    assert F5([6, 10, 0]).value == (1,)
    assert QQx(["2/4", 0]).value == (Fraction(1, 2),)
    assert QQx([]).is_zero()
    with pytest.raises(ParseError):
        Fpx(4)
    with pytest.raises(ParseError):
        QQx(["1/0"])


def test_parse_ring_forms():
    assert parse_ring("int") is ZZ
    assert parse_ring("fp:5") == F5
    assert parse_ring({"ring": "fp", "p": 5}) == F5
    assert parse_ring("qx") is QQx
    assert ring_to_json(F5) == {"ring": "fp", "p": 5}
    for bad in ("fp:9", "reals", {"ring": "fp"}, 3):
        with pytest.raises(ParseError):
            parse_ring(bad)


def test_factor_int_large_prime_and_semiprime():
    p, q = 1_000_000_007, 998_244_353
    assert factor_int(p * q) == {q: 1, p: 1}
    assert factor_int(2**61 - 1) == {2**61 - 1: 1}
    with pytest.raises(FactorizationTooHard):
        factor(ZZ(2**127 - 1) * ZZ(2**89 - 1))


def test_qx_prime_split_limits():
    # (x-1)(x+2)(x^2+1): rational roots split off, one quadratic left
    f = QQx([1, 0, 1]) * QQx([-1, 1]) * QQx([2, 1])
    assert sorted(p for p, _ in prime_split(f)) == sorted([QQx([-1, 1]), QQx([2, 1]), QQx([1, 0, 1])])
    assert is_prime_element(QQx([1, 0, 1]))
    assert not is_prime_element(QQx([-2, 0, 1]) * QQx([-3, 1]))
    # quartic without rational roots: refused rather than guessed
    with pytest.raises(UnsupportedRing):
        is_prime_element(QQx([-2, 0, 1]) * QQx([-3, 0, 1]))
    with pytest.raises(UnsupportedRing):
        prime_split(QQx([1, 2, 1]))


# -- properties -------------------------------------------------------------------------

ints = st.integers(-10**30, 10**30)
small_ints = st.integers(-10**12, 10**12)


@st.composite
def polys(draw, ring, max_deg=6):
    n = draw(st.integers(0, max_deg + 1))
    if ring.kind == "fp":
        coeffs = draw(st.lists(st.integers(0, ring.p - 1), min_size=n, max_size=n))
    else:
        coeffs = draw(st.lists(st.fractions(min_value=-20, max_value=20, max_denominator=6),
                               min_size=n, max_size=n))
    return ring(coeffs)


def elements():
    return st.one_of(ints.map(ZZ), polys(F2), polys(F5), polys(Fpx(7)), polys(QQx))


def pairs():
    return st.one_of(
        st.tuples(ints.map(ZZ), ints.map(ZZ)),
        st.tuples(polys(F2), polys(F2)),
        st.tuples(polys(F5), polys(F5)),
        st.tuples(polys(QQx), polys(QQx)),
    )


@given(pairs())
def test_division_reconstructs(ab):
    a, b = ab
    assume(not b.is_zero())
    q, r = euclidean_divide(a, b)
    assert q * b + r == a
    if a.ring is ZZ:
        assert 0 <= r.value < abs(b.value)
    else:
        assert r.is_zero() or len(r.value) < len(b.value)


@given(pairs())
def test_bezout_and_symmetry(ab):
    a, b = ab
    assume(not (a.is_zero() and b.is_zero()))
    g, u, v = extended_gcd(a, b)
    assert u * a + v * b == g
    assert g == extended_gcd(b, a)[0]
    assert normalize_unit(g)[1] == g
    for x in (a, b):
        assert (x % g).is_zero()


@given(elements())
def test_normalize_roundtrip(e):
    assume(not e.is_zero())
    u, c = normalize_unit(e)
    assert u * c == e and u.is_unit()


@given(st.one_of(small_ints.map(ZZ), polys(F2, 10), polys(F5, 8), polys(Fpx(7), 7)))
def test_factor_roundtrip_and_squarefree(d):
    assume(not d.is_zero() and not d.is_unit())
    f = factor(d)
    prod = f.unit
    for p, e in f.factors:
        assert is_prime_element(p) and normalize_unit(p)[1] == p
        prod = prod * p**e
    assert prod == d
    assert len({p for p, _ in f.factors}) == len(f.factors)
    assert is_squarefree(d) == all(e == 1 for _, e in f.factors)


@given(polys(QQx, 5), polys(QQx, 5))
def test_qx_squarefree_detects_squares(a, b):
    assume(len(a.value) >= 2 and not b.is_zero())
    assert not is_squarefree(a * a * b)
