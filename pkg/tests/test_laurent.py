import pytest
from hypothesis import given, settings, strategies as st

from typea_cluster.errors import NotDivisible
from typea_cluster.laurent import LaurentPoly, divide_exact, strip_monomial

NV = 3

exps = st.tuples(*[st.integers(-3, 3)] * NV)
polys = st.dictionaries(exps, st.integers(-5, 5), max_size=5).map(lambda d: LaurentPoly(NV, d))
pos_polys = st.dictionaries(st.tuples(*[st.integers(0, 3)] * NV), st.integers(1, 4),
                            min_size=1, max_size=4).map(lambda d: LaurentPoly(NV, d))


def x(i):
    return LaurentPoly.var(i, NV)


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == LaurentPoly.zero(NV)
    assert a * LaurentPoly.one(NV) == a


@settings(max_examples=200)
@given(polys, pos_polys)
def test_division_roundtrip(a, q):
    assert divide_exact(a * q, q) == a


def test_not_divisible():
    with pytest.raises(NotDivisible):
        divide_exact(x(1) + x(2) + 1, x(1) + x(2))
    with pytest.raises(NotDivisible):
        divide_exact(LaurentPoly.one(NV), LaurentPoly.one(NV) * 2)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        divide_exact(x(1), LaurentPoly.zero(NV))


def test_render_graded_lex():
    p = x(1) * x(3) + x(2) ** 2 + 3 * x(1) - 2
    assert p.render() == "x1*x3 + x2^2 + 3*x1 - 2"
    assert LaurentPoly.zero(NV).render() == "0"
    assert (x(1) ** -1).render() == "x1^-1"


def test_negative_power_only_for_monomials():
    assert (x(1) * x(2)) ** -2 == LaurentPoly.monomial((-2, -2, 0))
    with pytest.raises(ValueError):
        (x(1) + x(2)) ** -1


def test_strip_monomial():
    v = (x(3) + x(2) * x(1)) * x(1) ** -1
    f, d = strip_monomial(v)
    assert f == x(3) + x(1) * x(2) and d == (1, 0, 0)
    assert strip_monomial(x(2)) == (x(2), (0, 0, 0))


@given(polys)
def test_json_roundtrip(p):
    assert LaurentPoly.from_json(p.to_json()) == p


def test_mismatched_nvars():
    with pytest.raises(ValueError):
        LaurentPoly.var(1, 2) + LaurentPoly.var(1, 3)


def test_exponent_overflow():
    big = LaurentPoly.monomial((1 << 30, 0, 0))
    with pytest.raises(OverflowError):
        big * big
