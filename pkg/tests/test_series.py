import pytest
from hypothesis import given
from hypothesis import strategies as st

from lecturehall.abacus import encode, to_bounded
from lecturehall.core import enumerate_lecture_hall
from lecturehall.oracle import brute_bounded, brute_lecture_hall
from lecturehall.series import (
    BoundsMismatchError,
    DivergenceError,
    TruncatedSeries,
    bounded_gf_identity,
    bounded_product,
    compare,
    geometric_factor,
    lhs_plain,
    lhs_refined,
    monomial,
    one,
    rhs_plain,
    rhs_refined,
    series_add,
    series_mul,
)


def x(max_x, k=1, coeff=1):
    return monomial(max_x, k, coeff=coeff)


def test_difference_of_squares():
    s = series_mul(one(3) + x(3), one(3) - x(3))
    assert str(s) == "1 - x^2"


def test_geometric_expansions():
    assert str(geometric_factor(1, max_x=3)) == "1 + x + x^2 + x^3"
    assert str(geometric_factor(3, max_x=7)) == "1 + x^3 + x^6"
    assert str(geometric_factor(1, max_x=2)) == "1 + x + x^2"
    assert str(geometric_factor(2, 2, max_x=4)) == "1 + u^2*x^2 + u^4*x^4"
    with pytest.raises(DivergenceError):
        geometric_factor(0, 1, max_x=4)


def test_refined_binomial_product():
    a = one(3) + monomial(3, 1, 1, 1)
    b = one(3) + monomial(3, 2, 2, 0)
    assert str(a * b) == "1 + u*v*x + u^2*x^2 + u^3*v*x^3"


def test_canonical_text():
    assert str(TruncatedSeries(3)) == "0"
    assert str(monomial(4, 2, 1, 0, coeff=-3) + one(4)) == "1 - 3*u*x^2"
    assert str(monomial(4, 0, coeff=-1)) == "-1"


def test_truncation_and_bounds():
    s = x(2, 3)
    assert s.coefficients == {}
    assert (s.max_u, s.max_v) == (4, 4)
    with pytest.raises(BoundsMismatchError):
        series_add(one(2), one(3))


def test_rhs_plain_values():
    assert str(rhs_plain(1, 4)) == "1 + x + x^2 + x^3 + x^4"
    s = rhs_plain(2, 10)
    assert s.coefficient(5) == 2
    assert s.coefficient(0) == 1


def test_lhs_plain_values():
    assert lhs_plain(2, 6).coefficient(5) == 2
    for n in range(1, 5):
        assert lhs_plain(n, 4).coefficient(0) == 1
    assert all(lhs_plain(1, 8).coefficient(k) == 1 for k in range(9))


def test_rhs_refined_values():
    assert str(rhs_refined(1, 3)) == "1 + u*v*x + u^2*x^2 + u^3*v*x^3"
    for n in range(1, 4):
        assert rhs_refined(n, 12).coefficient(0) == 1
        assert rhs_refined(n, 12).specialize() == rhs_plain(n, 12)


def test_lhs_refined_terms():
    s = lhs_refined(1, 3)
    assert s.coefficient(2, 2, 0) == 1
    assert s.coefficient(3, 3, 1) == 1
    assert s.coefficient(0, 0, 0) == 1


@pytest.mark.parametrize("n, max_x", [(2, 10), (1, 5), (3, 12)])
def test_bounded_gf_identity(n, max_x):
    result = bounded_gf_identity(n, max_x)
    assert result
    assert result.mismatch is None


def test_bounded_gf_coefficient_from_enumeration():
    count = sum(1 for p in brute_bounded(3, 5) if sum(p) == 5)
    assert bounded_product(3, 5).coefficient(5) == count == rhs_plain(3, 5).coefficient(5)


def test_brute_counts_match_series():
    for n in range(1, 4):
        lh = brute_lecture_hall(n, 15)
        series = rhs_plain(n, 15)
        for w in range(16):
            assert sum(1 for s in lh if sum(s) == w) == series.coefficient(w)


def test_mismatch_reports_smallest_exponent():
    a = monomial(5, 2) + monomial(5, 4)
    b = monomial(5, 2) + monomial(5, 3) + monomial(5, 4, coeff=7)
    r = compare(a, b)
    assert not r
    assert r.mismatch == ((3, 0, 0), 0, 1)
    assert "MISMATCH" in r.describe()


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_plain_identity(n):
    assert compare(lhs_plain(n, 40), rhs_plain(n, 40))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_refined_identity(n):
    assert compare(lhs_refined(n, 30), rhs_refined(n, 30))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_specialization_consistency(n):
    assert lhs_refined(n, 20).specialize() == lhs_plain(n, 20)
    assert rhs_refined(n, 20).specialize() == rhs_plain(n, 20)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_refined_exponents_match_bounded_parts(n):
    from lecturehall.core import ceiling_stats

    for lam in enumerate_lecture_hall(n, 18):
        cv = ceiling_stats(lam)
        p = to_bounded(encode(lam))
        assert cv.weight == 2 * len(p.large_parts) + len(p.small_parts)
        assert cv.odd_count == len(p.small_parts)


small_series = st.dictionaries(
    st.tuples(st.integers(0, 6), st.integers(0, 4), st.integers(0, 3)),
    st.integers(-5, 5), max_size=6,
).map(lambda c: TruncatedSeries(6, coefficients=c))


@given(small_series, small_series, small_series)
def test_ring_laws(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a + b - b == a
