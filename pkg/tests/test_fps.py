from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from baumsweet.core.errors import FieldMismatchError, NotInvertibleError, TruncationError
from baumsweet.models.fps import (
    GF2,
    QQ,
    RelationTerm,
    Series,
    check_relation,
    rational_series,
    series_compose,
    series_from_csv,
    series_inverse,
    series_mul,
    series_reversion,
    series_square,
    series_substitute,
    series_to_csv,
)
from baumsweet.models.seq import baum_sweet_r_series, c_series_r, d_series_r


def test_bitvector_packs_index_as_exponent():
    s = Series.from_bitvector(b"\x01\x00\x01")
    assert s.bits == 0b101
    assert s.coeffs == (1, 0, 1)
    assert s.trunc == 3


def test_square_over_gf2_is_frobenius():
    one_plus_x = Series.from_coeffs([1, 1], GF2, 8)
    assert series_square(one_plus_x).coeffs == (1, 0, 1, 0, 0, 0, 0, 0)
    assert series_mul(one_plus_x, one_plus_x) == series_square(one_plus_x)


def test_inverse_of_one_minus_x_over_rationals():
    inv = series_inverse(Series.from_coeffs([1, -1], QQ, 10))
    assert inv.coeffs == tuple([1] * 10)


def test_inverse_of_one_plus_x_over_gf2():
    inv = series_inverse(Series.from_coeffs([1, 1], GF2, 64))
    assert inv.bits == (1 << 64) - 1


def test_substitute_knows_e_times_more_coefficients():
    s = Series.from_coeffs([1, 1, 1, 1], GF2, 4)
    sub = series_substitute(s, 3)
    assert sub.trunc == 12
    assert [i for i, c in enumerate(sub.coeffs) if c] == [0, 3, 6, 9]


def test_reversion_over_rationals_gives_signed_catalan():
    u = Series.from_coeffs([0, 1, 1], QQ, 8)
    v = series_reversion(u)
    assert v.coeffs == (0, 1, -1, 2, -5, 14, -42, 132)
    assert series_compose(u, v) == Series.x(8, QQ)


def test_reversion_over_gf2_of_x_plus_x2_is_sum_of_powers_of_two():
    v = series_reversion(Series.from_coeffs([0, 1, 1], GF2, 100))
    assert [i for i, c in enumerate(v.coeffs) if c] == [1, 2, 4, 8, 16, 32, 64]


@pytest.mark.parametrize("method", ["incremental", "newton"])
def test_reversion_methods_agree_on_c(method):
    c = c_series_r(2, 300)
    p = series_reversion(c, method)
    assert series_compose(c, p) == Series.x(300)
    assert series_compose(p, c) == Series.x(300)


def test_p_is_reversion_of_c():
    p = series_reversion(c_series_r(2, 16))
    assert p.coeffs == (0, 1, 0) + (1,) * 13


def test_reversion_rejects_constant_term_and_zero_linear_term():
    with pytest.raises(NotInvertibleError):
        series_reversion(Series.from_coeffs([1, 1], GF2, 8))
    with pytest.raises(NotInvertibleError):
        series_reversion(Series.from_coeffs([0, 0, 1], GF2, 8))


def test_fields_cannot_be_mixed():
    with pytest.raises(FieldMismatchError):
        Series.one(4, GF2) + Series.one(4, QQ)


def test_coefficient_beyond_truncation():
    with pytest.raises(TruncationError):
        Series.one(4)[4]


def test_rational_series_matches_partial_sums():
    s = rational_series([0, 1, -1, 1], [1, -1], 8)
    assert s.coeffs == (0, 1, 0, 1, 1, 1, 1, 1)
    assert all(isinstance(c, (int, Fraction)) for c in s.coeffs)


def test_baum_sweet_series_relation():
    b = baum_sweet_r_series(2, 1024)
    assert check_relation([
        RelationTerm(b, 4, mode="pow"),
        RelationTerm(b, 2, (0, 1), mode="pow"),
        RelationTerm(b),
    ], 1024)


@pytest.mark.parametrize("r", [3, 4])
def test_baum_sweet_r_series_relation(r):
    b = baum_sweet_r_series(r, 1024)
    assert check_relation([(b, 1 << r), (b, 2, (0, 1)), (b, 1)], 1024)


def test_relation_that_does_not_hold():
    b = baum_sweet_r_series(2, 256)
    assert not check_relation([(b, 2), (b, 1)], 256)


def test_d_is_x_times_b():
    assert d_series_r(2, 64).coeffs == (0,) + baum_sweet_r_series(2, 64).coeffs[:63]


def test_relation_term_beyond_available_truncation():
    b = baum_sweet_r_series(2, 16)
    with pytest.raises(TruncationError):
        RelationTerm(b, 1).value(32)


def test_csv_keeps_coefficients():
    s = rational_series([1], [1, 1], 6)
    text = series_to_csv(s)
    assert text.splitlines()[0] == "n,coeff"
    assert series_from_csv(text, QQ) == s


@given(st.lists(st.integers(min_value=0, max_value=1), min_size=2, max_size=80))
def test_reversion_roundtrip_property(tail):
    coeffs = [0, 1] + tail
    u = Series.from_coeffs(coeffs, GF2, len(coeffs))
    v = series_reversion(u)
    assert series_compose(u, v) == Series.x(len(coeffs))
