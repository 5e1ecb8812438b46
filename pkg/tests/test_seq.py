import pytest
from hypothesis import given
from hypothesis import strategies as st

from baumsweet.core.errors import InvalidParameterError, UnknownSequenceError
from baumsweet.models.seq import (
    SeqId,
    SeqName,
    a_seq,
    a_seq_alt,
    baum_sweet,
    baum_sweet_r,
    baum_sweet_r_bits,
    baum_sweet_r_rec,
    baum_sweet_rec,
    c_seq_bits,
    count_moser_below,
    fibonacci_numbers,
    h_seq,
    l_seq_r,
    moser_enumerate,
    moser_r,
    moser_scan,
    p_seq,
    q_seq,
    q_seq_bits,
    q_seq_r,
    q_seq_r_bits,
    s_representable_set,
    s_seq_r,
    s_seq_r_list,
    s_seq_r_sums,
    s_tilde_r,
    s_tilde_r_list,
    s_tilde_r_via_s,
    seq_prefix,
    seq_term,
    thue_morse,
    thue_morse_bits,
    thue_morse_rec,
    u_seq_r,
    w_seq_r,
)

naturals = st.integers(min_value=0, max_value=10 ** 6)
radices = st.integers(min_value=2, max_value=6)


def test_baum_sweet_first_terms(b_prefix):
    assert list(seq_prefix("baum_sweet", 20)) == b_prefix
    assert [baum_sweet(n) for n in range(20)] == b_prefix


def test_small_prefixes():
    assert list(seq_prefix("thue_morse", 8)) == [0, 1, 1, 0, 1, 0, 0, 1]
    assert list(seq_prefix("moser_de_bruijn", 8)) == [0, 1, 4, 5, 16, 17, 20, 21]
    assert list(seq_prefix("u_seq", 8)) == [1, 2, 5, 6, 17, 18, 21, 22]
    assert list(seq_prefix("q_seq", 8)) == [0, 1, 1, 0, 0, 1, 1, 0]
    assert list(seq_prefix("p_seq", 6)) == [0, 1, 0, 1, 1, 1]
    assert list(seq_prefix("a_seq", 4)) == [0, 1, 2, 7]
    assert list(seq_prefix("w_seq_r:2", 5)) == [2, 3, 6, 7, 8]


@given(naturals)
def test_baum_sweet_scan_matches_recurrence(n):
    assert baum_sweet(n) == baum_sweet_rec(n)


@given(radices, naturals)
def test_baum_sweet_r_scan_matches_recurrence(r, n):
    assert baum_sweet_r(r, n) == baum_sweet_r_rec(r, n)


@pytest.mark.parametrize("r", [2, 3, 5])
def test_baum_sweet_r_bulk_prefix(r):
    bits = baum_sweet_r_bits(r, 2000)
    assert list(bits) == [baum_sweet_r(r, n) for n in range(2000)]


@given(naturals)
def test_thue_morse_digit_sum_matches_recurrence(n):
    assert thue_morse(n) == thue_morse_rec(n)


def test_thue_morse_bulk_prefix():
    assert list(thue_morse_bits(1024)) == [thue_morse(n) for n in range(1024)]


@pytest.mark.parametrize("r", [2, 3, 4])
def test_moser_recurrence_enumeration_and_scan(r):
    enumerated = moser_enumerate(r, 300)
    assert enumerated == [moser_r(r, n) for n in range(300)]
    limit = enumerated[-1] + 1
    assert moser_scan(r, limit) == enumerated


@given(radices, st.integers(min_value=0, max_value=5000))
def test_u_is_moser_plus_one(r, n):
    assert u_seq_r(r, n) == moser_r(r, n) + 1


def test_count_moser_below():
    assert count_moser_below(2, 6) == 4
    assert count_moser_below(2, 0) == 0


def test_w_skips_moser_numbers():
    assert [w_seq_r(2, n) for n in range(6)] == [2, 3, 6, 7, 8, 9]


@pytest.mark.parametrize("r", [2, 3, 4])
def test_q_recurrence_matches_bulk_prefix(r):
    assert list(q_seq_r_bits(r, 3000)) == [q_seq_r(r, n) for n in range(3000)]


def test_q_ones_are_at_u_positions():
    ones = [n for n, v in enumerate(q_seq_bits(4096)) if v]
    assert ones == [u_seq_r(2, n) for n in range(len(ones))]


@given(st.integers(min_value=0, max_value=20_000))
def test_a_recurrences_agree(n):
    assert a_seq(n) == a_seq_alt(n)


def test_p_closed_form():
    assert [p_seq(n) for n in range(5)] == [0, 1, 0, 1, 1]


def test_fibonacci_indexing():
    assert [fibonacci_numbers(n) for n in range(1, 11)] == [1, 1, 2, 3, 5, 8, 13, 21, 34, 55]


def test_seqid_parse_and_print():
    seq_id = SeqId.parse("baum_sweet_r:3")
    assert seq_id.name is SeqName.BAUM_SWEET_R
    assert seq_id.r == 3
    assert str(seq_id) == "baum_sweet_r:3"
    assert SeqId.parse("q_seq") == SeqId(SeqName.Q_SEQ)


@pytest.mark.parametrize("text, error", [
    ("nope", UnknownSequenceError),
    ("baum_sweet_r", InvalidParameterError),
    ("baum_sweet_r:1", InvalidParameterError),
    ("baum_sweet:2", InvalidParameterError),
    ("q_seq_r:x", InvalidParameterError),
])
def test_seqid_errors(text, error):
    with pytest.raises(error):
        SeqId.parse(text)


def test_seq_term_matches_prefix():
    for name in ("baum_sweet", "q_seq", "u_seq", "a_seq", "l_seq", "v_seq_r:2"):
        prefix = seq_prefix(name, 64)
        assert [seq_term(name, n) for n in (0, 7, 63)] == [prefix[0], prefix[7], prefix[63]]


def test_prefix_csv():
    text = seq_prefix("thue_morse", 3).to_csv()
    assert text == "n,value\n0,0\n1,1\n2,1\n"


def test_l_and_h_split_the_naturals():
    l_values = set(seq_prefix("l_seq", 200))
    h_values = set(seq_prefix("h_seq", 200))
    assert not l_values & h_values
    assert set(range(200)) <= l_values | h_values


def test_h_seq_and_l_seq_r():
    assert list(h_seq(6)) == [2, 5, 6, 8, 10, 11]
    ones = [n for n in range(5000) if baum_sweet_r(3, n)]
    assert list(l_seq_r(3, 40)) == ones[:40]


@pytest.mark.parametrize("r, ones", [
    (2, [0, 1, 12, 13, 56, 57, 68, 69]),
    (3, [0, 1, 2, 3, 4, 5, 60, 61, 62, 63, 64, 65]),
])
def test_s_first_ones(r, ones):
    values = s_seq_r_list(r, 70)
    assert [n for n, v in enumerate(values) if v] == ones
    assert [s_seq_r(r, n) for n in range(70)] == values
    assert [s_seq_r_sums(r, n) for n in range(70)] == values


def test_s_representable_set():
    assert s_representable_set(2, 70) == [0, 12, 56, 68]
    assert s_representable_set(3, 600) == [0, 60, 504, 564]


@pytest.mark.parametrize("r", [2, 3, 4])
def test_s_tilde_matches_s_on_multiples(r):
    expected = [s_tilde_r_via_s(r, n) for n in range(300)]
    assert s_tilde_r_list(r, 300) == expected
    assert [s_tilde_r(r, n) for n in range(300)] == expected


def test_s_tilde_small_values():
    assert (s_tilde_r(2, 12), s_tilde_r(2, 13)) == (1, 0)
    assert (s_tilde_r_via_s(2, 12), s_tilde_r_via_s(2, 13)) == (1, 0)


@pytest.mark.parametrize("r", [2, 3, 4])
def test_u_bounds_and_equality_cases(r):
    denom = (1 << r) - 1
    for i in range(256):
        u = u_seq_r(r, i)
        assert (i + 1) ** r + (1 << r) - 2 <= denom * u <= denom * (i ** r + 1)
    for m in range(1, 8):
        assert u_seq_r(r, 1 << m) == (1 << (m * r)) + 1
        assert u_seq_r(r, (1 << m) - 1) == ((1 << (m * r)) + (1 << r) - 2) // denom


def test_c_first_terms():
    bits = c_seq_bits(8)
    assert [n for n, v in enumerate(bits) if v] == [1, 2, 7]
    assert [a_seq(i) for i in range(4)] == [0, 1, 2, 7]
