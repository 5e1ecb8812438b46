from fractions import Fraction

import pytest

from baumsweet.core.errors import InvalidParameterError, NotProlongableError, UnknownIdentityError
from baumsweet.models.words import (
    NU,
    PHI,
    WORD_IDENTITIES,
    Morphism,
    check_word_identity,
    delta_morphism,
    delta_words,
    fibonacci_word,
    fixed_point,
    format_delta_word,
    h_concat,
    h_morphic,
    h_running_averages,
    h_word,
    h_words,
    l_word,
    lambda_words,
    letter_frequency,
    mu,
    psi,
    real_root_xr,
    root_interval_xr,
    word_identity_counterexample,
)

# parámetros pequeños para cada identidad
SMALL = {
    "fib_word": {"length": 2000},
    "ln_mod2": {"length": 2000},
    "lambda_phi_prime": {"count": 12},
    "delta_phi": {"count": 12, "rs": (2, 3)},
    "delta_concat_phi": {"count": 10, "rs": (2, 3)},
    "delta_psi": {"count": 10, "rs": (2, 3)},
    "mu_fixed_points": {"rs": (2, 3)},
    "psi_length_ones": {"count": 12, "rs": (2, 3)},
    "lr_parity": {"length": 2000, "rs": (2, 3)},
    "h_length": {"count": 12},
    "h_ones": {"count": 12},
    "h_concat_scan": {"length": 2000},
    "h_morphic": {"length": 2000},
}


def test_fibonacci_word():
    assert fibonacci_word(10) == "0100101001"


def test_morphism_basics():
    assert PHI.apply("01") == "010"
    assert PHI.compose(PHI).images == {"0": "010", "1": "01"}
    assert PHI.power(2) == PHI.compose(PHI)
    assert PHI.alphabet == "01"
    assert PHI.is_prolongable("0")
    assert not PHI.is_prolongable("1")


def test_morphism_rejects_bad_letters():
    with pytest.raises(InvalidParameterError):
        Morphism({"ab": "a"})
    with pytest.raises(InvalidParameterError):
        PHI.apply("012")


def test_fixed_point_needs_prolongable_seed():
    with pytest.raises(NotProlongableError):
        fixed_point(PHI, "1", 5)


def test_lambda_and_delta_words():
    assert lambda_words(4) == ["1", "01", "101", "01101"]
    assert delta_words(2, 5) == ["1", "01", "101", "01101", "10101101"]
    assert delta_words(3, 4) == ["1", "2", "02", "102"]
    assert format_delta_word("02") == "x0 x2"


def test_phi_and_mu_images():
    assert delta_morphism(3).images == {"0": "1", "1": "2", "2": "02"}
    assert mu(2).images == {"0": "01", "1": "101"}
    assert psi(3).apply("012") == "011"


def test_h_words():
    assert h_words(3) == ["0", "10", "00110"]
    assert h_concat(8) == "01000110"
    assert fixed_point(NU, "f", 6) == "fbcade"
    assert h_morphic(6) == h_word(6) == "010001"


def test_h_running_averages_count_letters():
    assert h_running_averages(3) == [Fraction(0), Fraction(1, 3), Fraction(3, 8)]
    assert abs(h_running_averages(21)[-1] - Fraction(1, 2)) < Fraction(1, 100)


def test_letter_frequency():
    assert letter_frequency("0110", "1") == Fraction(1, 2)
    with pytest.raises(InvalidParameterError):
        letter_frequency("", "1")


def test_root_of_x_r_plus_x_minus_one():
    lo, hi = root_interval_xr(2, Fraction(1, 1000))
    assert hi - lo <= Fraction(1, 1000)
    assert lo <= Fraction(618034, 10 ** 6) <= hi
    assert abs(real_root_xr(2) - (5 ** 0.5 - 1) / 2) < 1e-9
    assert abs(real_root_xr(3) - 0.6823278) < 1e-6
    with pytest.raises(InvalidParameterError):
        root_interval_xr(1, Fraction(1, 10))


def test_l_word_frequency_is_close_to_golden_ratio():
    freq = letter_frequency(l_word(10_000), "1")
    assert abs(float(freq) - real_root_xr(2)) < 0.01


@pytest.mark.parametrize("identity_id", sorted(WORD_IDENTITIES))
def test_word_identities_hold(identity_id):
    assert word_identity_counterexample(identity_id, **SMALL[identity_id]) is None
    assert check_word_identity(identity_id, **SMALL[identity_id])


def test_unknown_identity():
    with pytest.raises(UnknownIdentityError):
        word_identity_counterexample("nope")
