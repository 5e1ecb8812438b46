from fractions import Fraction

import pytest

from baumsweet.core.errors import InsufficientPrefixError, InvalidParameterError
from baumsweet.models.linalg import EchelonBasis, matrix_rank
from baumsweet.models.linrep import (
    LinRep,
    LinRepFailure,
    linrep_eval,
    linrep_from_json,
    linrep_guess,
    linrep_prefix,
    linrep_to_json,
    rank_profile,
)
from baumsweet.models.seq import moser_enumerate, seq_prefix, u_seq


def test_matrix_rank_is_exact():
    assert matrix_rank([[1, 2], [2, 4]]) == 1
    assert matrix_rank([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 3
    assert matrix_rank([[Fraction(1, 3), Fraction(2, 3)], [1, 2]]) == 1
    assert matrix_rank([]) == 0


def test_echelon_basis_expresses_in_added_vectors():
    basis = EchelonBasis(3)
    assert basis.add([1, 1, 0])
    assert basis.add([0, 1, 1])
    assert not basis.add([1, 2, 1])
    assert basis.express([2, 3, 1]) == [2, 1]
    assert basis.express([0, 0, 1]) is None


def test_u_has_dimension_two():
    values = seq_prefix("u_seq", 1024).values
    rep = linrep_guess(values, 2, 4)
    assert isinstance(rep, LinRep)
    assert rep.dim == 2
    assert linrep_prefix(rep, 1024) == list(values)
    assert linrep_eval(rep, 5) == u_seq(5) == 18
    assert linrep_eval(rep, 2 * 300) == 4 * u_seq(300) - 3


def test_moser_has_dimension_two():
    rep = linrep_guess(moser_enumerate(2, 1024), 2, 4)
    assert rep.dim == 2
    assert linrep_eval(rep, 1023) == moser_enumerate(2, 1024)[-1]


def test_a_needs_at_most_eight_dimensions():
    values = seq_prefix("a_seq", 2048).values
    rep = linrep_guess(values, 2, 8)
    assert isinstance(rep, LinRep)
    assert rep.dim <= 8


def test_constant_sequence():
    rep = linrep_guess([7] * 64, 2, 2)
    assert rep.dim == 1
    assert rank_profile([7] * 64, 2, [0, 1, 2, 3]) == [1, 1, 1, 1]


def test_u_rank_profile_plateaus_at_two():
    values = seq_prefix("u_seq", 1 << 12).values
    assert rank_profile(values, 2, list(range(7))) == [1, 2, 2, 2, 2, 2, 2]


def test_l_has_no_small_representation():
    result = linrep_guess(seq_prefix("l_seq", 1 << 12).values, 2, 4)
    assert isinstance(result, LinRepFailure)
    assert not result
    ranks = result.rank_profile
    assert len(ranks) == 7
    assert all(a <= b for a, b in zip(ranks, ranks[1:]))
    assert ranks[-1] > 4


def test_prefix_too_short_for_deeper_levels_reports_failure():
    result = linrep_guess(seq_prefix("l_seq", 48).values, 2, 12)
    assert isinstance(result, LinRepFailure)
    ranks = result.rank_profile
    assert ranks[0] == 1
    assert 1 <= len(ranks) <= 6
    assert all(a <= b for a, b in zip(ranks, ranks[1:]))


def test_short_prefix_is_rejected():
    with pytest.raises(InsufficientPrefixError):
        linrep_guess([1] * 10, 2, 8)
    with pytest.raises(InvalidParameterError):
        linrep_guess([1] * 100, 1, 2)


def test_json_keeps_the_representation():
    rep = linrep_guess(moser_enumerate(2, 256), 2, 4)
    text = linrep_to_json(rep)
    assert '"lambda"' in text
    back = linrep_from_json(text)
    assert linrep_prefix(back, 256) == linrep_prefix(rep, 256)


def test_inconsistent_dimensions_are_rejected():
    with pytest.raises(InvalidParameterError):
        LinRep(2, [1, 0], [[[1, 0], [0, 1]]], [1, 0])
    with pytest.raises(InvalidParameterError):
        LinRep(2, [1], [[[1]], [[1]]], [1, 0])
