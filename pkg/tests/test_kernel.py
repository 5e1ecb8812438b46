import json

import pytest

from baumsweet.core.errors import InsufficientPrefixError, InvalidParameterError
from baumsweet.models.automata import baum_sweet_r_automaton, fixture
from baumsweet.models.kernel import kernel_empirical, kernel_exact
from baumsweet.models.seq import baum_sweet_bits, q_seq_bits, thue_morse_bits


@pytest.mark.parametrize("fig, size", [("fig1", 3), ("fig2", 5), ("fig3", 3)])
def test_exact_kernel_sizes(fig, size):
    result = kernel_exact(fixture(fig))
    assert result.size == size
    assert not result.heuristic


def test_exact_kernel_representatives_are_least():
    elements = kernel_exact(fixture("fig1")).elements
    assert (elements[0].i, elements[0].j) == (0, 0)
    assert [e.cls for e in elements] == [0, 1, 2]
    keys = [(e.i, e.j) for e in elements]
    assert keys == sorted(keys)


@pytest.mark.parametrize("r", [2, 3, 4, 5])
def test_baum_sweet_r_kernel_has_r_plus_one_elements(r):
    assert kernel_exact(baum_sweet_r_automaton(r)).size == r + 1


@pytest.mark.parametrize("values, size", [
    (baum_sweet_bits(16 * 64), 3),
    (q_seq_bits(16 * 64), 5),
    (thue_morse_bits(16 * 64), 2),
])
def test_empirical_kernel_matches_exact(values, size):
    result = kernel_empirical(values, 2, 4, 64)
    assert result.size == size
    assert result.heuristic
    assert len(result.elements) == 2 ** 5 - 1


def test_empirical_kernel_needs_enough_terms():
    with pytest.raises(InsufficientPrefixError):
        kernel_empirical(baum_sweet_bits(100), 2, 4, 64)
    with pytest.raises(InvalidParameterError):
        kernel_empirical(baum_sweet_bits(100), 1, 1, 1)


def test_kernel_report_json():
    report = json.loads(kernel_exact(fixture("fig2")).to_json())
    assert report["classes"] == 5
    assert report["heuristic"] is False
    assert {"i", "j", "class"} <= set(report["elements"][0])
