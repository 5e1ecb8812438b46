import pytest

from baumsweet.core.errors import InvalidParameterError
from baumsweet.models.automata import (
    Dfao,
    baum_sweet_r_automaton,
    dfao_eval,
    dfao_eval_msb,
    dfao_from_json,
    dfao_minimize,
    dfao_prefix,
    dfao_rebase,
    dfao_to_dot,
    dfao_to_json,
    fixture,
    is_zero_invariant,
    parse_fixture,
)
from baumsweet.models.seq import baum_sweet_bits, baum_sweet_r_bits, q_seq_bits, q_seq_r_bits


def test_fig1_generates_baum_sweet(b_bits):
    assert dfao_prefix(fixture("fig1"), len(b_bits)) == list(b_bits)


@pytest.mark.parametrize("fig", ["fig2", "fig3"])
def test_fig2_and_fig3_generate_q(fig):
    assert dfao_prefix(fixture(fig), 4096) == list(q_seq_bits(4096))


@pytest.mark.parametrize("r", [2, 3, 4])
def test_fig4_generates_q_r(r):
    assert dfao_prefix(parse_fixture(f"fig4:{r}"), 4096) == list(q_seq_r_bits(r, 4096))


def test_digits_are_read_least_significant_first():
    fig1, fig3 = fixture("fig1"), fixture("fig3")
    assert dfao_eval(fig1, 2) == 0
    assert dfao_eval(fig3, 6) == 1
    assert dfao_eval_msb(fig1, 2) != dfao_eval(fig1, 2)
    assert dfao_eval_msb(fig3, 6) != dfao_eval(fig3, 6)


def test_bulk_prefix_matches_single_evaluation():
    a = fixture("fig2")
    assert dfao_prefix(a, 500) == [dfao_eval(a, n) for n in range(500)]


def test_rebase_fig2_behaves_as_fig3():
    rebased = dfao_rebase(fixture("fig2"), 2)
    assert rebased.base == 4
    assert dfao_prefix(rebased, 4096) == dfao_prefix(fixture("fig3"), 4096)


def test_fig4_at_two_is_fig3():
    a, b = fixture("fig4", 2), fixture("fig3")
    assert (a.base, a.names, a.init, a.delta, a.out) == (b.base, b.names, b.init, b.delta, b.out)


@pytest.mark.parametrize("fig, size", [("fig1", 3), ("fig2", 5), ("fig3", 3)])
def test_minimize_sizes(fig, size):
    m = dfao_minimize(fixture(fig))
    assert m.num_states == size
    assert dfao_minimize(m).num_states == size


def test_minimize_merges_equivalent_states():
    twin = Dfao(2, ["c1", "c2", "c3", "c1b"], 0, [[1, 3], [3, 2], [2, 2], [1, 0]], [1, 1, 0, 1])
    merged = dfao_minimize(twin)
    assert merged.num_states == 3
    assert dfao_prefix(merged, 1024) == dfao_prefix(twin, 1024)


def test_minimize_drops_unreachable_states():
    a = Dfao(2, ["a", "b", "lost"], 0, [[0, 1], [1, 1], [0, 0]], [0, 1, 1])
    assert dfao_minimize(a).num_states == 2


@pytest.mark.parametrize("r", [2, 3, 5])
def test_baum_sweet_r_automaton(r):
    a = baum_sweet_r_automaton(r)
    assert a.num_states == r + 1
    assert dfao_prefix(a, 2048) == list(baum_sweet_r_bits(r, 2048))


def test_baum_sweet_r_automaton_at_two_matches_fig1():
    assert dfao_prefix(baum_sweet_r_automaton(2), 1024) == list(baum_sweet_bits(1024))


def test_zero_invariance():
    assert is_zero_invariant(fixture("fig1"))
    assert is_zero_invariant(fixture("fig2"))
    assert not is_zero_invariant(Dfao(2, ["a", "b"], 0, [[1, 0], [1, 1]], [0, 1]))


def test_json_export_can_be_read_back():
    a = fixture("fig2")
    back = dfao_from_json(dfao_to_json(a))
    assert (back.base, back.names, back.init, back.delta, back.out) == (a.base, a.names, a.init, a.delta, a.out)
    assert '"from"' in dfao_to_json(a)


@pytest.mark.parametrize("old, new", [
    ('"to": "c3"', '"to": "c9"'),
    ('"init": "c1"', '"init": "c0"'),
    ('"digit": 1', '"digit": 2'),
])
def test_json_with_unknown_references_is_rejected(old, new):
    text = dfao_to_json(fixture("fig1"))
    assert old in text
    with pytest.raises(InvalidParameterError):
        dfao_from_json(text.replace(old, new, 1))


def test_dot_export():
    dot = dfao_to_dot(fixture("fig1"))
    assert dot.startswith("digraph dfao {")
    assert '"c1" -> "c2" [label="0"];' in dot
    assert '"c3" -> "c3" [label="0,1"];' in dot
    assert dot.rstrip().endswith("}")


@pytest.mark.parametrize("text", ["fig5", "fig4", "fig4:x", "fig4:1", "fig1:2"])
def test_bad_fixtures(text):
    with pytest.raises(InvalidParameterError):
        parse_fixture(text)


def test_dfao_rejects_partial_transition_table():
    with pytest.raises(InvalidParameterError):
        Dfao(2, ["a"], 0, [[0]], [1])
