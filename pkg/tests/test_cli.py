import json

import pytest

from baumsweet import __version__
from baumsweet.main import cli
from baumsweet.models.automata import dfao_from_json, dfao_prefix, fixture
from baumsweet.models.seq import c_seq_bits, p_seq_r
from scripts.export_figures import FIGURES, export_figures


def test_version(runner):
    result = runner.invoke(cli, ["--version"])
    assert result.exit_code == 0
    assert __version__ in result.stdout


# gen

def test_gen_u(runner):
    result = runner.invoke(cli, ["gen", "u_seq", "-n", "8"])
    assert result.exit_code == 0
    assert result.stdout == "1 2 5 6 17 18 21 22\n"


def test_gen_baum_sweet(runner, b_prefix):
    result = runner.invoke(cli, ["gen", "baum_sweet", "-n", "20"])
    assert result.stdout.split() == [str(v) for v in b_prefix]


def test_gen_default_length(runner):
    result = runner.invoke(cli, ["gen", "q_seq"])
    assert len(result.stdout.split()) == 32


def test_gen_csv(runner):
    result = runner.invoke(cli, ["gen", "thue_morse", "-n", "4", "--csv"])
    assert result.stdout == "n,value\n0,0\n1,1\n2,1\n3,0\n"


@pytest.mark.parametrize("args", [["gen", "nope"], ["gen", "baum_sweet_r"], ["gen", "u_seq", "-n", "-1"]])
def test_gen_usage_errors(runner, args):
    assert runner.invoke(cli, args).exit_code == 2


# invert

def test_invert_c(runner):
    result = runner.invoke(cli, ["invert", "--series", "C", "-n", "8"])
    assert result.exit_code == 0
    assert result.stdout == "0 1 0 1 1 1 1 1\n"


def test_invert_d_gives_q(runner):
    result = runner.invoke(cli, ["invert", "--series", "D", "-n", "8", "--method", "newton"])
    assert result.stdout == "0 1 1 0 0 1 1 0\n"


def test_invert_cr(runner):
    result = runner.invoke(cli, ["invert", "--series", "C_r:3", "-n", "16"])
    assert result.stdout.split() == [str(p_seq_r(3, i)) for i in range(16)]


def test_invert_thue_morse(runner):
    result = runner.invoke(cli, ["invert", "--series", "thue_morse", "-n", "64", "--csv"])
    rows = result.stdout.splitlines()
    assert rows[0] == "n,coeff"
    assert [int(row.split(",")[1]) for row in rows[1:]] == list(c_seq_bits(64))


@pytest.mark.parametrize("series", ["E", "C_r", "C_r:1", "D_r:x", "thue_morse:2"])
def test_invert_bad_series(runner, series):
    assert runner.invoke(cli, ["invert", "--series", series]).exit_code == 2


# automaton

def test_automaton_table(runner):
    result = runner.invoke(cli, ["automaton", "fig1"])
    assert result.exit_code == 0
    assert result.stdout.splitlines()[0] == "base 2, 3 estados, inicial c1"


def test_automaton_json_reads_back(runner):
    result = runner.invoke(cli, ["automaton", "fig1", "--json"])
    a = dfao_from_json(result.stdout)
    assert dfao_prefix(a, 512) == dfao_prefix(fixture("fig1"), 512)


def test_automaton_rebase_minimize(runner):
    result = runner.invoke(cli, ["automaton", "fig2", "--rebase", "2", "--minimize"])
    assert result.stdout.startswith("base 4, 3 estados")


def test_automaton_dot_to_file(runner, tmp_path):
    out = tmp_path / "fig1.dot"
    result = runner.invoke(cli, ["automaton", "fig1", "--dot", "--out", str(out)])
    assert result.exit_code == 0
    assert result.stdout == ""
    assert '"c1" -> "c2" [label="0"];' in out.read_text(encoding="utf-8")


@pytest.mark.parametrize("figure", ["fig4:x", "fig9", "fig1:2"])
def test_automaton_bad_figure(runner, figure):
    assert runner.invoke(cli, ["automaton", figure]).exit_code == 2


# kernel

def test_kernel_exact(runner):
    result = runner.invoke(cli, ["kernel", "fig2"])
    assert result.exit_code == 0
    assert result.stdout.splitlines()[0] == "base 2: 5 clases (exacto)"


def test_kernel_exact_rebased(runner):
    result = runner.invoke(cli, ["kernel", "fig2", "--base", "4"])
    assert result.stdout.splitlines()[0] == "base 4: 3 clases (exacto)"
    assert runner.invoke(cli, ["kernel", "fig2", "--base", "6"]).exit_code == 2


def test_kernel_empirical(runner):
    result = runner.invoke(cli, ["kernel", "baum_sweet", "--depth", "3", "--bound", "32"])
    lines = result.stdout.splitlines()
    assert lines[0] == "base 2: 3 clases (heurístico)"
    assert len(lines) == 1 + 15


def test_kernel_json(runner):
    result = runner.invoke(cli, ["kernel", "fig1", "--json"])
    report = json.loads(result.stdout)
    assert report["classes"] == 3
    assert not report["heuristic"]
    assert {"i", "j", "class", "rep"} <= set(report["elements"][0])


def test_kernel_bad_target(runner):
    assert runner.invoke(cli, ["kernel", "nope"]).exit_code == 2


# linrep

def test_linrep_u(runner):
    result = runner.invoke(cli, ["linrep", "u_seq", "-n", "1024"])
    assert result.exit_code == 0
    assert result.stdout.splitlines()[0] == "dimensión 2 en base 2"


def test_linrep_json(runner):
    result = runner.invoke(cli, ["linrep", "moser_de_bruijn", "-n", "1024", "--json"])
    assert json.loads(result.stdout)["dim"] == 2


def test_linrep_failure_prints_rank_profile(runner):
    result = runner.invoke(cli, ["linrep", "l_seq", "--max-dim", "3", "-n", "4096"])
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert lines[0].startswith("sin representación de dimensión <= 3")
    assert lines[1].startswith("perfil de rangos:")


# words

def test_words_list(runner):
    result = runner.invoke(cli, ["words", "list"])
    assert result.exit_code == 0
    assert any(line.startswith("fib_word  ") for line in result.stdout.splitlines())


def test_words_identity(runner):
    result = runner.invoke(cli, ["words", "fib_word", "--set", "length=1000"])
    assert result.exit_code == 0
    assert result.stdout == "fib_word: se cumple\n"


def test_words_freq(runner):
    result = runner.invoke(cli, ["words", "freq", "l", "-n", "10000"])
    assert result.exit_code == 0
    assert result.stdout.startswith("l n=10000 frecuencia=0.61")


@pytest.mark.parametrize("args", [
    ["words", "nope"],
    ["words", "freq"],
    ["words", "freq", "x"],
    ["words", "fib_word", "--set", "depth=3"],
    ["words", "fib_word", "--set", "length"],
])
def test_words_usage_errors(runner, args):
    assert runner.invoke(cli, args).exit_code == 2


# verify

def test_verify_single_check(runner):
    result = runner.invoke(cli, ["verify", "--check", "eq.b_eq", "--set", "n=256"])
    assert result.exit_code == 0
    assert "eq.b_eq" in result.stdout
    assert result.stdout.splitlines()[-1].startswith("total 1:")


def test_verify_flagged_check_exits_zero(runner):
    result = runner.invoke(cli, ["verify", "--check", "typo.q_recur_r.paper_form", "--set", "n=256"])
    assert result.exit_code == 0
    assert "flagged" in result.stdout


def test_verify_json_report(runner, tmp_path):
    path = tmp_path / "report.json"
    result = runner.invoke(cli, ["verify", "--check", "seq.b_prefix20", "--check", "kernel.fig1",
                                 "--json", str(path)])
    assert result.exit_code == 0
    report = json.loads(path.read_text(encoding="utf-8"))
    assert report["summary"]["ok"]
    assert [c["id"] for c in report["checks"]] == ["seq.b_prefix20", "kernel.fig1"]


def test_verify_list(runner):
    result = runner.invoke(cli, ["verify", "--list"])
    assert result.exit_code == 0
    assert any(line.startswith("typo.unr_recur.paper_form  fail") for line in result.stdout.splitlines())


@pytest.mark.parametrize("args", [
    ["verify", "--check", "nope"],
    ["verify", "--check", "eq.b_eq", "--set", "nope=3"],
    ["verify", "--check", "eq.b_eq", "--set", "n=abc"],
    ["verify", "--profile", "huge"],
])
def test_verify_usage_errors(runner, args):
    assert runner.invoke(cli, args).exit_code == 2


# scripts

def test_export_figures(tmp_path):
    assert export_figures(str(tmp_path), check_terms=256) == len(FIGURES)
    assert (tmp_path / "fig4_3.json").exists()
    assert (tmp_path / "fig2.dot").read_text(encoding="utf-8").startswith("digraph")
