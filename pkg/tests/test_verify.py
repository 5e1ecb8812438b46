import pytest

from baumsweet.core.errors import InvalidParameterError, UnknownCheckError
from baumsweet.verify import registry
from baumsweet.verify.registry import (
    Check,
    get_check,
    list_checks,
    parse_override,
    render_table,
    run_all,
    run_check,
)


def _fake(check_id, expected, fn):
    return Check(check_id, "check de prueba", "-", expected, {"n": 4}, {"n": 8}, fn)


def test_registry_covers_every_area():
    ids = [c.id for c in list_checks()]
    assert ids == sorted(ids)
    prefixes = {i.split(".")[0] for i in ids}
    assert {"eq", "inv", "closed", "dual", "auto", "kernel", "words", "linrep", "rank", "s", "typo"} <= prefixes
    assert "eq.b_eq" in ids


def test_expected_fail_checks_are_registered():
    for check_id in ("typo.q_recur_r.paper_form", "typo.unr_recur.paper_form", "typo.qr_complex_eq.paper_form"):
        assert get_check(check_id).expected == "fail"


def test_unknown_check():
    with pytest.raises(UnknownCheckError):
        get_check("nope")


def test_full_profile_inherits_quick_bounds():
    check = get_check("eq.br_eq")
    assert check.bounds("quick")["rs"] == (2, 3, 4)
    assert check.bounds("full")["n"] > check.bounds("quick")["n"]
    with pytest.raises(InvalidParameterError):
        check.bounds("huge")


@pytest.mark.parametrize("text, parsed", [
    ("n=512", ("n", 512)),
    ("rs=2,3", ("rs", (2, 3))),
    (" depth = 3 ", ("depth", 3)),
])
def test_parse_override(text, parsed):
    assert parse_override(text) == parsed


@pytest.mark.parametrize("text", ["n", "n=", "=3", "n=abc"])
def test_parse_override_errors(text):
    with pytest.raises(InvalidParameterError):
        parse_override(text)


@pytest.mark.parametrize("check_id, overrides", [
    ("eq.b_eq", {"n": 512}),
    ("eq.qr_eq", {"n": 256, "rs": (2, 3)}),
    ("inv.cp_roundtrip", {"n": 512}),
    ("closed.p_seq", {"n": 512}),
    ("seq.b_prefix20", {}),
    ("dual.b", {"n": 1024}),
    ("cor.un_mn", {"n": 1024}),
    ("auto.fig2_q", {"n": 2048}),
    ("kernel.fig2", {}),
    ("words.fib_word", {"length": 1000}),
    ("linrep.m", {"n": 1024}),
    ("rank.u", {"n": 1024}),
])
def test_selected_checks_pass(check_id, overrides):
    result = run_check(check_id, overrides, profile="quick")
    assert result.status == "pass", result.counterexample
    assert result.counterexample is None


@pytest.mark.parametrize("check_id", ["typo.q_recur_r.paper_form", "typo.unr_recur.paper_form"])
def test_misprinted_forms_are_flagged(check_id):
    result = run_check(check_id, {"n": 256}, profile="quick")
    assert result.outcome == "fail"
    assert result.status == "flagged"
    assert result.counterexample


def test_unknown_bound_is_rejected_in_strict_mode():
    with pytest.raises(InvalidParameterError):
        run_check("eq.b_eq", {"depth": 3})


def test_status_mapping(monkeypatch):
    def boom(n):
        raise ValueError("roto")

    monkeypatch.setitem(registry._REGISTRY, "tmp.pass", _fake("tmp.pass", "pass", lambda n: None))
    monkeypatch.setitem(registry._REGISTRY, "tmp.fail", _fake("tmp.fail", "pass", lambda n: {"n": n}))
    monkeypatch.setitem(registry._REGISTRY, "tmp.error", _fake("tmp.error", "pass", boom))
    monkeypatch.setitem(registry._REGISTRY, "tmp.unexpected", _fake("tmp.unexpected", "fail", lambda n: None))

    assert run_check("tmp.pass").status == "pass"
    failed = run_check("tmp.fail", profile="full")
    assert (failed.status, failed.counterexample) == ("fail", {"n": 8})
    errored = run_check("tmp.error")
    assert (errored.status, errored.outcome) == ("fail", "error")
    assert "roto" in errored.counterexample["error"]
    assert run_check("tmp.unexpected").status == "fail"


def test_run_all_report_and_table():
    report = run_all(profile="quick", jobs=1, progress=False, check_ids=["eq.b_eq", "seq.b_prefix20"],
                     overrides={"n": 256})
    assert report.profile == "quick"
    assert [c.id for c in report.checks] == ["eq.b_eq", "seq.b_prefix20"]
    assert report.summary.total == 2
    assert report.summary.ok
    table = render_table(report)
    assert table.splitlines()[0].startswith("check")
    assert table.endswith("total 2: 2 pasan, 0 fallan, 0 señaladas\n")
    assert render_table(report) == render_table(run_all(profile="quick", jobs=1, check_ids=["eq.b_eq", "seq.b_prefix20"],
                                                        overrides={"n": 256}))


def test_run_all_fails_on_unexpected_result(monkeypatch):
    monkeypatch.setitem(registry._REGISTRY, "tmp.fail", _fake("tmp.fail", "pass", lambda n: {"n": n}))
    report = run_all(jobs=1, progress=False, check_ids=["tmp.fail", "eq.b_eq"], overrides={"n": 128})
    assert not report.summary.ok
    assert report.summary.failed == 1


@pytest.mark.parametrize("check", list_checks(), ids=lambda check: check.id)
def test_every_check_meets_expectation_in_quick_profile(check):
    result = run_check(check.id, profile="quick")
    assert result.status == ("flagged" if check.expected == "fail" else "pass"), result.counterexample


@pytest.mark.parametrize("check_id", ["runs.b", "runs.q"])
def test_runs_require_long_zero_runs(check_id):
    result = run_check(check_id, {"prefix": 10_000, "min_zero_run": 10_000}, profile="quick")
    assert result.status == "fail"
    assert result.counterexample["max_run_of_zeros"] < 10_000


def test_runs_q_longest_zero_run_below_bound():
    result = run_check("runs.q", {"prefix": 10_000, "min_zero_run": 2730}, profile="quick")
    assert result.counterexample == {"max_run_of_zeros": 2730, "min_zero_run": 2730}
    assert run_check("runs.q", {"prefix": 10_000, "min_zero_run": 2729}, profile="quick").status == "pass"


def test_runs_q_rejects_stalled_zero_runs(monkeypatch):
    from baumsweet.verify.checks import sequence_checks

    # pares de 1 cada 12 posiciones: las rachas de 0 nunca crecen
    monkeypatch.setattr(sequence_checks, "q_seq_bits", lambda n: bytes(int(i % 12 in (1, 2)) for i in range(n)))
    result = run_check("runs.q", {"prefix": 10_000, "min_zero_run": 10}, profile="quick")
    assert result.status == "fail"


def test_dual_u_checks_u_pointwise():
    result = run_check("dual.u", {"prefix": 64, "n": 1 << 12}, profile="quick")
    assert result.status == "pass", result.counterexample
    assert get_check("dual.u").full["n"] == 1 << 16
    assert "dual.a_alt" in get_check("dual.a").description
