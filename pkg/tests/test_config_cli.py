import json
from fractions import Fraction
from pathlib import Path

import pytest

from rsfactors import __version__, root_of_unity
from rsfactors.cli import main
from rsfactors.config import ConfigError, parse_config_text
from rsfactors.report import read_report

CONFIGS = Path(__file__).resolve().parent.parent / "configs"


def test_parse_typed_values():
    cfg = parse_config_text("a = 7\nb = true\nc = [1/2, zeta(3)^2, 2*q^-1]  # comment\nd = [[2,3,1]]\n")
    assert cfg.values["a"].evaluate(3) == 7
    assert cfg.values["b"] is True
    c = [x.evaluate(3) for x in cfg.values["c"]]
    assert c == [Fraction(1, 2), root_of_unity(3, 2), Fraction(2, 3)]
    assert cfg.lines["d"] == 4


@pytest.mark.parametrize(
    "text,line",
    [("a = 0.5", 1), ("\n\nb = [1,", 3), ("x = 1\nx = 2", 2), ("no equals here", 1), ("1bad = 2", 1)],
)
def test_parse_errors_carry_location(text, line):
    with pytest.raises(ConfigError) as exc:
        parse_config_text(text, "t.cfg")
    assert exc.value.line == line
    assert f"t.cfg:{line}" in str(exc.value)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_version(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
    assert __version__ in capsys.readouterr().out


def test_list_pipelines(capsys):
    code, out, _ = run(capsys, "list-pipelines")
    assert code == 0
    assert {line.split()[0] for line in out.splitlines()} == {"cauchy", "theorem_main", "lemma_aux", "gauss_suite"}


def test_cauchy_pass_and_report_shape(capsys, tmp_path):
    out = tmp_path / "r.jsonl"
    code, _, err = run(capsys, "verify", "cauchy", "--config", str(CONFIGS / "cauchy_explicit.cfg"), "--out", str(out))
    assert code == 0
    recs = read_report(out.read_text())
    assert recs[0]["record"] == "header" and recs[0]["version"] == __version__
    assert recs[-1]["record"] == "summary" and recs[-1]["overall"] == "pass"
    assert all(r["anchor"] for r in recs if r["record"] == "check")
    assert "overall=PASS" in err


def test_trivial_cauchy(capsys, tmp_path):
    cfg = tmp_path / "c.cfg"
    cfg.write_text("alpha = [1]\ngamma = [1]\ntrunc = 5\n")
    code, out, _ = run(capsys, "verify", "cauchy", "--config", str(cfg))
    assert code == 0
    (chk,) = [r for r in read_report(out) if r["record"] == "check"]
    assert chk["got"] == ["1"] * 6


def test_selftest_failure_names_degree(capsys):
    code, out, _ = run(capsys, "verify", "cauchy", "--config", str(CONFIGS / "cauchy_selftest.cfg"))
    assert code == 3
    (chk,) = [r for r in read_report(out) if r["record"] == "check"]
    assert chk["verdict"] == "fail" and chk["note"] == "first mismatch at degree 4"


def test_unknown_key_is_config_error(capsys, tmp_path):
    cfg = tmp_path / "c.cfg"
    cfg.write_text("q = 3\nalpah = [1]\n")
    code, _, err = run(capsys, "verify", "cauchy", "--config", str(cfg))
    assert code == 2
    assert "alpah" in err and ":2" in err


def test_missing_config_file(capsys, tmp_path):
    code, _, err = run(capsys, "verify", "cauchy", "--config", str(tmp_path / "nope.cfg"))
    assert code == 2


def test_unknown_pipeline(capsys):
    code, _, err = run(capsys, "verify", "nonsense")
    assert code == 2


def test_theorem_precondition_errors(capsys, tmp_path):
    bad = {
        "alpha = [1, 2]\ngamma = [1, 2]\n": "n > m",
        "alpha = [1, 2]\ngamma = [0]\ntau_cond_exp = 1\ncentral_cond_exp = 2\n": "exceeds",
        "alpha = [1, 2]\ngamma = [1]\ntau_cond_exp = 1\n": "last Langlands parameter",
        "q = 6\n": "prime power",
    }
    for text, msg in bad.items():
        cfg = tmp_path / "t.cfg"
        cfg.write_text(text)
        code, _, err = run(capsys, "verify", "theorem_main", "--config", str(cfg))
        assert code == 2, text
        assert msg in err, (text, err)


def test_theorem_ramified_example(capsys):
    code, out, _ = run(capsys, "verify", "theorem_main", "--config", str(CONFIGS / "theorem_ramified.cfg"))
    assert code == 0
    recs = {r["name"]: r for r in read_report(out) if r["record"] == "check"}
    assert set(recs["theorem_main.explicit.torus_sum"]["got"]) == {"1", "0"}
    assert recs["theorem_main.explicit.torus_sum"]["got"][0] == "1"
    c = recs["theorem_main.constant_c"]["got"]
    z3 = root_of_unity(3)
    assert c["exact"] == str((z3 - z3 * z3) / 2)
    assert c["complex"].startswith("0.0+0.866025403784438")


def test_theorem_unramified_matches_cauchy(capsys, tmp_path):
    cfg = tmp_path / "t.cfg"
    cfg.write_text("alpha = [2, 1/3]\ngamma = [5]\ntrunc = 7\n")
    code, out, _ = run(capsys, "verify", "theorem_main", "--config", str(cfg))
    assert code == 0
    torus = next(r for r in read_report(out) if r.get("name") == "theorem_main.explicit.torus_sum")
    code, out, _ = run(capsys, "verify", "cauchy", "--config", str(cfg))
    cauchy = next(r for r in read_report(out) if r["record"] == "check")
    assert torus["got"] == cauchy["got"] == cauchy["expected"]


def test_seed_and_trunc_overrides(capsys):
    code, out, _ = run(capsys, "verify", "cauchy", "--seed", "99", "--trunc", "4")
    assert code == 0
    header = read_report(out)[0]
    assert header["seed"] == 99 and header["inputs"]["trunc"] == 4


def test_timing_only_when_requested(capsys):
    _, out, _ = run(capsys, "verify", "cauchy", "--trunc", "3")
    assert "duration_s" not in read_report(out)[-1]
    _, out, _ = run(capsys, "verify", "cauchy", "--trunc", "3", "--timing")
    assert read_report(out)[-1]["duration_s"] >= 0


def test_gauss_suite_index_values(capsys, tmp_path):
    cfg = tmp_path / "g.cfg"
    cfg.write_text("primes = [3]\nmax_level = 1\nindex_cases = [[2,2,1],[2,3,1],[3,2,1]]\n")
    code, out, _ = run(capsys, "verify", "gauss_suite", "--config", str(cfg))
    assert code == 0
    recs = [r for r in read_report(out) if r["record"] == "check"]
    assert [r["got"] for r in recs if r["name"].startswith("index")] == [3, 4, 7]
    assert len([r for r in recs if r["name"].startswith("gauss.vanishing")]) == 1


def test_gauss_suite_index_domain(capsys, tmp_path):
    cfg = tmp_path / "g.cfg"
    cfg.write_text("index_cases = [[4,2,1]]\n")
    code, _, err = run(capsys, "verify", "gauss_suite", "--config", str(cfg))
    assert code == 2 and "brute-force domain" in err


def test_lemma_specific_and_unramified(capsys, tmp_path):
    cfg = tmp_path / "l.cfg"
    cfg.write_text("max_b = 1\nmax_degree = 2\nram_level = 1\n")
    code, out, _ = run(capsys, "verify", "lemma_aux", "--config", str(cfg))
    assert code == 0
    recs = [r for r in read_report(out) if r["record"] == "check"]
    specific = next(r for r in recs if r["name"] == "lemma_aux.sigma2_sigma2")
    assert specific["got"] == "1 - 1/3*X"
    unram = [r for r in recs if r["name"] == "lemma_aux.pair" and "ram1" not in r["inputs"]["pi"] + r["inputs"]["tau"]]
    assert unram and all(r["got"] == "1" for r in unram)


def test_internal_error_exit_code(capsys, monkeypatch):
    from rsfactors import pipelines
    from rsfactors.whittaker import GradeCollapseError

    def boom(*a, **k):
        raise GradeCollapseError("forced")

    monkeypatch.setattr(pipelines, "zeta_torus_sum", boom)
    code, out, _ = run(capsys, "verify", "theorem_main", "--trunc", "2")
    assert code == 4
    recs = read_report(out)
    assert any(r["record"] == "internal_error" for r in recs)
    assert recs[-1]["overall"] == "error"


def test_report_is_json_lines(capsys):
    _, out, _ = run(capsys, "verify", "gauss_suite", "--config", str(CONFIGS / "gauss_suite.cfg"))
    for line in out.splitlines():
        if not line.startswith("#"):
            json.loads(line)
