"""Command line front end tests."""

import io

from mbnf.cli import EXIT_ENTAILED, EXIT_ERROR, EXIT_NOT_ENTAILED, load_theory, run


def write_theory(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


def invoke(argv):
    out = io.StringIO()
    code = run(argv, out=out)
    return code, out.getvalue()


def test_load_theory_skips_comments_and_blanks(tmp_path):
    path = write_theory(tmp_path, "t.mbnf", "# header\n\nB p\nnot q -> B r  # rule\n")
    theory = load_theory(path)
    assert len(theory.formulas) == 2


def test_entailed_exit_code_and_report(tmp_path):
    path = write_theory(tmp_path, "t.mbnf", "B p\n")
    code, text = invoke(["--theory", path, "--query", "B p"])
    assert code == EXIT_ENTAILED
    lines = text.splitlines()
    assert lines[0] == "verdict=ENTAILED engine=flat"
    assert lines[1] == "ENTAILED"


def test_not_entailed_with_witness(tmp_path):
    path = write_theory(tmp_path, "t.mbnf", "not married | B married\n")
    code, text = invoke(["--theory", path, "--query", "B married", "--witness"])
    assert code == EXIT_NOT_ENTAILED
    assert text.splitlines()[0] == "verdict=NOT-ENTAILED engine=flat"
    assert "witness:" in text
    assert "ob:" in text
    assert "initial-world:" in text


def test_engine_selection(tmp_path):
    path = write_theory(tmp_path, "t.mbnf", "B p\n")
    code, text = invoke(["--theory", path, "--query", "B p", "--engine", "general"])
    assert code == EXIT_ENTAILED
    assert "engine=general" in text.splitlines()[0]


def test_model_listing(tmp_path):
    path = write_theory(tmp_path, "t.mbnf", "not married | B married\n")
    code, text = invoke(["--theory", path, "--models", "--engine", "oracle"])
    assert code == EXIT_ENTAILED
    assert text.splitlines()[0] == "models=2 alphabet={married}"
    assert "model 1:" in text and "model 2:" in text


def test_models_requires_oracle_engine(tmp_path):
    path = write_theory(tmp_path, "t.mbnf", "B p\n")
    code, _ = invoke(["--theory", path, "--models"])
    assert code == EXIT_ERROR


def test_repeated_runs_are_byte_identical(tmp_path):
    path = write_theory(tmp_path, "t.mbnf", "B(a | B b) & (not(c | ~d) | B~not b) & c\n")
    argv = ["--theory", path, "--query", "~B b | (~b & B(a & b))", "--witness"]
    first = invoke(argv)
    second = invoke(argv)
    assert first == second
    assert first[0] == EXIT_NOT_ENTAILED


def test_error_exit_codes(tmp_path):
    bad = write_theory(tmp_path, "bad.mbnf", "B p &\n")
    assert invoke(["--theory", bad, "--query", "B p"])[0] == EXIT_ERROR

    good = write_theory(tmp_path, "good.mbnf", "B p\n")
    assert invoke(["--theory", good])[0] == EXIT_ERROR  # missing query
    assert invoke(["--theory", good, "--query", "B p", "--engine", "bogus"])[0] == EXIT_ERROR
    assert invoke(["--theory", good, "--query", "B p", "--engine", "oracle",
                   "--oracle-cap", "5"])[0] == EXIT_ERROR


def test_parse_error_reports_location(tmp_path, capsys):
    bad = write_theory(tmp_path, "bad.mbnf", "B p\na & $\n")
    code, _ = invoke(["--theory", bad, "--query", "B p"])
    assert code == EXIT_ERROR
    err = capsys.readouterr().err
    assert "bad.mbnf:2" in err
