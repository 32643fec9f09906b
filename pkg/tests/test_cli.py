import io
import subprocess
import sys

import pytest

from zuluverb.axiom import parse_axioms
from zuluverb.cli import RunConfig, list_variants, main, run


def _run(tmp_path, lexicon_path, axioms, **kw):
    path = tmp_path / "axioms.txt"
    path.write_text(axioms, encoding="utf-8")
    out, err = io.StringIO(), io.StringIO()
    status = run(RunConfig(lexicon_path=lexicon_path, axioms_path=path, **kw), out, err)
    return status, out.getvalue(), err.getvalue()


def test_single_axiom(tmp_path, lexicon_path):
    status, out, err = _run(tmp_path, lexicon_path, "sub(ikhambi, umuthi)\n")
    assert (status, out, err) == (0, "ikhambi ngumuthi\n", "")


def test_error_among_three(tmp_path, lexicon_path):
    text = "sub(ikhambi, umuthi)\nsub(qqq, umuthi)\nsub(indebe, not(ingilazi))\n"
    status, out, err = _run(tmp_path, lexicon_path, text)
    assert status == 1
    assert out == "ikhambi ngumuthi\nindebe akuyona ingilazi\n"
    assert err.strip().splitlines() == [f"{tmp_path / 'axioms.txt'}:2: unknown lemma 'qqq'"]


def test_fail_fast(tmp_path, lexicon_path):
    text = "sub(ikhambi, umuthi)\nsub(qqq, umuthi)\nsub(indebe, not(ingilazi))\n"
    status, out, _ = _run(tmp_path, lexicon_path, text, fail_fast=True)
    assert status == 1 and out == "ikhambi ngumuthi\n"


def test_syntax_error_is_located(tmp_path, lexicon_path):
    status, out, err = _run(tmp_path, lexicon_path, "\nsub(ikhambi umuthi)\n")
    assert status == 1 and out == ""
    assert ":2:13: syntax error" in err


def test_missing_lexicon(tmp_path):
    status, out, err = _run(tmp_path, tmp_path / "nope.lex", "sub(ikhambi, umuthi)\n")
    assert status == 2 and out == ""
    assert "nope.lex" in err


def test_bad_lexicon_line(tmp_path):
    lex = tmp_path / "bad.lex"
    lex.write_text("C\t5\ti-\n", encoding="utf-8")
    status, out, err = _run(tmp_path, lex, "sub(ikhambi, umuthi)\n")
    assert status == 2 and out == ""
    assert f"{lex}:1:" in err


def test_missing_axioms_file(tmp_path, lexicon_path):
    out, err = io.StringIO(), io.StringIO()
    status = run(RunConfig(lexicon_path=lexicon_path, axioms_path=tmp_path / "none.txt"), out, err)
    assert status == 2 and out.getvalue() == ""


def test_profile_file_and_overrides(tmp_path, lexicon_path):
    prof = tmp_path / "p.profile"
    prof.write_text("subsumption_number=plural\nexist_style=noma_phi\n", encoding="utf-8")
    text = "sub(ikhambi, umuthi)\nsub(indlulamithi, some(eats, ihlamvana))\n"
    status, out, _ = _run(tmp_path, lexicon_path, text, profile_path=prof,
                          overrides=["exist_number=singular", "exist_number=plural"])
    assert status == 0
    assert out.splitlines() == ["amakhambi yimithi", "zonke izindlulamithi zidla noma yiliphi ihlamvana"]


@pytest.mark.parametrize("override", ["nonsense=1", "exist_style=sometimes", "exist_style"])
def test_bad_override_is_config_error(tmp_path, lexicon_path, override):
    status, out, err = _run(tmp_path, lexicon_path, "sub(ikhambi, umuthi)\n", overrides=[override])
    assert status == 2 and out == "" and "--set" in err


def test_trace_goes_to_stderr(tmp_path, lexicon_path):
    status, out, err = _run(tmp_path, lexicon_path, "sub(ikhambi, umuthi)\n", trace=True)
    assert out == "ikhambi ngumuthi\n"
    lines = err.splitlines()
    assert lines and all(line.startswith("## ") for line in lines)
    assert "subsumption.singular" in lines[0]


def test_variants_output(tmp_path, lexicon_path):
    status, out, _ = _run(tmp_path, lexicon_path, "sub(ikhambi, umuthi)\n", variants=True)
    assert status == 0
    assert out.splitlines() == [
        "singular\tikhambi ngumuthi", "plural\tamakhambi yimithi", "all_plural\twonke amakhambi ngumuthi"]


def test_list_variants_course_taught_by(lex):
    text = list_variants(parse_axioms("sub(isifundo, some(taughtBy, uSolwazi))")[0], lex, capitalize=True)
    sentences = [line.split("\t")[1] for line in text.splitlines()]
    assert "Sonke isifundo sifundiswa nguSolwazi oyedwa" in sentences
    assert "Zonke izifundo zifundiswa nguSolwazi oyedwa" in sentences


def test_list_variants_disjointness(lex):
    text = list_variants(parse_axioms("disjoint(ihebhivo, ikhanivo)")[0], lex, capitalize=True)
    rows = dict(line.split("\t") for line in text.splitlines())
    assert rows["singular_concordial"] == "Ihebhivo alilona ikhanivo"
    assert rows["plural_concordial"] == "Amahebhivo awalona ikhanivo"


def test_output_is_deterministic(tmp_path, lexicon_path):
    text = "sub(ikhambi, umuthi)\nand(ibhotela, ubisi)\nsub(indlulamithi, some(eats, ihlamvana))\n"
    first = _run(tmp_path, lexicon_path, text)
    assert first == _run(tmp_path, lexicon_path, text)
    assert len(first[1].splitlines()) == 3


def test_stdin(lexicon_path):
    stdin = io.StringIO("sub(indlulamithi, isilwane)\n")
    out, err = io.StringIO(), io.StringIO()
    assert run(RunConfig(lexicon_path=lexicon_path), out, err, stdin) == 0
    assert out.getvalue() == "indlulamithi yisilwane\n"


def test_main_entry_point(tmp_path, lexicon_path, capsys):
    path = tmp_path / "a.txt"
    path.write_text("or(ikhambi, umuthi)\n", encoding="utf-8")
    assert main(["--lexicon", str(lexicon_path), "--axioms", str(path), "--set", "or_style=noma"]) == 0
    assert capsys.readouterr().out == "ikhambi noma umuthi\n"


def test_module_invocation(tmp_path, lexicon_path):
    proc = subprocess.run([sys.executable, "-m", "zuluverb", "--lexicon", str(lexicon_path), "--axioms", "-",
                           "--set", "capitalize=true"],
                          input="and(ibhotela, ubisi)\n", capture_output=True, text=True, check=False)
    assert (proc.returncode, proc.stdout) == (0, "Ibhotela nobisi\n")
