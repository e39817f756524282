import json
import subprocess
import sys

import pytest

from strawcat import validate
from strawcat.cli import (ElaborationError, ParseError, elaborate, main, parse,
                          presentation_of, print_presentation)
from strawcat.corpus import corpus


def test_print_parse_roundtrip_on_corpus(tables):
    for name, A in tables.items():
        text = print_presentation(presentation_of(A))
        p = parse(text, A.name)
        assert print_presentation(p) == text, name
        B = elaborate(p)
        assert validate(B).ok


def test_print_parse_idempotent(tables):
    text = print_presentation(presentation_of(tables["quintet"]))
    once = print_presentation(parse(text, "quintet"))
    twice = print_presentation(parse(once, "quintet"))
    assert once == twice == text


def test_corpus_files_match_builders(tables, corpus_dir):
    for name, A in tables.items():
        on_disk = (corpus_dir / f"{name}.pdc").read_text()
        assert on_disk == print_presentation(presentation_of(A)), name


def test_syntax_error_reports_position():
    with pytest.raises(ParseError) as e:
        parse("OBJECTS\n  a\nVMORS\n  ida : frobnicate\n")
    assert e.value.line == 4


def test_declaration_before_section():
    with pytest.raises(ParseError):
        parse("  a\nOBJECTS\n")


def test_duplicate_name_rejected():
    with pytest.raises(ParseError):
        parse("OBJECTS\n  a\n  a\n")


def test_undeclared_name_diagnostic(tables):
    text = print_presentation(presentation_of(tables["terminal"]))
    broken = text.replace("cpt : hpt => hpt", "cpt : ghost => hpt")
    with pytest.raises(ElaborationError) as e:
        elaborate(parse(broken, "terminal"))
    assert "ghost" in str(e.value)


def test_missing_assoc_row_names_triple(tables):
    text = print_presentation(presentation_of(tables["nonstrict"]))
    lines = [l for l in text.splitlines() if l.strip() != "e j j = t t"]
    with pytest.raises(ElaborationError) as e:
        elaborate(parse("\n".join(lines), "nonstrict"))
    msg = str(e.value)
    assert "assoc.total" in msg and "e" in msg and "j" in msg


def test_allow_invalid_defers_to_validator(tables):
    text = print_presentation(presentation_of(tables["nonstrict"]))
    # swap one unitor to the identity: coherent no more
    broken = text.replace("l e = t t", "l e = ce ce")
    with pytest.raises(ElaborationError):
        elaborate(parse(broken, "nonstrict"))
    A = elaborate(parse(broken, "nonstrict"), allow_invalid=True)
    rep = validate(A)
    assert not rep.ok
    assert {f.check for f in rep.failures()} & {"triangle", "lunit.natural"}


def run_cli(*argv):
    from io import StringIO
    import contextlib
    buf = StringIO()
    with contextlib.redirect_stdout(buf):
        code = main(list(argv))
    return code, buf.getvalue()


def test_cli_validate_exit_status(corpus_dir):
    code, out = run_cli("validate", str(corpus_dir / "terminal.pdc"))
    doc = json.loads(out)
    assert code == 0 and doc["pass"] is True
    assert doc["schema"] == 1
    assert doc["inputs"][0]["sha256"]


def test_cli_reports_are_deterministic(corpus_dir):
    a = run_cli("validate", str(corpus_dir / "nonstrict.pdc"))
    b = run_cli("validate", str(corpus_dir / "nonstrict.pdc"))
    assert a == b


def test_cli_strictify(corpus_dir):
    code, out = run_cli("strictify", str(corpus_dir / "nonstrict.pdc"), "--bound", "3")
    doc = json.loads(out)
    assert code == 0 and doc["pass"]
    assert doc["params"]["hcomp_bracketing"] == "left-nested"


def test_cli_universal_property(corpus_dir):
    code, out = run_cli("universal-property", str(corpus_dir / "nonstrict.pdc"),
                        str(corpus_dir / "sigmaM.pdc"), "--bound", "2")
    doc = json.loads(out)
    assert code == 0 and doc["pass"]
    assert doc["params"]["objects_each_side"] == 2


def test_cli_hom(corpus_dir):
    code, out = run_cli("hom", str(corpus_dir / "quintet.pdc"),
                        str(corpus_dir / "sigmaM.pdc"))
    doc = json.loads(out)
    assert code == 0 and doc["pass"]
    assert doc["params"]["functors"] >= 1


def test_cli_envelope_small():
    code, out = run_cli("envelope", "--multicat", "z2", "--arity-cap", "3")
    doc = json.loads(out)
    assert code == 0 and doc["pass"]


def test_cli_adjunction_builtin():
    code, out = run_cli("adjunction-check")
    doc = json.loads(out)
    assert code == 0 and doc["pass"]


def test_cli_interchange(corpus_dir):
    code, out = run_cli("interchange", str(corpus_dir / "nonstrict.pdc"),
                        "--n", "1", "--m", "1")
    doc = json.loads(out)
    assert code == 0 and doc["pass"]


def test_cli_biequivalence(corpus_dir):
    code, out = run_cli("biequivalence-check", str(corpus_dir / "nonstrict.pdc"),
                        str(corpus_dir / "sigma2.pdc"), "--bound", "2")
    doc = json.loads(out)
    assert code == 0 and doc["pass"]


def test_cli_out_flag(tmp_path, corpus_dir):
    dest = tmp_path / "report.json"
    code, out = run_cli("--out", str(dest), "validate", str(corpus_dir / "unit.pdc"))
    assert code == 0 and out == ""
    assert json.loads(dest.read_text())["pass"]


def test_cli_invalid_input_fails(tmp_path, corpus_dir):
    bad = (corpus_dir / "nonstrict.pdc").read_text().replace("l e = t t", "l e = ce ce")
    path = tmp_path / "bad.pdc"
    path.write_text(bad)
    code, out = run_cli("validate", str(path))
    doc = json.loads(out)
    assert code == 1 and doc["pass"] is False
