from fractions import Fraction
from pathlib import Path

import pytest

from quivertrop import fixtures as fx
from quivertrop.cli import main
from quivertrop.errors import NonAdmissible, ParseError
from quivertrop.io import HEADER, Document, document_for, dump, parse

DATA = Path(__file__).resolve().parent.parent / "demos" / "data"


def test_round_trip_of_fixture_representation():
    doc = document_for(fx.kronecker3_representation())
    doc.weights = [(1, -1)]
    again = parse(dump(doc))
    assert dump(again) == dump(doc)
    assert again.representation().dims == (3, 3)


def test_round_trip_with_relations_and_rationals():
    text = "\n".join([HEADER, "vertices 3", "arrow a 1 2", "arrow b 2 3", "arrow c 1 3",
                      "relation 1 a*b -2/3 c", "field Q", "dims 1 1 1", "matrix a", "1/2", "weight 1 0 -1"])
    with pytest.raises(NonAdmissible):
        parse(text).algebra()  # a length-one path inside a relation
    ok = text.replace("relation 1 a*b -2/3 c", "relation a*b")
    doc = parse(ok)
    assert doc.matrices["a"] == [[Fraction(1, 2)]]
    assert parse(dump(doc)).weights == [(1, 0, -1)]


@pytest.mark.parametrize("text,line,column", [
    ("quivertrop 2\n", 1, 1),
    (f"{HEADER}\nvertices 2\narrow a 1 3\n", 3, 11),
    (f"{HEADER}\nvertices 2\narrow a 1 2\ndims 1 x\n", 4, 8),
    (f"{HEADER}\nvertices 2\narrow a 1 2\ndims 1 1\nmatrix a\n1 2\n", 6, 1),
    (f"{HEADER}\nvertices 2\nfoo 1\n", 3, 1),
    (f"{HEADER}\nvertices 2\narrow a 1 2\nrelation 1 a*z\n", 4, 12),
])
def test_parse_errors_carry_position(text, line, column):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert (info.value.line, info.value.column) == (line, column)


def test_zero_representation_newton_is_a_point(tmp_path, capsys):
    f = tmp_path / "zero.qt"
    f.write_text(dump(Document(quiver=fx.A3, dims=(0, 0, 0))))
    assert main(["newton", str(f)]) == 0
    out = capsys.readouterr().out
    assert "vertices 1\n0 0 0\n" in out


def test_identical_jobs_give_identical_files(tmp_path):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    for out in (a, b):
        assert main(["hom-e", str(DATA / "kronecker3.qt"), "--seed", "4", "-o", str(out)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert "rngSeed=4" in a.read_text() and "samples=5 coeffBound=100" in a.read_text()


def test_seed_is_mandatory_for_sampling():
    with pytest.raises(SystemExit) as info:
        main(["hom-e", str(DATA / "kronecker3.qt")])
    assert info.value.code == 2


def test_exit_codes(tmp_path, capsys):
    assert main(["check-example", "kronecker3", "--seed", "0"]) == 0
    bad = tmp_path / "bad.qt"
    bad.write_text("nonsense\n")
    assert main(["newton", str(bad)]) == 2
    assert "ParseError" in capsys.readouterr().err
    assert main(["newton", str(DATA / "ab0.qt"), "--budget", "10"]) == 3
    assert "BudgetExceeded" in capsys.readouterr().err
    assert main(["newton", str(tmp_path / "missing.qt")]) == 2


def test_failed_check_exits_one(monkeypatch):
    from quivertrop import checks
    failing = checks.CheckReport("kronecker3")
    failing.record(False, "forced")
    monkeypatch.setitem(checks.CHECKS, "kronecker3", lambda **kw: failing)
    assert main(["check-example", "kronecker3", "--seed", "0"]) == 1


@pytest.mark.parametrize("argv,needle", [
    (["fpoly", "kronecker3.qt"], "f(1,-1) = 0"),
    (["generic-newton", "twoone.qt"], "vertices 6"),
    (["generic-newton", "twoone.qt", "--route", "cluster", "--seed", "0", "--max-depth", "5"], "vertices 6"),
    (["generic-newton", "qp4.qt", "--seed", "0"], "vertices 8"),
    (["fan", "ab0.qt"], "cones 9"),
    (["edges", "twoone.qt", "--generic"], "maximal paths 6"),
    (["schur-seq", "twoone.qt"], "bijective True"),
    (["cluster-search", "twoone.qt", "--max-depth", "2"], "clusters 9"),
    (["exchange-quiver", "ab0.qt", "--rigid-box", "1", "--seed", "0", "--samples", "2"], "nodes 18 arrows 27"),
    (["pairing", "a2_pairing.qt", "--coefficients", "1,0", "--seed", "0"], "agree"),
])
def test_subcommands(argv, needle, capsys):
    argv = [argv[0], str(DATA / argv[1]), *argv[2:]]
    assert main(argv) == 0
    assert needle in capsys.readouterr().out
