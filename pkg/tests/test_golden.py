"""Pinned certificate and reduction outputs: stable, diffable text."""

from pathlib import Path

from varsolve.cli import main

FIXTURES = Path(__file__).parent / "fixtures"


def capture(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_subsetsum_certificate_golden(capsys):
    code, out = capture(capsys, "subsetsum", str(FIXTURES / "ss1.txt"),
                        "--certificate")
    assert code == 0
    assert out == "YES\n3 2\n5 1\n"


def test_dump_ilp_golden(capsys):
    code, out = capture(capsys, "subsetsum", str(FIXTURES / "ss1.txt"),
                        "--dump-ilp")
    assert out == ("0 <= x1 <= 2\n"
                   "0 <= x2 <= 1\n"
                   "3*x1 + 5*x2 = 11\n"
                   "YES\n")


def test_ewmm_certificate_golden(capsys):
    code, out = capture(capsys, "ewmm", str(FIXTURES / "loop_ewmm.txt"),
                        "--certificate")
    assert out == ("YES\n"
                   "base:\n"
                   "loop q 5:\n"
                   "q a -> t0 b\n"
                   "t0 _ -> q _\n")


def test_gwmm_trace_golden(capsys):
    code, out = capture(capsys, "gwmm", str(FIXTURES / "ident_gwmm.txt"),
                        "--certificate")
    assert out == ("YES\n"
                   "q a -> q a\n"
                   "q a -> q a\n"
                   "q b -> q b\n")


def test_reduction_output_is_reproducible(capsys):
    first = capture(capsys, "reduce-splits", str(FIXTURES / "fig2.txt"))
    second = capture(capsys, "reduce-splits", str(FIXTURES / "fig2.txt"))
    assert first == second
    code, out = first
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "states: 0 1 2 3 4 5 over"
    assert lines[1] == "start: 0"
    assert lines[2] == "input: 1 2 4"
    assert lines[3] == "output: 1 2 3 4 5"
    assert "word: 4 1 2 1 1 1 4" in lines
    assert lines[-4:] == ["1 1", "3 3", "4 1", "5 2"]


def test_num3dm_cover_golden(capsys):
    code, out = capture(capsys, "num3dm", str(FIXTURES / "n3dm1.txt"),
                        "--certificate")
    assert code == 0
    assert out == "YES\n1 2 3 1\n2 1 3 1\n"
