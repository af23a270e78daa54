"""Command-line surface: subcommands, exit codes, output files."""

import pytest

from abcover import encode_graph6, h_graph
from abcover.cli import main

H63_G6 = encode_graph6(h_graph(6, 3))


def test_check_covered_pass_and_fail(capsys):
    assert main(["check-covered", "--a", "1", "--b", "1", "--graph6", "Cl"]) == 0
    assert "covered" in capsys.readouterr().out
    assert main(["check-covered", "--a", "1", "--b", "1",
                 "--graph6", H63_G6]) == 1
    out = capsys.readouterr().out
    assert "not-covered" in out and "theta=0" in out


def test_check_covered_definitional_engine(capsys):
    assert main(["check-covered", "--a", "1", "--b", "1",
                 "--engine", "definitional", "--graph6", H63_G6]) == 1
    assert "edge=" in capsys.readouterr().out


def test_check_covered_file_input(tmp_path, capsys):
    path = tmp_path / "in.g6"
    path.write_text(f"Cl\n{H63_G6}\n")
    assert main(["check-covered", "--a", "1", "--b", "1",
                 "--file", str(path)]) == 1
    out = capsys.readouterr().out
    assert out.count("\n") == 2


def test_check_factor(capsys):
    assert main(["check-factor", "--a", "1", "--b", "1", "--graph6", "C~"]) == 0
    assert main(["check-factor", "--a", "1", "--b", "1", "--graph6", "Bw"]) == 1
    assert "deficiency=" in capsys.readouterr().out


def test_rho(capsys):
    assert main(["rho", "--H", "6", "3"]) == 0
    out = capsys.readouterr().out
    assert "rho: 4.201472338" in out
    assert main(["rho", "--graph6", "C~"]) == 0
    assert "rho: 3.000000000" in capsys.readouterr().out


def test_enumerate(tmp_path, capsys):
    out = tmp_path / "n4.g6"
    assert main(["enumerate", "--n", "4", "--out", str(out)]) == 0
    assert len(out.read_text().splitlines()) == 11
    dense = tmp_path / "dense.g6"
    assert main(["enumerate", "--n", "7", "--complement-budget", "0",
                 "--out", str(dense)]) == 0
    assert dense.read_text().splitlines() == ["F~~~w"]


def test_verify_writes_report(tmp_path, capsys):
    report = tmp_path / "report.txt"
    code = main(["verify", "--theorem", "hao-li-size", "--n", "4",
                 "--a", "1", "--b", "2", "--report", str(report)])
    assert code == 0
    text = report.read_text()
    assert "status: pass" in text and "extremal_value: 3" in text
    assert "pass" in capsys.readouterr().out


def test_suite_command(tmp_path, capsys):
    report = tmp_path / "suites.txt"
    code = main(["suite", "--names", "lemma21,lemma22", "--n", "4",
                 "--report", str(report)])
    assert code == 0
    assert report.read_text().count("status: pass") == 2


def test_usage_errors():
    assert main(["check-covered", "--a", "0", "--b", "1", "--graph6", "C~"]) == 2
    assert main(["check-covered", "--a", "1", "--b", "1", "--graph6", "C~~"]) == 2
    assert main(["verify", "--theorem", "main0", "--n", "5", "--a", "1",
                 "--b", "1", "--report", "/dev/null"]) == 2  # parity
    assert main(["suite", "--names", "nope", "--n", "4"]) == 2
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2


def test_resource_errors():
    assert main(["enumerate", "--n", "9", "--out", "/dev/null"]) == 3
    assert main(["check-covered", "--a", "1", "--b", "1",
                 "--graph6", encode_graph6(h_graph(17, 3))]) == 3
