import json

import pytest

from codes import load_code
from main import run_command


def write(path, text):
    path.write_text(text, encoding="utf-8")
    return str(path)


@pytest.fixture
def ternary_file(tmp_path):
    return write(tmp_path / "ternary.code", "q=3 n=3 name=пример\n000\n111\n122\n212\n221\n")


def test_sphere_bound(capsys):
    assert run_command(["bound", "sphere", "--q", "3", "--n", "8"]) == 0
    assert capsys.readouterr().out.strip() == "729"


def test_missing_parameter_is_usage_error(capsys):
    assert run_command(["bound", "sphere", "--q", "3"]) == 2
    assert "--n" in capsys.readouterr().err


def test_unknown_subcommand_exits_with_usage():
    with pytest.raises(SystemExit) as info:
        run_command(["transmogrify"])
    assert info.value.code == 2


def test_bad_log_level(capsys):
    assert run_command(["bound", "sphere", "--q", "3", "--n", "8", "--log-level", "LOUD"]) == 2
    assert "LOUD" in capsys.readouterr().err


def test_construct_cr_over_z3_z3(capsys):
    assert run_command(["construct", "cr", "--group", "3x3"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].startswith("asymcodes-code format=1 q=2 n=8")
    assert len(lines) == 1 + 32


def test_construct_vt_then_verify(tmp_path, capsys):
    out = str(tmp_path / "vt7.code")
    assert run_command(["construct", "vt", "--n", "7", "--out", out]) == 0
    assert len(load_code(out)) == 16
    capsys.readouterr()
    assert run_command(["verify", "--in", out, "--t", "1"]) == 0
    assert "✅" in capsys.readouterr().out
    assert run_command(["verify", "--in", out, "--t", "2"]) == 1
    assert "❌" in capsys.readouterr().out


def test_verify_limited_magnitude(tmp_path, capsys):
    path = write(tmp_path / "diag.code", "q=5 n=2\n00\n11\n22\n33\n44\n")
    assert run_command(["verify", "--in", path, "--model", "limited", "--t", "1", "--wrap"]) == 0
    assert "с переносом" in capsys.readouterr().out


def test_construct_ternary(ternary_file, capsys):
    assert run_command(["construct", "ternary", "--in", ternary_file]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert "n=6" in lines[0]
    assert len(lines) == 1 + 12


def test_construct_ternary_rejects_bad_input(tmp_path, capsys):
    path = write(tmp_path / "bad.code", "q=3 n=3\n000\n001\n")
    assert run_command(["construct", "ternary", "--in", path]) == 2
    assert "ошибка" in capsys.readouterr().err


def test_construct_concat_from_matrix_file(tmp_path, capsys):
    matrix = write(tmp_path / "outer.txt", "# повторение\n3 1 3 generator\n1 1 1\n")
    out = str(tmp_path / "c53.code")
    assert run_command(["construct", "concat", "--matrix", matrix, "--shorten", "--out", out]) == 0
    code = load_code(out)
    assert code.length == 5 and len(code) == 27


def test_large_linear_code_prints_generator(capsys):
    assert run_command(["construct", "linear", "--q", "5", "--n", "20"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].startswith("[20,18]_5")
    assert lines[1] == "5 18 20 generator"


def test_lee_matrix(capsys):
    assert run_command(["construct", "lee", "--q", "5", "--r", "2", "--example-columns"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines == ["5 2 10 parity", "1 1 1 1 1 2 2 2 2 2", "0 1 2 3 4 0 1 2 3 4"]


def test_linear_code_is_perfect(tmp_path, capsys):
    out = str(tmp_path / "c86.code")
    assert run_command(["construct", "linear", "--q", "3", "--n", "8", "--out", out]) == 0
    assert run_command(["bound", "perfect", "--in", out]) == 0
    assert "✅" in capsys.readouterr().out


def test_double_construction(tmp_path, capsys):
    matrix = write(tmp_path / "outer.txt", "3 1 3 generator\n1 1 1\n")
    inner = str(tmp_path / "c53.code")
    run_command(["construct", "concat", "--matrix", matrix, "--shorten", "--out", inner])
    report_path = tmp_path / "double.json"
    assert run_command(["construct", "double", "--in", inner, "--json", str(report_path)]) == 0
    report = json.loads(report_path.read_text(encoding="utf-8"))
    assert report["results"]["t"] == 3
    assert report["flags"]["verified"] is True


def test_search_cyclic_writes_metadata(capsys):
    assert run_command(["search", "cyclic", "--m", "3"]) == 0
    out = capsys.readouterr().out
    assert "% score=12" in out
    assert "% proven_optimal=true" in out


def test_search_extended_outputs_mixed_code(capsys):
    assert run_command(["search", "extended", "--m", "3"]) == 0
    header = capsys.readouterr().out.splitlines()[0]
    assert "q=2,3,3,3" in header and "n=4" in header


def test_decode_on_t_channel(ternary_file, capsys):
    assert run_command(["decode", "--code", ternary_file, "--received", "021", "--channel", "T"]) == 0
    assert capsys.readouterr().out.strip() == "221"


def test_decode_ambiguous(tmp_path, capsys):
    path = write(tmp_path / "four.code", "q=2 n=4\n0000\n1100\n0011\n1111\n")
    assert run_command(["decode", "--code", path, "--received", "0000", "--t", "2"]) == 1
    assert "ambiguous" in capsys.readouterr().out


def test_simulate_without_errors(ternary_file, capsys):
    assert run_command(["simulate", "--code", ternary_file, "--p", "0", "--trials", "50",
                        "--channel", "T", "--seed", "2"]) == 0
    out = capsys.readouterr().out
    assert "failures: 0" in out and "seed: 2" in out


def test_vt_linear_comparison(capsys):
    assert run_command(["bound", "vt-linear", "--q", "3", "--r", "2"]) == 0
    out = capsys.readouterr().out
    assert "linear: [8,6]_3" in out
    assert "linear_perfect: True" in out


def test_nonbinary_table(capsys):
    assert run_command(["tables", "nonbinary", "--q", "3", "--max-n", "8"]) == 0
    rows = [line.split() for line in capsys.readouterr().out.splitlines()[1:]]
    assert ["8", "6", "5"] in rows


def test_table1(capsys):
    assert run_command(["tables", "table1", "--max-m", "5"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 1 + 3
    assert lines[1].split()[0] == "6"


def test_info(ternary_file, capsys):
    assert run_command(["info", "--in", ternary_file]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "name: пример"
    assert "size: 5" in lines
    assert "min_asym_distance: 1" in lines


def test_default_report_location(tmp_path, monkeypatch, capsys):
    monkeypatch.setattr("config.Config.REPORTS_DIR", str(tmp_path))
    assert run_command(["bound", "sphere", "--q", "3", "--n", "8", "--json"]) == 0
    report = json.loads((tmp_path / "bound_sphere.json").read_text(encoding="utf-8"))
    assert report["command"] == "bound sphere"
    assert report["results"] == {"sphere_bound": 729}
    assert report["parameters"]["q"] == 3


def test_non_perfect_code(tmp_path, capsys):
    path = write(tmp_path / "pair.code", "q=5 n=2\n00\n22\n")
    assert run_command(["bound", "perfect", "--in", path]) == 1
    assert "❌" in capsys.readouterr().out


def test_hamming_matrix_status(capsys):
    assert run_command(["construct", "hamming", "--q", "3", "--r", "2"]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "3 2 4 parity"
    # при q=2 столбец совпадает со своим противоположным
    assert run_command(["construct", "hamming", "--q", "2", "--r", "2"]) == 1
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].startswith("❌")
    assert lines[1] == "2 2 3 parity"


def test_table2(capsys):
    assert run_command(["tables", "table2"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 1 + 11
    assert lines[1].split()[:3] == ["6", "10", "12"]
    assert not any(line.endswith("!") for line in lines)


@pytest.mark.slow
def test_verify_generators(capsys):
    assert run_command(["tables", "verify-generators"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 10
    assert all(line.startswith("✅") for line in lines)


def test_unexpected_error_is_reported_with_status_two(ternary_file, monkeypatch, capsys):
    def broken(self, args):
        raise RuntimeError("сбой")

    monkeypatch.setattr("dispatcher.CommandDispatcher.info", broken)
    assert run_command(["info", "--in", ternary_file]) == 2
    assert "RuntimeError: сбой" in capsys.readouterr().err
