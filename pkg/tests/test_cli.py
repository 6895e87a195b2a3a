import json
from pathlib import Path

import pytest

from qrac_lab.cli.main import main
from qrac_lab.constants import ExitCodes
from qrac_lab.documents import dfa_to_document, qfa_to_document
from qrac_lab.qfa import dfa_Ln
from qrac_lab.utils.ios import write_file

GOLDEN = Path(__file__).parent / "golden"


def invoke(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def summary_value(out: str, key: str) -> str:
    for line in out.splitlines():
        if line.startswith(f"{key}: "):
            return line[len(key) + 2:]
    raise KeyError(key)


def test_qrac_table_matches_golden(capsys):
    code, out, _ = invoke(capsys, "qrac", "2to1", "--table")
    assert code == ExitCodes.SUCCESS
    assert out == (GOLDEN / "qrac_2to1_table.txt").read_text(encoding="utf-8")


def test_qrac_3to1_summary(capsys):
    code, out, _ = invoke(capsys, "qrac", "3to1")
    assert code == ExitCodes.SUCCESS
    assert summary_value(out, "min_success") == "0.7886751"


def test_qrac_amplified_tensor_power(capsys):
    code, out, _ = invoke(capsys, "qrac", "2to1", "--amplify", "3", "--tensor", "2")
    assert code == ExitCodes.SUCCESS
    assert summary_value(out, "scheme") == "maj3(2to1)^2"
    assert summary_value(out, "m") == "4"
    assert summary_value(out, "n") == "6"


def test_qrac_extraction(capsys):
    code, out, _ = invoke(capsys, "qrac", "2to1", "--extract", "01")
    assert code == ExitCodes.SUCCESS
    assert summary_value(out, "x") == "01"
    assert float(summary_value(out, "failure")) == pytest.approx(1 - 0.8535534 / 2, abs=1e-6)


def test_qrac_export_round_trips_through_the_cli(capsys, tmp_path):
    path = tmp_path / "scheme.json"
    code, first, _ = invoke(capsys, "qrac", "3to1", "--export", str(path))
    assert code == ExitCodes.SUCCESS
    code, second, _ = invoke(capsys, "qrac", str(path))
    assert code == ExitCodes.SUCCESS
    assert summary_value(second, "min_success") == summary_value(first, "min_success")


def test_even_copies_are_infeasible(capsys):
    code, out, err = invoke(capsys, "qrac", "2to1", "--amplify", "2")
    assert code == ExitCodes.INFEASIBLE_PARAMETERS
    assert out == ""
    assert err.startswith("error: infeasible parameters:")


def test_crac_lower_bound(capsys):
    code, out, _ = invoke(capsys, "crac", "lower-bound", "100", "0.85")
    assert code == ExitCodes.SUCCESS
    assert out.startswith("# classical lower bound\n")
    assert float(summary_value(out, "min_n")) == pytest.approx(39.01597, abs=1e-5)


def test_crac_two_into_one(capsys):
    code, out, _ = invoke(capsys, "crac", "two-into-one", "--denominator", "4")
    assert code == ExitCodes.SUCCESS
    assert summary_value(out, "optimum") == "0.5000000"
    assert summary_value(out, "witness_p0") == "0.5000000; 0.5000000"


def test_crac_build_is_reproducible(capsys):
    argv = ["crac", "build", "6", "0.6", "--seed", "7"]
    code, first, _ = invoke(capsys, *argv)
    assert code == ExitCodes.SUCCESS
    _, second, _ = invoke(capsys, *argv)
    assert first == second
    assert summary_value(first, "seed") == "7"
    assert float(summary_value(first, "min_success")) >= 0.6


def test_crac_build_json(capsys):
    code, out, _ = invoke(capsys, "crac", "build", "6", "0.6", "--seed", "7", "--format", "json")
    assert code == ExitCodes.SUCCESS
    document = json.loads(out)
    assert document["title"] == "crac build m=6 p=0.6"
    assert document["summary"]["m"] == 6
    assert document["summary"]["min_success"] >= 0.6
    assert document["rows"] == []


def test_crac_build_export(capsys, tmp_path):
    path = tmp_path / "build.json"
    code, _, _ = invoke(capsys, "crac", "build", "6", "0.6", "--seed", "7", "--export", str(path))
    assert code == ExitCodes.SUCCESS
    document = json.loads(path.read_text(encoding="utf-8"))
    assert document["family"]["m"] == 6
    assert document["code"]["radius"] == 1


def test_crac_covering_csv(capsys):
    code, out, _ = invoke(capsys, "crac", "covering", "3", "1", "--format", "csv")
    assert code == ExitCodes.SUCCESS
    lines = out.split("\r\n")
    assert lines[0] == "codeword"
    assert lines[-1] == ""
    assert len(lines) - 2 >= 2


def test_qfa_sizes(capsys):
    code, out, _ = invoke(capsys, "qfa", "sizes", "5")
    assert code == ExitCodes.SUCCESS
    assert summary_value(out, "dfa_formula") == "13"
    rows = {line.split()[0]: line.split()[1:] for line in out.splitlines()[4:]}
    assert rows["dfa_L5"] == ["13", "4"]
    assert rows["rfa_L5"] == ["638", "10"]


@pytest.mark.parametrize("automaton", ["ln:2", "rfa:2", "dfa:2"])
@pytest.mark.parametrize("word, accepted", [("ba", True), ("ab", False), ("bbba", False)])
def test_qfa_run(capsys, automaton, word, accepted):
    code, out, _ = invoke(capsys, "qfa", "run", automaton, word)
    assert code == ExitCodes.SUCCESS
    assert summary_value(out, "p_accept") == ("1.0000000" if accepted else "0.0000000")


def test_qfa_restrict(capsys, tmp_path):
    path = tmp_path / "restricted.json"
    code, out, _ = invoke(capsys, "qfa", "restrict", "rfa:1", "1", "--export", str(path))
    assert code == ExitCodes.SUCCESS
    assert summary_value(out, "state_count_ok") == "true"
    assert summary_value(out, "halted_within_r") == "0.0000000"
    assert summary_value(out, "max_accept_difference") == "0.0000000"
    restricted = json.loads(path.read_text(encoding="utf-8"))
    assert len(restricted["states"]) == int(summary_value(out, "restricted_states"))


@pytest.mark.parametrize("r", ["0", "1"])
def test_restricted_dfa_accepts_its_language(capsys, tmp_path, r):
    path = tmp_path / "restricted.json"
    code, out, _ = invoke(capsys, "qfa", "restrict", "dfa:2", r, "--export", str(path))
    assert code == ExitCodes.SUCCESS
    assert summary_value(out, "horizon") == "4"
    assert summary_value(out, "max_language_difference") == "0.0000000"
    code, out, _ = invoke(capsys, "qfa", "run", str(path), "bba")
    assert code == ExitCodes.SUCCESS
    assert summary_value(out, "p_accept") == "1.0000000"


def test_dfa_file_needs_a_horizon_to_restrict(capsys, tmp_path):
    path = tmp_path / "dfa.json"
    write_file(dfa_to_document(dfa_Ln(2)), str(path))
    code, out, err = invoke(capsys, "qfa", "restrict", str(path), "0")
    assert code == ExitCodes.INFEASIBLE_PARAMETERS
    assert out == ""
    assert "--horizon" in err
    code, out, _ = invoke(capsys, "qfa", "restrict", str(path), "0", "--horizon", "3")
    assert code == ExitCodes.SUCCESS
    assert summary_value(out, "max_language_difference") == "0.0000000"


def test_qfa_serial_with_noise(capsys):
    code, out, _ = invoke(capsys, "qfa", "serial", "rfa:3", "3", "--noise", "0.4")
    assert code == ExitCodes.SUCCESS
    assert summary_value(out, "min_success") == summary_value(out, "expected_min")


def test_unrestricted_automaton_fails_verification(capsys, tmp_path, toy_qfa):
    path = tmp_path / "toy.json"
    write_file(qfa_to_document(toy_qfa), str(path))
    code, out, err = invoke(capsys, "qfa", "serial", str(path), "2")
    assert code == ExitCodes.VERIFICATION_FAILED
    assert out == ""
    assert err.startswith("error: verification failed:")


def test_malformed_automaton_document(capsys, tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{\"states\": [", encoding="utf-8")
    code, _, err = invoke(capsys, "qfa", "run", str(path), "a")
    assert code == ExitCodes.INPUT_FORMAT
    assert "malformed input" in err


def test_unknown_automaton(capsys, tmp_path):
    code, _, _ = invoke(capsys, "qfa", "run", str(tmp_path / "missing.json"), "a")
    assert code == ExitCodes.INPUT_FORMAT


def test_bounds_report(capsys):
    code, out, _ = invoke(capsys, "bounds", "report", "100", "1", "0.85")
    assert code == ExitCodes.SUCCESS
    assert summary_value(out, "copies") == "55"
    assert summary_value(out, "implied_min_n") == "1"
    assert summary_value(out, "status") == "FEASIBLE"


def test_bounds_report_rejects_vacuous_p(capsys):
    code, _, _ = invoke(capsys, "bounds", "serial-report", "100", "1", "0.5")
    assert code == ExitCodes.INFEASIBLE_PARAMETERS


def test_bounds_sweep_csv(capsys):
    code, out, _ = invoke(capsys, "bounds", "sweep", "0.85", "100", "10", "--format", "csv")
    assert code == ExitCodes.SUCCESS
    lines = out.split("\r\n")
    assert lines[0] == "m,epsilon,copies,chain_min_n,implied_min_n"
    assert lines[1].startswith("10,")
    assert lines[2].startswith("100,0.0000016,55,")


def test_bounds_holevo(capsys):
    code, out, _ = invoke(capsys, "bounds", "holevo", "2to1")
    assert code == ExitCodes.SUCCESS
    assert summary_value(out, "chi") == "1.0000000"
    assert float(summary_value(out, "information_sum")) == pytest.approx(2 * 0.3991240, abs=1e-6)


def test_output_file(capsys, tmp_path):
    path = tmp_path / "table.txt"
    code, out, _ = invoke(capsys, "qrac", "2to1", "--table", "--output", str(path))
    assert code == ExitCodes.SUCCESS
    assert out == ""
    assert path.read_text(encoding="utf-8") == (GOLDEN / "qrac_2to1_table.txt").read_text(encoding="utf-8")


def golden(name: str) -> str:
    return (GOLDEN / name).read_bytes().decode("utf-8")


@pytest.mark.parametrize("argv, name", [
    (["crac", "lower-bound", "100", "0.85"], "crac_lower_bound.txt"),
    (["crac", "two-into-one", "--denominator", "4"], "crac_two_into_one.txt"),
    (["crac", "two-into-one", "--denominator", "4", "--format", "json"], "crac_two_into_one.json"),
    (["crac", "build", "3", "0.9", "--seed", "7"], "crac_build_identity.txt"),
    (["crac", "covering", "3", "1"], "crac_covering.txt"),
    (["crac", "covering", "3", "1", "--format", "csv"], "crac_covering.csv"),
    (["qfa", "sizes", "3"], "qfa_sizes.txt"),
    (["qfa", "run", "ln:2", "ba"], "qfa_run.txt"),
    (["qfa", "restrict", "rfa:1", "1"], "qfa_restrict.txt"),
    (["qfa", "serial", "rfa:2", "2"], "qfa_serial.txt"),
    (["bounds", "report", "100", "1", "0.85"], "bounds_report.txt"),
    (["bounds", "sweep", "0.85", "20", "100", "1000", "--format", "csv"], "bounds_sweep.csv"),
    (["bounds", "holevo", "2to1"], "bounds_holevo.txt"),
], ids=lambda value: value if isinstance(value, str) else None)
def test_output_matches_golden(capsys, argv, name):
    code, out, _ = invoke(capsys, *argv)
    assert code == ExitCodes.SUCCESS
    assert out == golden(name)
