import csv
import json
import math

import pytest
from click.testing import CliRunner
from scipy import constants as codata

from susyrad.cli import main

CONFIG_TEXT = """\
format_version = 1

[defect]
dimension = 3
l = 0
delta = 0.4
shift = 1

[defect]
dimension = 3
l = 1
delta = 0.05
shift = 0

[anharmonic]
dimension = 2
L = 0
Delta = 0.1
shift = 1

[trap]
B_tesla = 5.0
V_volt = -12.0
d_meter = 0.01
species = electron
"""


@pytest.fixture()
def runner():
    return CliRunner()


@pytest.fixture()
def config_path(tmp_path):
    path = tmp_path / "models.cfg"
    path.write_text(CONFIG_TEXT, encoding="utf-8")
    return str(path)


def _csv_rows(text):
    lines = [line for line in text.splitlines() if line and not line.startswith("#")]
    reader = csv.DictReader(lines)
    return list(reader)


def _comments(text):
    return [line for line in text.splitlines() if line.startswith("#")]


class TestSpectrum:
    def test_default_hydrogen_table(self, runner):
        result = runner.invoke(main, ["spectrum"])
        assert result.exit_code == 0
        rows = _csv_rows(result.output)
        assert len(rows) == 20
        assert rows[0]["energy"] == "-0.5"
        assert rows[1]["energy"] == "-0.125"
        assert rows[2]["energy"] == "-0.0555555555556"
        assert any("# input: family = coulomb" in c for c in _comments(result.output))

    def test_oscillator_parity_rows_carry_errors(self, runner):
        result = runner.invoke(
            main, ["spectrum", "--family", "oscillator", "--dim", "2", "--N", "0..3"]
        )
        assert result.exit_code == 0
        rows = _csv_rows(result.output)
        assert rows[0]["energy"] == "1"
        assert rows[2]["energy"] == "3"
        assert rows[1]["energy"] == "" and "even" in rows[1]["error"]
        assert rows[3]["energy"] == "" and "even" in rows[3]["error"]

    def test_json_round_trip(self, runner):
        result = runner.invoke(main, ["spectrum", "--n", "1..4", "--format", "json"])
        assert result.exit_code == 0
        payload = json.loads(result.output)
        assert json.dumps(payload, indent=2, allow_nan=False) + "\n" == result.output
        assert payload["command"] == "spectrum"
        assert payload["rows"][3]["energy"] == -0.03125

    def test_defect_family_needs_config(self, runner):
        result = runner.invoke(main, ["spectrum", "--family", "defect"])
        assert result.exit_code == 1
        assert "--config" in result.output

    def test_defect_family_with_config_flag(self, runner, config_path):
        result = runner.invoke(
            main,
            ["spectrum", "--family", "defect", "--config", config_path,
             "--n", "2..3", "--l", "0", "--format", "json"],
        )
        assert result.exit_code == 0
        rows = json.loads(result.output)["rows"]
        assert rows[0]["n_star"] == pytest.approx(1.6)
        assert rows[0]["energy"] == pytest.approx(-0.1953125)

    def test_config_via_environment(self, runner, config_path):
        result = runner.invoke(
            main,
            ["spectrum", "--family", "defect", "--n", "2", "--format", "json"],
            env={"SUSYRAD_CONFIG": config_path},
        )
        assert result.exit_code == 0
        assert json.loads(result.output)["rows"][0]["energy"] == pytest.approx(-0.1953125)

    def test_inadmissible_row_does_not_abort(self, runner, config_path):
        # n=1, l=0 has no room for the i=1 shift; n=2 is fine
        result = runner.invoke(
            main,
            ["spectrum", "--family", "defect", "--config", config_path,
             "--n", "1..2", "--format", "json"],
        )
        assert result.exit_code == 0
        rows = json.loads(result.output)["rows"]
        assert "error" in rows[0] and "degree" in rows[0]["error"]
        assert rows[1]["energy"] == pytest.approx(-0.1953125)

    def test_bad_range_spec_is_fatal(self, runner):
        result = runner.invoke(main, ["spectrum", "--n", "4..1"])
        assert result.exit_code == 1
        assert "empty range" in result.output


class TestWavefunction:
    def test_hydrogen_ground_values(self, runner):
        result = runner.invoke(
            main,
            ["wavefunction", "--family", "hydrogen", "--n", "1", "--l", "0",
             "--grid-min", "0.5", "--grid-max", "2.0", "--points", "4", "--format", "json"],
        )
        assert result.exit_code == 0
        payload = json.loads(result.output)
        rows = payload["rows"]
        assert [row["r"] for row in rows] == [0.5, 1.0, 1.5, 2.0]
        for row in rows:
            assert row["amplitude"] == pytest.approx(2.0 * math.exp(-row["r"]), rel=1e-14)
        diag = {d["name"]: d for d in payload["diagnostics"]}
        assert diag["relative_residual"]["value"] < 1e-8
        assert diag["node_count"]["value"] == 0.0

    def test_node_count_diagnostic(self, runner):
        result = runner.invoke(
            main, ["wavefunction", "--n", "3", "--l", "0", "--format", "json"]
        )
        assert result.exit_code == 0
        diag = {d["name"]: d for d in json.loads(result.output)["diagnostics"]}
        assert diag["node_count"]["value"] == 2.0

    def test_csv_has_diagnostic_comments(self, runner):
        result = runner.invoke(main, ["wavefunction"])
        assert result.exit_code == 0
        comments = _comments(result.output)
        assert any("relative_residual" in c for c in comments)
        assert any("node_count" in c for c in comments)

    def test_grid_validation_is_fatal(self, runner):
        result = runner.invoke(main, ["wavefunction", "--points", "1"])
        assert result.exit_code == 1
        result = runner.invoke(main, ["wavefunction", "--grid-min", "-1.0"])
        assert result.exit_code == 1

    def test_hydrogen_family_requires_three_dimensions(self, runner):
        result = runner.invoke(main, ["wavefunction", "--family", "hydrogen", "--dim", "4"])
        assert result.exit_code == 1
        assert "three-dimensional" in result.output

    def test_oscillator_state(self, runner):
        result = runner.invoke(
            main,
            ["wavefunction", "--family", "oscillator", "--N", "2", "--L", "0",
             "--format", "json"],
        )
        assert result.exit_code == 0
        payload = json.loads(result.output)
        assert payload["inputs"]["N"] == 2
        diag = {d["name"]: d for d in payload["diagnostics"]}
        assert diag["node_count"]["value"] == 1.0


class TestSusyPair:
    def test_hydrogen_partners(self, runner):
        result = runner.invoke(
            main,
            ["susy-pair", "--grid-min", "0.5", "--grid-max", "2.0", "--points", "4",
             "--format", "json"],
        )
        assert result.exit_code == 0
        payload = json.loads(result.output)
        for row in payload["rows"]:
            x = row["x"]
            assert row["v_plus"] == pytest.approx(0.25 - 1.0 / x, rel=1e-14)
            assert row["v_minus"] == pytest.approx(0.25 - 1.0 / x + 2.0 / x**2, rel=1e-14)
            assert row["difference"] == pytest.approx(2.0 / x**2, rel=1e-12)
        diag = {d["name"]: d for d in payload["diagnostics"]}
        assert diag["shift_identity_defect"]["value"] < 1e-12
        assert diag["ground_annihilation_residual"]["value"] < 1e-8

    def test_oscillator_partner_value(self, runner):
        result = runner.invoke(
            main,
            ["susy-pair", "--family", "oscillator", "--grid-min", "1.0",
             "--grid-max", "3.0", "--points", "3", "--format", "json"],
        )
        assert result.exit_code == 0
        rows = json.loads(result.output)["rows"]
        assert rows[0]["x"] == 1.0
        assert rows[0]["v_plus"] == pytest.approx(-2.0, rel=1e-14)

    def test_defect_family_rejected(self, runner):
        result = runner.invoke(main, ["susy-pair", "--family", "defect"])
        assert result.exit_code == 2  # not a valid Choice value


class TestMap:
    def test_exact_single_lambda(self, runner):
        result = runner.invoke(
            main, ["map", "--d", "3", "--n", "2", "--l", "0", "--lambda", "1",
                   "--format", "json"]
        )
        assert result.exit_code == 0
        payload = json.loads(result.output)
        row = payload["rows"][0]
        assert (row["D"], row["N"], row["L"]) == (2, 3, 1)
        assert row["constancy_defect"] < 1e-8
        diag = {d["name"]: d for d in payload["diagnostics"]}
        assert diag["max_constancy_defect"]["value"] < 1e-8

    def test_exact_rejects_half_integer_in_row(self, runner):
        result = runner.invoke(
            main, ["map", "--d", "3", "--n", "1", "--l", "0", "--lambda", "1/2",
                   "--format", "json"]
        )
        assert result.exit_code == 0
        payload = json.loads(result.output)
        assert "not an integer in exact mode" in payload["rows"][0]["violations"]
        assert payload["diagnostics"] == []

    def test_lambda_range_sweep(self, runner):
        result = runner.invoke(
            main, ["map", "--d", "3", "--n", "1", "--l", "0", "--lambda-range", "0..2",
                   "--format", "json"]
        )
        assert result.exit_code == 0
        rows = json.loads(result.output)["rows"]
        assert len(rows) == 3
        assert (rows[0]["D"], rows[0]["N"], rows[0]["L"]) == (4, 0, 0)
        assert (rows[1]["D"], rows[1]["N"], rows[1]["L"]) == (2, 1, 1)
        assert "below 2" in rows[2]["violations"]

    def test_broken_quarter_integer(self, runner):
        result = runner.invoke(
            main, ["map", "--d", "3", "--n", "1", "--l", "0", "--mode", "broken",
                   "--lambda", "0.5", "--Delta", "0.25", "--format", "json"]
        )
        assert result.exit_code == 0
        row = json.loads(result.output)["rows"][0]
        assert (row["D"], row["N"], row["L"]) == (3, 1, 1)
        assert row["constancy_defect"] < 1e-8

    def test_exactly_one_lambda_option(self, runner):
        result = runner.invoke(main, ["map", "--d", "3", "--n", "1", "--l", "0"])
        assert result.exit_code == 1
        assert "exactly one" in result.output
        result = runner.invoke(
            main, ["map", "--d", "3", "--n", "1", "--l", "0", "--lambda", "1",
                   "--lambda-range", "0..1"]
        )
        assert result.exit_code == 1

    def test_bad_range_text(self, runner):
        result = runner.invoke(
            main, ["map", "--d", "3", "--n", "1", "--l", "0", "--lambda-range", "01"]
        )
        assert result.exit_code == 1
        assert "lo..hi" in result.output

    def test_invalid_source_is_fatal(self, runner):
        result = runner.invoke(
            main, ["map", "--d", "1", "--n", "1", "--l", "0", "--lambda", "1"]
        )
        assert result.exit_code == 1


class TestTrap:
    def test_frequencies_from_flags(self, runner):
        result = runner.invoke(
            main,
            ["trap", "frequencies", "--B", "5.0", "--V", "-12.0", "--d", "0.01",
             "--format", "json"],
        )
        assert result.exit_code == 0
        rows = json.loads(result.output)["rows"]
        by_name = {row["quantity"]: row for row in rows}
        w_c = codata.elementary_charge * 5.0 / codata.electron_mass
        assert by_name["cyclotron"]["angular_frequency_rad_s"] == pytest.approx(w_c, rel=1e-12)
        assert by_name["cyclotron"]["frequency_hz"] == pytest.approx(
            w_c / (2.0 * math.pi), rel=1e-12
        )

    def test_frequencies_from_config(self, runner, config_path):
        result = runner.invoke(
            main, ["trap", "frequencies", "--config", config_path, "--format", "json"]
        )
        assert result.exit_code == 0
        rows = json.loads(result.output)["rows"]
        assert rows[0]["quantity"] == "cyclotron"

    def test_frequencies_need_all_three_flags(self, runner):
        result = runner.invoke(main, ["trap", "frequencies", "--B", "5.0"])
        assert result.exit_code == 1
        assert "--B, --V and --d" in result.output or "all of" in result.output

    def test_unstable_voltage_is_fatal(self, runner):
        result = runner.invoke(
            main, ["trap", "frequencies", "--B", "5.0", "--V", "12.0", "--d", "0.01"]
        )
        assert result.exit_code == 1
        assert "unstable" in result.output

    def test_operating_point(self, runner):
        result = runner.invoke(
            main, ["trap", "operating-point", "--B", "5.0", "--d", "0.01", "--format", "json"]
        )
        assert result.exit_code == 0
        payload = json.loads(result.output)
        voltage = payload["rows"][0]["V_volt"]
        expected = (-codata.elementary_charge) * 25.0 * 1e-4 / codata.electron_mass
        assert voltage == pytest.approx(expected, rel=1e-12)
        diag = {d["name"]: d for d in payload["diagnostics"]}
        assert diag["frequency_match"]["value"] <= 1e-12

    def test_operating_point_proton(self, runner):
        result = runner.invoke(
            main,
            ["trap", "operating-point", "--B", "5.0", "--d", "0.01",
             "--species", "proton", "--format", "json"],
        )
        assert result.exit_code == 0
        assert json.loads(result.output)["rows"][0]["V_volt"] > 0.0

    def test_levels_quanta_only(self, runner):
        result = runner.invoke(
            main, ["trap", "levels", "--L", "1", "--N-max", "7", "--format", "json"]
        )
        assert result.exit_code == 0
        rows = json.loads(result.output)["rows"]
        assert [row["N"] for row in rows] == [1, 3, 5, 7]
        assert [row["energy_quanta"] for row in rows] == [2.0, 4.0, 6.0, 8.0]
        assert all("energy_joule" not in row for row in rows)

    def test_levels_with_si_column(self, runner):
        result = runner.invoke(
            main,
            ["trap", "levels", "--L", "0", "--N-max", "4", "--B", "5.0", "--V", "-12.0",
             "--d", "0.01", "--format", "json"],
        )
        assert result.exit_code == 0
        rows = json.loads(result.output)["rows"]
        w_c = codata.elementary_charge * 5.0 / codata.electron_mass
        for row in rows:
            assert row["energy_joule"] == pytest.approx(
                row["energy_quanta"] * codata.hbar * w_c, rel=1e-12
            )

    def test_levels_clamp_errors_stay_in_rows(self, runner):
        # L - 2*Delta + 1/2 <= 0 kills every L=0 row, yet the sweep completes
        result = runner.invoke(
            main,
            ["trap", "levels", "--L", "0", "--N-max", "4", "--Delta", "0.3",
             "--format", "json"],
        )
        assert result.exit_code == 0
        rows = json.loads(result.output)["rows"]
        assert len(rows) == 3
        assert all("too large" in row["error"] for row in rows)
        # one unit up in L the same Delta is admissible again
        result = runner.invoke(
            main,
            ["trap", "levels", "--L", "1", "--N-max", "5", "--Delta", "0.3",
             "--format", "json"],
        )
        rows = json.loads(result.output)["rows"]
        assert all(row["energy_quanta"] == pytest.approx(row["N"] + 0.4) for row in rows)

    def test_levels_anharmonic_energies(self, runner):
        result = runner.invoke(
            main,
            ["trap", "levels", "--L", "1", "--N-max", "3", "--Delta", "0.05",
             "--format", "json"],
        )
        assert result.exit_code == 0
        rows = json.loads(result.output)["rows"]
        assert rows[0]["energy_quanta"] == pytest.approx(1.9)
        assert rows[1]["energy_quanta"] == pytest.approx(3.9)


class TestOutputHandling:
    def test_out_writes_file(self, runner, tmp_path):
        target = tmp_path / "table.csv"
        result = runner.invoke(main, ["spectrum", "--n", "1..3", "--out", str(target)])
        assert result.exit_code == 0
        assert result.output == ""
        on_disk = target.read_text(encoding="utf-8")
        direct = runner.invoke(main, ["spectrum", "--n", "1..3"]).output
        assert on_disk == direct

    def test_version(self, runner):
        result = runner.invoke(main, ["--version"])
        assert result.exit_code == 0
        assert "0.1.0" in result.output

    def test_unknown_command(self, runner):
        result = runner.invoke(main, ["levitate"])
        assert result.exit_code == 2


class TestVerify:
    def test_json_report(self, runner):
        result = runner.invoke(main, ["verify", "--format", "json"])
        assert result.exit_code == 0
        entries = json.loads(result.output)
        assert len(entries) == 9
        assert [e["criterion"] for e in entries] == list(range(1, 10))
        assert all(e["passed"] for e in entries)
        assert all(e["value"] <= e["tolerance"] for e in entries)

    def test_table_report(self, runner, tmp_path):
        target = tmp_path / "report.txt"
        result = runner.invoke(main, ["verify", "--out", str(target)])
        assert result.exit_code == 0
        text = target.read_text(encoding="utf-8")
        assert "9/9 checks passed" in text
        assert text.count("PASS") == 9
