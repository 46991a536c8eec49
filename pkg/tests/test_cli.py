"""End-to-end tests of the command-line surface."""

import json

import pytest
from click.testing import CliRunner

from cli import cli


@pytest.fixture
def runner(monkeypatch):
    monkeypatch.setenv("SOURCE_DATE_EPOCH", "1700000000")
    return CliRunner()


def _json(result):
    return json.loads(result.stdout)


class TestTableCommand:

    def test_bernoulli_csv(self, runner):
        result = runner.invoke(cli, ["table", "bernoulli", "--max", "12", "--format", "csv"])
        assert result.exit_code == 0
        lines = result.stdout.strip().splitlines()
        assert lines[0] == "index,numerator,denominator"
        assert lines[-1] == "12,-691,2730"
        assert len(lines) == 14

    def test_odd_bernoulli_row(self, runner):
        result = runner.invoke(cli, ["table", "bernoulli", "--max", "3", "--format", "csv"])
        assert result.stdout.strip().splitlines()[-1] == "3,0,1"

    def test_stirling_row_json(self, runner):
        result = runner.invoke(cli, ["table", "stirling", "--n", "4", "--format", "json"])
        assert result.exit_code == 0
        payload = _json(result)
        assert payload["command"] == "table"
        values = {row["index"]: row["numerator"] for row in payload["results"]}
        assert values == {0: "0", 1: "1", 2: "7", 3: "6", 4: "1"}

    def test_stirling_single_row_csv(self, runner):
        result = runner.invoke(cli, ["table", "stirling", "--n", "3", "--format", "csv"])
        assert result.exit_code == 0
        assert result.stdout.splitlines() == [
            "index,numerator,denominator",
            "0,0,1",
            "1,1,1",
            "2,3,1",
            "3,1,1",
        ]

    def test_stirling_range_keeps_row_column(self, runner):
        result = runner.invoke(cli, ["table", "stirling", "--min", "1", "--max", "2", "--format", "csv"])
        lines = result.stdout.splitlines()
        assert lines[0] == "n,index,numerator,denominator"
        assert lines[1:] == ["1,0,0,1", "1,1,1,1", "2,0,0,1", "2,1,1,1", "2,2,1,1"]

    def test_gv_table(self, runner):
        result = runner.invoke(cli, ["table", "gv", "--max", "2", "--format", "json"])
        rows = _json(result)["results"]
        assert [(r["numerator"], r["denominator"]) for r in rows] == [("4", "3"), ("16", "15")]

    def test_pretty_table(self, runner):
        result = runner.invoke(cli, ["table", "bernoulli", "--max", "4", "--format", "table"])
        assert result.exit_code == 0
        assert "-1" in result.stdout and "30" in result.stdout

    def test_output_is_reproducible(self, runner):
        args = ["table", "bernoulli", "--max", "20", "--format", "json"]
        first = runner.invoke(cli, args).stdout
        second = runner.invoke(cli, args).stdout
        assert first == second
        assert json.loads(first)["timestamp"] == "2023-11-14T22:13:20+00:00"

    def test_empty_range_is_usage_error(self, runner):
        result = runner.invoke(cli, ["table", "bernoulli", "--min", "5", "--max", "2"])
        assert result.exit_code == 2

    def test_range_above_limit(self, runner):
        result = runner.invoke(cli, ["table", "stirling", "--max", "500"])
        assert result.exit_code == 2


class TestVerifyCommand:

    def test_gumbel_exact(self, runner):
        result = runner.invoke(cli, ["verify", "gumbel", "--k-max", "20"])
        assert result.exit_code == 0
        payload = _json(result)
        assert len(payload["results"]) == 20
        assert all(r["passed"] for r in payload["results"])
        assert payload["results"][0]["expected"] == "1/4"
        assert set(payload["results"][0]) == {
            "identity", "parameter", "expected", "computed", "abs_error", "rel_error", "passed", "route",
        }

    def test_soliton_includes_b12(self, runner):
        result = runner.invoke(cli, ["verify", "soliton", "--k-max", "6"])
        assert result.exit_code == 0
        rows = _json(result)["results"]
        assert rows[-1]["parameter"] == 6
        assert rows[-1]["expected"] == "-691/2730"

    def test_empty_range_is_usage_error(self, runner):
        result = runner.invoke(cli, ["verify", "gumbel", "--k-max", "0"])
        assert result.exit_code == 2

    def test_workers_keep_order(self, runner):
        result = runner.invoke(cli, ["verify", "stirling-bernoulli", "--n-max", "40", "--workers", "4"])
        assert result.exit_code == 0
        assert [r["parameter"] for r in _json(result)["results"]] == list(range(1, 41))

    def test_faulhaber_flattens_reports(self, runner):
        result = runner.invoke(cli, ["verify", "faulhaber", "--max", "3", "--m-max", "5"])
        assert result.exit_code == 0
        assert len(_json(result)["results"]) == 12

    def test_csv_report(self, runner):
        result = runner.invoke(cli, ["verify", "binomial-bernoulli", "--max", "3", "--format", "csv"])
        assert result.exit_code == 0
        lines = result.stdout.strip().splitlines()
        assert lines[0] == "identity,parameter,expected,computed,abs_error,rel_error,passed,route"
        assert len(lines) == 4

    def test_quadrature_route(self, runner):
        result = runner.invoke(cli, ["verify", "gumbel-quad", "--k-max", "3", "--precision", "double"])
        assert result.exit_code == 0
        payload = _json(result)
        assert payload["precision_mode"] == "double"
        assert all(r["route"] == "quadrature" for r in payload["results"])

    def test_double_precision_limit_is_usage_error(self, runner):
        result = runner.invoke(cli, ["verify", "gumbel-quad", "--k-max", "8", "--precision", "double"])
        assert result.exit_code == 2

    def test_short_zeta_sum_passes_on_tail_bound(self, runner):
        result = runner.invoke(cli, ["verify", "zeta", "--max", "1", "--terms", "100", "--tol", "1e-12"])
        assert result.exit_code == 0

    def test_short_zeta_sum_warns(self, runner):
        result = runner.invoke(cli, ["verify", "zeta", "--max", "1", "--terms", "100", "--tol", "1e-12"])
        assert "zeta (1, 100): insufficient terms" in result.output
        assert "FAILED" not in result.output

    def test_precision_mode_follows_route(self, runner):
        exact = _json(runner.invoke(cli, ["verify", "gumbel", "--k-max", "3"]))
        assert exact["precision_mode"] == "exact"
        series = _json(runner.invoke(cli, ["verify", "zeta", "--max", "2", "--terms", "1000000", "--tol", "1e-5"]))
        assert series["precision_mode"] == "double"
        assert {r["route"] for r in series["results"]} == {"series"}

    def test_bad_tolerance(self, runner):
        assert runner.invoke(cli, ["verify", "gumbel", "--tol", "0"]).exit_code == 2

    def test_bad_params(self, runner):
        assert runner.invoke(cli, ["verify", "moment", "--q", "-1"]).exit_code == 2

    def test_unknown_identity(self, runner):
        assert runner.invoke(cli, ["verify", "riemann"]).exit_code == 2


class TestDerivativeCommand:

    def test_first_derivative(self, runner):
        result = runner.invoke(cli, ["derivative", "--n", "1", "--t", "0"])
        assert result.exit_code == 0
        record = _json(result)["results"][0]
        assert float(record["value"]) == pytest.approx(0.36787944117144233)
        assert record["coefficients"] == [{"k": 1, "a": "1/1"}]
        assert float(record["bell_value"]) == pytest.approx(0.36787944117144233)

    def test_third_derivative_coefficients(self, runner):
        result = runner.invoke(cli, ["derivative", "--n", "3", "--q", "2", "--c", "3", "--umax", "5", "--t", "0.4"])
        record = _json(result)["results"][0]
        assert [item["a"] for item in record["coefficients"]] == ["1/1", "-3/1", "1/1"]
        assert float(record["log_poly_value"]) == pytest.approx(float(record["value"]), rel=1e-10)

    def test_high_order_defaults_to_extended(self, runner):
        result = runner.invoke(cli, ["derivative", "--n", "30", "--t", "0"])
        assert result.exit_code == 0
        payload = _json(result)
        assert payload["precision_mode"] == "extended"
        assert float(payload["results"][0]["value"]) == pytest.approx(6340439557978300550.89, rel=1e-15)

    def test_order_above_limit(self, runner):
        assert runner.invoke(cli, ["derivative", "--n", "31"]).exit_code == 2

    def test_table_format(self, runner):
        result = runner.invoke(cli, ["derivative", "--n", "2", "--format", "table"])
        assert result.exit_code == 0
        assert "a_2" in result.stdout
