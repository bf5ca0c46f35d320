"""Tests for robustprice.__main__ module."""

import json
from unittest.mock import patch

import pytest

from robustprice.__main__ import (
    EXIT_FAILURE,
    EXIT_OK,
    EXIT_USAGE,
    build_parser,
    execute,
    main,
)

TWO_ITEM = {
    "items": [
        {"name": "A", "support": [{"value": "1", "prob": "1/2"}, {"value": "3", "prob": "1/2"}]},
        {"name": "B", "support": [{"value": "2", "prob": "1/2"}, {"value": "4", "prob": "1/2"}]},
    ]
}


@pytest.fixture
def files(write_json):
    """Instance and pricing files of the two-item example."""
    return (
        str(write_json("inst.json", TWO_ITEM)),
        str(write_json("prices.json", {"prices": ["1", "2"]})),
    )


def run_json(capsys, argv):
    code = execute(argv)
    out = capsys.readouterr().out
    assert code == EXIT_OK
    return json.loads(out)


class TestExecute:
    """Test cases for the execute entry point."""

    def test_best_response(self, capsys, files):
        """Test revenue 3/2 on the two-item example."""
        data = run_json(capsys, ["best-response", *files, "--format", "json"])
        assert data["command"] == "best-response"
        assert data["results"]["revenue"] == "3/2"
        assert data["results"]["revenue_approx"] == 1.5
        assert data["results"]["sale_prob"] == {"A": "1/2", "B": "1/2", "<none>": "0"}
        assert "witness" not in data

    def test_low_price_rule(self, capsys, files):
        """Test the LowerPriceFirst flag."""
        data = run_json(capsys, ["best-response", *files, "--tie-break", "low-price"])
        assert data["results"]["revenue"] == "1/2"

    def test_witness(self, capsys, files):
        """Test that --witness adds the coupling."""
        data = run_json(capsys, ["best-response", *files, "--witness"])
        masses = sorted(chain["mass"] for chain in data["witness"])
        assert masses == ["1/2", "1/2"]

    def test_results_are_stable(self, capsys, files):
        """Test identical results and digests across runs."""
        first = run_json(capsys, ["report", *files])
        second = run_json(capsys, ["report", *files])
        assert first["results"] == second["results"]
        assert first["digest"] == second["digest"]
        assert first["results"]["comonotonic_revenue"] == "2"

    def test_revenue(self, capsys, files, write_json):
        """Test revenue under a supplied coupling."""
        chains = [
            {"mass": "1/2", "values": ["1", "2"]},
            {"mass": "1/2", "values": ["3", "4"]},
        ]
        coupling = write_json("c.json", chains)
        data = run_json(capsys, ["revenue", *files, str(coupling)])
        assert data["results"]["revenue"] == "2"

    def test_incompatible_coupling(self, capsys, files, write_json):
        """Test exit 2 for a coupling of other marginals."""
        coupling = write_json("c.json", [{"mass": "1", "values": ["1", "2"]}])
        assert execute(["revenue", *files, str(coupling)]) == EXIT_FAILURE
        assert "IncompatibleCoupling" in capsys.readouterr().err

    def test_oracle_min(self, capsys, files):
        """Test that the oracle agrees with the best response."""
        data = run_json(capsys, ["oracle", "min", *files])
        assert data["results"]["revenue"] == "3/2"
        assert data["results"]["agrees"] is True

    def test_oracle_over_budget(self, capsys, files):
        """Test exit 2 and the budget message."""
        assert execute(["oracle", "min", *files, "--budget", "1"]) == EXIT_FAILURE
        assert "BudgetExceeded" in capsys.readouterr().err

    def test_oracle_prefix(self, capsys, files):
        """Test the null-plus-cheapest prefix."""
        data = run_json(capsys, ["oracle", "prefix", *files, "--length", "2"])
        assert data["results"]["max_sale_prob"] == "1/2"
        assert data["results"]["agrees"] is True

    def test_price_mhr(self, capsys, files):
        """Test that B is offered at its median 2."""
        data = run_json(capsys, ["price", "mhr", files[0]])
        assert data["results"]["pricing"] == ["inf", "2"]
        assert data["results"]["robust_revenue"] == "2"
        assert data["results"]["comonotonic_welfare"] == "3"

    def test_half_threshold(self, capsys, files):
        """Test half of each item's top value."""
        data = run_json(capsys, ["price", "half-threshold", files[0], "--set", "1,2"])
        assert data["results"]["pricing"] == ["3/2", "2"]

    def test_half_threshold_bad_set(self, capsys, files):
        """Test that items outside 1..n are a computation error."""
        assert execute(["price", "half-threshold", files[0], "--set", "3"]) == EXIT_FAILURE
        assert "--set" in capsys.readouterr().err

    def test_search(self, capsys, files):
        """Test the grid search label and count."""
        data = run_json(capsys, ["search", files[0], "--max-distinct", "1"])
        assert data["results"]["label"] == "best-on-grid"
        assert data["results"]["evaluated"] > 0

    def test_search_candidates(self, capsys, files, write_json):
        """Test a shared candidate file."""
        candidates = str(write_json("cands.json", ["2"]))
        data = run_json(capsys, ["search", files[0], "--candidates", candidates])
        assert data["results"]["robust_revenue"] == "2"
        assert data["results"]["evaluated"] == 4

    def test_gen_eqrev_prints_instance(self, capsys):
        """Test that without --output the instance itself is printed."""
        data = run_json(capsys, ["gen", "eqrev", "--n", "2", "--grid", "4"])
        assert len(data["items"]) == 2
        assert data["truncation"] == ["4", "8"]

    def test_gen_output_file(self, capsys, tmp_path):
        """Test that --output writes the instance and prints a report."""
        target = tmp_path / "u.json"
        data = run_json(
            capsys,
            ["gen", "uniform", "--bounds", "0:1", "1/4:1/2", "--m", "4", "--output", str(target)],
        )
        assert data["results"]["items"] == 2
        written = json.loads(target.read_text(encoding="utf-8"))
        assert written["items"][0]["support"][1] == {"value": "1/4", "prob": "1/4"}

    def test_generated_instance_feeds_back(self, capsys, tmp_path, write_json):
        """Test that a generated file is accepted by another command."""
        target = tmp_path / "e.json"
        run_json(capsys, ["gen", "exp", "--rate", "1", "2", "--m", "4", "--output", str(target)])
        prices = str(write_json("p.json", ["0", "inf"]))
        data = run_json(capsys, ["best-response", str(target), prices])
        assert data["results"]["revenue"] == "0"

    def test_gen_mis(self, capsys, tmp_path):
        """Test the empty graph on 4 vertices."""
        graph = tmp_path / "g.txt"
        graph.write_text("1\n2\n3\n4\n", encoding="utf-8")
        data = run_json(capsys, ["gen", "mis", str(graph)])
        assert [item["name"] for item in data["items"]] == ["v1", "v2", "v3", "v4"]

    def test_bounds_mis(self, capsys):
        """Test both bounds at n = 4 with a maximum set of 2."""
        data = run_json(capsys, ["bounds", "mis", "--n", "4", "--m", "2"])
        assert data["results"]["upper_bound"] == "35/4"
        assert data["results"]["lower_bound"] == "3/4"

    def test_bounds_mis_from_graph(self, capsys, tmp_path):
        """Test that a path on 4 vertices has a maximum set of 2."""
        graph = tmp_path / "g.txt"
        graph.write_text("1 2\n2 3\n3 4\n", encoding="utf-8")
        data = run_json(capsys, ["bounds", "mis", "--graph", str(graph)])
        assert data["results"]["m"] == 2

    def test_table_format(self, capsys, files):
        """Test the rich table output."""
        assert execute(["best-response", *files, "--format", "table", "--witness"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "best-response" in out
        assert "3/2" in out

    def test_unknown_subcommand(self, capsys):
        """Test exit 1 with usage text."""
        assert execute(["nonsense"]) == EXIT_USAGE
        assert "usage:" in capsys.readouterr().err

    def test_missing_file(self, capsys, tmp_path):
        """Test exit 2 when the instance file does not exist."""
        missing = str(tmp_path / "nope.json")
        assert execute(["best-response", missing, missing]) == EXIT_FAILURE
        assert "File not found" in capsys.readouterr().err

    def test_parse_error_location(self, capsys, files, write_json):
        """Test that a bad probability sum is reported as exit 2."""
        support = [{"value": "1", "prob": "1/3"}, {"value": "2", "prob": "1/3"}]
        bad = {"items": [{"support": support}]}
        path = str(write_json("bad.json", bad))
        assert execute(["best-response", path, files[1]]) == EXIT_FAILURE
        assert "ProbSumMismatch" in capsys.readouterr().err

    def test_bad_environment(self, capsys, files, monkeypatch):
        """Test exit 1 for a malformed budget variable."""
        monkeypatch.setenv("ROBUSTPRICE_BUDGET", "many")
        assert execute(["best-response", *files]) == EXIT_USAGE
        assert "ROBUSTPRICE_BUDGET" in capsys.readouterr().err


class TestMain:
    """Test cases for main function."""

    def test_main_exits_with_code(self, files):
        """Test that main turns the exit code into SystemExit."""
        with patch("robustprice.__main__.emit") as mock_emit:
            with pytest.raises(SystemExit) as info:
                main(["best-response", *files])
        assert info.value.code == EXIT_OK
        mock_emit.assert_called_once()

    def test_main_with_none_argv(self, files):
        """Test that sys.argv is used when argv is None."""
        argv = ["robustprice", "bounds", "mis", "--n", "4", "--m", "0"]
        with patch("robustprice.__main__.sys.argv", argv):
            with patch("robustprice.__main__.emit") as mock_emit:
                with pytest.raises(SystemExit):
                    main(None)
        report = mock_emit.call_args.args[0]
        assert report.results["upper_bound"] == "19/4"

    def test_parser_commands(self):
        """Test that every subcommand parses."""
        parser = build_parser()
        args = parser.parse_args(["gen", "eqrev", "--n", "3", "--grid", "8", "--identical"])
        assert (args.command, args.family, args.identical) == ("gen", "eqrev", True)
        args = parser.parse_args(["oracle", "prefix", "i", "p", "--length", "1"])
        assert (args.check, args.length) == ("prefix", 1)

    def test_main_module_has_main_function(self):
        """Test that main module properly exports main function."""
        import robustprice.__main__ as main_module

        assert callable(main_module.main)
