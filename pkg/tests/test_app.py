"""Command-line subcommands, pipelines and exit codes"""

import json

import pytest

from app import main
from graphs.families import FamilyInstance, generate_line
from graphs.models import Graph


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def error_payload(err: str) -> dict:
    return json.loads(err.strip().splitlines()[-1])


class TestPipeline:
    def test_wheel_end_to_end(self, tmp_path, capsys):
        graph, line, coloring = (str(tmp_path / name) for name in ("g.json", "l.json", "c.json"))
        assert main(["gen", "--family", "wheel", "--t", "5", "-o", graph]) == 0
        assert main(["linegraph", "-i", graph, "-o", line]) == 0
        assert main(["construct", "-i", line, "--scheme", "main", "-o", coloring]) == 0
        code, out, _ = run(capsys, "verify", "--coloring", coloring)
        assert code == 0
        assert json.loads(out)["overall"] is True

    def test_verify_failure_exits_two(self, tmp_path, capsys):
        graph = tmp_path / "c6.json"
        graph.write_text(json.dumps({"n": 6, "edges": [[i, (i + 1) % 6] for i in range(6)]}))
        coloring = tmp_path / "c.json"
        coloring.write_text(json.dumps({"k": 3, "colors": [1, 2, 3, 1, 2, 3]}))
        code, out, _ = run(capsys, "verify", "--graph", str(graph), "--coloring", str(coloring))
        assert code == 2
        assert json.loads(out)["dominator"] is False

    def test_linegraph_uses_input_edges(self, tmp_path, capsys):
        graph = tmp_path / "p4.json"
        graph.write_text(json.dumps({"n": 4, "edges": [[0, 1], [1, 2], [2, 3]]}))
        code, out, _ = run(capsys, "linegraph", "-i", str(graph))
        data = json.loads(out)
        assert code == 0
        assert data["n"] == 3
        assert data["edges"] == [[0, 1], [1, 2]]

    def test_linegraph_keeps_family_symbols(self, tmp_path, capsys):
        graph = str(tmp_path / "g.json")
        main(["gen", "--family", "sunlet", "--t", "4", "-o", graph])
        code, out, _ = run(capsys, "linegraph", "-i", graph)
        assert code == 0
        assert Graph.from_dict(json.loads(out)) == generate_line(FamilyInstance.of("sunlet", t=4))

    def test_family_tag_must_match_edges(self, tmp_path, capsys):
        graph = tmp_path / "fake.json"
        graph.write_text(json.dumps({
            "n": 6, "edges": [[0, 1], [1, 2], [2, 3]],
            "family": {"name": "wheel", "params": {"t": 5}, "line": False},
        }))
        code, _, err = run(capsys, "linegraph", "-i", str(graph))
        assert code == 1
        assert error_payload(err)["error"] == "InvalidGraph"
        code, _, err = run(capsys, "construct", "-i", str(graph))
        assert code == 1
        assert error_payload(err)["error"] == "InvalidGraph"

    def test_gen_line(self, capsys):
        code, out, _ = run(capsys, "gen", "--family", "friendship", "--t", "2", "--line")
        data = json.loads(out)
        assert code == 0
        assert data["n"] == 6
        assert data["family"] == {"name": "friendship", "params": {"t": 2}, "line": True}


class TestSolve:
    def test_single_vertex(self, tmp_path, capsys):
        graph = tmp_path / "k1.json"
        graph.write_text('{"n": 1, "edges": []}')
        code, out, _ = run(capsys, "solve", "-i", str(graph))
        assert code == 0
        assert json.loads(out)["value"] == 1

    def test_decision_and_chi(self, tmp_path, capsys):
        graph = tmp_path / "c6.json"
        graph.write_text(json.dumps({"n": 6, "edges": [[i, (i + 1) % 6] for i in range(6)]}))
        code, out, _ = run(capsys, "solve", "-i", str(graph), "--k", "3")
        assert code == 0
        assert json.loads(out) == {"k": 3, "feasible": False, "witness": None}
        code, out, _ = run(capsys, "solve", "-i", str(graph), "--chi")
        assert json.loads(out)["value"] == 2

    def test_budget_exit_code(self, tmp_path, capsys):
        line = str(tmp_path / "l.json")
        main(["gen", "--family", "sunlet", "--t", "5", "--line", "-o", line])
        code, _, err = run(capsys, "solve", "-i", line, "--max-nodes", "5")
        assert code == 3
        assert error_payload(err)["error"] == "BudgetExceeded"


class TestConstruct:
    def test_strict_ambiguity_exits_four(self, capsys):
        code, _, err = run(capsys, "construct", "--family", "doublewheel", "--t", "4", "--strict")
        assert code == 4
        assert error_payload(err)["error"] == "SchemeAmbiguous"

    def test_alternate_scheme(self, capsys):
        code, out, _ = run(capsys, "construct", "--family", "helm", "--t", "5", "--scheme", "alternate1")
        assert code == 0
        assert json.loads(out)["k"] == 10

    def test_not_applicable(self, capsys):
        code, _, err = run(capsys, "construct", "--family", "gear", "--t", "6", "--scheme", "alternate2")
        assert code == 1
        assert error_payload(err)["error"] == "SchemeNotApplicable"


class TestCheckAndTable:
    def test_check_jsonl(self, capsys):
        code, out, _ = run(capsys, "check", "--family", "wheel", "--t-min", "4", "--t-max", "5")
        verdicts = [json.loads(line) for line in out.splitlines()]
        assert code == 0
        assert [v["params"]["t"] for v in verdicts] == [4, 5]
        assert all(v["oracle_status"] == "ok" for v in verdicts)

    def test_check_failure_exits_two(self, capsys):
        code, _, _ = run(capsys, "check", "--family", "kab", "--t-min", "3", "--t-max", "3",
                         "--oracle-max-vertices", "0")
        assert code == 2

    def test_check_csv(self, capsys):
        code, out, _ = run(capsys, "check", "--family", "friendship", "--t-min", "2", "--t-max", "3",
                           "--format", "csv", "--oracle-max-vertices", "0")
        assert code == 0
        assert out.splitlines()[0] == "family,params,formula,construction_k,oracle_value,status"
        assert out.splitlines()[1] == "friendship,t=2,4,4,,ok"

    def test_table_is_deterministic(self, capsys):
        argv = ["table", "--family", "wheel", "--family", "flower", "--oracle-max-vertices", "0"]
        _, first, _ = run(capsys, *argv)
        _, second, _ = run(capsys, *argv)
        assert first == second
        assert len(first.splitlines()) == 1 + 17 + 10


class TestExportAndErrors:
    def test_export_dot(self, tmp_path, capsys):
        line, coloring = str(tmp_path / "l.json"), str(tmp_path / "c.json")
        main(["gen", "--family", "wheel", "--t", "4", "--line", "-o", line])
        main(["construct", "--family", "wheel", "--t", "4", "-o", coloring])
        code, out, _ = run(capsys, "export", "--graph", line, "--coloring", coloring)
        assert code == 0
        assert out.startswith("graph G {")
        assert out.count("fillcolor=") == 8

    def test_invalid_params(self, capsys):
        code, _, err = run(capsys, "gen", "--family", "wheel", "--t", "1")
        assert code == 1
        assert error_payload(err)["error"] == "InvalidParams"

    def test_usage_error(self, capsys):
        code, _, err = run(capsys, "gen", "--family", "torus")
        assert code == 1
        assert "message" in error_payload(err)

    def test_config_file_sets_budget(self, tmp_path, capsys):
        cfg = tmp_path / "edcn.cfg"
        cfg.write_text("max_nodes=5\n")
        line = str(tmp_path / "l.json")
        main(["gen", "--family", "sunlet", "--t", "5", "--line", "-o", line])
        code, _, _ = run(capsys, "--config", str(cfg), "solve", "-i", line)
        assert code == 3
