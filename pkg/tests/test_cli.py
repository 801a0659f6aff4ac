"""CLI contract: printed values, text formats, exit codes, CSV runs."""

import json

import pytest

from qgx import cli
from qgx.verify import VerificationReport

FIG3 = ["--family", "grouping", "--k", "3", "1 2 3 1", "2 1 2 3"]
FIG5 = ["--family", "symmetric-real", "1 4 5", "3 0 6"]
FIG6 = ["--family", "circular", "2 4 5 1 6 3", "4 6 1 5 3 2"]


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, out.rstrip("\n")


class TestDistance:
    def test_grouping_quotient(self, capsys):
        code, out = run(capsys, "distance", "--mode", "quotient", *FIG3)
        assert (code, out) == (0, "1")

    def test_grouping_raw(self, capsys):
        code, out = run(capsys, "distance", "--mode", "raw", *FIG3)
        assert (code, out) == (0, "4")

    def test_circular_quotient(self, capsys):
        code, out = run(capsys, "distance", "--mode", "quotient", *FIG6)
        assert (code, out) == (0, "2")

    def test_symmetric_real_quotient_ten_digits(self, capsys):
        code, out = run(capsys, "distance", "--mode", "quotient", *FIG5)
        assert (code, out) == (0, "1.732050808")

    def test_circular_swap_metric(self, capsys):
        code, out = run(
            capsys, "distance", "--family", "circular", "--metric", "swap",
            "--mode", "raw", "1 2 3", "2 1 3",
        )
        assert (code, out) == (0, "1")

    def test_sequence_edit(self, capsys):
        code, out = run(
            capsys, "distance", "--family", "sequence", "agcacaca", "acacacta"
        )
        assert (code, out) == (0, "2")

    def test_graph_quotient(self, capsys, tmp_path):
        a = tmp_path / "a.edges"
        b = tmp_path / "b.edges"
        a.write_text("3 2\n1 2\n2 3\n")
        b.write_text("3 2\n1 3\n2 3\n")
        code, out = run(capsys, "distance", "--family", "graph", str(a), str(b))
        assert (code, out) == (0, "0")

    def test_unsupported_metric_combination(self, capsys):
        code = cli.main(["distance", "--family", "grouping", "--metric", "euclidean",
                         "--k", "3", "1 2", "2 1"])
        assert code == 2

    def test_missing_k(self, capsys):
        assert cli.main(["distance", "--family", "grouping", "1 2", "2 1"]) == 2

    def test_unparsable_vector(self, capsys):
        assert cli.main(["distance", "--family", "circular", "1 x", "2 1"]) == 2

    def test_label_out_of_alphabet(self, capsys):
        assert cli.main(["distance", "--family", "grouping", "--k", "2", "1 3", "2 1"]) == 2

    def test_missing_graph_file(self, capsys):
        assert cli.main(["distance", "--family", "graph", "/nonexistent/a", "/nonexistent/b"]) == 3


class TestNormalize:
    def test_grouping(self, capsys):
        code, out = run(capsys, "normalize", *FIG3)
        assert (code, out) == (0, "3 2 3 1")

    def test_symmetric_real(self, capsys):
        code, out = run(capsys, "normalize", *FIG5)
        assert (code, out) == (0, "0 3 6")

    def test_circular(self, capsys):
        code, out = run(capsys, "normalize", *FIG6)
        assert (code, out) == (0, "2 4 6 1 5 3")

    def test_sequence_prints_aligned_second_parent(self, capsys):
        code, out = run(capsys, "normalize", "--family", "sequence",
                        "agcacaca", "acacacta")
        assert (code, out) == (0, "a-cacacta")

    def test_graph_prints_edge_list(self, capsys, tmp_path):
        a = tmp_path / "a.edges"
        b = tmp_path / "b.edges"
        a.write_text("3 2\n1 2\n2 3\n")
        b.write_text("3 2\n1 3\n2 3\n")
        code, out = run(capsys, "normalize", "--family", "graph", str(a), str(b))
        assert code == 0
        assert out.splitlines()[0] == "3 2"
        assert set(out.splitlines()[1:]) == {"1 2", "2 3"}


class TestCrossover:
    @pytest.mark.parametrize("family,parent", [
        ("grouping", "1 2 3 1"),
        ("circular", "2 4 5 1 6 3"),
        ("symmetric-discrete", "1 2 2"),
    ])
    def test_identical_parents_reproduce(self, capsys, family, parent):
        argv = ["crossover", "--family", family, "--seed", "5", parent, parent]
        if family == "grouping":
            argv[3:3] = ["--k", "3"]
        code, out = run(capsys, *argv)
        assert (code, out) == (0, parent)

    def test_grouping_worked_offspring(self, capsys):
        outputs = set()
        for seed in range(12):
            code, out = run(capsys, "crossover", "--seed", str(seed), *FIG3)
            assert code == 0
            outputs.add(out)
        assert outputs == {"1 2 3 1", "3 2 3 1"}

    def test_sequence_offspring_on_segment(self, capsys):
        from qgx.sequences import edit_distance

        s, t = "agcacaca", "acacacta"
        code, out = run(capsys, "crossover", "--family", "sequence", "--seed", "3", s, t)
        assert code == 0
        assert edit_distance(s, out) + edit_distance(out, t) == 2

    def test_deterministic_given_seed(self, capsys):
        argv = ["crossover", "--family", "circular", "--seed", "9",
                "2 4 5 1 6 3", "4 6 1 5 3 2"]
        first = run(capsys, *argv)
        second = run(capsys, *argv)
        assert first == second


class TestVerify:
    def test_quotient_suite_passes(self, capsys):
        code, out = run(capsys, "verify", "--suite", "quotient", "--family", "grouping",
                        "--trials", "1000", "--seed", "1")
        assert code == 0
        assert "ok" in out

    def test_group_suite_circular(self, capsys):
        code, out = run(capsys, "verify", "--suite", "group", "--family", "circular",
                        "--trials", "200")
        assert code == 0

    def test_segment_suite_sequence(self, capsys):
        code, _ = run(capsys, "verify", "--suite", "segment", "--family", "sequence",
                      "--trials", "100")
        assert code == 0

    def test_group_suite_rejected_for_sequences(self, capsys):
        code = cli.main(["verify", "--suite", "group", "--family", "sequence"])
        assert code == 2

    def test_violations_exit_one(self, capsys, monkeypatch):
        failing = VerificationReport("fake", 10, 3, witness="broken thing")
        monkeypatch.setattr(cli.suites, "run_suite", lambda *a, **k: [failing])
        code, out = run(capsys, "verify", "--suite", "metric", "--family", "grouping")
        assert code == 1
        assert "broken thing" in out


class TestGa:
    def _write_config(self, tmp_path, **ga_overrides):
        doc = {
            "problem": {"name": "coloring", "nodes": 12, "colors": 3,
                        "edge_prob": 0.3, "instance_seed": 2},
            "ga": {"population": 8, "generations": 4, "crossover_rate": 0.9,
                   "mutation_rate": 0.1, "tournament": 2, "mode": "quotient",
                   "seed": 3},
        }
        doc["ga"].update(ga_overrides)
        path = tmp_path / "config.json"
        path.write_text(json.dumps(doc))
        return path

    def test_csv_shape(self, capsys, tmp_path):
        config = self._write_config(tmp_path, generations=1)
        out = tmp_path / "run.csv"
        assert cli.main(["ga", "--config", str(config), "--out", str(out)]) == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "generation,best,mean,evaluations,mode,seed"
        assert len(lines) == 2  # header + one generation

    def test_replay_is_byte_identical(self, capsys, tmp_path):
        config = self._write_config(tmp_path)
        first, second = tmp_path / "a.csv", tmp_path / "b.csv"
        assert cli.main(["ga", "--config", str(config), "--out", str(first)]) == 0
        assert cli.main(["ga", "--config", str(config), "--out", str(second)]) == 0
        assert first.read_bytes() == second.read_bytes()

    def test_thread_env_does_not_change_output(self, capsys, tmp_path, monkeypatch):
        config = self._write_config(tmp_path)
        one, four = tmp_path / "t1.csv", tmp_path / "t4.csv"
        monkeypatch.setenv("QGX_THREADS", "1")
        assert cli.main(["ga", "--config", str(config), "--out", str(one)]) == 0
        monkeypatch.setenv("QGX_THREADS", "4")
        assert cli.main(["ga", "--config", str(config), "--out", str(four)]) == 0
        assert one.read_bytes() == four.read_bytes()

    def test_paired_modes_share_budget(self, capsys, tmp_path):
        import csv as csvmod

        budgets = {}
        for mode in ("raw", "quotient"):
            config = self._write_config(tmp_path, mode=mode)
            out = tmp_path / f"{mode}.csv"
            assert cli.main(["ga", "--config", str(config), "--out", str(out)]) == 0
            with open(out) as fh:
                budgets[mode] = [row["evaluations"] for row in csvmod.DictReader(fh)]
        assert budgets["raw"] == budgets["quotient"]

    def test_bad_config_exit_two(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        out = tmp_path / "out.csv"
        assert cli.main(["ga", "--config", str(path), "--out", str(out)]) == 2

    def test_invalid_ga_values_exit_two(self, capsys, tmp_path):
        config = self._write_config(tmp_path, population=7)
        assert cli.main(["ga", "--config", str(config), "--out", str(tmp_path / "x.csv")]) == 2

    def test_unwritable_output_exit_three(self, capsys, tmp_path):
        config = self._write_config(tmp_path)
        missing_dir = tmp_path / "no" / "such" / "dir" / "out.csv"
        assert cli.main(["ga", "--config", str(config), "--out", str(missing_dir)]) == 3

    def test_missing_config_exit_three(self, capsys, tmp_path):
        assert cli.main(["ga", "--config", str(tmp_path / "none.json"),
                         "--out", str(tmp_path / "x.csv")]) == 3
