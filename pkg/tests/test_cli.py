"""Exit codes, subcommand wiring, and report determinism."""

from pathlib import Path

import pytest

from npstruct.cli import run


@pytest.fixture
def corpus(tmp_path):
    path = tmp_path / "toy.txt"
    path.write_text(
        "\n".join(
            ["brain stem"] * 6
            + ["cells of the brain stem"] * 3
            + ["the brain-stem cells grew"] * 3
            + ["brain's stem cells"]
        )
        + "\n",
        encoding="utf-8",
    )
    return path


@pytest.fixture
def index_file(tmp_path, corpus):
    out = tmp_path / "toy.idx"
    assert run(["index", "--corpus", str(corpus), "--out", str(out)]) == 0
    return out


@pytest.fixture
def bracketing_dataset(tmp_path):
    path = tmp_path / "triples.tsv"
    path.write_text("brain\tstem\tcells\tleft\n", encoding="utf-8")
    return path


class TestExitCodes:
    def test_no_arguments_is_usage_error(self, capsys):
        assert run([]) == 1
        capsys.readouterr()

    def test_unknown_flag_is_usage_error(self, tmp_path, capsys):
        assert run(["index", "--corpus", "x", "--out", "y", "--frobnicate"]) == 1
        capsys.readouterr()

    def test_unknown_subcommand_is_usage_error(self, capsys):
        assert run(["transmogrify"]) == 1
        capsys.readouterr()

    def test_missing_corpus_is_data_error(self, tmp_path, capsys):
        out = tmp_path / "x.idx"
        assert run(["index", "--corpus", str(tmp_path / "no.txt"), "--out", str(out)]) == 2
        capsys.readouterr()

    def test_missing_dataset_is_data_error(self, index_file, tmp_path, capsys):
        code = run(
            [
                "bracket",
                "--index", str(index_file),
                "--dataset", str(tmp_path / "missing.tsv"),
            ]
        )
        assert code == 2
        capsys.readouterr()

    def test_seed_flag_is_accepted(self, capsys):
        assert run(["--seed", "7"]) == 1  # still needs a subcommand
        capsys.readouterr()


class TestBracket:
    def test_happy_path(self, index_file, bracketing_dataset, tmp_path, capsys):
        report = tmp_path / "out.tsv"
        code = run(
            [
                "--seed", "1",
                "bracket",
                "--index", str(index_file),
                "--dataset", str(bracketing_dataset),
                "--report", str(report),
            ]
        )
        assert code == 0
        line = report.read_text().strip()
        assert line.startswith("brain\tstem\tcells\t")
        assert line.endswith("\tleft")
        summary = capsys.readouterr().out
        assert "100.00" in summary

    def test_reports_are_deterministic(self, index_file, bracketing_dataset, tmp_path, capsys):
        r1, r2 = tmp_path / "r1.tsv", tmp_path / "r2.tsv"
        for report in (r1, r2):
            argv = [
                "bracket",
                "--index", str(index_file),
                "--dataset", str(bracketing_dataset),
                "--report", str(report),
            ]
            assert run(argv) == 0
        capsys.readouterr()
        assert r1.read_bytes() == r2.read_bytes()

    def test_preset_overrides_default(self, index_file, tmp_path, capsys):
        dataset = tmp_path / "unseen.tsv"
        dataset.write_text("xylo\tphone\tcase\tright\n", encoding="utf-8")
        report = tmp_path / "preset.tsv"
        code = run(
            [
                "bracket",
                "--index", str(index_file),
                "--dataset", str(dataset),
                "--report", str(report),
                "--preset", "biomedical",
            ]
        )
        assert code == 0
        capsys.readouterr()
        assert report.read_text().strip().endswith("\tright")


class TestPPAttach:
    def test_happy_path(self, tmp_path, capsys):
        corpus = tmp_path / "pp.txt"
        corpus.write_text("they meet the customers demands daily\n", encoding="utf-8")
        idx = tmp_path / "pp.idx"
        assert run(["index", "--corpus", str(corpus), "--out", str(idx)]) == 0
        dataset = tmp_path / "pp.tsv"
        dataset.write_text("meet\tdemands\tfrom\tcustomers\tN\n", encoding="utf-8")
        report = tmp_path / "pp_out.tsv"
        code = run(
            [
                "ppattach",
                "--index", str(idx),
                "--dataset", str(dataset),
                "--report", str(report),
            ]
        )
        assert code == 0
        capsys.readouterr()
        assert report.read_text().strip().endswith("\tnoun")


class TestCoord:
    def test_happy_path(self, tmp_path, capsys):
        corpus = tmp_path / "c.txt"
        corpus.write_text("buses station\ntrains and buses station\n", encoding="utf-8")
        idx = tmp_path / "c.idx"
        assert run(["index", "--corpus", str(corpus), "--out", str(idx)]) == 0
        dataset = tmp_path / "c.tsv"
        dataset.write_text("buses\tand\ttrains\tstation\tnoun\n", encoding="utf-8")
        report = tmp_path / "c_out.tsv"
        code = run(
            [
                "coord",
                "--index", str(idx),
                "--dataset", str(dataset),
                "--report", str(report),
            ]
        )
        assert code == 0
        capsys.readouterr()
        assert report.read_text().strip().endswith("\tnoun-coord")


class TestRelsimCommands:
    def _tagged_index(self, tmp_path):
        corpus = tmp_path / "tagged.txt"
        corpus.write_text(
            "The_D committee_N includes_V all_D members_N\n"
            "The_D team_N includes_V all_D players_N\n",
            encoding="utf-8",
        )
        idx = tmp_path / "tagged.idx"
        assert run(["index", "--corpus", str(corpus), "--out", str(idx), "--tagged"]) == 0
        return idx

    def test_relsim_dump(self, tmp_path, capsys):
        idx = self._tagged_index(tmp_path)
        pairs = tmp_path / "pairs.tsv"
        pairs.write_text("committee\tmember\n", encoding="utf-8")
        out = tmp_path / "features.tsv"
        code = run(
            ["relsim", "--index", str(idx), "--pairs", str(pairs), "--out", str(out)]
        )
        assert code == 0
        capsys.readouterr()
        assert "include\tV\t1->2\t1" in out.read_text()

    def test_sat(self, tmp_path, capsys):
        idx = self._tagged_index(tmp_path)
        dataset = tmp_path / "sat.tsv"
        dataset.write_text(
            "committee member\tteam player\tmeeting chair\t0\n", encoding="utf-8"
        )
        report = tmp_path / "sat_out.tsv"
        code = run(
            ["sat", "--index", str(idx), "--dataset", str(dataset), "--report", str(report)]
        )
        assert code == 0
        out = capsys.readouterr().out
        assert "answered 1, correct 1" in out

    def test_sat_bad_row_is_data_error(self, tmp_path, capsys):
        idx = self._tagged_index(tmp_path)
        dataset = tmp_path / "sat.tsv"
        dataset.write_text("committee member\t0\n", encoding="utf-8")
        assert run(["sat", "--index", str(idx), "--dataset", str(dataset)]) == 2
        capsys.readouterr()

    def test_semeval(self, tmp_path, capsys):
        train = tmp_path / "train.tsv"
        train.write_text(
            "committees hold meetings\t0:0\t2:2\trel\ttrue\n"
            "players ignore rules\t0:0\t2:2\trel\tfalse\n",
            encoding="utf-8",
        )
        test = tmp_path / "test.tsv"
        test.write_text(
            "committees hold sessions\t0:0\t2:2\trel\ttrue\n", encoding="utf-8"
        )
        code = run(["semeval", "--train", str(train), "--test", str(test)])
        assert code == 0
        out = capsys.readouterr().out
        assert "Acc 1.0000" in out


class TestEvalAndCompare:
    def _labels(self, tmp_path, name, labels):
        path = tmp_path / name
        path.write_text("\n".join(labels) + "\n", encoding="utf-8")
        return path

    def test_eval_prints_summary(self, tmp_path, capsys):
        gold = self._labels(tmp_path, "gold.tsv", ["left"] * 4)
        pred = self._labels(tmp_path, "pred.tsv", ["left", "left", "right", "abstain"])
        assert run(["eval", "--gold", str(gold), "--pred", str(pred)]) == 0
        out = capsys.readouterr().out
        assert "2\t1\t1" in out
        assert "66.67" in out
        assert "75.00" in out

    def test_eval_length_mismatch_is_data_error(self, tmp_path, capsys):
        gold = self._labels(tmp_path, "gold.tsv", ["left"])
        pred = self._labels(tmp_path, "pred.tsv", ["left", "right"])
        assert run(["eval", "--gold", str(gold), "--pred", str(pred)]) == 2
        capsys.readouterr()

    def test_compare(self, tmp_path, capsys):
        gold = self._labels(tmp_path, "gold.tsv", ["left"] * 10)
        a = self._labels(tmp_path, "a.tsv", ["left"] * 9 + ["right"])
        b = self._labels(tmp_path, "b.tsv", ["left"] * 5 + ["right"] * 5)
        code = run(
            ["compare", "--gold", str(gold), "--pred", f"first={a}", "--pred", str(b)]
        )
        assert code == 0
        out = capsys.readouterr().out
        assert "first" in out and "b" in out
        assert "first vs b" in out
