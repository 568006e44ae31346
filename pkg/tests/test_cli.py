import json
import subprocess
import sys

import pytest

from moodbench.cli import CliConfig, UsageError, main, parse_args
from moodbench.corpus import parse_labeled
from moodbench.models import ModelKind, load_model


def _run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture(scope="module")
def workdir(tmp_path_factory):
    root = tmp_path_factory.mktemp("cli")
    assert main(["synth", "--dep", "80", "--nondep", "70", "--seed", "1", "-o", str(root / "synth.jsonl")]) == 0
    assert main(["train", "--input", str(root / "synth.jsonl"), "--kind", "nb",
                 "-o", str(root / "nb.mdb")]) == 0
    return root


def test_parse_bench():
    cfg = parse_args(["bench", "--input", "corpus.jsonl", "--seed", "42"])
    assert isinstance(cfg, CliConfig)
    assert (cfg.command, cfg.seed, str(cfg.input)) == ("bench", 42, "corpus.jsonl")
    assert cfg.resolved()["normalizer"] == "lemmatize"


@pytest.mark.parametrize("argv", [
    ["train"],
    ["bench", "--input", "c.jsonl", "--seed", "abc"],
    ["bench", "--input", "c.jsonl", "--bogus"],
    ["bench", "--input", "c.jsonl", "--train-fraction", "1.5"],
    ["train", "--input", "c.jsonl", "--kind", "knn", "-o", "m"],
    ["synth", "--noise", "2"],
    [],
])
def test_usage_errors(argv, capsys):
    with pytest.raises(UsageError):
        parse_args(argv)
    assert main(argv) == 2
    assert capsys.readouterr().err


def test_synth_counts(workdir):
    corpus = parse_labeled(workdir / "synth.jsonl")
    assert len(corpus) == 150
    assert sum(lp.label.value == "depression" for lp in corpus) == 80


def test_predict_stdin(workdir, capsys, monkeypatch):
    import io

    monkeypatch.setattr(sys, "stdin", io.StringIO("I feel worthless and hopeless\nwhat a wonderful sunny day\n"))
    code, out, _ = _run(capsys, "predict", "--model", workdir / "nb.mdb")
    assert code == 0
    assert out.splitlines() == ["depression", "non-depression"]


def test_predict_file(workdir, tmp_path, capsys):
    text = tmp_path / "lines.txt"
    text.write_text("so tired and lonely\n", encoding="utf-8")
    code, out, _ = _run(capsys, "predict", "--model", workdir / "nb.mdb", "--input", text)
    assert (code, out) == (0, "depression\n")


def test_evaluate_table_and_csv(workdir, capsys):
    code, out, _ = _run(capsys, "evaluate", "--model", workdir / "nb.mdb", "--input", workdir / "synth.jsonl")
    assert code == 0
    assert out.splitlines()[0].split() == ["Model", "Accuracy", "(%)"]
    assert out.splitlines()[1].startswith("Naive Bayes")
    code, out, _ = _run(capsys, "evaluate", "--model", workdir / "nb.mdb", "--input", workdir / "synth.jsonl",
                        "--format", "csv")
    assert out.splitlines()[0] == "model,accuracy,precision,recall,f1"


def test_evaluate_empty_test_set(workdir, tmp_path, capsys):
    empty = tmp_path / "empty.jsonl"
    empty.write_text("", encoding="utf-8")
    code, _, err = _run(capsys, "evaluate", "--model", workdir / "nb.mdb", "--input", empty)
    assert code == 1
    assert err.strip() == "moodbench: empty test set"
    assert len(err.splitlines()) == 1


def test_missing_file_is_runtime_error(tmp_path, capsys):
    code, _, err = _run(capsys, "ingest", "--input", tmp_path / "nope.jsonl")
    assert code == 1 and err.startswith("moodbench: ")


def test_corrupt_model_is_runtime_error(tmp_path, capsys):
    bad = tmp_path / "bad.mdb"
    bad.write_bytes(b"garbage\n")
    code, _, err = _run(capsys, "predict", "--model", bad, "--input", bad)
    assert code == 1 and err.startswith("moodbench: ")


def test_ingest_and_label(tmp_path, capsys):
    raw = tmp_path / "raw.jsonl"
    raw.write_text(
        json.dumps({"id": "a", "subreddit": "depression", "title": "I feel lost",
                    "selftext": "I'm unhappy", "created_utc": 1650000000.0}) + "\n"
        + json.dumps({"id": "b", "subreddit": "Happy", "title": "sunny",
                      "selftext": "so sad the day ended", "created_utc": 1650000001}) + "\n",
        encoding="utf-8",
    )
    clean = tmp_path / "clean.jsonl"
    assert _run(capsys, "ingest", "--input", raw, "-o", clean)[0] == 0
    labeled = tmp_path / "labeled.jsonl"
    assert _run(capsys, "label", "--input", clean, "-o", labeled)[0] == 0
    records = [json.loads(line) for line in labeled.read_text(encoding="utf-8").splitlines()]
    assert [(r["label"], r["label_source"]) for r in records] == [
        ("depression", "lexicon_match"),
        ("non-depression", "subreddit_ground_truth"),
    ]


def test_lexicon_env_and_flag(tmp_path, capsys, monkeypatch):
    posts = tmp_path / "posts.jsonl"
    posts.write_text(json.dumps({"id": "x", "subreddit": "depression", "title": "",
                                 "selftext": "the weather is gloomy", "created_utc": 1}) + "\n",
                     encoding="utf-8")
    lex = tmp_path / "lex.txt"
    lex.write_text("gloomy\n", encoding="utf-8")
    empty_lex = tmp_path / "other.txt"
    empty_lex.write_text("sad\n", encoding="utf-8")

    def label_of(*extra):
        code, out, err = _run(capsys, "label", "--input", posts, *extra)
        assert code == 0, err
        return json.loads(out)["label"]

    assert label_of() == "non-depression"
    monkeypatch.setenv("MOODBENCH_LEXICON", str(lex))
    assert label_of() == "depression"
    assert label_of("--lexicon", empty_lex) == "non-depression"


def test_train_kinds_and_idempotence(workdir, tmp_path, capsys):
    for kind in ("lr", "svm", "rf"):
        a, b = tmp_path / f"{kind}1.mdb", tmp_path / f"{kind}2.mdb"
        for path in (a, b):
            assert _run(capsys, "train", "--input", workdir / "synth.jsonl", "--kind", kind,
                        "--seed", 3, "-o", path)[0] == 0
        assert a.read_bytes() == b.read_bytes()
        assert load_model(a).kind is ModelKind.parse(kind)


def test_synth_idempotent(tmp_path, capsys):
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    for path in (a, b):
        assert _run(capsys, "synth", "--dep", 10, "--nondep", 10, "-o", path)[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_bench_report_embeds_provenance(workdir, tmp_path, capsys):
    code, out, _ = _run(capsys, "bench", "--input", workdir / "synth.jsonl", "--seed", 5)
    assert code == 0
    header = [line for line in out.splitlines() if line.startswith("#")]
    body = [line for line in out.splitlines() if not line.startswith("#")]
    assert "# seed: 5" in header
    assert any(line.startswith("# corpus_sha256: ") for line in header)
    config = json.loads(next(line for line in header if line.startswith("# config: "))[len("# config: "):])
    assert config["train_fraction"] == 0.8 and config["normalizer"] == "lemmatize"
    assert len(body) == 5


def test_module_entry_point(tmp_path):
    done = subprocess.run([sys.executable, "-m", "moodbench", "--help"], capture_output=True, text=True)
    assert done.returncode == 0
    assert "bench" in done.stdout
