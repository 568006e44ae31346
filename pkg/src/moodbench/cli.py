"""``moodbench`` command line.

Subcommands: ingest, label, synth, train, evaluate, predict, bench. Exit
status is 0 on success, 1 on a runtime error and 2 on a usage error. All
randomness comes from ``--seed``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Sequence

from .corpus import (
    SplitSpec,
    bundled_lexicon,
    dumps_labeled,
    dumps_posts,
    label_corpus,
    load_lexicon,
    parse_labeled,
    parse_posts,
)
from .errors import MoodbenchError
from .evaluation import BenchConfig, evaluate, render_report, run_benchmark
from .features import build_vocabulary, vectorize_corpus
from .models import Hyperparams, ModelKind, load_model, predict_many, save_model, train
from .models.persist import dumps_model
from .synthetic import generate_synthetic
from .textpipe import Normalizer, Pipeline, PipelineConfig

LEXICON_ENV = "MOODBENCH_LEXICON"
COMMANDS = ("ingest", "label", "synth", "train", "evaluate", "predict", "bench")


class UsageError(MoodbenchError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _seed(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid seed {text!r}") from None
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return value


def _fraction(text):
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid fraction {text!r}") from None
    if not 0 < value < 1:
        raise argparse.ArgumentTypeError("train fraction must be in (0, 1)")
    return value


def _unit(text):
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid probability {text!r}") from None
    if not 0 <= value <= 1:
        raise argparse.ArgumentTypeError("noise must be in [0, 1]")
    return value


def _positive(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid count {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError("count must be >= 1")
    return value


def _kind(text):
    try:
        return ModelKind.parse(text)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"unknown model kind {text!r} (choose from nb, lr, svm, rf)"
        ) from None


@dataclass
class CliConfig:
    command: str
    input: Path | None = None
    output: Path | None = None
    lexicon: Path | None = None
    model: Path | None = None
    kind: ModelKind = ModelKind.RANDOM_FOREST
    seed: int = 42
    train_fraction: float = 0.8
    normalizer: Normalizer = Normalizer.LEMMATIZE
    min_df: int = 1
    noise: float = 0.05
    n_dep: int = 1441
    n_nondep: int = 1165
    threshold: int = 1
    format: str = "table"
    vocab_from_all: bool = False
    model_dir: Path | None = None
    jobs: int = 1
    extra: dict[str, Any] = field(default_factory=dict)

    def resolved(self) -> dict[str, Any]:
        out = {}
        for key, value in vars(self).items():
            if key == "extra":
                continue
            if isinstance(value, (Path, ModelKind, Normalizer)):
                value = str(value.value if hasattr(value, "value") else value)
            out[key] = value
        return out


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="moodbench", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_text):
        return sub.add_parser(name, help=help_text, description=help_text)

    def normalizer_flag(p):
        p.add_argument(
            "--normalizer", type=Normalizer, choices=list(Normalizer),
            default=Normalizer.LEMMATIZE, metavar="{lemmatize,stem,none}",
        )

    def lexicon_flag(p):
        p.add_argument("--lexicon", type=Path, help=f"lexicon file (default: ${LEXICON_ENV} or bundled)")

    p = add("ingest", "validate a raw post dump and write it as normalised JSONL")
    p.add_argument("--input", type=Path, required=True)
    p.add_argument("-o", "--output", type=Path)

    p = add("label", "weakly label posts with the lexicon")
    p.add_argument("--input", type=Path, required=True)
    p.add_argument("-o", "--output", type=Path)
    p.add_argument("--threshold", type=_positive, default=1)
    lexicon_flag(p)
    normalizer_flag(p)

    p = add("synth", "generate a synthetic labelled corpus")
    p.add_argument("--dep", dest="n_dep", type=_positive, default=1441)
    p.add_argument("--nondep", dest="n_nondep", type=_positive, default=1165)
    p.add_argument("--noise", type=_unit, default=0.05)
    p.add_argument("--seed", type=_seed, default=42)
    p.add_argument("-o", "--output", type=Path)
    lexicon_flag(p)

    p = add("train", "fit one model on a labelled corpus and write a model file")
    p.add_argument("--input", type=Path, required=True)
    p.add_argument("--kind", type=_kind, default=ModelKind.RANDOM_FOREST, help="nb, lr, svm or rf")
    p.add_argument("--seed", type=_seed, default=42)
    p.add_argument("--min-df", type=_positive, default=1)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("-o", "--output", type=Path, required=True)
    normalizer_flag(p)

    p = add("evaluate", "score a model on a labelled corpus")
    p.add_argument("--model", type=Path, required=True)
    p.add_argument("--input", type=Path, required=True)
    p.add_argument("--format", choices=("table", "csv"), default="table")
    p.add_argument("-o", "--output", type=Path)

    p = add("predict", "label raw text, one line in, one label out")
    p.add_argument("--model", type=Path, required=True)
    p.add_argument("--input", type=Path, help="text file (default: stdin)")
    p.add_argument("-o", "--output", type=Path)

    p = add("bench", "split, train all four models and report accuracy")
    p.add_argument("--input", type=Path, required=True)
    p.add_argument("--seed", type=_seed, default=42)
    p.add_argument("--train-fraction", type=_fraction, default=0.8)
    p.add_argument("--min-df", type=_positive, default=1)
    p.add_argument("--vocab-from-all", action="store_true",
                   help="build the vocabulary from train and test documents")
    p.add_argument("--format", choices=("table", "csv"), default="table")
    p.add_argument("--model-dir", type=Path, help="also write the four model files here")
    p.add_argument("--jobs", type=int, default=1, help="threads for forest training")
    p.add_argument("-o", "--output", type=Path)
    normalizer_flag(p)
    return parser


def parse_args(argv: Sequence[str] | None = None) -> CliConfig:
    """Parse ``argv`` into a :class:`CliConfig`; raises :class:`UsageError`."""
    ns = build_parser().parse_args(argv)
    values = {k: v for k, v in vars(ns).items() if v is not None}
    return CliConfig(**values)


def _write_text(text, path):
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        Path(path).write_text(text, encoding="utf-8")


def _lexicon(config, pipeline):
    path = config.lexicon or os.environ.get(LEXICON_ENV)
    return load_lexicon(path, pipeline) if path else bundled_lexicon(pipeline)


def _model_pipeline(model):
    return Pipeline(PipelineConfig(normalizer=model.settings.get("normalizer", "lemmatize")))


def _cmd_ingest(config):
    _write_text(dumps_posts(parse_posts(config.input)), config.output)


def _cmd_label(config):
    pipeline = Pipeline(PipelineConfig(normalizer=config.normalizer))
    lexicon = _lexicon(config, pipeline)
    posts = parse_posts(config.input)
    _write_text(dumps_labeled(label_corpus(posts, lexicon, pipeline, config.threshold)), config.output)


def _cmd_synth(config):
    pipeline = Pipeline()
    lexicon = _lexicon(config, pipeline)
    corpus = generate_synthetic(
        config.n_dep, config.n_nondep, config.noise, config.seed, lexicon, pipeline
    )
    _write_text(dumps_labeled(corpus), config.output)


def _cmd_train(config):
    corpus = parse_labeled(config.input)
    pipeline = Pipeline(PipelineConfig(normalizer=config.normalizer))
    docs = [pipeline(lp.post.text, lp.post.id) for lp in corpus]
    vocab = build_vocabulary(docs, config.min_df)
    model = train(
        config.kind, vectorize_corpus(docs, vocab), [lp.label for lp in corpus],
        Hyperparams(), config.seed, vocab=vocab,
        settings={"normalizer": pipeline.normalizer.value}, n_jobs=config.jobs,
    )
    save_model(model, config.output)


def _load_with_vocab(path):
    model = load_model(path)
    if model.vocab is None:
        raise MoodbenchError(f"model {path} carries no vocabulary")
    return model


def _cmd_evaluate(config):
    model = _load_with_vocab(config.model)
    corpus = parse_labeled(config.input)
    pipeline = _model_pipeline(model)
    x = vectorize_corpus([pipeline(lp.post.text) for lp in corpus], model.vocab)
    report = evaluate(model, x, [lp.label for lp in corpus], seed=model.seed)
    _write_text(render_report([(model.kind, report)], config.format), config.output)


def _cmd_predict(config):
    model = _load_with_vocab(config.model)
    pipeline = _model_pipeline(model)
    if config.input is None:
        lines = sys.stdin.read().splitlines()
    else:
        lines = config.input.read_text(encoding="utf-8").splitlines()
    x = vectorize_corpus([pipeline(line) for line in lines], model.vocab)
    labels = predict_many(model, x)
    _write_text("".join(f"{label.value}\n" for label in labels), config.output)


def bench_report(result, fmt="table") -> str:
    """Results table preceded by ``#`` lines that pin down the run."""
    header = [
        "# moodbench bench",
        f"# seed: {result.seed}",
        f"# corpus_sha256: {result.corpus_sha256}",
        f"# split: train={result.n_train} test={result.n_test} vocab={result.vocab_size}",
        "# config: " + json.dumps(result.config.describe(), sort_keys=True),
    ]
    return "\n".join(header) + "\n" + render_report(result.rows, fmt)


def _cmd_bench(config):
    corpus = parse_labeled(config.input)
    bench = BenchConfig(
        split=SplitSpec(config.train_fraction, config.seed),
        normalizer=config.normalizer,
        min_df=config.min_df,
        vocab_from_all=config.vocab_from_all,
        n_jobs=config.jobs,
    )
    result = run_benchmark(corpus, bench, config.seed)
    if config.model_dir is not None:
        config.model_dir.mkdir(parents=True, exist_ok=True)
        for kind, model in result.models.items():
            (config.model_dir / f"{kind.value}.mdb").write_bytes(dumps_model(model))
    _write_text(bench_report(result, config.format), config.output)


_HANDLERS = {
    "ingest": _cmd_ingest,
    "label": _cmd_label,
    "synth": _cmd_synth,
    "train": _cmd_train,
    "evaluate": _cmd_evaluate,
    "predict": _cmd_predict,
    "bench": _cmd_bench,
}


def execute(config: CliConfig) -> int:
    try:
        _HANDLERS[config.command](config)
    except (MoodbenchError, OSError, ValueError) as exc:
        print(f"moodbench: {exc}", file=sys.stderr)
        return 1
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    try:
        config = parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 2
    return execute(config)


if __name__ == "__main__":
    sys.exit(main())
