"""Metrics, the four-model benchmark, and results-table rendering."""

from __future__ import annotations

import csv
import hashlib
import io
import math
from dataclasses import dataclass, field
from decimal import Decimal
from fractions import Fraction
from typing import Any, Sequence

from .corpus import Label, LabeledPost, SplitSpec, dumps_labeled, stratified_split
from .errors import EmptyTestSet
from .features import SparseVector, build_vocabulary, vectorize_corpus
from .models import TABLE_ORDER, Hyperparams, ModelKind, TrainedModel, predict_many, train
from .textpipe import Normalizer, Pipeline, PipelineConfig

__all__ = [
    "BenchConfig",
    "BenchmarkResult",
    "ConfusionMatrix",
    "MetricsReport",
    "evaluate",
    "format_percent",
    "parse_report_csv",
    "render_report",
    "run_benchmark",
]


@dataclass(frozen=True)
class ConfusionMatrix:
    """Counts with depressive as the positive class."""

    tp: int = 0
    fp: int = 0
    tn: int = 0
    fn: int = 0

    @classmethod
    def from_labels(cls, y_true: Sequence[Label], y_pred: Sequence[Label]) -> ConfusionMatrix:
        tp = fp = tn = fn = 0
        for t, p in zip(y_true, y_pred, strict=True):
            if p is Label.DEPRESSIVE:
                if t is Label.DEPRESSIVE:
                    tp += 1
                else:
                    fp += 1
            elif t is Label.DEPRESSIVE:
                fn += 1
            else:
                tn += 1
        return cls(tp, fp, tn, fn)

    @property
    def total(self):
        return self.tp + self.fp + self.tn + self.fn

    @property
    def accuracy(self) -> Fraction:
        return Fraction(self.tp + self.tn, self.total) if self.total else Fraction(0)

    @property
    def precision(self) -> Fraction:
        d = self.tp + self.fp
        return Fraction(self.tp, d) if d else Fraction(0)

    @property
    def recall(self) -> Fraction:
        d = self.tp + self.fn
        return Fraction(self.tp, d) if d else Fraction(0)

    @property
    def f1(self) -> Fraction:
        p, r = self.precision, self.recall
        return 2 * p * r / (p + r) if p + r else Fraction(0)


@dataclass(frozen=True)
class MetricsReport:
    """Exact rational metrics for one model on one test set."""

    accuracy: Fraction
    precision: Fraction
    recall: Fraction
    f1: Fraction
    confusion: ConfusionMatrix | None = None
    n_train: int | None = None
    n_test: int | None = None
    seed: int | None = None

    @classmethod
    def from_confusion(cls, cm: ConfusionMatrix, **extra) -> MetricsReport:
        return cls(cm.accuracy, cm.precision, cm.recall, cm.f1, cm, **extra)


def evaluate(
    model: TrainedModel, x: Sequence[SparseVector], y: Sequence[Label], **extra
) -> MetricsReport:
    if len(x) == 0:
        raise EmptyTestSet()
    if len(x) != len(y):
        raise ValueError(f"{len(x)} vectors but {len(y)} labels")
    cm = ConfusionMatrix.from_labels(list(y), predict_many(model, x))
    return MetricsReport.from_confusion(cm, n_test=len(x), **extra)


# ---------------------------------------------------------------- benchmark

@dataclass(frozen=True)
class BenchConfig:
    split: SplitSpec = field(default_factory=SplitSpec)
    normalizer: Normalizer = Normalizer.LEMMATIZE
    min_df: int = 1
    vocab_from_all: bool = False
    hyperparams: Hyperparams = field(default_factory=Hyperparams)
    n_jobs: int = 1

    def describe(self) -> dict[str, Any]:
        return {
            "train_fraction": self.split.train_fraction,
            "split_seed": self.split.seed,
            "normalizer": Normalizer(self.normalizer).value,
            "min_df": self.min_df,
            "vocab_from_all": self.vocab_from_all,
            "hyperparams": self.hyperparams.as_dict(),
        }


@dataclass
class BenchmarkResult:
    rows: list[tuple[ModelKind, MetricsReport]]
    models: dict[ModelKind, TrainedModel]
    config: BenchConfig
    seed: int
    corpus_sha256: str
    n_train: int
    n_test: int
    vocab_size: int

    def __iter__(self):
        return iter(self.rows)

    def __len__(self):
        return len(self.rows)


def corpus_checksum(corpus: Sequence[LabeledPost]) -> str:
    return hashlib.sha256(dumps_labeled(corpus).encode("utf-8")).hexdigest()


def run_benchmark(
    corpus: Sequence[LabeledPost], config: BenchConfig | None = None, seed: int = 42
) -> BenchmarkResult:
    """Split once, featurize once, then train and score all four models.

    Rows come back in table order: LR, NB, SVM, RF.
    """
    config = config or BenchConfig()
    train_set, test_set = stratified_split(corpus, config.split)
    pipeline = Pipeline(PipelineConfig(normalizer=config.normalizer))
    train_docs = [pipeline(lp.post.text, lp.post.id) for lp in train_set]
    test_docs = [pipeline(lp.post.text, lp.post.id) for lp in test_set]
    vocab_docs = train_docs + test_docs if config.vocab_from_all else train_docs
    vocab = build_vocabulary(vocab_docs, config.min_df)
    x_train = vectorize_corpus(train_docs, vocab)
    x_test = vectorize_corpus(test_docs, vocab)
    y_train = [lp.label for lp in train_set]
    y_test = [lp.label for lp in test_set]
    settings = {"normalizer": pipeline.normalizer.value}

    rows = []
    models = {}
    for kind in TABLE_ORDER:
        model = train(
            kind, x_train, y_train, config.hyperparams, seed,
            vocab=vocab, settings=settings, n_jobs=config.n_jobs,
        )
        models[kind] = model
        report = evaluate(model, x_test, y_test, n_train=len(x_train), seed=seed)
        rows.append((kind, report))
    return BenchmarkResult(
        rows, models, config, seed, corpus_checksum(corpus),
        len(train_set), len(test_set), len(vocab),
    )


# ---------------------------------------------------------------- rendering

def format_percent(value: Fraction) -> str:
    """Render a proportion as a percentage with two decimals, half-up."""
    hundredths = Fraction(value) * 10000
    sign = "-" if hundredths < 0 else ""
    n = math.floor(abs(hundredths) + Fraction(1, 2))
    return f"{sign}{n // 100}.{n % 100:02d}"


def _name(kind):
    return kind.display_name if isinstance(kind, ModelKind) else str(kind)


def render_report(results, format: str = "table") -> str:
    """Render ``(kind, MetricsReport)`` rows.

    ``table``: the two-column Model / Accuracy (%) layout. ``csv``: header
    ``model,accuracy,precision,recall,f1`` with percentages to two decimals.
    """
    rows = list(results)
    if not rows:
        raise ValueError("nothing to render")
    if format == "table":
        header = ("Model", "Accuracy (%)")
        body = [(_name(k), format_percent(r.accuracy)) for k, r in rows]
        w0 = max(len(header[0]), *(len(n) for n, _ in body))
        w1 = max(len(header[1]), *(len(a) for _, a in body))
        lines = [f"{header[0]:<{w0}}  {header[1]:>{w1}}"]
        lines += [f"{n:<{w0}}  {a:>{w1}}" for n, a in body]
        return "\n".join(lines) + "\n"
    if format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["model", "accuracy", "precision", "recall", "f1"])
        for k, r in rows:
            writer.writerow(
                [_name(k)] + [format_percent(v) for v in (r.accuracy, r.precision, r.recall, r.f1)]
            )
        return buf.getvalue()
    raise ValueError(f"unknown report format {format!r}")


def parse_report_csv(text: str) -> list[dict[str, Any]]:
    """Inverse of ``render_report(..., "csv")``; ``#`` comment lines are skipped."""
    lines = [ln for ln in text.splitlines() if ln and not ln.startswith("#")]
    out = []
    for rec in csv.DictReader(lines):
        row = {"model": rec["model"]}
        for key in ("accuracy", "precision", "recall", "f1"):
            row[key] = Decimal(rec[key])
        out.append(row)
    return out
