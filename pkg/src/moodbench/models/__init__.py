"""The four bag-of-words classifiers behind one train / predict / persist API.

Labels map to ``1`` (depressive) and ``0`` (non-depressive) internally. Every
decision rule breaks ties towards depressive.
"""

from __future__ import annotations

import enum
import os
from dataclasses import asdict, dataclass, field, fields
from typing import Any, Mapping, Sequence

import numpy as np

from ..corpus import Label
from ..errors import DimensionMismatch, MissingClass
from ..features import SparseVector, Vocabulary, to_csr
from .forest import DecisionTree, ForestParams, fit_forest, grow_tree, tree_rng
from .logistic import LogisticParams, fit_logistic, loss_and_grad, sigmoid
from .naive_bayes import NaiveBayesParams, fit_naive_bayes
from .svm import SvmParams, fit_linear_svm

__all__ = [
    "DecisionTree",
    "ForestParams",
    "Hyperparams",
    "LinearSvmHyperparams",
    "LogisticRegressionHyperparams",
    "ModelKind",
    "NaiveBayesHyperparams",
    "RandomForestHyperparams",
    "TrainedModel",
    "grow_tree",
    "load_model",
    "loss_and_grad",
    "predict",
    "predict_many",
    "predict_score",
    "predict_scores",
    "save_model",
    "sigmoid",
    "train",
    "tree_rng",
]


class ModelKind(enum.Enum):
    LOGISTIC_REGRESSION = "logistic_regression"
    NAIVE_BAYES = "naive_bayes"
    LINEAR_SVM = "linear_svm"
    RANDOM_FOREST = "random_forest"

    @property
    def display_name(self):
        return _DISPLAY[self]

    @classmethod
    def parse(cls, value: str | ModelKind) -> ModelKind:
        if isinstance(value, cls):
            return value
        key = value.strip().lower()
        if key in _ALIASES:
            return _ALIASES[key]
        return cls(key)


_DISPLAY = {
    ModelKind.LOGISTIC_REGRESSION: "Logistic Regression",
    ModelKind.NAIVE_BAYES: "Naive Bayes",
    ModelKind.LINEAR_SVM: "SVM",
    ModelKind.RANDOM_FOREST: "Random Forest",
}
_ALIASES = {
    "lr": ModelKind.LOGISTIC_REGRESSION,
    "nb": ModelKind.NAIVE_BAYES,
    "svm": ModelKind.LINEAR_SVM,
    "rf": ModelKind.RANDOM_FOREST,
}

# Row order of the results table.
TABLE_ORDER = (
    ModelKind.LOGISTIC_REGRESSION,
    ModelKind.NAIVE_BAYES,
    ModelKind.LINEAR_SVM,
    ModelKind.RANDOM_FOREST,
)


@dataclass(frozen=True)
class NaiveBayesHyperparams:
    alpha: float = 1.0


@dataclass(frozen=True)
class LogisticRegressionHyperparams:
    l2_lambda: float = 1e-4
    learning_rate: float = 0.1
    decay: float = 0.01
    max_epochs: int = 1000
    tol: float = 1e-8


@dataclass(frozen=True)
class LinearSvmHyperparams:
    l2_lambda: float = 1e-4
    epochs: int = 20


@dataclass(frozen=True)
class RandomForestHyperparams:
    n_trees: int = 100
    max_depth: int | None = None
    min_samples_split: int = 2
    features_per_split: int | None = None  # None: floor(sqrt(V))
    bootstrap: bool = True


_HP_TYPES = {
    ModelKind.NAIVE_BAYES: NaiveBayesHyperparams,
    ModelKind.LOGISTIC_REGRESSION: LogisticRegressionHyperparams,
    ModelKind.LINEAR_SVM: LinearSvmHyperparams,
    ModelKind.RANDOM_FOREST: RandomForestHyperparams,
}


@dataclass(frozen=True)
class Hyperparams:
    """One settings block per model kind."""

    naive_bayes: NaiveBayesHyperparams = field(default_factory=NaiveBayesHyperparams)
    logistic_regression: LogisticRegressionHyperparams = field(
        default_factory=LogisticRegressionHyperparams
    )
    linear_svm: LinearSvmHyperparams = field(default_factory=LinearSvmHyperparams)
    random_forest: RandomForestHyperparams = field(default_factory=RandomForestHyperparams)

    def block(self, kind: ModelKind):
        return getattr(self, kind.value)

    def as_dict(self):
        return {f.name: asdict(getattr(self, f.name)) for f in fields(self)}


@dataclass(frozen=True)
class TrainedModel:
    kind: ModelKind
    dim: int
    params: Any
    hyperparams: Any
    seed: int = 0
    vocab: Vocabulary | None = None
    settings: Mapping[str, Any] = field(default_factory=dict)

    def scores(self, X):
        """Decision values for a CSR batch (dense for the forest)."""
        if self.kind is ModelKind.RANDOM_FOREST:
            X = X.toarray() if hasattr(X, "toarray") else X
        return self.params.decision_function(X)

    @property
    def threshold(self):
        if self.kind in (ModelKind.LOGISTIC_REGRESSION, ModelKind.RANDOM_FOREST):
            return 0.5
        return 0.0


def _labels_to_int(y):
    out = np.empty(len(y), dtype=np.int64)
    for i, label in enumerate(y):
        out[i] = 1 if Label(label) is Label.DEPRESSIVE else 0
    return out


def train(
    kind: ModelKind | str,
    x: Sequence[SparseVector],
    y: Sequence[Label],
    hp: Hyperparams | Any | None = None,
    seed: int = 0,
    *,
    vocab: Vocabulary | None = None,
    settings: Mapping[str, Any] | None = None,
    n_jobs: int | None = 1,
) -> TrainedModel:
    """Fit one classifier. Deterministic given data, hyperparameters and seed.

    ``hp`` may be a full :class:`Hyperparams` or the block for ``kind``.
    ``n_jobs`` only affects how forest trees are scheduled, never the result.
    """
    kind = ModelKind.parse(kind)
    if hp is None:
        hp = Hyperparams()
    block = hp.block(kind) if isinstance(hp, Hyperparams) else hp
    if not isinstance(block, _HP_TYPES[kind]):
        raise TypeError(f"{type(block).__name__} is not a hyperparameter block for {kind.value}")
    if len(x) != len(y):
        raise ValueError(f"{len(x)} vectors but {len(y)} labels")
    if len(x) < 2:
        raise ValueError("need at least two training examples")
    dim = len(vocab) if vocab is not None else x[0].dim
    X = to_csr(x, dim)
    yi = _labels_to_int(y)
    if not yi.any():
        raise MissingClass(Label.DEPRESSIVE)
    if yi.all():
        raise MissingClass(Label.NON_DEPRESSIVE)

    if kind is ModelKind.NAIVE_BAYES:
        params = fit_naive_bayes(X, yi, block.alpha)
    elif kind is ModelKind.LOGISTIC_REGRESSION:
        params = fit_logistic(X, yi, **asdict(block))
    elif kind is ModelKind.LINEAR_SVM:
        params = fit_linear_svm(X, yi, block.l2_lambda, block.epochs, seed)
    else:
        jobs = n_jobs if n_jobs and n_jobs > 0 else (os.cpu_count() or 1)
        params = fit_forest(X.toarray(), yi, seed=seed, n_jobs=jobs, **asdict(block))
    return TrainedModel(kind, dim, params, block, seed, vocab, dict(settings or {}))


def _check_dim(model, vectors):
    for v in vectors:
        if v.dim != model.dim:
            raise DimensionMismatch(model.dim, v.dim)


def predict_scores(model: TrainedModel, vectors: Sequence[SparseVector]) -> np.ndarray:
    _check_dim(model, vectors)
    if not vectors:
        return np.zeros(0)
    return model.scores(to_csr(vectors, model.dim))


def predict_score(model: TrainedModel, x: SparseVector) -> float:
    """NB: log-posterior margin; LR: probability; SVM: margin; RF: vote share."""
    return float(predict_scores(model, [x])[0])


def predict_many(model: TrainedModel, vectors: Sequence[SparseVector]) -> list[Label]:
    scores = predict_scores(model, vectors)
    return [Label.DEPRESSIVE if s >= model.threshold else Label.NON_DEPRESSIVE for s in scores]


def predict(model: TrainedModel, x: SparseVector) -> Label:
    return predict_many(model, [x])[0]


from .persist import load_model, save_model  # noqa: E402
