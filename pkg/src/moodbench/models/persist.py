"""Model file format.

A model file is UTF-8 text in three parts::

    MDB1 <format version>
    <canonical JSON body>
    sha256 <hex digest of the JSON body line>

The JSON body is written with sorted keys and no insignificant whitespace,
so identical models serialise to identical bytes. Floats use Python's
shortest round-trip repr, which makes load(save(m)) bit-exact. The body
holds ``kind``, ``seed``, ``dim``, ``hyperparams``, ``settings``,
``vocabulary`` (``token<TAB>id`` lines, or null) and the kind-specific
``params`` payload.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import asdict
from pathlib import Path

from ..errors import CorruptModel, VersionMismatch
from ..features import Vocabulary
from . import _HP_TYPES, ModelKind, TrainedModel
from .forest import ForestParams
from .logistic import LogisticParams
from .naive_bayes import NaiveBayesParams
from .svm import SvmParams

MAGIC = "MDB1"
FORMAT_VERSION = 1

_PARAM_TYPES = {
    ModelKind.NAIVE_BAYES: NaiveBayesParams,
    ModelKind.LOGISTIC_REGRESSION: LogisticParams,
    ModelKind.LINEAR_SVM: SvmParams,
    ModelKind.RANDOM_FOREST: ForestParams,
}


def dumps_model(model: TrainedModel) -> bytes:
    body = {
        "kind": model.kind.value,
        "seed": model.seed,
        "dim": model.dim,
        "hyperparams": asdict(model.hyperparams),
        "settings": dict(model.settings),
        "vocabulary": None if model.vocab is None else model.vocab.to_text(),
        "min_df": None if model.vocab is None else model.vocab.min_df,
        "params": model.params.to_payload(),
    }
    text = json.dumps(body, sort_keys=True, separators=(",", ":"), ensure_ascii=False)
    digest = hashlib.sha256(text.encode("utf-8")).hexdigest()
    return f"{MAGIC} {FORMAT_VERSION}\n{text}\nsha256 {digest}\n".encode("utf-8")


def loads_model(data: bytes) -> TrainedModel:
    if not data.startswith(MAGIC.encode("ascii")):
        raise CorruptModel("not a model file (bad magic)")
    try:
        header, body, trailer = data.decode("utf-8").rstrip("\n").split("\n")
    except (UnicodeDecodeError, ValueError):
        raise CorruptModel("model file is truncated or malformed") from None
    parts = header.split(" ")
    if len(parts) != 2 or parts[0] != MAGIC or not parts[1].isdigit():
        raise CorruptModel("malformed header line")
    if int(parts[1]) != FORMAT_VERSION:
        raise VersionMismatch(int(parts[1]), FORMAT_VERSION)
    algo, _, digest = trailer.partition(" ")
    if algo != "sha256" or hashlib.sha256(body.encode("utf-8")).hexdigest() != digest:
        raise CorruptModel("checksum mismatch")
    try:
        obj = json.loads(body)
        kind = ModelKind(obj["kind"])
        dim = int(obj["dim"])
        hp = _HP_TYPES[kind](**obj["hyperparams"])
        vocab = None
        if obj["vocabulary"] is not None:
            vocab = Vocabulary.from_text(obj["vocabulary"], obj["min_df"])
        params = _PARAM_TYPES[kind].from_payload(obj["params"], dim)
    except (KeyError, TypeError, ValueError) as exc:
        raise CorruptModel(f"invalid model body: {exc}") from exc
    return TrainedModel(kind, dim, params, hp, int(obj["seed"]), vocab, obj["settings"])


def save_model(model: TrainedModel, path) -> None:
    Path(path).write_bytes(dumps_model(model))


def load_model(path) -> TrainedModel:
    return loads_model(Path(path).read_bytes())
