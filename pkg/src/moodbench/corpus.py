"""Post ingestion, lexicon-based weak labelling and train/test splitting.

Post dumps are JSONL in the Pushshift submission layout (``id``, ``subreddit``,
``title``, ``selftext``, ``created_utc``, ``score``). Labelled corpora add
``label`` and ``label_source`` to each record.
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import DuplicateId, EmptyLexicon, MalformedRecord, MissingClass
from .textpipe import Pipeline, PipelineConfig, tokenize

__all__ = [
    "GROUND_TRUTH_SUBREDDIT",
    "Label",
    "LabelSource",
    "LabeledPost",
    "Lexicon",
    "Post",
    "SplitSpec",
    "bundled_lexicon",
    "dumps_labeled",
    "dumps_posts",
    "label_corpus",
    "label_post",
    "load_lexicon",
    "parse_labeled",
    "parse_lexicon",
    "parse_posts",
    "stratified_split",
    "write_labeled",
    "write_posts",
]

GROUND_TRUTH_SUBREDDIT = "happy"


class Label(enum.Enum):
    DEPRESSIVE = "depression"
    NON_DEPRESSIVE = "non-depression"

    def __str__(self):
        return self.value


class LabelSource(enum.Enum):
    LEXICON_MATCH = "lexicon_match"
    SUBREDDIT_GROUND_TRUTH = "subreddit_ground_truth"
    MANUAL = "manual"


@dataclass(frozen=True)
class Post:
    id: str
    subreddit: str = ""
    title: str = ""
    body: str = ""
    created_utc: int = 0
    score: int = 0

    def __post_init__(self):
        if not self.id:
            raise ValueError("post id must be non-empty")
        if self.created_utc < 0:
            raise ValueError("created_utc must be >= 0")

    @property
    def text(self) -> str:
        return f"{self.title} {self.body}"


@dataclass(frozen=True)
class LabeledPost:
    post: Post
    label: Label
    source: LabelSource = LabelSource.MANUAL


# ---------------------------------------------------------------- JSONL I/O

def _post_record(post):
    return {
        "id": post.id,
        "subreddit": post.subreddit,
        "title": post.title,
        "selftext": post.body,
        "created_utc": post.created_utc,
        "score": post.score,
    }


def _dump_line(record):
    return json.dumps(record, ensure_ascii=False) + "\n"


def dumps_posts(posts: Iterable[Post]) -> str:
    return "".join(_dump_line(_post_record(p)) for p in posts)


def dumps_labeled(corpus: Iterable[LabeledPost]) -> str:
    lines = []
    for lp in corpus:
        record = _post_record(lp.post)
        record["label"] = lp.label.value
        record["label_source"] = lp.source.value
        lines.append(_dump_line(record))
    return "".join(lines)


def write_posts(posts, path):
    Path(path).write_text(dumps_posts(posts), encoding="utf-8")


def write_labeled(corpus, path):
    Path(path).write_text(dumps_labeled(corpus), encoding="utf-8")


def _optional_str(record, key, line_no):
    value = record.get(key)
    if value is None:
        return ""
    if not isinstance(value, str):
        raise MalformedRecord(line_no, f"field {key!r} must be a string")
    return value


def _optional_int(record, key, line_no):
    value = record.get(key)
    if value is None:
        return 0
    # Pushshift occasionally emits integral floats for timestamps.
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise MalformedRecord(line_no, f"field {key!r} must be an integer")
    if isinstance(value, float):
        if not value.is_integer():
            raise MalformedRecord(line_no, f"field {key!r} must be an integer")
        value = int(value)
    return value


def _record_to_post(record, line_no):
    if not isinstance(record, dict):
        raise MalformedRecord(line_no, "expected a JSON object")
    post_id = record.get("id")
    if not isinstance(post_id, str) or not post_id:
        raise MalformedRecord(line_no, "missing or empty 'id'")
    if record.get("title") is None and record.get("selftext") is None:
        raise MalformedRecord(line_no, "record has neither 'title' nor 'selftext'")
    created = _optional_int(record, "created_utc", line_no)
    if created < 0:
        raise MalformedRecord(line_no, "negative 'created_utc'")
    return Post(
        id=post_id,
        subreddit=_optional_str(record, "subreddit", line_no),
        title=_optional_str(record, "title", line_no),
        body=_optional_str(record, "selftext", line_no),
        created_utc=created,
        score=_optional_int(record, "score", line_no),
    )


def _iter_records(path):
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                yield line_no, json.loads(line)
            except json.JSONDecodeError:
                raise MalformedRecord(line_no, "invalid JSON") from None


def parse_posts(path, format: str = "jsonl") -> list[Post]:
    """Read a post dump, preserving file order.

    Raises :class:`MalformedRecord` for a bad line and :class:`DuplicateId`
    when an id repeats. Unknown fields are ignored.
    """
    if format != "jsonl":
        raise ValueError(f"unsupported format {format!r}")
    posts = []
    seen = set()
    for line_no, record in _iter_records(path):
        post = _record_to_post(record, line_no)
        if post.id in seen:
            raise DuplicateId(post.id)
        seen.add(post.id)
        posts.append(post)
    return posts


def parse_labeled(path) -> list[LabeledPost]:
    corpus = []
    seen = set()
    for line_no, record in _iter_records(path):
        post = _record_to_post(record, line_no)
        if post.id in seen:
            raise DuplicateId(post.id)
        seen.add(post.id)
        try:
            label = Label(record.get("label"))
        except ValueError:
            raise MalformedRecord(line_no, "missing or unknown 'label'") from None
        try:
            source = LabelSource(record.get("label_source", LabelSource.MANUAL.value))
        except ValueError:
            raise MalformedRecord(line_no, "unknown 'label_source'") from None
        corpus.append(LabeledPost(post, label, source))
    return corpus


# ------------------------------------------------------------------ lexicon

@dataclass(frozen=True)
class Lexicon:
    entries: frozenset[str]
    name: str = "lexicon"
    version: str = "unversioned"

    def __post_init__(self):
        entries = frozenset(self.entries)
        if not entries:
            raise EmptyLexicon(self.name)
        for e in entries:
            if not e or e != e.lower() or any(ch.isspace() for ch in e):
                raise ValueError(f"invalid lexicon entry {e!r}")
        object.__setattr__(self, "entries", entries)

    def __contains__(self, lemma):
        return lemma in self.entries

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(sorted(self.entries))

    def union(self, other: Lexicon | Iterable[str], name: str | None = None) -> Lexicon:
        extra = other.entries if isinstance(other, Lexicon) else frozenset(other)
        return Lexicon(self.entries | extra, name or self.name, self.version)


def _as_pipeline(pipeline):
    if pipeline is None or isinstance(pipeline, PipelineConfig):
        return Pipeline(pipeline)
    return pipeline


def parse_lexicon(text: str, pipeline=None, name="lexicon", source="") -> Lexicon:
    """Parse lexicon file contents; entries are lemma-normalised with ``pipeline``."""
    pipeline = _as_pipeline(pipeline)
    version = "unversioned"
    entries = set()
    for line_no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            key, _, value = line[1:].partition(":")
            if key.strip() == "name" and value.strip():
                name = value.strip()
            elif key.strip() == "version" and value.strip():
                version = value.strip()
            continue
        tokens = tokenize(line)
        if len(tokens) != 1:
            raise MalformedRecord(line_no, f"lexicon entry {line!r} is not a single word")
        entries.add(pipeline.normalize_token(tokens[0]))
    if not entries:
        raise EmptyLexicon(source or name)
    return Lexicon(frozenset(entries), name, version)


def load_lexicon(path, pipeline=None) -> Lexicon:
    path = Path(path)
    return parse_lexicon(path.read_text(encoding="utf-8"), pipeline, name=path.stem, source=str(path))


def bundled_lexicon(pipeline=None) -> Lexicon:
    """The seven core keywords merged with the curated extension list."""
    pipeline = _as_pipeline(pipeline)
    data = resources.files("moodbench").joinpath("data")
    core = parse_lexicon(data.joinpath("lexicon_core.txt").read_text("utf-8"), pipeline)
    ext = parse_lexicon(data.joinpath("lexicon_extended.txt").read_text("utf-8"), pipeline)
    return Lexicon(core.entries | ext.entries, "depression-bundled", core.version)


# ---------------------------------------------------------------- labelling

def label_post(
    post: Post, lexicon: Lexicon, pipeline=None, threshold: int = 1
) -> tuple[Label, list[str]]:
    """Weakly label a post by lexicon hits on its lemmatised title and body.

    Returns the label and the distinct matched lemmas in order of first
    occurrence. A post is depressive when at least ``threshold`` distinct
    lexicon lemmas occur.
    """
    pipeline = _as_pipeline(pipeline)
    doc = pipeline(post.text)
    matched = list(dict.fromkeys(tok for tok in doc.tokens if tok in lexicon))
    label = Label.DEPRESSIVE if len(matched) >= threshold else Label.NON_DEPRESSIVE
    return label, matched


def label_corpus(
    posts: Sequence[Post], lexicon: Lexicon, pipeline=None, threshold: int = 1
) -> list[LabeledPost]:
    """Label every post; r/Happy submissions are non-depressive ground truth."""
    pipeline = _as_pipeline(pipeline)
    out = []
    for post in posts:
        if post.subreddit.lower() == GROUND_TRUTH_SUBREDDIT:
            out.append(LabeledPost(post, Label.NON_DEPRESSIVE, LabelSource.SUBREDDIT_GROUND_TRUTH))
            continue
        label, _ = label_post(post, lexicon, pipeline, threshold)
        out.append(LabeledPost(post, label, LabelSource.LEXICON_MATCH))
    return out


# ----------------------------------------------------------------- splitting

@dataclass(frozen=True)
class SplitSpec:
    train_fraction: float = 0.8
    seed: int = 42

    def __post_init__(self):
        if not 0 < self.train_fraction < 1:
            raise ValueError("train_fraction must be in (0, 1)")
        if self.seed < 0 or self.seed >= 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")

    def n_train(self, count: int) -> int:
        # Decimal reading of the fraction, so 0.7 * 10 floors to 7, not 6.
        return math.floor(count * Fraction(repr(self.train_fraction)))


def stratified_split(
    corpus: Sequence[LabeledPost], spec: SplitSpec = SplitSpec()
) -> tuple[list[LabeledPost], list[LabeledPost]]:
    """Per-class seeded shuffle; the first floor(n * fraction) go to train.

    Both halves keep the corpus order.
    """
    rng = np.random.default_rng(spec.seed)
    in_train = [False] * len(corpus)
    for label in Label:
        idx = [i for i, lp in enumerate(corpus) if lp.label is label]
        if not idx:
            raise MissingClass(label)
        perm = rng.permutation(len(idx))
        for j in perm[: spec.n_train(len(idx))]:
            in_train[idx[j]] = True
    train = [lp for lp, t in zip(corpus, in_train) if t]
    test = [lp for lp, t in zip(corpus, in_train) if not t]
    return train, test
