"""Bag-of-words vocabulary and sparse count vectors."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import numpy as np
import scipy.sparse as sp

from .errors import DimensionMismatch, EmptyVocabulary

__all__ = [
    "SparseVector",
    "Vocabulary",
    "build_vocabulary",
    "to_csr",
    "vectorize",
    "vectorize_corpus",
]


def _tokens(doc):
    return getattr(doc, "tokens", doc)


@dataclass(frozen=True)
class Vocabulary:
    """Lexicographically ordered token -> feature id map."""

    tokens: tuple[str, ...]
    min_df: int = 1
    index: Mapping[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        tokens = tuple(self.tokens)
        if list(tokens) != sorted(set(tokens)):
            raise ValueError("vocabulary tokens must be unique and sorted")
        object.__setattr__(self, "tokens", tokens)
        object.__setattr__(self, "index", {t: i for i, t in enumerate(tokens)})

    def __len__(self):
        return len(self.tokens)

    def __contains__(self, token):
        return token in self.index

    def __iter__(self):
        return iter(self.tokens)

    def to_text(self) -> str:
        """``token<TAB>id`` lines, sorted by id."""
        return "".join(f"{t}\t{i}\n" for i, t in enumerate(self.tokens))

    @classmethod
    def from_text(cls, text: str, min_df: int = 1) -> Vocabulary:
        pairs = []
        for line in text.splitlines():
            if not line:
                continue
            token, _, idx = line.rpartition("\t")
            pairs.append((int(idx), token))
        pairs.sort()
        if [i for i, _ in pairs] != list(range(len(pairs))):
            raise ValueError("vocabulary ids must be contiguous from 0")
        return cls(tuple(t for _, t in pairs), min_df)


@dataclass(frozen=True)
class SparseVector:
    """Sorted ``(feature id, count)`` pairs over a space of size ``dim``."""

    pairs: tuple[tuple[int, int], ...]
    dim: int

    def __post_init__(self):
        pairs = tuple((int(i), int(c)) for i, c in self.pairs)
        prev = -1
        for i, c in pairs:
            if i <= prev or i >= self.dim or c < 1:
                raise ValueError(f"invalid sparse vector entry ({i}, {c}) for dim {self.dim}")
            prev = i
        object.__setattr__(self, "pairs", pairs)

    @classmethod
    def from_dense(cls, values) -> SparseVector:
        values = np.asarray(values)
        nz = np.flatnonzero(values)
        return cls(tuple((int(i), int(values[i])) for i in nz), len(values))

    def to_dense(self) -> np.ndarray:
        out = np.zeros(self.dim, dtype=np.float64)
        for i, c in self.pairs:
            out[i] = c
        return out

    @property
    def total(self) -> int:
        return sum(c for _, c in self.pairs)


def build_vocabulary(docs: Sequence, min_df: int = 1) -> Vocabulary:
    """Keep tokens appearing in at least ``min_df`` documents."""
    if min_df < 1:
        raise ValueError("min_df must be >= 1")
    if not docs:
        raise EmptyVocabulary("cannot build a vocabulary from zero documents")
    df = Counter()
    for doc in docs:
        df.update(set(_tokens(doc)))
    kept = sorted(t for t, n in df.items() if n >= min_df)
    if not kept:
        raise EmptyVocabulary(f"no token reaches document frequency {min_df}")
    return Vocabulary(tuple(kept), min_df)


def vectorize(doc, vocab: Vocabulary) -> SparseVector:
    """Count in-vocabulary tokens; unknown tokens are dropped."""
    counts = Counter(vocab.index[t] for t in _tokens(doc) if t in vocab.index)
    return SparseVector(tuple(sorted(counts.items())), len(vocab))


def vectorize_corpus(docs: Iterable, vocab: Vocabulary) -> list[SparseVector]:
    return [vectorize(doc, vocab) for doc in docs]


def to_csr(vectors: Sequence[SparseVector], dim: int | None = None) -> sp.csr_matrix:
    """Stack sparse vectors into a float64 CSR matrix, checking dimensions."""
    if dim is None:
        if not vectors:
            raise ValueError("dimension required for an empty batch")
        dim = vectors[0].dim
    indptr = [0]
    indices = []
    data = []
    for v in vectors:
        if v.dim != dim:
            raise DimensionMismatch(dim, v.dim)
        for i, c in v.pairs:
            indices.append(i)
            data.append(c)
        indptr.append(len(indices))
    return sp.csr_matrix(
        (np.asarray(data, dtype=np.float64), np.asarray(indices, dtype=np.int64), indptr),
        shape=(len(vectors), dim),
    )
