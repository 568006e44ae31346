import pytest
from hypothesis import given
from hypothesis import strategies as st

from moodbench.errors import DimensionMismatch, EmptyVocabulary
from moodbench.features import (
    SparseVector,
    Vocabulary,
    build_vocabulary,
    to_csr,
    vectorize,
    vectorize_corpus,
)
from moodbench.textpipe import Document

DOCS = [Document(("sad", "sad", "tired")), Document(("happy",))]


def test_lexicographic_ids():
    vocab = build_vocabulary(DOCS, 1)
    assert dict(vocab.index) == {"happy": 0, "sad": 1, "tired": 2}


def test_min_df_threshold():
    with pytest.raises(EmptyVocabulary):
        build_vocabulary(DOCS, 2)
    vocab = build_vocabulary(DOCS + [Document(("sad",))], 2)
    assert vocab.tokens == ("sad",)


def test_deterministic():
    assert build_vocabulary(DOCS) == build_vocabulary(list(reversed(DOCS)))


def test_empty_inputs():
    with pytest.raises(EmptyVocabulary):
        build_vocabulary([])
    with pytest.raises(ValueError):
        build_vocabulary(DOCS, 0)


def test_vectorize_examples():
    vocab = build_vocabulary(DOCS)
    assert vectorize(DOCS[0], vocab) == SparseVector(((1, 2), (2, 1)), 3)
    assert vectorize(Document(("unknownword",)), vocab) == SparseVector((), 3)
    assert vectorize(Document(()), vocab) == SparseVector((), 3)


def test_vectorize_corpus():
    vocab = build_vocabulary(DOCS)
    assert vectorize_corpus(DOCS, vocab) == [vectorize(d, vocab) for d in DOCS]
    assert vectorize_corpus([], vocab) == []
    assert vectorize_corpus(DOCS[::-1], vocab) == vectorize_corpus(DOCS, vocab)[::-1]


def test_vocabulary_text_round_trip():
    vocab = build_vocabulary(DOCS)
    assert vocab.to_text() == "happy\t0\nsad\t1\ntired\t2\n"
    assert Vocabulary.from_text(vocab.to_text()) == vocab


def test_sparse_vector_invariants():
    with pytest.raises(ValueError):
        SparseVector(((1, 1), (0, 1)), 3)
    with pytest.raises(ValueError):
        SparseVector(((0, 0),), 3)
    with pytest.raises(ValueError):
        SparseVector(((3, 1),), 3)
    v = SparseVector.from_dense([0, 2, 0, 1])
    assert v.pairs == ((1, 2), (3, 1))
    assert list(v.to_dense()) == [0, 2, 0, 1]


def test_to_csr_checks_dims():
    with pytest.raises(DimensionMismatch):
        to_csr([SparseVector((), 3), SparseVector((), 4)])
    m = to_csr([SparseVector(((1, 2),), 3)])
    assert m.toarray().tolist() == [[0, 2, 0]]


_words = st.lists(st.sampled_from(["a", "b", "c", "d", "e", "zz"]), max_size=30)


@given(st.lists(_words, min_size=1, max_size=5).filter(lambda ds: any(ds)), _words)
def test_bag_properties(train_docs, doc):
    vocab = build_vocabulary([Document(d) for d in train_docs])
    size_before = len(vocab)
    v = vectorize(Document(doc), vocab)
    assert v.total == sum(t in vocab for t in doc)
    assert vectorize(Document(sorted(doc)), vocab) == v
    assert len(vocab) == size_before
    ids = [i for i, _ in v.pairs]
    assert ids == sorted(set(ids))
