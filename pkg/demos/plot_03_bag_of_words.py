"""
Bag-of-words vectors
====================
"""

import numpy as np

from moodbench import Pipeline, build_vocabulary, vectorize
from moodbench.features import to_csr

pipeline = Pipeline()
docs = [pipeline(t) for t in (
    "so tired and sad, sad all the time",
    "happy and full of joy today",
    "tired of feeling lonely",
)]

vocab = build_vocabulary(docs)
print(vocab.tokens)

vectors = [vectorize(d, vocab) for d in docs]
print(vectors[0].pairs)

X = to_csr(vectors)
print(X.toarray().astype(int))
print("tokens per doc:", np.asarray(X.sum(axis=1)).ravel())

# words never seen in training simply vanish
print(vectorize(pipeline("sad penguins"), vocab).pairs)
