"""
Four classifiers on one toy problem
===================================
"""

from moodbench import ModelKind, SparseVector, predict, predict_score, train
from moodbench.corpus import Label

# vocabulary: happy, joy, sad, tired
x = [SparseVector.from_dense([0, 0, 2, 1]), SparseVector.from_dense([1, 1, 0, 0])]
y = [Label.DEPRESSIVE, Label.NON_DEPRESSIVE]
query = SparseVector.from_dense([0, 1, 1, 0])  # "sad joy"

for kind in ModelKind:
    model = train(kind, x, y, seed=0)
    print(f"{kind.display_name:<20} score={predict_score(model, query):+.4f}  {predict(model, query).value}")

# naive Bayes: 3/49 against 2/36 before the equal priors, so depressive wins
nb = train(ModelKind.NAIVE_BAYES, x, y)
print(nb.params.feature_log_prob.round(3))
