"""Multinomial naive Bayes with additive (Laplace) smoothing."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# Margins this close to zero (relative to the joint log-probabilities) are
# treated as exact ties so that rounding noise cannot flip a tied decision.
TIE_RTOL = 1e-10


@dataclass(frozen=True)
class NaiveBayesParams:
    """Row 0 is the depressive class, row 1 the non-depressive class."""

    class_log_prior: np.ndarray  # (2,)
    feature_log_prob: np.ndarray  # (2, V)

    def joint_log_likelihood(self, X):
        """log P(c) + sum_w count(w) * log P(w|c), shape (n, 2)."""
        # Sparse product only touches nonzero counts, so -inf log-probabilities
        # (alpha=0) never meet a zero count.
        return np.asarray(X @ self.feature_log_prob.T) + self.class_log_prior

    def decision_function(self, X):
        jll = self.joint_log_likelihood(X)
        margin = jll[:, 0] - jll[:, 1]
        with np.errstate(invalid="ignore"):
            scale = np.maximum(1.0, np.maximum(np.abs(jll[:, 0]), np.abs(jll[:, 1])))
            tie = np.abs(margin) <= TIE_RTOL * scale
        return np.where(tie, 0.0, margin)

    def to_payload(self):
        return {
            "class_log_prior": self.class_log_prior.tolist(),
            "feature_log_prob": self.feature_log_prob.tolist(),
        }

    @classmethod
    def from_payload(cls, payload, dim):
        prior = np.asarray(payload["class_log_prior"], dtype=np.float64)
        flp = np.asarray(payload["feature_log_prob"], dtype=np.float64).reshape(2, dim)
        return cls(prior, flp)


def fit_naive_bayes(X, y, alpha=1.0):
    """Fit on a CSR count matrix ``X`` with ``y`` = 1 for depressive."""
    if alpha < 0:
        raise ValueError("alpha must be >= 0")
    dim = X.shape[1]
    masks = (y == 1, y == 0)
    n = len(y)
    prior = np.log(np.array([m.sum() for m in masks], dtype=np.float64) / n)
    counts = np.vstack([np.asarray(X[m].sum(axis=0)).ravel() for m in masks])
    smoothed = counts + alpha
    with np.errstate(divide="ignore"):
        flp = np.log(smoothed) - np.log(smoothed.sum(axis=1, keepdims=True))
    assert flp.shape == (2, dim)
    return NaiveBayesParams(prior, flp)
