"""Linear SVM: primal hinge loss with L2, solved by Pegasos-style SGD.

The bias is handled as the weight of a constant feature and shrinks with the
rest of ``w``; an unpenalised bias under a 1/(lambda t) step size is dominated
by the first few huge updates.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class SvmParams:
    weights: np.ndarray
    bias: float

    def decision_function(self, X):
        return np.asarray(X @ self.weights).ravel() + self.bias

    def to_payload(self):
        return {"weights": self.weights.tolist(), "bias": self.bias}

    @classmethod
    def from_payload(cls, payload, dim):
        return cls(np.asarray(payload["weights"], dtype=np.float64).reshape(dim), float(payload["bias"]))


def fit_linear_svm(X, y, l2_lambda=1e-4, epochs=20, seed=0):
    """``y`` in {0, 1}; 1 (depressive) maps to the +1 side of the hyperplane."""
    X = X.tocsr()
    signs = np.where(np.asarray(y) == 1, 1.0, -1.0)
    n, dim = X.shape
    indptr, indices, data = X.indptr, X.indices, X.data
    rng = np.random.default_rng(seed)

    # w = scale * v keeps the per-step shrink O(1).
    v = np.zeros(dim)
    v_bias = 0.0
    scale = 1.0
    t = 0
    for _ in range(epochs):
        for i in rng.permutation(n):
            t += 1
            eta = 1.0 / (l2_lambda * t)
            lo, hi = indptr[i], indptr[i + 1]
            cols, vals = indices[lo:hi], data[lo:hi]
            margin = signs[i] * scale * (np.dot(v[cols], vals) + v_bias)
            shrink = 1.0 - eta * l2_lambda
            if shrink <= 0.0:
                v[:] = 0.0
                v_bias = 0.0
                scale = 1.0
            else:
                scale *= shrink
            if margin < 1.0:
                step = eta * signs[i] / scale
                v[cols] += step * vals
                v_bias += step
    return SvmParams(scale * v, float(scale * v_bias))
