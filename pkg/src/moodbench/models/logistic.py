"""L2-regularised logistic regression trained by full-batch gradient descent."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


def sigmoid(z):
    return 0.5 * (1.0 + np.tanh(0.5 * np.asarray(z, dtype=np.float64)))


def loss_and_grad(w, b, X, y, l2):
    """Mean binary cross-entropy plus ``l2/2 * ||w||^2`` (bias unpenalised).

    Returns ``(loss, grad_w, grad_b)``.
    """
    z = np.asarray(X @ w).ravel() + b
    n = X.shape[0]
    loss = float(np.mean(np.logaddexp(0.0, z) - y * z) + 0.5 * l2 * np.dot(w, w))
    resid = sigmoid(z) - y
    grad_w = np.asarray(X.T @ resid).ravel() / n + l2 * w
    grad_b = float(resid.mean())
    return loss, grad_w, grad_b


@dataclass(frozen=True)
class LogisticParams:
    weights: np.ndarray
    bias: float
    loss_history: tuple[float, ...] = ()

    @property
    def final_loss(self):
        return self.loss_history[-1] if self.loss_history else float("nan")

    @property
    def epochs_run(self):
        return max(len(self.loss_history) - 1, 0)

    def decision_function(self, X):
        return sigmoid(np.asarray(X @ self.weights).ravel() + self.bias)

    def to_payload(self):
        return {
            "weights": self.weights.tolist(),
            "bias": self.bias,
            "loss_history": list(self.loss_history),
        }

    @classmethod
    def from_payload(cls, payload, dim):
        w = np.asarray(payload["weights"], dtype=np.float64).reshape(dim)
        return cls(w, float(payload["bias"]), tuple(float(v) for v in payload["loss_history"]))


def fit_logistic(X, y, l2_lambda=1e-4, learning_rate=0.1, decay=0.01, max_epochs=1000, tol=1e-8):
    """Gradient descent from zero weights with step ``lr / (1 + decay * epoch)``.

    ``loss_history[k]`` is the loss after ``k`` updates. Training stops early
    once the loss changes by less than ``tol``; hitting ``max_epochs`` is not
    an error.
    """
    y = np.asarray(y, dtype=np.float64)
    w = np.zeros(X.shape[1])
    b = 0.0
    loss, gw, gb = loss_and_grad(w, b, X, y, l2_lambda)
    history = [loss]
    for epoch in range(max_epochs):
        step = learning_rate / (1.0 + decay * epoch)
        w = w - step * gw
        b = b - step * gb
        new_loss, gw, gb = loss_and_grad(w, b, X, y, l2_lambda)
        history.append(new_loss)
        if abs(loss - new_loss) < tol:
            break
        loss = new_loss
    return LogisticParams(w, b, tuple(history))
