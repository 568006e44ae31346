"""Random forest of Gini-split decision trees over count features.

Trees are stored as flat arrays (preorder, left child first). Internal nodes
send a sample left when ``x[feature] <= threshold``; leaves carry class counts.
Each tree draws its randomness from its own stream seeded by
``(seed, tree_index)``, so the forest does not depend on how trees are
scheduled across threads.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

LEAF = -1


@dataclass(frozen=True)
class DecisionTree:
    feature: np.ndarray  # int64, LEAF for leaves
    threshold: np.ndarray  # float64, NaN for leaves
    left: np.ndarray  # int64, LEAF for leaves
    right: np.ndarray  # int64
    counts: np.ndarray  # (n_nodes, 2) int64: [depressive, non-depressive]

    @property
    def n_nodes(self):
        return len(self.feature)

    @property
    def leaf_votes(self):
        # Majority class per node, ties to depressive.
        return self.counts[:, 0] >= self.counts[:, 1]

    def depth(self):
        depths = np.zeros(self.n_nodes, dtype=np.int64)
        for node in range(self.n_nodes):
            if self.feature[node] != LEAF:
                depths[self.left[node]] = depths[node] + 1
                depths[self.right[node]] = depths[node] + 1
        return int(depths.max())

    def apply(self, X):
        """Leaf index reached by each row of the dense matrix ``X``."""
        X = np.asarray(X)
        node = np.zeros(X.shape[0], dtype=np.int64)
        active = np.flatnonzero(self.feature[node] != LEAF)
        while active.size:
            cur = node[active]
            go_left = X[active, self.feature[cur]] <= self.threshold[cur]
            node[active] = np.where(go_left, self.left[cur], self.right[cur])
            active = active[self.feature[node[active]] != LEAF]
        return node

    def predict(self, X):
        """1 for depressive, 0 otherwise."""
        return self.leaf_votes[self.apply(X)].astype(np.int64)

    def training_accuracy(self):
        """Accuracy on the sample the tree was grown from, read off its leaves."""
        leaves = self.feature == LEAF
        c = self.counts[leaves]
        return float(c.max(axis=1).sum() / c.sum())

    def to_payload(self):
        return {
            "feature": self.feature.tolist(),
            "threshold": [None if math.isnan(t) else t for t in self.threshold.tolist()],
            "left": self.left.tolist(),
            "right": self.right.tolist(),
            "counts": self.counts.tolist(),
        }

    @classmethod
    def from_payload(cls, p):
        return cls(
            np.asarray(p["feature"], dtype=np.int64),
            np.asarray([math.nan if t is None else t for t in p["threshold"]], dtype=np.float64),
            np.asarray(p["left"], dtype=np.int64),
            np.asarray(p["right"], dtype=np.int64),
            np.asarray(p["counts"], dtype=np.int64).reshape(-1, 2),
        )


def _best_split(Xf, y):
    """Lowest weighted-Gini split over the columns of ``Xf``.

    Returns ``(column, threshold, weighted_gini)`` or None when every column is
    constant. Ties go to the earlier column, then the lower threshold.
    """
    n = len(y)
    order = np.argsort(Xf, axis=0, kind="stable")
    xs = np.take_along_axis(Xf, order, axis=0)
    valid = xs[:-1] < xs[1:]
    if not valid.any():
        return None
    pos_left = np.cumsum(y[order], axis=0)[:-1].astype(np.float64)
    n_left = np.arange(1, n, dtype=np.float64)[:, None]
    n_right = n - n_left
    pos_right = y.sum() - pos_left
    p_l = pos_left / n_left
    p_r = pos_right / n_right
    impurity = (n_left * 2.0 * p_l * (1.0 - p_l) + n_right * 2.0 * p_r * (1.0 - p_r)) / n
    impurity = np.where(valid, impurity, np.inf)
    # Column-major flattening: first column wins ties, then the lowest cut.
    # Equal impurities can differ in the last bits, so ties use a tolerance.
    best = impurity.min()
    flat = int(np.argmax((impurity <= best + 1e-12).T))
    col, row = divmod(flat, n - 1)
    threshold = (xs[row, col] + xs[row + 1, col]) / 2.0
    return col, float(threshold), float(impurity[row, col])


def grow_tree(X, y, rng, max_features, max_depth=None, min_samples_split=2):
    """Grow one tree greedily on dense ``X`` (n, V) with ``y`` in {0, 1}."""
    n_features = X.shape[1]
    feature, threshold, left, right, counts = [], [], [], [], []

    def new_node(idx):
        n_dep = int(y[idx].sum())
        feature.append(LEAF)
        threshold.append(math.nan)
        left.append(LEAF)
        right.append(LEAF)
        counts.append((n_dep, len(idx) - n_dep))
        return len(feature) - 1

    root = new_node(np.arange(len(y)))
    stack = [(root, np.arange(len(y)), 0)]
    while stack:
        node, idx, depth = stack.pop()
        n_dep, n_non = counts[node]
        if n_dep == 0 or n_non == 0 or len(idx) < min_samples_split:
            continue
        if max_depth is not None and depth >= max_depth:
            continue
        yn = y[idx]
        perm = rng.permutation(n_features)
        found = None
        # Draw max_features candidates; only look further if all were constant.
        for start in range(0, n_features, max_features):
            feats = perm[start : start + max_features]
            split = _best_split(X[np.ix_(idx, feats)], yn)
            if split is not None:
                col, thr, _ = split
                found = (int(feats[col]), thr)
                break
        if found is None:
            continue
        f, thr = found
        mask = X[idx, f] <= thr
        left_idx, right_idx = idx[mask], idx[~mask]
        feature[node] = f
        threshold[node] = thr
        left[node] = new_node(left_idx)
        right[node] = new_node(right_idx)
        # Pop order: left subtree is expanded before right.
        stack.append((right[node], right_idx, depth + 1))
        stack.append((left[node], left_idx, depth + 1))

    return DecisionTree(
        np.asarray(feature, dtype=np.int64),
        np.asarray(threshold, dtype=np.float64),
        np.asarray(left, dtype=np.int64),
        np.asarray(right, dtype=np.int64),
        np.asarray(counts, dtype=np.int64).reshape(-1, 2),
    )


def tree_rng(seed, tree_index):
    return np.random.default_rng([seed, tree_index])


def default_max_features(n_features):
    return max(1, math.isqrt(n_features))


@dataclass(frozen=True)
class ForestParams:
    trees: tuple[DecisionTree, ...]

    def votes(self, X):
        """Fraction of trees voting depressive for each row of dense ``X``."""
        X = np.asarray(X)
        total = np.zeros(X.shape[0])
        for tree in self.trees:
            total += tree.predict(X)
        return total / len(self.trees)

    def decision_function(self, X):
        return self.votes(X)

    def to_payload(self):
        return {"trees": [t.to_payload() for t in self.trees]}

    @classmethod
    def from_payload(cls, payload, dim):
        return cls(tuple(DecisionTree.from_payload(t) for t in payload["trees"]))


def fit_forest(
    X,
    y,
    n_trees=100,
    max_depth=None,
    min_samples_split=2,
    features_per_split=None,
    bootstrap=True,
    seed=0,
    n_jobs=1,
):
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y, dtype=np.int64)
    n, n_features = X.shape
    m = features_per_split or default_max_features(n_features)
    m = min(m, n_features)

    def build(t):
        rng = tree_rng(seed, t)
        if bootstrap:
            idx = rng.integers(0, n, n)
            return grow_tree(X[idx], y[idx], rng, m, max_depth, min_samples_split)
        return grow_tree(X, y, rng, m, max_depth, min_samples_split)

    if n_jobs == 1:
        trees = [build(t) for t in range(n_trees)]
    else:
        with ThreadPoolExecutor(max_workers=n_jobs) as pool:
            trees = list(pool.map(build, range(n_trees)))
    return ForestParams(tuple(trees))
