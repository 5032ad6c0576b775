"""Pure-numpy split-scan and tree-traversal kernels.

Fallback implementations of the hot loops in gwml._kernels. Semantics are
identical to the compiled versions; low-order float bits may differ because
the vectorized forms sum in a different order.
"""

from __future__ import annotations

import numpy as np

GINI = 0
ENTROPY = 1

NO_SPLIT = (-np.inf, np.nan)


def _xlog2x(a):
    out = np.zeros_like(a)
    pos = a > 0
    np.multiply(a, np.log2(a, out=np.zeros_like(a), where=pos), out=out, where=pos)
    return out


def _impurity(class_w, total_w, criterion):
    # class_w: (..., K) weighted histograms, total_w: (...) row weights > 0
    if criterion == GINI:
        return 1.0 - (class_w * class_w).sum(axis=-1) / (total_w * total_w)
    return np.log2(total_w) - _xlog2x(class_w).sum(axis=-1) / total_w


def classification_scan(values, labels, weights, n_classes, criterion, parent_impurity):
    """Best boundary split of a sorted 1-D feature for a classification node.

    values must be sorted ascending; labels/weights are aligned with it and
    all weights are > 0. Candidate thresholds are midpoints between distinct
    consecutive values; rows with value < threshold go left. Returns
    (gain, threshold), or (-inf, nan) when no boundary exists. The first
    (lowest-threshold) maximum wins ties.
    """
    n = values.shape[0]
    if n < 2:
        return NO_SPLIT
    mid = 0.5 * (values[:-1] + values[1:])
    wl_all = np.cumsum(weights)
    total_w = wl_all[-1]
    # midpoint > left value guards float collapse between adjacent values
    valid = (values[1:] > values[:-1]) & (mid > values[:-1]) & (wl_all[:-1] < total_w)
    if not valid.any():
        return NO_SPLIT

    cw = np.zeros((n, n_classes))
    cw[np.arange(n), labels] = weights
    np.cumsum(cw, axis=0, out=cw)
    total_c = cw[-1]

    CL = cw[:-1][valid]
    wL = wl_all[:-1][valid]
    CR = total_c - CL
    wR = total_w - wL
    imp_l = _impurity(CL, wL, criterion)
    imp_r = _impurity(CR, wR, criterion)
    gains = parent_impurity - (wL * imp_l + wR * imp_r) / total_w
    j = int(np.argmax(gains))
    return float(gains[j]), float(mid[valid][j])


def classification_eval(values, labels, weights, n_classes, criterion, parent_impurity, threshold):
    """Gain of splitting at a given threshold; -inf if either side is empty."""
    left = values < threshold
    wL = float(weights[left].sum())
    wR = float(weights[~left].sum())
    if wL <= 0.0 or wR <= 0.0:
        return -np.inf
    CL = np.bincount(labels[left], weights=weights[left], minlength=n_classes)
    CR = np.bincount(labels[~left], weights=weights[~left], minlength=n_classes)
    imp_l = float(_impurity(CL, wL, criterion))
    imp_r = float(_impurity(CR, wR, criterion))
    return parent_impurity - (wL * imp_l + wR * imp_r) / (wL + wR)


def regression_scan(values, targets):
    """Best boundary split of a sorted 1-D feature for a squared-error node.

    Returns (gain, threshold) where gain is the decrease in total SSE, or
    (-inf, nan) when no boundary exists.
    """
    n = values.shape[0]
    if n < 2:
        return NO_SPLIT
    mid = 0.5 * (values[:-1] + values[1:])
    valid = (values[1:] > values[:-1]) & (mid > values[:-1])
    if not valid.any():
        return NO_SPLIT

    s = np.cumsum(targets)
    q = np.cumsum(targets * targets)
    total_s = s[-1]
    total_q = q[-1]
    sse_parent = total_q - total_s * total_s / n

    nL = np.arange(1, n)[valid]
    nR = n - nL
    sL = s[:-1][valid]
    qL = q[:-1][valid]
    sse_l = qL - sL * sL / nL
    sse_r = (total_q - qL) - (total_s - sL) ** 2 / nR
    gains = sse_parent - sse_l - sse_r
    j = int(np.argmax(gains))
    return float(gains[j]), float(mid[valid][j])


def regression_eval(values, targets, threshold):
    left = values < threshold
    nL = int(left.sum())
    nR = values.shape[0] - nL
    if nL == 0 or nR == 0:
        return -np.inf
    tl = targets[left]
    tr = targets[~left]
    sse_parent = float(((targets - targets.mean()) ** 2).sum())
    sse_l = float(((tl - tl.mean()) ** 2).sum())
    sse_r = float(((tr - tr.mean()) ** 2).sum())
    return sse_parent - sse_l - sse_r


def predict_nodes(feature, threshold, left, right, X):
    """Leaf node index reached by every row of X (level-wise traversal)."""
    n = X.shape[0]
    idx = np.zeros(n, dtype=np.int64)
    active = feature[idx] >= 0
    while active.any():
        rows = np.nonzero(active)[0]
        node = idx[rows]
        f = feature[node]
        go_left = X[rows, f] < threshold[node]
        idx[rows] = np.where(go_left, left[node], right[node])
        active = feature[idx] >= 0
    return idx
