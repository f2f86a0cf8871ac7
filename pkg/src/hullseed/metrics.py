"""Cluster validity metrics.

Everything funnels through the contingency table (predicted cluster x true
class counts): the misclassification error uses an optimal injective
cluster-to-class matching, and the Rand index comes from the table's
binomial sums rather than an O(N^2) pair loop.

CCPI (cluster center proximity index) is the mean relative coordinate-wise
deviation between produced initial centers and reference centers; the two
sets are aligned beforehand by a minimum-total-distance pairing.
"""

from dataclasses import dataclass

import numpy as np
from scipy.optimize import linear_sum_assignment

from .errors import ShapeError, ZeroReferenceCoordinate
from .kmeans import CentroidSet


@dataclass(frozen=True)
class ContingencyTable:
    """counts[i, j] = number of samples in predicted cluster row_ids[i] with
    true class col_ids[j]."""

    counts: np.ndarray
    row_ids: np.ndarray
    col_ids: np.ndarray

    @property
    def n(self) -> int:
        return int(self.counts.sum())


@dataclass(frozen=True)
class MetricReport:
    """The three evaluation numbers for one clustering run."""

    error_percent: float
    rand_score: float
    ccpi: float | None
    matching: dict


def contingency(pred, truth) -> ContingencyTable:
    """Cross-tabulate predicted clusters against true classes."""
    pred = np.asarray(pred)
    truth = np.asarray(truth)
    if pred.ndim != 1 or truth.ndim != 1 or pred.shape != truth.shape:
        raise ShapeError(f"pred {pred.shape} and truth {truth.shape} must be equal-length vectors")
    if pred.size == 0:
        raise ShapeError("empty assignment vectors")
    row_ids, pred_pos = np.unique(pred, return_inverse=True)
    col_ids, truth_pos = np.unique(truth, return_inverse=True)
    counts = np.zeros((len(row_ids), len(col_ids)), dtype=np.int64)
    np.add.at(counts, (pred_pos, truth_pos), 1)
    return ContingencyTable(counts=counts, row_ids=row_ids, col_ids=col_ids)


def match_and_error(table: ContingencyTable) -> tuple[dict, float]:
    """Best cluster-to-class relabeling and the resulting error percentage.

    The matching is the injective assignment maximizing the total matched
    count (optimal, not greedy); error% = 100 * (N - matched) / N.
    """
    counts = table.counts
    if counts.size == 0 or counts.sum() == 0:
        raise ShapeError("contingency table is empty")
    rows, cols = linear_sum_assignment(counts, maximize=True)
    matched = int(counts[rows, cols].sum())
    matching = {table.row_ids[r]: table.col_ids[c] for r, c in zip(rows, cols)}
    n = table.n
    return matching, 100.0 * (n - matched) / n


def pair_centers(actual: CentroidSet, produced: CentroidSet) -> np.ndarray:
    """Pair produced centers to reference centers, minimizing the total
    Euclidean distance. Returns, for each reference index i, the produced
    index paired with it."""
    if actual.k != produced.k:
        raise ShapeError(f"center counts differ: {actual.k} vs {produced.k}")
    if actual.dim != produced.dim:
        raise ShapeError(f"center dimensions differ: {actual.dim} vs {produced.dim}")
    diff = actual.centers[:, None, :] - produced.centers[None, :, :]
    dist = np.sqrt((diff * diff).sum(axis=2))
    rows, cols = linear_sum_assignment(dist)
    pairing = np.empty(actual.k, dtype=np.intp)
    pairing[rows] = cols
    return pairing


def ccpi(actual_centers, init_centers) -> float:
    """Mean relative coordinate-wise deviation between paired center sets.

    Both arguments are (K, n) arrays already in correspondence (pair them
    with `pair_centers` first). Any exactly-zero reference coordinate makes
    the relative deviation undefined and raises rather than silently
    shrinking the K*n normalization.
    """
    A = np.asarray(actual_centers, dtype=np.float64)
    C = np.asarray(init_centers, dtype=np.float64)
    if A.shape != C.shape or A.ndim != 2:
        raise ShapeError(f"center arrays must share a (K, n) shape, got {A.shape} vs {C.shape}")
    if np.any(A == 0.0):
        raise ZeroReferenceCoordinate(
            "a reference center coordinate is exactly zero; |A - C| / |A| is undefined"
        )
    return float((np.abs(A - C) / np.abs(A)).mean())


def rand_index(pred, truth) -> float:
    """Fraction of sample pairs on which the two partitions agree
    (together in both, or apart in both)."""
    pred = np.asarray(pred)
    truth = np.asarray(truth)
    if pred.shape != truth.shape or pred.ndim != 1:
        raise ShapeError("pred and truth must be equal-length vectors")
    n = pred.size
    if n < 2:
        raise ShapeError(f"rand index needs at least 2 samples, got {n}")
    counts = contingency(pred, truth).counts

    def comb2(x):
        return (x * (x - 1)) // 2

    together_both = int(comb2(counts).sum())
    together_pred = int(comb2(counts.sum(axis=1)).sum())
    together_truth = int(comb2(counts.sum(axis=0)).sum())
    total = comb2(n)
    apart_both = total - together_pred - together_truth + together_both
    return (together_both + apart_both) / total
