"""Lloyd's K-means: assignment, centroid update, cost, and the full loop.

Conventions that keep the loop deterministic and monotone:

- the cost accumulates *squared* Euclidean distances (the mean update is the
  minimizer of squared distance, so squared cost is non-increasing);
- assignment ties go to the lowest centroid index;
- an empty cluster is re-seeded at the sample farthest from that cluster's
  current centroid (ties to the lowest sample index);
- all arithmetic is float64.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateInput, DimensionError, InvalidK, ShapeError


@dataclass(frozen=True)
class DataMatrix:
    """N samples by d attributes, with optional integer class labels."""

    X: np.ndarray
    labels: np.ndarray | None = None
    name: str = ""

    def __post_init__(self):
        X = np.asarray(self.X, dtype=np.float64)
        if X.ndim != 2 or X.shape[0] < 1:
            raise ShapeError(f"data must be a non-empty N x d matrix, got shape {X.shape}")
        if not np.all(np.isfinite(X)):
            raise DegenerateInput("data contains non-finite values")
        object.__setattr__(self, "X", X)
        if self.labels is not None:
            labels = np.asarray(self.labels, dtype=np.intp)
            if labels.shape != (X.shape[0],):
                raise ShapeError(
                    f"labels length {labels.shape} does not match N={X.shape[0]}"
                )
            object.__setattr__(self, "labels", labels)

    @property
    def n(self) -> int:
        return self.X.shape[0]

    @property
    def dim(self) -> int:
        return self.X.shape[1]


@dataclass(frozen=True)
class CentroidSet:
    """Ordered list of K centers; source_indices records which data rows the
    centers were copied from, when they came from an initializer."""

    centers: np.ndarray
    source_indices: np.ndarray | None = None

    def __post_init__(self):
        centers = np.array(self.centers, dtype=np.float64)  # owned copy
        if centers.ndim != 2 or centers.shape[0] < 1:
            raise ShapeError(f"centers must be K x d with K >= 1, got shape {centers.shape}")
        if not np.all(np.isfinite(centers)):
            raise DegenerateInput("centers contain non-finite values")
        object.__setattr__(self, "centers", centers)
        if self.source_indices is not None:
            idx = np.asarray(self.source_indices, dtype=np.intp)
            if idx.shape != (centers.shape[0],):
                raise ShapeError("source_indices length does not match K")
            object.__setattr__(self, "source_indices", idx)

    @property
    def k(self) -> int:
        return self.centers.shape[0]

    @property
    def dim(self) -> int:
        return self.centers.shape[1]


@dataclass(frozen=True)
class ClusterModel:
    """Result of a Lloyd run."""

    centroids: CentroidSet
    assignment: np.ndarray
    cost: float
    iterations: int
    converged: bool
    distance_evals: int = 0


def _sq_dists(X: np.ndarray, centers: np.ndarray) -> np.ndarray:
    """(N, K) squared Euclidean distances, computed from explicit
    differences so that symmetric ties come out exactly equal."""
    diff = X[:, None, :] - centers[None, :, :]
    return (diff * diff).sum(axis=2)


def assign(data: DataMatrix, centroids: CentroidSet) -> np.ndarray:
    """Nearest-centroid index for every sample; ties to the lowest index."""
    if data.dim != centroids.dim:
        raise DimensionError(
            f"data has d={data.dim} but centroids have d={centroids.dim}"
        )
    return np.argmin(_sq_dists(data.X, centroids.centers), axis=1)


def update_centroids(
    data: DataMatrix,
    assignment,
    k: int,
    current: CentroidSet | None = None,
) -> CentroidSet:
    """Per-cluster arithmetic means.

    An empty cluster is re-seeded at the sample farthest (squared distance)
    from the cluster's current centroid, ties to the lowest sample index.
    When `current` is not given the global data mean stands in as the
    reference point.
    """
    assignment = np.asarray(assignment, dtype=np.intp)
    if assignment.shape != (data.n,):
        raise ShapeError("assignment length does not match N")
    if assignment.size and (assignment.min() < 0 or assignment.max() >= k):
        raise InvalidK(f"assignment references clusters outside [0, {k})")
    if current is not None and current.dim != data.dim:
        raise DimensionError("current centroids dimension does not match data")

    centers = np.empty((k, data.dim), dtype=np.float64)
    for i in range(k):
        members = assignment == i
        if members.any():
            centers[i] = data.X[members].mean(axis=0)
        else:
            ref = current.centers[i] if current is not None else data.X.mean(axis=0)
            diff = data.X - ref
            d2 = (diff * diff).sum(axis=1)
            centers[i] = data.X[int(np.argmax(d2))]
    return CentroidSet(centers=centers)


def cost(data: DataMatrix, centroids: CentroidSet, assignment) -> float:
    """Total within-cluster scatter: sum of squared sample-to-own-centroid
    distances."""
    if data.dim != centroids.dim:
        raise DimensionError(
            f"data has d={data.dim} but centroids have d={centroids.dim}"
        )
    assignment = np.asarray(assignment, dtype=np.intp)
    if assignment.shape != (data.n,):
        raise ShapeError("assignment length does not match N")
    if assignment.size and (assignment.min() < 0 or assignment.max() >= centroids.k):
        raise InvalidK("assignment references a centroid that does not exist")
    diff = data.X - centroids.centers[assignment]
    return float((diff * diff).sum())


def run_lloyd(
    data: DataMatrix,
    init: CentroidSet,
    max_iter: int = 300,
    tol: float = 0.0,
) -> ClusterModel:
    """Alternate assign/update until the assignment stabilizes.

    Stops when no assignment changes (primary criterion), when the maximum
    centroid displacement drops to `tol` or below (secondary), or after
    `max_iter` passes. Deterministic given (data, init, params).
    """
    if init.k > data.n:
        raise InvalidK(f"K={init.k} exceeds N={data.n}")
    if max_iter < 1:
        raise ValueError("max_iter must be >= 1")
    if tol < 0:
        raise ValueError("tol must be >= 0")

    k = init.k
    centroids = init
    assignment = assign(data, centroids)
    evals = data.n * k
    iterations = 0
    converged = False

    while iterations < max_iter:
        new_centroids = update_centroids(data, assignment, k, current=centroids)
        empties = k - len(np.unique(assignment))
        evals += empties * data.n  # farthest-sample scans for re-seeded clusters
        new_assignment = assign(data, new_centroids)
        evals += data.n * k
        iterations += 1

        shift = float(np.sqrt(((new_centroids.centers - centroids.centers) ** 2).sum(axis=1).max()))
        changed = bool(np.any(new_assignment != assignment))
        centroids = new_centroids
        assignment = new_assignment
        if not changed or shift <= tol:
            converged = True
            break

    return ClusterModel(
        centroids=centroids,
        assignment=assignment,
        cost=cost(data, centroids, assignment),
        iterations=iterations,
        converged=converged,
        distance_evals=evals,
    )
