"""PCA preprocessing: project onto the top variance directions.

Used to bring high-dimensional tables down to the plane before seeding and
clustering. Covariance uses the 1/(N-1) convention; a fixed sign rule
(largest-magnitude coordinate of each component made positive, ties to the
earliest coordinate) keeps fits deterministic across runs.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateInput, DimensionError
from .kmeans import DataMatrix


@dataclass(frozen=True)
class PcaModel:
    """mean: (d,) column means; components: (p, d) orthonormal rows by
    descending variance; explained_variance: the matching eigenvalues."""

    mean: np.ndarray
    components: np.ndarray
    explained_variance: np.ndarray

    @property
    def input_dim(self) -> int:
        return self.components.shape[1]

    @property
    def output_dim(self) -> int:
        return self.components.shape[0]


def pca_fit(data: DataMatrix, p: int) -> PcaModel:
    """Fit a p-component PCA via eigendecomposition of the covariance."""
    n, d = data.n, data.dim
    if not 1 <= p <= d:
        raise DimensionError(f"p must be in [1, {d}], got {p}")
    if n < 2:
        raise DegenerateInput(f"PCA needs at least 2 samples, got {n}")
    mean = data.X.mean(axis=0)
    centered = data.X - mean
    cov = centered.T @ centered / (n - 1)
    if float(np.trace(cov)) == 0.0:
        raise DegenerateInput("data has zero variance; no principal directions exist")

    eigvals, eigvecs = np.linalg.eigh(cov)
    order = np.argsort(eigvals)[::-1][:p]
    components = eigvecs[:, order].T.copy()
    variances = np.maximum(eigvals[order], 0.0)

    for row in components:
        lead = int(np.argmax(np.abs(row)))
        if row[lead] < 0.0:
            row *= -1.0
    return PcaModel(mean=mean, components=components, explained_variance=variances)


def pca_transform(model: PcaModel, data: DataMatrix) -> DataMatrix:
    """Project onto the fitted components; labels ride along unchanged."""
    if data.dim != model.input_dim:
        raise DimensionError(
            f"data has d={data.dim} but the model was fitted on d={model.input_dim}"
        )
    projected = (data.X - model.mean) @ model.components.T
    return DataMatrix(X=projected, labels=data.labels, name=data.name)


def standardize(data: DataMatrix) -> DataMatrix:
    """Z-score each column (sample standard deviation, ddof=1)."""
    if data.n < 2:
        raise DegenerateInput("standardization needs at least 2 samples")
    mean = data.X.mean(axis=0)
    std = data.X.std(axis=0, ddof=1)
    if np.any(std == 0.0):
        flat = int(np.flatnonzero(std == 0.0)[0])
        raise DegenerateInput(f"column {flat} has zero variance; cannot z-score")
    return DataMatrix(X=(data.X - mean) / std, labels=data.labels, name=data.name)
