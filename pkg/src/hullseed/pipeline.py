"""One clustering run end to end.

load -> optional z-score -> optional PCA -> seed (proposed or random) ->
Lloyd -> metrics. The initializer can run either in the clustering space
("reduced", the default whenever PCA is on) or in the pre-PCA attribute
space ("native"); the selected samples' rows in the clustering space then
become the Lloyd starting centroids either way.

CCPI is computed in the space the initializer ran in: the reference centers
are the per-class means of the true-labeled samples there, paired to the
produced seeds by minimum total distance.
"""

from dataclasses import dataclass

import numpy as np

from .kmeans import CentroidSet, ClusterModel, DataMatrix, run_lloyd
from .metrics import MetricReport, ccpi, contingency, match_and_error, pair_centers, rand_index
from .pca import pca_fit, pca_transform, standardize
from .seeding import AUTO, InitParams, InitStats, proposed_init_with_stats, random_init


@dataclass(frozen=True)
class RunConfig:
    """Everything needed to reproduce one run."""

    k: int
    init: str = "proposed"  # "proposed" | "random"
    m: int | str = AUTO
    seed: int = 0  # random init only
    attributes: tuple[int, ...] | None = None  # column subset, applied first
    pca: int | None = None
    standardize: bool = False
    init_space: str | None = None  # None -> "reduced" when PCA is on, else "native"
    hull_shortcut: bool = True
    max_iter: int = 300
    tol: float = 0.0

    def __post_init__(self):
        if self.init not in ("proposed", "random"):
            raise ValueError(f"init must be 'proposed' or 'random', got {self.init!r}")
        if self.init_space not in (None, "native", "reduced"):
            raise ValueError(f"init_space must be 'native' or 'reduced', got {self.init_space!r}")
        if self.attributes is not None:
            object.__setattr__(self, "attributes", tuple(int(a) for a in self.attributes))

    @property
    def resolved_init_space(self) -> str:
        if self.init_space is not None:
            return self.init_space
        return "reduced" if self.pca else "native"


@dataclass(frozen=True)
class BenchReport:
    """One CSV row / JSON object of results; a complete provenance record."""

    dataset: str
    k: int
    m: int | None
    init: str
    init_space: str
    standardized: bool
    pca_components: int | None
    seed: int | None
    restarts: int | None
    error_percent: float | None
    rand_score: float | None
    ccpi: float | None
    iterations: float
    cost: float
    converged: bool
    distance_evals: int


@dataclass(frozen=True)
class RunResult:
    """Report plus the artifacts needed for plotting and further analysis."""

    report: BenchReport
    model: ClusterModel
    init_centroids: CentroidSet
    cluster_space: DataMatrix
    init_space_data: DataMatrix
    metrics: MetricReport | None
    init_stats: InitStats | None


def prepare_spaces(data: DataMatrix, config: RunConfig) -> tuple[DataMatrix, DataMatrix]:
    """Return (clustering-space data, initializer-space data)."""
    work = data
    if config.attributes is not None:
        work = DataMatrix(
            X=work.X[:, list(config.attributes)], labels=work.labels, name=work.name
        )
    if config.standardize:
        work = standardize(work)
    if config.pca:
        model = pca_fit(work, config.pca)
        reduced = pca_transform(model, work)
    else:
        reduced = work
    init_data = work if config.resolved_init_space == "native" else reduced
    return reduced, init_data


def class_means(data: DataMatrix) -> CentroidSet:
    """Per-class mean of the true-labeled samples, in label-id order."""
    if data.labels is None:
        raise ValueError(f"dataset {data.name!r} carries no labels")
    ids = np.unique(data.labels)
    centers = np.vstack([data.X[data.labels == i].mean(axis=0) for i in ids])
    return CentroidSet(centers=centers)


def evaluate(
    data: DataMatrix,
    model: ClusterModel,
    init_space_data: DataMatrix,
    init_centroids: CentroidSet,
) -> MetricReport | None:
    """Error%, Rand, and CCPI for a finished run; None when unlabeled."""
    if data.labels is None:
        return None
    table = contingency(model.assignment, data.labels)
    matching, error_percent = match_and_error(table)
    rand = rand_index(model.assignment, data.labels)

    ccpi_value = None
    if init_centroids.k == len(np.unique(data.labels)):
        actual = class_means(init_space_data)
        pairing = pair_centers(actual, init_centroids)
        ccpi_value = ccpi(actual.centers, init_centroids.centers[pairing])
    return MetricReport(
        error_percent=error_percent, rand_score=rand, ccpi=ccpi_value, matching=matching
    )


def run_single(data: DataMatrix, config: RunConfig) -> RunResult:
    """Execute one configured run on an already-loaded dataset."""
    cluster_space, init_data = prepare_spaces(data, config)

    stats = None
    if config.init == "proposed":
        params = InitParams(k=config.k, m=config.m, hull_shortcut=config.hull_shortcut)
        seeds, stats = proposed_init_with_stats(init_data, params)
        m_used: int | None = stats.m
        seed_used: int | None = None
    else:
        seeds = random_init(init_data, config.k, config.seed)
        m_used = None
        seed_used = config.seed

    start = CentroidSet(
        centers=cluster_space.X[seeds.source_indices],
        source_indices=seeds.source_indices,
    )
    model = run_lloyd(cluster_space, start, max_iter=config.max_iter, tol=config.tol)
    metrics = evaluate(cluster_space, model, init_data, seeds)

    report = BenchReport(
        dataset=data.name,
        k=config.k,
        m=m_used,
        init=config.init,
        init_space=config.resolved_init_space,
        standardized=config.standardize,
        pca_components=config.pca,
        seed=seed_used,
        restarts=None,
        error_percent=None if metrics is None else metrics.error_percent,
        rand_score=None if metrics is None else metrics.rand_score,
        ccpi=None if metrics is None else metrics.ccpi,
        iterations=model.iterations,
        cost=model.cost,
        converged=model.converged,
        distance_evals=model.distance_evals + (stats.distance_evals if stats else 0),
    )
    return RunResult(
        report=report,
        model=model,
        init_centroids=seeds,
        cluster_space=cluster_space,
        init_space_data=init_data,
        metrics=metrics,
        init_stats=stats,
    )
