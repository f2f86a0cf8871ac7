"""Convex-hull seeded K-means clustering toolkit."""

from .errors import (
    AlgorithmError,
    DataError,
    DegenerateInput,
    DimensionError,
    ExhaustedCandidates,
    HullseedError,
    InvalidK,
    InvalidM,
    IoError,
    ParseError,
    ShapeError,
    ZeroReferenceCoordinate,
)
from .geometry import FarthestPair, HullPolygon, convex_hull_2d, farthest_pair_bruteforce, farthest_pair_via_hull
from .kmeans import CentroidSet, ClusterModel, DataMatrix, assign, cost, run_lloyd, update_centroids
from .metrics import ContingencyTable, MetricReport, ccpi, contingency, match_and_error, pair_centers, rand_index
from .pca import PcaModel, pca_fit, pca_transform, standardize
from .datasets import BlobSpec, DatasetSpec, builtin_spec, gen_blobs, load_delimited, save_csv
from .seeding import (
    AUTO,
    CandidateSet,
    InitParams,
    discard_neighbors,
    proposed_init,
    proposed_init_with_stats,
    random_init,
    resolve_m,
    select_next_centroid,
)
from .pipeline import BenchReport, RunConfig, RunResult, run_single

__version__ = "0.1.0"
