"""Deterministic centroid initialization.

The proposed scheme seeds the first two centroids at the farthest pair of
the dataset (found over the convex hull when the data is planar), then grows
the set one centroid at a time: the next seed is the still-active sample
maximizing the sum of Euclidean distances to everything chosen so far. After
each selection the new centroid and its M nearest active neighbors leave the
candidate pool, which is what stops two seeds landing in one cluster.

The random baseline draws K distinct rows from a seeded generator.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateInput, ExhaustedCandidates, InvalidK, InvalidM
from .geometry import convex_hull_2d, farthest_pair_bruteforce, farthest_pair_via_hull
from .kmeans import CentroidSet, DataMatrix

AUTO = "auto"


@dataclass(frozen=True)
class InitParams:
    """Knobs of the proposed initializer.

    m is the per-centroid discard count: an explicit nonnegative integer, or
    AUTO for floor(N / 2K). hull_shortcut enables the planar farthest-pair
    speedup when d == 2.
    """

    k: int
    m: int | str = AUTO
    hull_shortcut: bool = True

    def __post_init__(self):
        if self.k < 2:
            raise InvalidK(f"the proposed initializer needs K >= 2, got K={self.k}")
        if self.m != AUTO and (not isinstance(self.m, (int, np.integer)) or self.m < 0):
            raise InvalidM(f"M must be a nonnegative integer or {AUTO!r}, got {self.m!r}")


@dataclass(frozen=True)
class CandidateSet:
    """Boolean mask over sample indices; inactive samples are no longer
    eligible as centroids."""

    active: np.ndarray

    @classmethod
    def full(cls, n: int) -> "CandidateSet":
        return cls(active=np.ones(n, dtype=bool))

    @property
    def n_active(self) -> int:
        return int(self.active.sum())

    def active_indices(self) -> np.ndarray:
        return np.flatnonzero(self.active)


@dataclass(frozen=True)
class InitStats:
    """Work accounting for one proposed-init run."""

    m: int
    used_hull: bool
    hull_vertices: int
    distance_evals: int


def largest_feasible_m(n: int, k: int) -> int:
    """Largest discard count that can never exhaust the candidate pool.

    Selection j (for j = 3..K) runs after discarding around j-1 centroids,
    each removing at most M+1 samples, so it needs N >= (j-1)(M+1) + 1; the
    binding case is j = K. The first two centroids come straight from the
    farthest pair and need no candidate pool, so K = 2 is feasible for any M.
    """
    if k <= 2:
        return max(n - 1, 0)
    return max((n - 1) // (k - 1) - 1, 0)


def resolve_m(data: DataMatrix, k: int, m_policy) -> int:
    """Turn the M policy into a concrete discard count.

    AUTO is floor(N / 2K): the midpoint of the supported range [m/3, m] with
    m = N/K, rounded down. Explicit values pass the exhaustion-feasibility
    check (see `largest_feasible_m`) so selection can never run out of
    candidates.
    """
    if k < 2:
        raise InvalidK(f"need K >= 2, got K={k}")
    if k > data.n:
        raise InvalidK(f"K={k} exceeds N={data.n}")
    if m_policy == AUTO:
        return data.n // (2 * k)
    m = int(m_policy)
    if m < 0:
        raise InvalidM(f"M must be >= 0, got {m}")
    limit = largest_feasible_m(data.n, k)
    if m > limit:
        raise InvalidM(
            f"M={m} is infeasible for N={data.n}, K={k}: selection could run out "
            f"of candidates (largest feasible M is {limit})"
        )
    return m


def discard_neighbors(
    data: DataMatrix,
    center_index: int,
    m: int,
    candidates: CandidateSet,
) -> tuple[CandidateSet, int]:
    """Deactivate a center and its M nearest active samples.

    Distance ties go to the lowest sample index. If fewer than M active
    samples remain they are all discarded; the second return value is the
    shortfall (0 when the full M could be removed).
    """
    if m < 0:
        raise InvalidM(f"M must be >= 0, got {m}")
    active = candidates.active.copy()
    active[center_index] = False
    shortfall = 0
    if m > 0:
        idx = np.flatnonzero(active)
        if idx.size <= m:
            shortfall = m - idx.size
            active[:] = False
        else:
            diff = data.X[idx] - data.X[center_index]
            d2 = (diff * diff).sum(axis=1)
            order = np.lexsort((idx, d2))
            active[idx[order[:m]]] = False
    return CandidateSet(active=active), shortfall


def select_next_centroid(
    data: DataMatrix,
    chosen: CentroidSet,
    candidates: CandidateSet,
) -> int:
    """Active sample maximizing the summed Euclidean distance to every
    chosen centroid; ties go to the lowest index."""
    idx = candidates.active_indices()
    if idx.size == 0:
        raise ExhaustedCandidates(
            "no active candidates remain",
            largest_feasible_m=largest_feasible_m(data.n, chosen.k + 1),
        )
    diff = data.X[idx][:, None, :] - chosen.centers[None, :, :]
    sums = np.sqrt((diff * diff).sum(axis=2)).sum(axis=1)
    return int(idx[np.argmax(sums)])


def proposed_init_with_stats(data: DataMatrix, params: InitParams) -> tuple[CentroidSet, InitStats]:
    """`proposed_init` plus work accounting (hull usage, distance evaluations)."""
    n = data.n
    if params.k > n:
        raise InvalidK(f"K={params.k} exceeds N={n}")
    m = resolve_m(data, params.k, params.m)

    used_hull = False
    hull_vertices = 0
    evals = 0
    if data.dim == 2 and params.hull_shortcut:
        try:
            hull = convex_hull_2d(data.X)
            pair = farthest_pair_via_hull(data.X, hull=hull)
            used_hull = True
            hull_vertices = len(hull)
            evals += hull_vertices * (hull_vertices - 1) // 2 + hull_vertices * n
        except DegenerateInput:
            pair = farthest_pair_bruteforce(data.X)
            evals += n * (n - 1) // 2
    else:
        pair = farthest_pair_bruteforce(data.X)
        evals += n * (n - 1) // 2

    chosen = [pair.index_a, pair.index_b]
    candidates = CandidateSet.full(n)
    for c in chosen:
        evals += max(candidates.n_active - 1, 0)  # neighbor scan
        candidates, _ = discard_neighbors(data, c, m, candidates)
    while len(chosen) < params.k:
        if candidates.n_active == 0:
            limit = largest_feasible_m(n, params.k)
            raise ExhaustedCandidates(
                f"all samples discarded after {len(chosen)} of {params.k} selections; "
                f"largest feasible M is {limit}",
                largest_feasible_m=limit,
            )
        current = CentroidSet(
            centers=data.X[chosen], source_indices=np.asarray(chosen, dtype=np.intp)
        )
        evals += candidates.n_active * len(chosen)
        nxt = select_next_centroid(data, current, candidates)
        chosen.append(nxt)
        evals += max(candidates.n_active - 1, 0)
        candidates, _ = discard_neighbors(data, nxt, m, candidates)

    stats = InitStats(m=m, used_hull=used_hull, hull_vertices=hull_vertices, distance_evals=evals)
    return (
        CentroidSet(centers=data.X[chosen], source_indices=np.asarray(chosen, dtype=np.intp)),
        stats,
    )


def proposed_init(data: DataMatrix, params: InitParams) -> CentroidSet:
    """Hull-seeded farthest-sum initialization: K actual data rows, chosen
    deterministically (no randomness anywhere)."""
    centroids, _ = proposed_init_with_stats(data, params)
    return centroids


def random_init(data: DataMatrix, k: int, seed: int) -> CentroidSet:
    """K distinct sample rows drawn uniformly without replacement from a
    seeded generator."""
    if k < 1:
        raise InvalidK(f"K must be >= 1, got {k}")
    if k > data.n:
        raise InvalidK(f"K={k} exceeds N={data.n}")
    rng = np.random.default_rng(seed)
    idx = rng.choice(data.n, size=k, replace=False)
    return CentroidSet(centers=data.X[idx], source_indices=idx.astype(np.intp))
