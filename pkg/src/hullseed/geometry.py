"""2-D convex hull and farthest-pair search.

The hull makes the farthest pair cheap for planar data: the diameter of a
point set is always realized by two hull vertices, so only the outer points
need pairwise comparison. For dimensions above 2 callers fall back to
`farthest_pair_bruteforce`.

All distance comparisons use squared Euclidean values internally; only the
reported distance takes a square root. Ties are broken by the smallest index
(pairs: lexicographically smallest `(index_a, index_b)`), which keeps every
downstream selection deterministic.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateInput, DimensionError


@dataclass(frozen=True)
class HullPolygon:
    """Convex hull vertices as indices into the source points, counter-clockwise."""

    vertices: np.ndarray

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class FarthestPair:
    """The two samples realizing the maximum pairwise Euclidean distance."""

    index_a: int
    index_b: int
    distance: float


def _as_points(points, dim: int | None = None) -> np.ndarray:
    pts = np.asarray(points, dtype=np.float64)
    if pts.ndim != 2:
        raise DimensionError(f"expected a 2-D array of points, got ndim={pts.ndim}")
    if dim is not None and pts.shape[1] != dim:
        raise DimensionError(f"expected {dim}-dimensional points, got d={pts.shape[1]}")
    if not np.all(np.isfinite(pts)):
        raise DegenerateInput("points contain non-finite coordinates")
    return pts


def _cross(pts: np.ndarray, p: int, q: int, idx: np.ndarray) -> np.ndarray:
    """Cross product (q - p) x (idx - p); positive means left of p->q."""
    px, py = pts[p]
    qx, qy = pts[q]
    return (qx - px) * (pts[idx, 1] - py) - (qy - py) * (pts[idx, 0] - px)


def _lex_extreme(pts: np.ndarray, largest: bool) -> int:
    """Index of the lexicographic (x, y) extreme; duplicate coordinates
    resolve to the lowest index."""
    x, y = pts[:, 0], pts[:, 1]
    sel = np.flatnonzero(x == (x.max() if largest else x.min()))
    ysel = y[sel]
    sel = sel[ysel == (ysel.max() if largest else ysel.min())]
    return int(sel[0])


def _expand(pts: np.ndarray, idx: np.ndarray, p: int, q: int, out: list) -> None:
    # idx holds candidates strictly right of p->q, in ascending index order;
    # the recursion emits the hull chain from p to q (exclusive).
    if idx.size == 0:
        return
    cr = _cross(pts, p, q, idx)
    far = int(idx[np.argmin(cr)])  # most negative = farthest right; first = lowest index
    left = idx[_cross(pts, p, far, idx) < 0.0]
    right = idx[_cross(pts, far, q, idx) < 0.0]
    _expand(pts, left, p, far, out)
    out.append(far)
    _expand(pts, right, far, q, out)


def convex_hull_2d(points) -> HullPolygon:
    """Quickhull on a planar point set.

    Returns the strict hull: vertices in counter-clockwise order, starting at
    the lexicographically smallest point; points interior to hull edges are
    excluded.

    Raises DegenerateInput for fewer than 3 points or an all-collinear set,
    DimensionError when the points are not 2-D.
    """
    pts = _as_points(points, dim=2)
    n = len(pts)
    if n < 3:
        raise DegenerateInput(f"convex hull needs at least 3 points, got {n}")

    a = _lex_extreme(pts, largest=False)
    b = _lex_extreme(pts, largest=True)
    all_idx = np.arange(n)
    cr = _cross(pts, a, b, all_idx)
    if not np.any(cr != 0.0):
        raise DegenerateInput("all points are collinear")

    hull: list[int] = [a]
    _expand(pts, all_idx[cr < 0.0], a, b, hull)  # chain below the a->b chord
    hull.append(b)
    _expand(pts, all_idx[cr > 0.0], b, a, hull)  # chain above, walked b->a
    return HullPolygon(vertices=np.asarray(hull, dtype=np.intp))


def _pair_sq_dist_rows(pts: np.ndarray, i: int, others: np.ndarray) -> np.ndarray:
    diff = pts[others] - pts[i]
    return (diff * diff).sum(axis=1)


def farthest_pair_bruteforce(points) -> FarthestPair:
    """Exhaustive O(N^2) farthest-pair scan, any dimension.

    Ties resolve to the lexicographically smallest (index_a, index_b).
    """
    pts = _as_points(points)
    n = len(pts)
    if n < 2:
        raise DegenerateInput(f"farthest pair needs at least 2 points, got {n}")
    best_d2 = -1.0
    best = (0, 1)
    for i in range(n - 1):
        rest = np.arange(i + 1, n)
        d2 = _pair_sq_dist_rows(pts, i, rest)
        j = int(np.argmax(d2))
        if d2[j] > best_d2:
            best_d2 = float(d2[j])
            best = (i, i + 1 + j)
    return FarthestPair(index_a=best[0], index_b=best[1], distance=float(np.sqrt(best_d2)))


def farthest_pair_via_hull(points, hull: HullPolygon | None = None) -> FarthestPair:
    """Farthest pair of a planar set computed over its hull vertices.

    Matches `farthest_pair_bruteforce` exactly, tie rule included: the
    maximum squared distance is found over hull vertex pairs, then the
    lexicographically smallest index pair realizing it is recovered with one
    pass over (hull vertex, sample) pairs. That pass is what keeps duplicate
    extreme points consistent with the brute-force rule.

    Pass `hull` to reuse an already-computed polygon for the same points.
    """
    pts = _as_points(points, dim=2)
    verts = (hull if hull is not None else convex_hull_2d(pts)).vertices
    vp = pts[verts]
    diff = vp[:, None, :] - vp[None, :, :]
    d2 = (diff * diff).sum(axis=2)
    best_d2 = float(d2.max())

    best: tuple[int, int] | None = None
    for v in sorted(int(v) for v in verts):
        rows = _pair_sq_dist_rows(pts, v, np.arange(len(pts)))
        for j in np.flatnonzero(rows == best_d2):
            j = int(j)
            if j == v:
                continue
            pair = (v, j) if v < j else (j, v)
            if best is None or pair < best:
                best = pair
    assert best is not None
    return FarthestPair(index_a=best[0], index_b=best[1], distance=float(np.sqrt(best_d2)))
