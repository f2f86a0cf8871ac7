#!/usr/bin/env python3
"""Materialize the benchmark dataset files into data/.

- iris.data / wine.data are written from scikit-learn's bundled copies,
  which carry the same values as the UCI `iris.data` / `wine.data` files
  (scikit-learn is only needed to run this tool, not the library).
- ruspini.csv is the classic 75-point planar set (Ruspini 1970), coordinates
  as distributed in R's `cluster` package, rows grouped into the four
  well-separated classes (sizes 23, 20, 17, 15) with labels in the last
  column.
- synthetic1.csv / synthetic2.csv are seeded Gaussian-blob fixtures,
  regenerated here only to document provenance; the committed files are the
  canonical copies.

letter-recognition.data is NOT written: it is too large to embed and must be
fetched once from the UCI repository (see README). Rows other than letters
A and D may be deleted to save space; the loader filters to {A, D} anyway.
"""

import argparse
import sys
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(REPO / "src"))

from hullseed.datasets import BlobSpec, gen_blobs, save_csv  # noqa: E402

IRIS_CLASSES = ["Iris-setosa", "Iris-versicolor", "Iris-virginica"]

# x, y pairs per class block; block order follows the published class sizes
# 23 / 20 / 17 / 15.
RUSPINI_BLOCKS = [
    # class 0: upper group (23 points)
    [(28, 147), (32, 149), (35, 153), (33, 154), (38, 151), (41, 150), (38, 145),
     (38, 143), (32, 143), (34, 141), (44, 156), (44, 149), (44, 143), (46, 142),
     (47, 149), (49, 152), (50, 142), (53, 144), (52, 152), (55, 155), (54, 124),
     (60, 136), (63, 139)],
    # class 1: lower-left group (20 points)
    [(4, 53), (5, 63), (10, 59), (9, 77), (13, 49), (13, 69), (12, 88), (15, 75),
     (18, 61), (19, 65), (22, 74), (27, 72), (28, 76), (24, 58), (27, 55), (28, 60),
     (30, 52), (31, 60), (32, 61), (36, 72)],
    # class 2: right group (17 points)
    [(86, 132), (85, 115), (85, 96), (78, 94), (74, 96), (97, 122), (98, 116),
     (98, 124), (99, 119), (99, 128), (101, 115), (108, 111), (110, 111),
     (108, 116), (111, 126), (115, 117), (117, 115)],
    # class 3: bottom group (15 points)
    [(70, 4), (77, 12), (83, 21), (61, 15), (69, 15), (78, 16), (66, 18), (58, 13),
     (64, 20), (69, 21), (66, 23), (61, 25), (76, 27), (72, 31), (64, 30)],
]


def fmt(v: float) -> str:
    return f"{v:g}"


def write_iris(out: Path) -> None:
    from sklearn.datasets import load_iris

    bunch = load_iris()
    lines = [
        ",".join(fmt(v) for v in row) + "," + IRIS_CLASSES[t]
        for row, t in zip(bunch.data, bunch.target)
    ]
    out.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {out} ({len(lines)} rows)")


def write_wine(out: Path) -> None:
    from sklearn.datasets import load_wine

    bunch = load_wine()
    lines = [
        str(t + 1) + "," + ",".join(fmt(v) for v in row)
        for row, t in zip(bunch.data, bunch.target)
    ]
    out.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {out} ({len(lines)} rows)")


def write_ruspini(out: Path) -> None:
    lines = []
    for label, block in enumerate(RUSPINI_BLOCKS):
        for x, y in block:
            lines.append(f"{x},{y},{label}")
    assert len(lines) == 75
    out.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {out} ({len(lines)} rows)")


def write_synthetic(out_dir: Path) -> None:
    # Seeds chosen once (see tests): synthetic1 mirrors the small 35-sample,
    # 5-cluster illustration set; synthetic2 is the 300-sample, 6-cluster,
    # std-0.75 benchmark instance.
    one = gen_blobs(BlobSpec(n_samples=35, n_clusters=5, std=0.8, dim=2, seed=12))
    save_csv(one, out_dir / "synthetic1.csv")
    print(f"wrote {out_dir / 'synthetic1.csv'} (35 rows)")
    two = gen_blobs(BlobSpec(n_samples=300, n_clusters=6, std=0.75, dim=2, seed=5))
    save_csv(two, out_dir / "synthetic2.csv")
    print(f"wrote {out_dir / 'synthetic2.csv'} (300 rows)")


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=str(REPO / "data"), help="output directory")
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    write_iris(out / "iris.data")
    write_wine(out / "wine.data")
    write_ruspini(out / "ruspini.csv")
    write_synthetic(out)
    print(
        "\nletter-recognition.data must be fetched manually, e.g.:\n"
        "  curl -o data/letter-recognition.data \\\n"
        "    https://archive.ics.uci.edu/ml/machine-learning-databases/letter-recognition/letter-recognition.data"
    )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
