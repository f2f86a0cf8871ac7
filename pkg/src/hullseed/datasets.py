"""Dataset ingestion and synthetic blob generation.

Delimited text goes in (UCI-style layouts: label in the first or last column,
or no labels), a DataMatrix comes out with labels integer-encoded in first-
occurrence order. Row order is never changed: the deterministic tie-breaking
of the whole pipeline keys off stable sample indices.

The canonical on-disk format written by `save_csv` is comma-delimited, one
sample per row, label last.
"""

import os
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import DegenerateInput, IoError, ParseError
from .kmeans import DataMatrix

DATA_DIR_ENV = "HULLSEED_DATA_DIR"


@dataclass(frozen=True)
class DatasetSpec:
    """Where a delimited dataset lives and how to read it."""

    path: str | Path
    delimiter: str = ","
    label_position: str = "last"  # "first" | "last" | "none"
    class_whitelist: frozenset | None = None
    name: str = ""

    def __post_init__(self):
        if self.label_position not in ("first", "last", "none"):
            raise ValueError(f"bad label_position {self.label_position!r}")


@dataclass(frozen=True)
class BlobSpec:
    """Seeded isotropic Gaussian blobs with well-separated centers."""

    n_samples: int
    n_clusters: int
    std: float
    dim: int = 2
    seed: int = 0
    center_box: tuple[float, float] = (0.0, 20.0)

    def __post_init__(self):
        if self.n_samples < self.n_clusters:
            raise ValueError("n_samples must be >= n_clusters")
        if self.n_clusters < 1:
            raise ValueError("n_clusters must be >= 1")
        if self.std <= 0:
            raise ValueError("std must be > 0")
        if self.dim < 1:
            raise ValueError("dim must be >= 1")


# Column layouts of the fixture files shipped in data/ (see README):
#   iris.data                4 numeric attributes, species string last
#   wine.data                class number first, 13 numeric attributes
#   letter-recognition.data  letter first, 16 numeric attributes (A/D kept)
#   ruspini.csv              x, y, class number last
_BUILTINS = {
    "iris": dict(file="iris.data", label_position="last"),
    "wine": dict(file="wine.data", label_position="first"),
    "letter": dict(
        file="letter-recognition.data",
        label_position="first",
        class_whitelist=frozenset({"A", "D"}),
    ),
    "ruspini": dict(file="ruspini.csv", label_position="last"),
    "synthetic1": dict(file="synthetic1.csv", label_position="last"),
    "synthetic2": dict(file="synthetic2.csv", label_position="last"),
}


def default_data_dir() -> Path:
    return Path(os.environ.get(DATA_DIR_ENV, "data"))


def builtin_names() -> list[str]:
    return sorted(_BUILTINS)


def builtin_spec(name: str, data_dir: str | Path | None = None) -> DatasetSpec:
    """DatasetSpec for one of the named benchmark datasets."""
    if name not in _BUILTINS:
        raise KeyError(f"unknown dataset {name!r}; known: {', '.join(builtin_names())}")
    info = _BUILTINS[name]
    base = Path(data_dir) if data_dir is not None else default_data_dir()
    return DatasetSpec(
        path=base / info["file"],
        label_position=info["label_position"],
        class_whitelist=info.get("class_whitelist"),
        name=name,
    )


def load_delimited(spec: DatasetSpec) -> DataMatrix:
    """Read a delimited numeric table per the spec's layout."""
    path = Path(spec.path)
    if not path.is_file():
        raise IoError(f"dataset file not found: {path}")
    rows: list[list[float]] = []
    raw_labels: list[str] = []
    width = None
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            tokens = [t.strip() for t in line.split(spec.delimiter)]
            if width is None:
                width = len(tokens)
            elif len(tokens) != width:
                raise ParseError(
                    f"expected {width} columns, found {len(tokens)}", line=lineno
                )
            if spec.label_position == "first":
                label, attrs = tokens[0], tokens[1:]
            elif spec.label_position == "last":
                label, attrs = tokens[-1], tokens[:-1]
            else:
                label, attrs = None, tokens
            if label is not None and spec.class_whitelist is not None:
                if label not in spec.class_whitelist:
                    continue
            try:
                values = [float(a) for a in attrs]
            except ValueError:
                raise ParseError(f"non-numeric attribute in {attrs!r}", line=lineno) from None
            if not all(np.isfinite(values)):
                raise ParseError("non-finite attribute value", line=lineno)
            rows.append(values)
            if label is not None:
                raw_labels.append(label)
    if not rows:
        raise ParseError("file contains no data rows", line=1)

    labels = None
    if spec.label_position != "none":
        seen: dict[str, int] = {}
        labels = np.array([seen.setdefault(lab, len(seen)) for lab in raw_labels], dtype=np.intp)
    return DataMatrix(X=np.array(rows, dtype=np.float64), labels=labels, name=spec.name)


def save_csv(data: DataMatrix, path: str | Path) -> None:
    """Write the canonical comma-delimited layout: attributes, label last.

    Values use repr formatting, so a load after save round-trips float64
    exactly.
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for i in range(data.n):
            cells = [repr(float(v)) for v in data.X[i]]
            if data.labels is not None:
                cells.append(str(int(data.labels[i])))
            fh.write(",".join(cells) + "\n")


def gen_blobs(spec: BlobSpec) -> DataMatrix:
    """Sample Gaussian blobs: centers drawn uniformly in the box, kept only
    when at least 6*std from every accepted center; cluster sizes balanced
    with the remainder going to the earliest clusters."""
    rng = np.random.default_rng(spec.seed)
    lo, hi = spec.center_box
    min_sep = 6.0 * spec.std
    centers: list[np.ndarray] = []
    attempts = 0
    while len(centers) < spec.n_clusters:
        attempts += 1
        if attempts > 100_000:
            raise DegenerateInput(
                f"could not place {spec.n_clusters} centers at least {min_sep:g} apart "
                f"in [{lo:g}, {hi:g}]^{spec.dim}"
            )
        cand = rng.uniform(lo, hi, size=spec.dim)
        if all(float(np.sqrt(((cand - c) ** 2).sum())) >= min_sep for c in centers):
            centers.append(cand)

    base, extra = divmod(spec.n_samples, spec.n_clusters)
    sizes = [base + (1 if i < extra else 0) for i in range(spec.n_clusters)]
    parts = []
    labels = []
    for i, (center, size) in enumerate(zip(centers, sizes)):
        parts.append(center + spec.std * rng.standard_normal((size, spec.dim)))
        labels.extend([i] * size)
    name = f"blobs-n{spec.n_samples}-k{spec.n_clusters}-seed{spec.seed}"
    return DataMatrix(X=np.vstack(parts), labels=np.array(labels, dtype=np.intp), name=name)
