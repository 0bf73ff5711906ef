"""Schemas, discrete datasets, cliques, marginal queries, and workloads.

Marginal cells are laid out row-major over the clique's columns in schema
order: the flat index of value vector ``v`` is ``((v0*c1 + v1)*c2 + v2)...``.
All types are immutable after construction and safe to share across threads.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Literal, Sequence

import numpy as np

from vertisynth.backend import kernels
from vertisynth.errors import SchemaError, WorkloadError

Clique = tuple[int, ...]
Visibility = Literal["public", "private"]


def as_clique(columns: Iterable[int]) -> Clique:
    """Canonicalize a collection of column indices into a sorted tuple."""
    cols = tuple(sorted(int(c) for c in columns))
    if len(set(cols)) != len(cols):
        raise SchemaError(f"clique has repeated columns: {cols}")
    return cols


@dataclass(frozen=True)
class Column:
    name: str
    cardinality: int
    visibility: Visibility = "private"

    def __post_init__(self) -> None:
        if self.cardinality < 1:
            raise SchemaError(f"column {self.name!r}: cardinality must be >= 1")
        if self.visibility not in ("public", "private"):
            raise SchemaError(f"column {self.name!r}: bad visibility {self.visibility!r}")


@dataclass(frozen=True)
class Schema:
    """Ordered columns with cardinalities and a public/private flag each."""

    columns: tuple[Column, ...]

    # Zero columns is allowed only for degenerate views from vertical_split;
    # dataset loaders and engines require d >= 1.
    def __post_init__(self) -> None:
        names = [c.name for c in self.columns]
        if len(set(names)) != len(names):
            raise SchemaError("column names must be unique")

    @property
    def d(self) -> int:
        return len(self.columns)

    @property
    def d_pub(self) -> int:
        return sum(c.visibility == "public" for c in self.columns)

    @property
    def d_priv(self) -> int:
        return self.d - self.d_pub

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(c.name for c in self.columns)

    @property
    def cards(self) -> tuple[int, ...]:
        return tuple(c.cardinality for c in self.columns)

    @property
    def public_indices(self) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.columns) if c.visibility == "public")

    @property
    def private_indices(self) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.columns) if c.visibility == "private")

    def index(self, name: str) -> int:
        for i, c in enumerate(self.columns):
            if c.name == name:
                return i
        raise SchemaError(f"no column named {name!r}")

    def validate_clique(self, clique: Clique) -> Clique:
        clique = as_clique(clique)
        for c in clique:
            if not 0 <= c < self.d:
                raise SchemaError(f"column index {c} out of range for d={self.d}")
        return clique

    def clique_cards(self, clique: Clique) -> tuple[int, ...]:
        return tuple(self.columns[c].cardinality for c in clique)

    def clique_size(self, clique: Clique) -> int:
        return int(math.prod(self.clique_cards(clique)))

    def domain_size(self) -> int:
        return int(math.prod(self.cards))

    def is_public_clique(self, clique: Clique) -> bool:
        return all(self.columns[c].visibility == "public" for c in clique)

    def subset(self, indices: Sequence[int]) -> "Schema":
        return Schema(tuple(self.columns[i] for i in indices))

    def with_visibility(self, public_names: Iterable[str]) -> "Schema":
        public = set(public_names)
        unknown = public - set(self.names)
        if unknown:
            raise SchemaError(f"unknown public columns: {sorted(unknown)}")
        cols = tuple(
            Column(c.name, c.cardinality, "public" if c.name in public else "private")
            for c in self.columns
        )
        return Schema(cols)

    def with_public_prefix(self, fraction: float) -> "Schema":
        """Mark the first ceil(fraction * d) columns public, the rest private."""
        if not 0.0 <= fraction <= 1.0:
            raise SchemaError(f"public fraction must be in [0, 1], got {fraction}")
        k = math.ceil(fraction * self.d)
        return self.with_visibility(self.names[:k])

    def to_dict(self) -> dict:
        return {
            "columns": [
                {"name": c.name, "cardinality": c.cardinality, "visibility": c.visibility}
                for c in self.columns
            ]
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Schema":
        return cls(
            tuple(
                Column(c["name"], int(c["cardinality"]), c.get("visibility", "private"))
                for c in data["columns"]
            )
        )

    def save(self, path: str | Path) -> None:
        Path(path).write_text(json.dumps(self.to_dict(), indent=2) + "\n")

    @classmethod
    def load(cls, path: str | Path) -> "Schema":
        return cls.from_dict(json.loads(Path(path).read_text()))


@dataclass(frozen=True)
class DiscreteDataset:
    """An n x d matrix of category indices with an attached schema.

    Row order is significant: the vertical partition aligns rows across the
    public and private views.
    """

    schema: Schema
    rows: np.ndarray

    def __post_init__(self) -> None:
        rows = np.ascontiguousarray(self.rows, dtype=np.int64)
        if rows.ndim != 2 or rows.shape[1] != self.schema.d:
            raise SchemaError(
                f"rows must be n x {self.schema.d}, got shape {rows.shape}"
            )
        if rows.size:
            if rows.min() < 0:
                raise SchemaError("negative category index")
            maxes = rows.max(axis=0)
            for i, card in enumerate(self.schema.cards):
                if maxes[i] >= card:
                    raise SchemaError(
                        f"column {self.schema.names[i]!r}: value {maxes[i]} "
                        f">= cardinality {card}"
                    )
        rows.setflags(write=False)
        object.__setattr__(self, "rows", rows)

    @property
    def n(self) -> int:
        return self.rows.shape[0]


@dataclass(frozen=True)
class MarginalVector:
    """Flattened count or probability vector over a clique's product domain."""

    clique: Clique
    cells: np.ndarray
    scale: Literal["counts", "probability"] = "counts"

    def __post_init__(self) -> None:
        cells = np.asarray(self.cells, dtype=np.float64)
        object.__setattr__(self, "cells", cells)

    @property
    def size(self) -> int:
        return self.cells.size


@dataclass(frozen=True)
class WorkloadEntry:
    clique: Clique
    label: Visibility


@dataclass(frozen=True)
class Workload:
    """Marginal queries with a public/private source label each.

    In the vertical setting each clique appears at most once; the label is
    public exactly when every column of the clique is public.
    """

    schema: Schema
    entries: tuple[WorkloadEntry, ...]

    def __post_init__(self) -> None:
        seen = set()
        for e in self.entries:
            self.schema.validate_clique(e.clique)
            if e.clique in seen:
                raise WorkloadError(f"duplicate clique {e.clique}")
            seen.add(e.clique)
            expected = "public" if self.schema.is_public_clique(e.clique) else "private"
            if e.label != expected:
                raise WorkloadError(
                    f"clique {e.clique} labeled {e.label} but visibility says {expected}"
                )

    def __len__(self) -> int:
        return len(self.entries)

    def cliques(self, label: Visibility | None = None) -> list[Clique]:
        return [e.clique for e in self.entries if label is None or e.label == label]


def _labeled(schema: Schema, cliques: Iterable[Clique]) -> Workload:
    entries = tuple(
        WorkloadEntry(cl, "public" if schema.is_public_clique(cl) else "private")
        for cl in cliques
    )
    return Workload(schema, entries)


def compute_marginal(
    dataset: DiscreteDataset, clique: Clique, scale: str = "counts"
) -> MarginalVector:
    """Exact marginal of the dataset projected onto the clique.

    Counts scale sums to n; probability scale divides by n. The empty clique
    yields the single total-count cell.
    """
    clique = dataset.schema.validate_clique(clique)
    if scale not in ("counts", "probability"):
        raise ValueError(f"unknown scale {scale!r}")
    if len(clique) == 0:
        cells = np.array([float(dataset.n)])
    else:
        cols = np.asarray(clique, dtype=np.int64)
        cards = np.asarray(dataset.schema.clique_cards(clique), dtype=np.int64)
        cells = kernels.marginal_counts(dataset.rows, cols, cards)
    if scale == "probability":
        if dataset.n == 0:
            raise SchemaError("cannot normalize a marginal of an empty dataset")
        cells = cells / dataset.n
    return MarginalVector(clique, cells, scale)  # type: ignore[arg-type]


def build_workload(schema: Schema, k: int, require_private: bool = False) -> Workload:
    """All size-k cliques; optionally only those touching a private column."""
    if not 1 <= k <= schema.d:
        raise WorkloadError(f"workload arity k={k} invalid for d={schema.d}")
    cliques = [
        as_clique(c)
        for c in itertools.combinations(range(schema.d), k)
        if not (require_private and schema.is_public_clique(as_clique(c)))
    ]
    return _labeled(schema, cliques)


def downward_closure(workload: Workload) -> Workload:
    """All non-empty sub-cliques of every entry, labels recomputed."""
    closed: set[Clique] = set()
    for entry in workload.entries:
        for r in range(1, len(entry.clique) + 1):
            closed.update(itertools.combinations(entry.clique, r))
    ordered = sorted(closed, key=lambda c: (len(c), c))
    return _labeled(workload.schema, ordered)


def vertical_split(dataset: DiscreteDataset) -> tuple[DiscreteDataset, DiscreteDataset]:
    """Row-aligned public and private views of the dataset."""
    pub = dataset.schema.public_indices
    priv = dataset.schema.private_indices
    pub_view = DiscreteDataset(dataset.schema.subset(pub), dataset.rows[:, pub])
    priv_view = DiscreteDataset(dataset.schema.subset(priv), dataset.rows[:, priv])
    return pub_view, priv_view
