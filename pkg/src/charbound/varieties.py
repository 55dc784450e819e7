"""Smooth complete intersections in projective space and the index types
used to label characteristic numbers and Schubert classes.

A complete intersection is the only first-class variety here: it admits
closed-form Chern classes and exact Betti numbers, which is what makes the
bound checks verifiable against ground truth. Anything else enters the
pipeline only as a (dimension, degree) pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod


class DimensionError(ValueError):
    """An operation needed more dimensions than the variety has."""


@dataclass(frozen=True)
class CompleteIntersection:
    """Variety cut out by hypersurfaces of the given degrees in P^ambient_dim.

    The multidegree is stored sorted ascending, so equal varieties compare
    equal regardless of input order. Degree-1 factors are allowed; they model
    linear re-embeddings.
    """

    ambient_dim: int
    multidegree: tuple

    def __post_init__(self):
        degs = tuple(sorted(int(d) for d in self.multidegree))
        object.__setattr__(self, "multidegree", degs)
        if not degs:
            raise ValueError("multidegree must contain at least one factor")
        if any(d < 1 for d in degs):
            raise ValueError("every degree factor must be >= 1")
        if len(degs) >= self.ambient_dim:
            raise ValueError(
                "codimension must be strictly below the ambient dimension"
            )

    @property
    def codimension(self) -> int:
        return len(self.multidegree)

    @property
    def dimension(self) -> int:
        return self.ambient_dim - self.codimension

    @property
    def degree(self) -> int:
        return prod(self.multidegree)

    def hyperplane_section(self) -> "CompleteIntersection":
        """Cut with a generic hyperplane: same multidegree, ambient drops by one."""
        if self.dimension < 2:
            raise DimensionError("a curve has no hyperplane section in this model")
        return CompleteIntersection(self.ambient_dim - 1, self.multidegree)

    @classmethod
    def from_dict(cls, data) -> "CompleteIntersection":
        """Parse the JSON shape {"ambient_dim": int, "multidegree": [int, ...]}."""
        try:
            ambient = int(data["ambient_dim"])
            degs = tuple(int(d) for d in data["multidegree"])
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed variety spec: {exc}") from exc
        return cls(ambient, degs)

    def to_dict(self) -> dict:
        return {"ambient_dim": self.ambient_dim, "multidegree": list(self.multidegree)}

    def __str__(self):
        return f"m={self.ambient_dim} deg=({','.join(map(str, self.multidegree))})"


@dataclass(frozen=True)
class MultiIndex:
    """Indices (i_1, ..., i_r) of a monomial in Chern classes; entries >= 1."""

    entries: tuple

    def __post_init__(self):
        entries = tuple(int(i) for i in self.entries)
        if any(i < 1 for i in entries):
            raise ValueError("multi-index entries must be >= 1")
        object.__setattr__(self, "entries", entries)

    @property
    def weight(self) -> int:
        """Total degree the index selects: sum of the entries."""
        return sum(self.entries)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing nonnegative parts; trailing zeros stripped."""

    parts: tuple

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 0 for p in parts):
            raise ValueError("partition parts must be >= 0")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing, got {parts}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def fits_in_box(self, rows: int, cols: int) -> bool:
        return len(self.parts) <= rows and all(p <= cols for p in self.parts)

    def box_complement(self, rows: int, cols: int) -> "Partition":
        """Complementary partition inside the rows x cols box."""
        if not self.fits_in_box(rows, cols):
            raise ValueError(f"{self.parts} does not fit in a {rows}x{cols} box")
        padded = self.parts + (0,) * (rows - len(self.parts))
        return Partition(tuple(cols - p for p in reversed(padded)))

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


def partitions_of(total: int, max_part: int | None = None):
    """Yield all partitions of ``total`` as weakly decreasing tuples."""
    if total < 0:
        raise ValueError("total must be nonnegative")
    cap = total if max_part is None else min(max_part, total)

    def rec(remaining, largest):
        if remaining == 0:
            yield ()
            return
        for first in range(min(largest, remaining), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    yield from rec(total, cap)
