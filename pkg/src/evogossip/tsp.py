"""Symmetric Euclidean TSP instances with TSPLIB integer distances.

Supports the EUC_2D subset of the TSPLIB format: coordinates in the plane,
edge weights rounded to the nearest integer with the TSPLIB nint rule
(round half away from zero). All tour lengths are therefore exact integers
and reproduce the canonical TSPLIB values for instances such as bier127,
d198 and lin318.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import permutations
from typing import IO, Iterable

import numpy as np

# Full distance matrices are precomputed up to this dimension; beyond it
# distances are recomputed from coordinates on every lookup.
MATRIX_DIMENSION_CAP = 2000

# Exhaustive enumeration is (dimension-1)!/2 tours; 9!/2 is still desk-scale.
BRUTE_FORCE_CAP = 10


class TsplibError(ValueError):
    """Base class for TSPLIB parsing failures."""


class UnsupportedEdgeWeightType(TsplibError):
    """The file declares an edge weight type other than EUC_2D."""


class MalformedHeader(TsplibError):
    """A header or coordinate line could not be interpreted."""


class CoordCountMismatch(TsplibError):
    """NODE_COORD_SECTION does not hold exactly DIMENSION entries."""


class DimensionMismatch(ValueError):
    """A tour's city count does not match the instance dimension."""


class InstanceTooLarge(ValueError):
    """Instance exceeds the brute-force enumeration guard."""


def euc2d_distance(a: tuple[float, float], b: tuple[float, float]) -> int:
    """TSPLIB EUC_2D distance: nint(sqrt(dx^2 + dy^2)).

    nint rounds half away from zero, which for nonnegative distances is
    int(x + 0.5). Symmetric by construction.
    """
    dx = a[0] - b[0]
    dy = a[1] - b[1]
    return int(math.sqrt(dx * dx + dy * dy) + 0.5)


@dataclass(frozen=True, slots=True)
class Tour:
    """A cyclic visiting order of all cities, optionally with its length.

    ``order`` must be a permutation of ``range(dimension)``. ``length`` is
    the integer cycle length (including the closing edge) when the tour has
    been evaluated, else None. Lower length is better.
    """

    order: tuple[int, ...]
    length: int | None = None


def is_permutation(order: Iterable[int], dimension: int) -> bool:
    """True iff ``order`` visits each of 0..dimension-1 exactly once."""
    seen = list(order)
    return len(seen) == dimension and sorted(seen) == list(range(dimension))


class TspInstance:
    """An immutable EUC_2D instance: named list of city coordinates.

    Instances with at most MATRIX_DIMENSION_CAP cities carry a precomputed
    integer distance matrix (nested tuples, fastest for the scalar lookups
    the evolutionary loop performs); larger ones compute distances on
    demand. Safe for unrestricted concurrent reads.
    """

    __slots__ = ("name", "dimension", "coords", "_matrix")

    def __init__(self, name: str, coords: Iterable[tuple[float, float]]):
        coords = tuple((float(x), float(y)) for x, y in coords)
        if len(coords) < 3:
            raise ValueError(f"instance needs at least 3 cities, got {len(coords)}")
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "dimension", len(coords))
        object.__setattr__(self, "coords", coords)
        object.__setattr__(self, "_matrix", self._build_matrix())

    def __setattr__(self, key, value):  # pragma: no cover - guard only
        raise AttributeError("TspInstance is immutable")

    def _build_matrix(self) -> tuple[tuple[int, ...], ...] | None:
        if self.dimension > MATRIX_DIMENSION_CAP:
            return None
        xy = np.asarray(self.coords)
        diff = xy[:, None, :] - xy[None, :, :]
        dist = np.floor(np.sqrt((diff * diff).sum(axis=2)) + 0.5).astype(np.int64)
        return tuple(tuple(int(d) for d in row) for row in dist)

    def distance(self, i: int, j: int) -> int:
        """Integer distance between cities ``i`` and ``j``."""
        if self._matrix is not None:
            return self._matrix[i][j]
        return euc2d_distance(self.coords[i], self.coords[j])

    def tour_length(self, order: tuple[int, ...]) -> int:
        """Cycle length of ``order``: consecutive edges plus the closing edge."""
        if len(order) != self.dimension:
            raise DimensionMismatch(
                f"tour has {len(order)} cities, instance has {self.dimension}"
            )
        matrix = self._matrix
        total = 0
        prev = order[-1]
        if matrix is not None:
            for city in order:
                total += matrix[prev][city]
                prev = city
        else:
            coords = self.coords
            for city in order:
                total += euc2d_distance(coords[prev], coords[city])
                prev = city
        return total

    def evaluate(self, tour: Tour) -> Tour:
        """Return ``tour`` with its length filled in."""
        return Tour(tour.order, self.tour_length(tour.order))

    def random_tour(self, rng: random.Random) -> Tour:
        """Uniformly random unevaluated tour."""
        order = list(range(self.dimension))
        rng.shuffle(order)
        return Tour(tuple(order))

    def __repr__(self):
        return f"TspInstance(name={self.name!r}, dimension={self.dimension})"


def tour_length(instance: TspInstance, tour: Tour) -> int:
    """Length of ``tour`` on ``instance`` (integer, closing edge included)."""
    return instance.tour_length(tour.order)


def parse_tsplib(source: str | IO[str]) -> TspInstance:
    """Parse an EUC_2D TSPLIB file from a string or text stream.

    Requires NAME, DIMENSION, EDGE_WEIGHT_TYPE: EUC_2D and a
    NODE_COORD_SECTION with exactly DIMENSION ``index x y`` lines. City
    indices are 1-based in the file and mapped to 0-based positions in
    file order.
    """
    text = source.read() if hasattr(source, "read") else source
    header: dict[str, str] = {}
    coords: list[tuple[float, float]] = []
    in_coords = False
    coord_lines = 0

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        upper = line.upper()
        if upper.startswith("NODE_COORD_SECTION"):
            in_coords = True
            continue
        if upper == "EOF":
            break
        if not in_coords:
            if ":" in line:
                key, _, value = line.partition(":")
                header[key.strip().upper()] = value.strip()
            else:
                raise MalformedHeader(f"line {lineno}: expected 'KEY : VALUE', got {line!r}")
            continue
        parts = line.split()
        if len(parts) != 3:
            raise MalformedHeader(f"line {lineno}: expected 'index x y', got {line!r}")
        try:
            coords.append((float(parts[1]), float(parts[2])))
        except ValueError:
            raise MalformedHeader(f"line {lineno}: non-numeric coordinate in {line!r}") from None
        coord_lines = lineno

    for key in ("NAME", "DIMENSION", "EDGE_WEIGHT_TYPE"):
        if key not in header:
            raise MalformedHeader(f"missing header key {key}")
    weight_type = header["EDGE_WEIGHT_TYPE"].upper()
    if weight_type != "EUC_2D":
        raise UnsupportedEdgeWeightType(f"unsupported edge weight type {weight_type!r}")
    try:
        dimension = int(header["DIMENSION"])
    except ValueError:
        raise MalformedHeader(f"DIMENSION is not an integer: {header['DIMENSION']!r}") from None
    if len(coords) != dimension:
        raise CoordCountMismatch(
            f"line {coord_lines}: DIMENSION is {dimension} but "
            f"NODE_COORD_SECTION holds {len(coords)} entries"
        )
    return TspInstance(header["NAME"], coords)


def format_tsplib(instance: TspInstance) -> str:
    """Serialize an instance back to TSPLIB text (EUC_2D, 1-based indices)."""

    def fmt(v: float) -> str:
        return str(int(v)) if v.is_integer() else repr(v)

    lines = [
        f"NAME : {instance.name}",
        "TYPE : TSP",
        f"DIMENSION : {instance.dimension}",
        "EDGE_WEIGHT_TYPE : EUC_2D",
        "NODE_COORD_SECTION",
    ]
    for i, (x, y) in enumerate(instance.coords, start=1):
        lines.append(f"{i} {fmt(x)} {fmt(y)}")
    lines.append("EOF")
    return "\n".join(lines) + "\n"


def random_instance(
    dimension: int, seed: int, name: str | None = None, box: float = 1000.0
) -> TspInstance:
    """Seeded instance with coordinates uniform in [0, box)^2."""
    rng = random.Random(f"tsp-instance/{seed}")
    coords = [(rng.uniform(0.0, box), rng.uniform(0.0, box)) for _ in range(dimension)]
    return TspInstance(name or f"random{dimension}-{seed}", coords)


def brute_force_optimum(instance: TspInstance) -> tuple[Tour, int]:
    """Globally optimal tour by exhaustive enumeration of canonical tours.

    City 0 is fixed first and each direction is visited once, so
    (dimension-1)!/2 tours are scanned. Guarded to dimension
    BRUTE_FORCE_CAP; raises InstanceTooLarge beyond it.
    """
    if instance.dimension > BRUTE_FORCE_CAP:
        raise InstanceTooLarge(
            f"dimension {instance.dimension} exceeds brute-force cap {BRUTE_FORCE_CAP}"
        )
    rest = range(1, instance.dimension)
    best_order: tuple[int, ...] | None = None
    best_length = None
    for perm in permutations(rest):
        if perm[0] > perm[-1]:
            continue  # mirror of an already-scanned tour
        order = (0,) + perm
        length = instance.tour_length(order)
        if best_length is None or length < best_length:
            best_order, best_length = order, length
    assert best_order is not None and best_length is not None
    return Tour(best_order, best_length), best_length
