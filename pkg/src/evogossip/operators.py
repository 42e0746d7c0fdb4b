"""Variation and selection operators on permutation genomes.

Order crossover (OX, Davis variant: the fill scan starts at the second cut),
single 2-opt segment reversal as mutation, and k-tournament selection that
returns the two best of the drawn candidates.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .tsp import Tour


class LengthMismatch(ValueError):
    """Parent tours have different lengths."""


class InvalidCutPoints(ValueError):
    """Crossover cut points outside 0 <= cut1 <= cut2 <= L."""


class InvalidIndices(ValueError):
    """Mutation indices outside 0 <= i < j < L."""


class EmptyPool(ValueError):
    """Tournament selection over an empty pool."""


@dataclass(frozen=True, slots=True)
class EaParams:
    """Evolutionary-loop parameters; defaults are the benchmark settings."""

    population_size: int = 32
    tournament_k: int = 7
    p_crossover: float = 0.7
    p_mutation: float = 0.1
    max_evaluations: int = 1_000_000

    def __post_init__(self):
        if self.population_size < 2:
            raise ValueError("population_size must be >= 2")
        if self.tournament_k < 2:
            raise ValueError("tournament_k must be >= 2")
        if not 0.0 <= self.p_crossover <= 1.0:
            raise ValueError("p_crossover must be in [0, 1]")
        if not 0.0 <= self.p_mutation <= 1.0:
            raise ValueError("p_mutation must be in [0, 1]")
        if self.max_evaluations < 1:
            raise ValueError("max_evaluations must be >= 1")


def order_crossover(p1: Tour, p2: Tour, cut1: int, cut2: int) -> Tour:
    """OX child: keep p1[cut1:cut2] in place, fill the rest from p2.

    The remaining positions are filled cyclically starting at cut2 with the
    cities missing from the kept slice, taken in the cyclic order they
    appear in p2 starting at cut2.
    """
    a, b = p1.order, p2.order
    n = len(a)
    if len(b) != n:
        raise LengthMismatch(f"parents have lengths {n} and {len(b)}")
    if not 0 <= cut1 <= cut2 <= n:
        raise InvalidCutPoints(f"cuts ({cut1}, {cut2}) invalid for length {n}")
    held = a[cut1:cut2]
    if len(held) == n:
        return Tour(a)
    kept = set(held)
    child: list[int] = [0] * n
    child[cut1:cut2] = held
    pos = cut2 % n
    for offset in range(n):
        city = b[(cut2 + offset) % n]
        if city in kept:
            continue
        child[pos] = city
        pos += 1
        if pos == n:
            pos = 0
    return Tour(tuple(child))


def two_opt_mutation(tour: Tour, i: int, j: int) -> Tour:
    """Reverse the segment tour[i..j] (inclusive); an involution for fixed (i, j)."""
    order = tour.order
    n = len(order)
    if not 0 <= i < j < n:
        raise InvalidIndices(f"indices ({i}, {j}) invalid for length {n}")
    reversed_segment = order[:i] + order[i : j + 1][::-1] + order[j + 1 :]
    return Tour(reversed_segment)


def tournament_select(
    pool: Sequence[Tour], k: int, rng: random.Random
) -> tuple[Tour, Tour]:
    """Draw k pool entries uniformly and return the two lowest-length ones.

    Draws are without replacement when the pool holds at least k entries,
    with replacement otherwise. Ties are broken by draw order, so repeated
    calls with an identical seeded rng are reproducible.
    """
    if not pool:
        raise EmptyPool("tournament over an empty pool")
    if k < 2:
        raise ValueError("tournament size must be >= 2")
    if len(pool) >= k:
        draws = rng.sample(pool, k)
    else:
        draws = [pool[rng.randrange(len(pool))] for _ in range(k)]
    best = second = None
    for entry in draws:
        if best is None or entry.length < best.length:
            second = best
            best = entry
        elif second is None or entry.length < second.length:
            second = entry
    assert best is not None and second is not None
    return best, second


def vary(parents: tuple[Tour, Tour], params: EaParams, rng: random.Random) -> Tour:
    """One offspring: probabilistic crossover, then probabilistic mutation.

    With p_crossover the child is the OX of both parents at two uniform cut
    points, otherwise a copy of the first (better) parent. With p_mutation
    one 2-opt reversal is applied at a uniform index pair. The returned
    tour is unevaluated.
    """
    p1, p2 = parents
    n = len(p1.order)
    if rng.random() < params.p_crossover:
        c1, c2 = rng.randint(0, n), rng.randint(0, n)
        if c1 > c2:
            c1, c2 = c2, c1
        child = order_crossover(p1, p2, c1, c2)
    else:
        child = Tour(p1.order)
    if rng.random() < params.p_mutation:
        i, j = rng.sample(range(n), 2)
        if i > j:
            i, j = j, i
        child = two_opt_mutation(child, i, j)
    return child
