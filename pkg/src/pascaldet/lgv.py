"""Brute-force oracle for ``PD_k`` entries by counting vertex-disjoint lattice path families.

Path ``a`` runs from ``(-(i+a), 0)`` to ``(0, j+a)`` with unit east/north steps,
so it has ``C(i+j+2a, i+a)`` choices. With sources on the negative x-axis and
sinks on the positive y-axis only the identity pairing can be disjoint.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator

from pascaldet import _backend
from pascaldet.errors import DomainError, SizeLimitError

Point = tuple[int, int]


@dataclass(frozen=True)
class OracleLimits:
    max_order: int = 3
    max_i: int = 5
    max_j: int = 5


DEFAULT_LIMITS = OracleLimits()


@dataclass(frozen=True)
class PathFamilySpec:
    order: int
    sources: tuple[Point, ...]
    sinks: tuple[Point, ...]

    @classmethod
    def for_entry(cls, k: int, i: int, j: int) -> "PathFamilySpec":
        return cls(
            k,
            tuple((-(i + a), 0) for a in range(k)),
            tuple((0, j + b) for b in range(k)),
        )


def count_paths(start: Point, end: Point) -> int:
    dx, dy = end[0] - start[0], end[1] - start[1]
    if dx < 0 or dy < 0:
        return 0
    return comb(dx + dy, dx)


def iter_paths(start: Point, end: Point) -> Iterator[tuple[Point, ...]]:
    """All monotone paths as vertex tuples, including both endpoints."""
    dx, dy = end[0] - start[0], end[1] - start[1]
    if dx < 0 or dy < 0:
        return
    for east_steps in itertools.combinations(range(dx + dy), dx):
        x, y = start
        pts = [(x, y)]
        east = set(east_steps)
        for s in range(dx + dy):
            if s in east:
                x += 1
            else:
                y += 1
            pts.append((x, y))
        yield tuple(pts)


def families_disjoint(paths: Iterable[tuple[Point, ...]]) -> bool:
    seen: set[Point] = set()
    for p in paths:
        cells = set(p)
        if seen & cells:
            return False
        seen |= cells
    return True


def count_nonintersecting_paths(k: int, i: int, j: int, limits: OracleLimits = DEFAULT_LIMITS) -> int:
    if k < 1 or i < 0 or j < 0:
        raise DomainError(f"need k >= 1 and i, j >= 0, got ({k}, {i}, {j})")
    if k > limits.max_order or i > limits.max_i or j > limits.max_j:
        raise SizeLimitError(
            f"oracle instance (k={k}, i={i}, j={j}) exceeds limits "
            f"(k <= {limits.max_order}, i <= {limits.max_i}, j <= {limits.max_j})"
        )
    spec = PathFamilySpec.for_entry(k, i, j)
    # bounding box x in [-(i+k-1), 0], y in [0, j+k-1]; one bit per lattice point
    height = j + k
    x0 = i + k - 1

    def mask(path):
        m = 0
        for x, y in path:
            m |= 1 << ((x + x0) * height + y)
        return m

    families = [[mask(p) for p in iter_paths(src, dst)] for src, dst in zip(spec.sources, spec.sinks)]
    return _backend.kernels.count_disjoint(families)
