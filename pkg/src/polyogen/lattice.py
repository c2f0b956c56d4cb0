"""Monotone E/N lattice paths, path counting, and the two-path crossover
machinery used to count non-intersecting pairs.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .counting import binomial


class Point(NamedTuple):
    x: int
    y: int


class NoIntersection(ValueError):
    """The two paths of a pair share no lattice point."""


@dataclass(frozen=True)
class MonotonePath:
    """A lattice path from `start` using only E and N unit steps.

    Only the step string is stored; vertices are derived.  This keeps the
    object O(length) and makes equality and hashing canonical.
    """

    start: Point
    steps: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(self, "start", Point(*self.start))
        if self.steps.strip("EN"):
            raise ValueError(f"steps must be over {{E, N}}, got {self.steps!r}")

    @property
    def end(self) -> Point:
        return Point(self.start.x + self.steps.count("E"),
                     self.start.y + self.steps.count("N"))

    def vertices(self) -> tuple[Point, ...]:
        x, y = self.start
        out = [Point(x, y)]
        for c in self.steps:
            if c == "E":
                x += 1
            else:
                y += 1
            out.append(Point(x, y))
        return tuple(out)

    def to_text(self) -> str:
        """Serialize as e.g. "ENEN@(0,0)"."""
        return f"{self.steps}@({self.start.x},{self.start.y})"

    @classmethod
    def from_text(cls, text: str) -> "MonotonePath":
        m = re.fullmatch(r"([EN]*)@\((-?\d+),(-?\d+)\)", text.strip())
        if m is None:
            raise ValueError(f"not a path literal: {text!r}")
        return cls(Point(int(m.group(2)), int(m.group(3))), m.group(1))


@dataclass(frozen=True)
class PathPair:
    first: MonotonePath
    second: MonotonePath


def path_count(p: Point, u: Point) -> int:
    """Number of monotone E/N paths from p to u: C(dx+dy, dx), zero when the
    displacement is not in the first quadrant."""
    dx = u[0] - p[0]
    dy = u[1] - p[1]
    if dx < 0 or dy < 0:
        return 0
    return binomial(dx + dy, dx)


def enumerate_paths(p: Point, u: Point) -> Iterator[MonotonePath]:
    """Yield every monotone path from p to u once, in lexicographic step
    order with E < N.  Yields nothing for a negative displacement."""
    dx = u[0] - p[0]
    dy = u[1] - p[1]
    if dx < 0 or dy < 0:
        return
    n = dx + dy
    start = Point(*p)
    for east_slots in itertools.combinations(range(n), dx):
        steps = ["N"] * n
        for i in east_slots:
            steps[i] = "E"
        yield MonotonePath(start, "".join(steps))


def intersection_count(a: MonotonePath, b: MonotonePath) -> int:
    """Number of lattice points lying on both paths (shared endpoints count)."""
    return len(set(a.vertices()) & set(b.vertices()))


def crossover_at_first_intersection(pair: PathPair) -> PathPair:
    """Swap the path suffixes at the earliest common point.

    "Earliest" means minimal x + y; a monotone path meets each antidiagonal
    at most once, so the point is unique.  The operation exchanges the two
    endpoints and is an involution on intersecting pairs.
    """
    a, b = pair.first, pair.second
    common = set(a.vertices()) & set(b.vertices())
    if not common:
        raise NoIntersection("paths are disjoint")
    cross = min(common, key=lambda pt: pt.x + pt.y)
    ia = (cross.x + cross.y) - (a.start.x + a.start.y)
    ib = (cross.x + cross.y) - (b.start.x + b.start.y)
    return PathPair(
        MonotonePath(a.start, a.steps[:ia] + b.steps[ib:]),
        MonotonePath(b.start, b.steps[:ib] + a.steps[ia:]),
    )


def intersecting_pair_count(p: Point, q: Point, u: Point, v: Point) -> int:
    """Number of intersecting path pairs p -> u, q -> v.

    Valid when no non-intersecting pair p -> v, q -> u exists (the crossover
    switch then bijects intersecting pairs with swapped-endpoint pairs);
    that hypothesis is the caller's responsibility.
    """
    return path_count(p, v) * path_count(q, u)


def nonintersecting_pair_count(p: Point, q: Point, u: Point, v: Point) -> int:
    """Number of non-intersecting path pairs p -> u, q -> v, under the same
    hypothesis as intersecting_pair_count."""
    return path_count(p, u) * path_count(q, v) - path_count(p, v) * path_count(q, u)
