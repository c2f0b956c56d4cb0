"""Brute-force ground truth, independent of every closed form.

Enumerations here build objects directly from definitions (column-interval
scans, full code-space decoding, path-pair double loops) and never consult
the counting module, so agreement between the two is real evidence.  The
chi-square helpers close the loop for the samplers.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from . import swalk
from .counting import CountClass, binomial
from .lattice import Point, enumerate_paths
from .polyomino import ConvexPolyomino, PolyominoError
from .swalk import ClosedWalk, SWalkCode, SideOrder


class BudgetExceeded(RuntimeError):
    """The requested enumeration is larger than the configured budget."""


class UnknownObject(ValueError):
    """A sampled object fell outside the stated support: a sampler bug."""


@dataclass
class EnumerationReport:
    count_class: CountClass
    w: int | None
    h: int | None
    count: int
    objects: list | None = None
    tallies: dict = field(default_factory=dict)


def _check_budget(size: int, budget: int, what: str) -> None:
    if size > budget:
        raise BudgetExceeded(f"{what}: {size} candidates exceed budget {budget}")


def enumerate_convex(w: int, h: int, budget: int = 5_000_000,
                     keep_objects: bool = True) -> EnumerationReport:
    """All convex polyominoes with bounding box exactly w x h, found by
    scanning every column-interval configuration and keeping the valid ones."""
    if w < 1 or h < 1:
        raise ValueError(f"need w, h >= 1, got ({w}, {h})")
    intervals = [(lo, hi) for lo in range(h) for hi in range(lo + 1, h + 1)]
    _check_budget(len(intervals) ** w, budget, f"convex {w}x{h}")
    found = []
    for cols in itertools.product(intervals, repeat=w):
        try:
            found.append(ConvexPolyomino(w, h, cols))
        except PolyominoError:
            continue
    return EnumerationReport(CountClass.CONVEX, w, h, len(found),
                             found if keep_objects else None)


def swalk_codes(w: int, h: int) -> Iterator[SWalkCode]:
    """Every valid code for a w x h box, a = 0 stratum first."""
    s = w + h
    for a in range(w):
        length = 2 * s - 4 if a == 0 else 2 * s - 5
        for h_slots in itertools.combinations(range(length), 2 * w - 2):
            symbols = ["V"] * length
            for i in h_slots:
                symbols[i] = "H"
            yield SWalkCode(w, h, a, "".join(symbols))


def enumerate_swalks(w: int, h: int, budget: int = 2_000_000,
                     keep_objects: bool = False) -> EnumerationReport:
    """Decode the entire code space of a w x h box and tally it.

    Tallies: total, simple, self_intersecting, rising_intersecting,
    falling_intersecting, and the three side orders.  Exactly one of the
    rising/falling pair crosses in any self-intersecting walk; that is
    asserted, not assumed.
    """
    s = w + h
    space = binomial(2 * s - 4, 2 * w - 2) + (w - 1) * binomial(2 * s - 5, 2 * w - 2)
    _check_budget(space, budget, f"S-walks {w}x{h}")
    tallies = {
        "total": 0,
        "simple": 0,
        "self_intersecting": 0,
        "rising_intersecting": 0,
        "falling_intersecting": 0,
        SideOrder.SWNE: 0,
        SideOrder.SNWE: 0,
        SideOrder.SWEN: 0,
    }
    objects = [] if keep_objects else None
    for code in swalk_codes(w, h):
        walk = swalk.decode(code)
        tallies["total"] += 1
        tallies[swalk.classify(walk)] += 1
        if swalk.self_intersects(walk):
            tallies["self_intersecting"] += 1
            falling_a, rising_a, falling_b, rising_b = _pieces(walk)
            rising = bool(rising_a & rising_b)
            falling = bool(falling_a & falling_b)
            assert rising != falling, f"crossing pair ambiguous for {code}"
            tallies["rising_intersecting" if rising else "falling_intersecting"] += 1
        else:
            tallies["simple"] += 1
        if objects is not None:
            objects.append(code)
    return EnumerationReport(CountClass.SWALK, w, h, tallies["total"], objects, tallies)


def _pieces(walk: ClosedWalk) -> tuple[set[Point], set[Point], set[Point], set[Point]]:
    """Vertex sets of the four interior pieces, in traversal order.

    Removing the four side runs leaves at most four monotone pieces, which
    alternate falling, rising, falling, rising whatever the side order is
    (walks touching a side in two separate runs would exceed the step
    budget, so each side contributes one run).  Adjacent runs share only a
    corner, hence the per-side labelling.
    """
    w, h = walk.w, walk.h
    verts = walk.vertices
    sets: tuple[set[Point], ...] = (set(), set(), set(), set())
    runs = 0
    prev_side = None
    for a, b in zip(verts, verts[1:]):
        if a.x == b.x == 0:
            side = "W"
        elif a.x == b.x == w:
            side = "E"
        elif a.y == b.y == 0:
            side = "S"
        elif a.y == b.y == h:
            side = "N"
        else:
            side = None
        if side is not None:
            if side != prev_side:
                runs += 1
        else:
            sets[min(runs, 3)].update((a, b))
        prev_side = side
    assert runs == 4, f"expected four side runs, saw {runs}"
    return sets


def brute_moments(w: int, h: int, order: int, budget: int = 10_000_000) -> int:
    """Moment of the common-point count over all ordered path pairs to
    (w, h), by direct double enumeration."""
    pair_count = math.comb(w + h, w) ** 2
    _check_budget(pair_count, budget, f"path pairs to ({w},{h})")
    vertex_sets = [frozenset(p.vertices())
                   for p in enumerate_paths(Point(0, 0), Point(w, h))]
    total = 0
    for su in vertex_sets:
        for sv in vertex_sets:
            total += len(su & sv) ** order
    return total


def brute_marked_pairs(w: int, h: int, budget: int = 10_000_000) -> int:
    """Sum of C(k+1, 2) over all ordered path pairs, k the common-point
    count: the two-indistinguishable-marks count."""
    pair_count = math.comb(w + h, w) ** 2
    _check_budget(pair_count, budget, f"path pairs to ({w},{h})")
    vertex_sets = [frozenset(p.vertices())
                   for p in enumerate_paths(Point(0, 0), Point(w, h))]
    total = 0
    for su in vertex_sets:
        for sv in vertex_sets:
            k = len(su & sv)
            total += (k + 1) * k // 2
    return total


# -- chi-square machinery ----------------------------------------------------


@dataclass(frozen=True)
class ChiSquareResult:
    statistic: float
    p_value: float
    dof: int
    draws: int


def chi_square_test(observed: Sequence[int], expected: Sequence[float]) -> ChiSquareResult:
    """Pearson chi-square of observed counts against expected counts."""
    if len(observed) != len(expected) or len(observed) < 2:
        raise ValueError("need matching observed/expected of length >= 2")
    stat = sum((o - e) ** 2 / e for o, e in zip(observed, expected))
    dof = len(observed) - 1
    return ChiSquareResult(stat, chi2_sf(stat, dof), dof, sum(observed))


def uniformity_test(support: Sequence, draws: Iterable, n: int | None = None) -> ChiSquareResult:
    """Chi-square of a sample stream against the uniform law on `support`.

    Draws falling outside the support raise UnknownObject immediately; that
    is a sampler bug, not statistical noise.
    """
    index = {obj: k for k, obj in enumerate(support)}
    if len(index) != len(support):
        raise ValueError("support contains duplicates")
    counts = [0] * len(support)
    taken = 0
    stream = iter(draws)
    while n is None or taken < n:
        try:
            obj = next(stream)
        except StopIteration:
            break
        k = index.get(obj)
        if k is None:
            raise UnknownObject(f"draw outside support: {obj!r}")
        counts[k] += 1
        taken += 1
    if n is not None and taken < n:
        raise ValueError(f"stream exhausted after {taken} of {n} draws")
    expected = [taken / len(support)] * len(support)
    return chi_square_test(counts, expected)


def chi2_sf(x: float, k: int) -> float:
    """Chi-square survival function: P(X >= x) for k degrees of freedom.

    Evaluated as the regularized upper incomplete gamma Q(k/2, x/2) with the
    usual series / continued-fraction split at x = a + 1.
    """
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    if x <= 0:
        return 1.0
    a, xx = k / 2.0, x / 2.0
    if xx < a + 1.0:
        return 1.0 - _gamma_p_series(a, xx)
    return _gamma_q_contfrac(a, xx)


def _gamma_p_series(a: float, x: float) -> float:
    term = 1.0 / a
    total = term
    n = a
    for _ in range(1000):
        n += 1.0
        term *= x / n
        total += term
        if abs(term) < abs(total) * 1e-15:
            break
    return total * math.exp(-x + a * math.log(x) - math.lgamma(a))


def _gamma_q_contfrac(a: float, x: float) -> float:
    tiny = 1e-300
    b = x + 1.0 - a
    c = 1.0 / tiny
    d = 1.0 / b
    f = d
    for n in range(1, 1000):
        an = -n * (n - a)
        b += 2.0
        d = an * d + b
        if abs(d) < tiny:
            d = tiny
        c = b + an / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        f *= delta
        if abs(delta - 1.0) < 1e-15:
            break
    return f * math.exp(-x + a * math.log(x) - math.lgamma(a))
