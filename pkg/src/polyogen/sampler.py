"""Exactly uniform random generation of S-walks and convex polyominoes.

Fixed-box sampling proposes a uniform S-walk code and rejects on
self-intersection; success probability is the exact ratio of polyomino to
S-walk counts (worst around 48% at w = h = 4, approaching 1 as the box
grows).  Fixed-perimeter sampling maps 2^(2s-7) * (2s+3) equally likely raw
outcomes two-to-one onto the code space, so its proposals are uniform by
construction.  Directed polyominoes are sampled with zero rejection through
the path-pair bijection.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import bijection, counting, swalk
from .counting import CountClass, DomainError, binomial
from .lattice import MonotonePath, Point
from .polyomino import ConvexPolyomino
from .rng import SplitMix64


@dataclass(frozen=True)
class SampleReport:
    """One sampled polyomino, with the attempt count (1 + rejections) and
    the (seed, stream position) that opened the first proposal."""

    polyomino: ConvexPolyomino
    attempts: int
    seed: int
    position: int


@dataclass(frozen=True)
class EfficiencyStats:
    """Exact acceptance probability and an optional Monte-Carlo estimate."""

    exact: Fraction
    accepted: int
    trials: int

    @property
    def empirical(self) -> Fraction | None:
        if self.trials == 0:
            return None
        return Fraction(self.accepted, self.trials)


def _subset_to_symbols(length: int, h_positions: tuple[int, ...]) -> str:
    out = ["V"] * length
    for i in h_positions:
        out[i] = "H"
    return "".join(out)


def sample_swalk(w: int, h: int, rng: SplitMix64) -> swalk.SWalkCode:
    """Exactly uniform S-walk code for a w x h box.

    A single big-integer draw below the total code count picks the start
    offset with the right weight (the a = 0 stratum has its own code
    length); the H positions are then a uniform k-subset.
    """
    if w < 1 or h < 1:
        raise DomainError(f"need w, h >= 1, got ({w}, {h})")
    s = w + h
    zero_stratum = binomial(2 * s - 4, 2 * w - 2)
    per_offset = binomial(2 * s - 5, 2 * w - 2)
    r = rng.randbelow(zero_stratum + (w - 1) * per_offset)
    if r < zero_stratum:
        a, length = 0, 2 * s - 4
    else:
        a, length = 1 + (r - zero_stratum) // per_offset, 2 * s - 5
    symbols = _subset_to_symbols(length, rng.ksubset(length, 2 * w - 2))
    return swalk.SWalkCode(w, h, a, symbols)


def sample_convex(w: int, h: int, rng: SplitMix64) -> SampleReport:
    """Uniform convex polyomino with bounding box exactly w x h, by
    rejection of self-intersecting S-walks."""
    seed, position = rng.seed, rng.position
    attempts = 0
    while True:
        attempts += 1
        walk = swalk.decode(sample_swalk(w, h, rng))
        if not swalk.self_intersects(walk):
            return SampleReport(swalk.to_polyomino(walk), attempts, seed, position)


def sample_path(start: Point, end: Point, rng: SplitMix64) -> MonotonePath:
    """Uniform monotone path between two points."""
    dx, dy = end[0] - start[0], end[1] - start[1]
    if dx < 0 or dy < 0:
        raise DomainError(f"no monotone paths {start} -> {end}")
    east = rng.ksubset(dx + dy, dx)
    steps = ["N"] * (dx + dy)
    for i in east:
        steps[i] = "E"
    return MonotonePath(Point(*start), "".join(steps))


def sample_directed(w: int, h: int, rng: SplitMix64) -> ConvexPolyomino:
    """Uniform directed convex polyomino, rejection-free: two independent
    uniform paths pushed through the untangling bijection."""
    if w < 1 or h < 1:
        raise DomainError(f"need w, h >= 1, got ({w}, {h})")
    origin, corner = Point(0, 0), Point(w - 1, h - 1)
    u = sample_path(origin, corner, rng)
    v = sample_path(origin, corner, rng)
    return bijection.pair_to_directed(u, v, w, h)


def perimeter_proposal(s: int, symbols: str, q: int) -> swalk.SWalkCode:
    """Deterministic outcome map of the fixed-perimeter sampler.

    `symbols` is a free string of length 2s-7 and q is in 1..2s+3.  Each of
    the 2^(2s-7) * (2s+3) raw outcomes maps to a code, and every code of
    semi-perimeter s has exactly two preimages, so a uniform (symbols, q)
    yields a uniform code.

    q > 2s-5 selects the a = 0 stratum: the three low bits of q - (2s-4)
    provide two more symbols (bit 0 first, 0 -> V, 1 -> H; the third bit is
    deliberately wasted) and a parity symbol makes the H count even.
    Otherwise a parity symbol makes the H count odd and an extra H is
    inserted at position q; the insertion rank modulo w-1 fixes the start
    offset a in 1..w-1.
    """
    if s < 4:
        raise DomainError(f"perimeter sampling needs s >= 4, got s={s}")
    if len(symbols) != 2 * s - 7 or symbols.strip("VH"):
        raise ValueError(f"need a {{V,H}} string of length {2 * s - 7}")
    if not 1 <= q <= 2 * s + 3:
        raise ValueError(f"q={q} outside 1..{2 * s + 3}")

    if q > 2 * s - 5:
        bits = q - (2 * s - 4)
        ext = symbols + "VH"[bits & 1] + "VH"[(bits >> 1) & 1]
        ext += "VH"[ext.count("H") % 2]  # parity: even H count
        w = ext.count("H") // 2 + 1
        return swalk.SWalkCode(w, s - w, 0, ext)

    padded = symbols + "VH"[1 - symbols.count("H") % 2]  # parity: odd H count
    code = padded[: q - 1] + "H" + padded[q - 1:]
    w = code.count("H") // 2 + 1
    insert_rank = code[:q].count("H")  # the new H is the insert_rank-th from the left
    a = (insert_rank - 1) % (w - 1) + 1
    return swalk.SWalkCode(w, s - w, a, code)


def _perimeter_propose(s: int, rng: SplitMix64) -> swalk.ClosedWalk:
    n_sym = 2 * s - 7
    bits = rng.randbelow(1 << n_sym)
    symbols = "".join("VH"[(bits >> i) & 1] for i in range(n_sym))
    q = 1 + rng.randbelow(2 * s + 3)
    return swalk.decode(perimeter_proposal(s, symbols, q))


def sample_perimeter(s: int, rng: SplitMix64) -> SampleReport:
    """Uniform convex polyomino of perimeter 2s, mixing over all boxes.

    One proposal costs 2s-7 random bits plus one draw from 1..2s+3; the
    self-intersection rejection rate decays like 4/sqrt(pi*s).
    """
    if s < 4:
        raise DomainError(f"perimeter sampling needs s >= 4, got s={s}")
    seed, position = rng.seed, rng.position
    attempts = 0
    while True:
        attempts += 1
        walk = _perimeter_propose(s, rng)
        if not swalk.self_intersects(walk):
            return SampleReport(swalk.to_polyomino(walk), attempts, seed, position)


def efficiency(w: int | None = None, h: int | None = None, s: int | None = None,
               trials: int = 0, rng: SplitMix64 | None = None) -> EfficiencyStats:
    """Acceptance probability of the rejection sampler, exact and measured.

    Pass (w, h) for the fixed-box sampler or s for the fixed-perimeter one.
    With trials = 0 only the exact ratio is computed.
    """
    if trials < 0:
        raise ValueError(f"need trials >= 0, got {trials}")
    if s is not None:
        if w is not None or h is not None:
            raise ValueError("pass either (w, h) or s, not both")
        exact = Fraction(counting.count_perimeter(CountClass.CONVEX, s),
                         counting.count_perimeter(CountClass.SWALK, s))
        propose = None if trials == 0 else (lambda: _perimeter_propose(s, rng))
    elif w is not None and h is not None:
        exact = Fraction(counting.count(CountClass.CONVEX, w, h),
                         counting.count(CountClass.SWALK, w, h))
        propose = None if trials == 0 else (lambda: swalk.decode(sample_swalk(w, h, rng)))
    else:
        raise ValueError("pass either (w, h) or s")

    accepted = 0
    if trials:
        if rng is None:
            raise ValueError("trials > 0 needs an rng")
        for _ in range(trials):
            if not swalk.self_intersects(propose()):
                accepted += 1
    return EfficiencyStats(exact, accepted, trials)
