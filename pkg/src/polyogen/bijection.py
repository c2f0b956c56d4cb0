"""Bijections between ordered pairs of monotone paths and directed convex
polyominoes.

A path pair from (0,0) to (w-1,h-1) is first rotated 45 degrees into a pair
of integer step functions f, g on {1, ..., s-1} starting at heights +1 and
-1.  The crossover untangling turns an arbitrary pair into a non-crossing
pair whose endpoint gap is 2 + 4i; undoing the reflections of the boundary
construction then yields a directed polyomino of the exact target box.  A
second, independent untangling in the style of two-colored Grand-Motzkin
paths is provided as a cross-check; it proves the same count but is a
different map.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .lattice import MonotonePath, Point
from .polyomino import ConvexPolyomino, boundary_walk, from_boundary


class NotDirected(ValueError):
    """The polyomino does not contain the SW cell of its bounding box."""


class InvalidEndpoints(ValueError):
    """The endpoint gap of a non-crossing pair is not of the form 2 + 4i."""


class ParityError(ValueError):
    """Start heights or steps with inconsistent parity."""


@dataclass(frozen=True)
class StepFunctionPair:
    """Two +-1-step functions on z = 1..s-1 with f(1) = 1, g(1) = -1.

    `f[z-1]` holds the value at z.  The common endpoint displacement must
    satisfy g(s-1) = f(s-1) - 2, which encodes the shared path endpoint of
    the pre-rotation pair.
    """

    f: tuple[int, ...]
    g: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "f", tuple(self.f))
        object.__setattr__(self, "g", tuple(self.g))
        f, g = self.f, self.g
        if len(f) != len(g) or not f:
            raise ValueError("f and g must have equal positive length")
        if f[0] != 1 or g[0] != -1:
            raise ValueError(f"start heights must be +1/-1, got {f[0]}/{g[0]}")
        for vals in (f, g):
            for a, b in zip(vals, vals[1:]):
                if abs(b - a) != 1:
                    raise ValueError("functions must step by +-1")
        if g[-1] != f[-1] - 2:
            raise ValueError(f"endpoint heights {f[-1]}/{g[-1]} do not differ by 2")

    @property
    def s(self) -> int:
        return len(self.f) + 1

    def delta(self) -> tuple[int, ...]:
        return tuple(a - b for a, b in zip(self.f, self.g))


@dataclass(frozen=True)
class NoncrossingPair:
    """A pair with F >= G + 2 everywhere and endpoint gap exactly 2 + 4i."""

    F: tuple[int, ...]
    G: tuple[int, ...]
    i: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "F", tuple(self.F))
        object.__setattr__(self, "G", tuple(self.G))
        F, G = self.F, self.G
        if len(F) != len(G) or not F:
            raise ValueError("F and G must have equal positive length")
        if F[0] != 1 or G[0] != -1:
            raise ValueError(f"start heights must be +1/-1, got {F[0]}/{G[0]}")
        for vals in (F, G):
            for a, b in zip(vals, vals[1:]):
                if abs(b - a) != 1:
                    raise ValueError("functions must step by +-1")
        if any(a - b < 2 for a, b in zip(F, G)):
            raise ValueError("pair is not non-crossing (need F >= G + 2)")
        gap = F[-1] - G[-1]
        if self.i < 0 or gap != 2 + 4 * self.i:
            raise InvalidEndpoints(f"endpoint gap {gap} is not 2 + 4*{self.i}")

    @property
    def s(self) -> int:
        return len(self.F) + 1


class GMStep(Enum):
    UP = "U"
    DOWN = "D"
    FLAT_UP = "u"    # both functions step up
    FLAT_DOWN = "d"  # both step down


@dataclass(frozen=True)
class GrandMotzkinPath:
    """Two-colored Grand-Motzkin path: the halved difference walk of a step
    function pair, flat steps colored by the common direction."""

    steps: tuple[GMStep, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "steps", tuple(self.steps))
        ups = sum(1 for st in self.steps if st is GMStep.UP)
        downs = sum(1 for st in self.steps if st is GMStep.DOWN)
        if ups != downs:
            raise ValueError(f"{ups} up vs {downs} down steps; path must return to its start height")


# -- crossover untangling -------------------------------------------------


def untangle_marks(pair: StepFunctionPair) -> list[int]:
    """Right-to-left sweep locating every crossover position.

    Scanning z = s-1 .. 1, a position is marked when f(z) - g(z) equals the
    current target, which alternates 0, 4, 0, ... starting at 0.  Marks come
    out in decreasing z order (the order the crossovers are performed).
    """
    f, g = pair.f, pair.g
    marks = []
    target = 0
    for z in range(len(f), 0, -1):
        if f[z - 1] - g[z - 1] == target:
            marks.append(z)
            target = 4 - target
    return marks


def untangle(pair: StepFunctionPair) -> NoncrossingPair:
    """Uncross a pair by repeated crossover-and-shift, in two linear sweeps.

    One crossover at the rightmost common point z0 swaps the prefixes up to
    z0, then shifts the whole first function by +2 and the second by -2.
    The left-to-right rebuild below applies the accumulated effect of all
    crossovers at once: positions left of an odd number of remaining marks
    read from the swapped function, and each mark passed adds 2 to the
    outward shift.  The endpoint gap grows to 2 + 4i for i = len(marks).
    """
    f, g = pair.f, pair.g
    marks = untangle_marks(pair)
    k = len(marks)
    mark_set = set(marks)
    swapped = k % 2 == 1
    shift = 0
    F: list[int] = []
    G: list[int] = []
    for z in range(1, len(f) + 1):
        if swapped:
            F.append(g[z - 1] + shift + 2)
            G.append(f[z - 1] - shift - 2)
        else:
            F.append(f[z - 1] + shift)
            G.append(g[z - 1] - shift)
        if z in mark_set:
            swapped = not swapped
            shift += 2
    return NoncrossingPair(tuple(F), tuple(G), k)


def retangle(pair: NoncrossingPair) -> StepFunctionPair:
    """Exact inverse of untangle.

    A single right-to-left scan of F - G against the descending targets
    4i, 4i-4, ..., 4 recovers the crossover positions: the gap sits strictly
    above each target to the right of its mark, so the first hit is always
    the true position.  The rebuild mirrors untangle with the shifts undone.
    """
    F, G = pair.F, pair.G
    k = pair.i
    n = len(F)
    marks: list[int] = []
    target = 4 * k
    z = n
    while target >= 4 and z >= 1:
        if F[z - 1] - G[z - 1] == target:
            marks.append(z)
            target -= 4
        z -= 1
    if target >= 4:
        raise InvalidEndpoints(f"no preimage: only {len(marks)} of {k} crossover positions found")
    mark_set = set(marks)
    swapped = k % 2 == 1
    shift = 0
    f: list[int] = []
    g: list[int] = []
    for z in range(1, n + 1):
        if swapped:
            f.append(G[z - 1] + shift + 2)
            g.append(F[z - 1] - shift - 2)
        else:
            f.append(F[z - 1] - shift)
            g.append(G[z - 1] + shift)
        if z in mark_set:
            swapped = not swapped
            shift += 2
    return StepFunctionPair(tuple(f), tuple(g))


# -- Grand-Motzkin style untangling ----------------------------------------


def motzkin_untangle(pair: StepFunctionPair) -> NoncrossingPair:
    """Left-to-right untangling without prefix swaps.

    For each target 0, -2, ..., 2-2i (i set by the minimum of the difference
    function), the leftmost position attaining it has f stepping down and g
    stepping up; adding +2 to f and -2 to g from that position onward turns
    those steps around.  Applied cumulatively this lifts the difference to
    at least 2 everywhere.
    """
    f, g = pair.f, pair.g
    delta = [a - b for a, b in zip(f, g)]
    mn = min(delta)
    i = (2 - mn) // 2 if mn <= 0 else 0
    marks = []
    for j in range(1, i + 1):
        marks.append(delta.index(2 - 2 * j) + 1)  # leftmost, 1-based
    F: list[int] = []
    G: list[int] = []
    passed = 0
    mark_set = set(marks)
    for z in range(1, len(f) + 1):
        if z in mark_set:
            passed += 1
        F.append(f[z - 1] + 2 * passed)
        G.append(g[z - 1] - 2 * passed)
    return NoncrossingPair(tuple(F), tuple(G), i)


def motzkin_retangle(pair: NoncrossingPair) -> StepFunctionPair:
    """Inverse of motzkin_untangle via one right-to-left scan.

    The j-th lifted position (j = i..1) is the rightmost z, left of the
    previous find, where the gap equals 2 + 2j *and* F steps up while G
    steps down; the direction condition is what excludes later points where
    the gap alone matches.
    """
    F, G = pair.F, pair.G
    i = pair.i
    n = len(F)
    marks: list[int] = []
    target = 2 + 2 * i
    z = n
    while len(marks) < i and z >= 2:
        if (F[z - 1] - G[z - 1] == target
                and F[z - 1] == F[z - 2] + 1 and G[z - 1] == G[z - 2] - 1):
            marks.append(z)
            target -= 2
        z -= 1
    if len(marks) != i:
        raise InvalidEndpoints(f"no preimage: only {len(marks)} of {i} lift positions found")
    mark_set = set(marks)
    f: list[int] = []
    g: list[int] = []
    passed = 0
    for z in range(1, n + 1):
        if z in mark_set:
            passed += 1
        f.append(F[z - 1] - 2 * passed)
        g.append(G[z - 1] + 2 * passed)
    return StepFunctionPair(tuple(f), tuple(g))


def to_grand_motzkin(pair: StepFunctionPair) -> GrandMotzkinPath:
    """Encode the halved difference walk, coloring flat steps by whether
    both functions stepped up or both down."""
    f, g = pair.f, pair.g
    steps = []
    for z in range(1, len(f)):
        df = f[z] - f[z - 1]
        dg = g[z] - g[z - 1]
        if df == 1 and dg == -1:
            steps.append(GMStep.UP)
        elif df == -1 and dg == 1:
            steps.append(GMStep.DOWN)
        elif df == 1:
            steps.append(GMStep.FLAT_UP)
        else:
            steps.append(GMStep.FLAT_DOWN)
    return GrandMotzkinPath(tuple(steps))


_GM_DIRS = {
    GMStep.UP: (1, -1),
    GMStep.DOWN: (-1, 1),
    GMStep.FLAT_UP: (1, 1),
    GMStep.FLAT_DOWN: (-1, -1),
}


def from_grand_motzkin(path: GrandMotzkinPath,
                       start_heights: tuple[int, int] = (1, -1)) -> StepFunctionPair:
    """Rebuild the function pair from a colored path and its start heights."""
    fh, gh = start_heights
    if (fh - gh) % 2:
        raise ParityError(f"start heights {start_heights} differ by an odd amount")
    f = [fh]
    g = [gh]
    for st in path.steps:
        df, dg = _GM_DIRS[st]
        f.append(f[-1] + df)
        g.append(g[-1] + dg)
    return StepFunctionPair(tuple(f), tuple(g))


# -- path pair <-> directed polyomino ---------------------------------------


def functions_from_paths(u: MonotonePath, v: MonotonePath) -> StepFunctionPair:
    """Rotate a path pair 45 degrees: vertex (x, y) with x + y = z - 1 maps
    to height y - x, offset +1 for the first path and -1 for the second."""
    f = tuple(y - x + 1 for x, y in u.vertices())
    g = tuple(y - x - 1 for x, y in v.vertices())
    return StepFunctionPair(f, g)


def paths_from_functions(pair: StepFunctionPair) -> tuple[MonotonePath, MonotonePath]:
    """Inverse rotation back to two monotone paths from the origin."""

    def path(vals: tuple[int, ...]) -> MonotonePath:
        # an up-step of the rotated function is N, a down-step is E
        steps = "".join("N" if b > a else "E" for a, b in zip(vals, vals[1:]))
        return MonotonePath(Point(0, 0), steps)

    return path(pair.f), path(pair.g)


def _insert_step(verts: list[Point], step: Point, axis_hit) -> list[Point]:
    k = next(idx for idx, v in enumerate(verts) if axis_hit(v))
    moved = [Point(v.x + step.x, v.y + step.y) for v in verts[k:]]
    return verts[: k + 1] + moved


def _remove_step(verts: list[Point], step: Point, axis_hit) -> list[Point]:
    k = next(idx for idx, v in enumerate(verts) if axis_hit(v))
    got = (verts[k + 1].x - verts[k].x, verts[k + 1].y - verts[k].y)
    assert got == step, f"contact step at index {k} is {got}, expected {tuple(step)}"
    return verts[: k + 1] + [Point(v.x - step.x, v.y - step.y) for v in verts[k + 2:]]


def _reflect_tail_y(verts: list[Point], h: int) -> list[Point]:
    m = max(idx for idx, v in enumerate(verts) if v.y == h)
    return verts[: m + 1] + [Point(v.x, 2 * h - v.y) for v in verts[m + 1:]]


def _reflect_tail_x(verts: list[Point], w: int) -> list[Point]:
    m = max(idx for idx, v in enumerate(verts) if v.x == w)
    return verts[: m + 1] + [Point(2 * w - v.x, v.y) for v in verts[m + 1:]]


def pair_to_directed(u: MonotonePath, v: MonotonePath, w: int, h: int) -> ConvexPolyomino:
    """Map an ordered pair of monotone paths (0,0) -> (w-1,h-1) to a directed
    convex polyomino of width w and height h, bijectively.

    Pipeline: rotate to a step-function pair, untangle, unrotate the
    non-crossing pair to grid paths from (0,1) and (1,0), re-insert the four
    contact edges, reflect the overshoots back across the N and E sides, and
    close the boundary at the diagonal point (w-i, h-i).
    """
    if (u.start, v.start) != (Point(0, 0), Point(0, 0)) or \
            u.end != Point(w - 1, h - 1) or v.end != Point(w - 1, h - 1):
        raise ValueError(f"paths must run (0,0) -> ({w - 1},{h - 1})")
    ncp = untangle(functions_from_paths(u, v))
    i = ncp.i
    assert i < min(w, h), f"shift {i} escapes a {w}x{h} box"

    upper = [Point((z - val) // 2, (z + val) // 2) for z, val in enumerate(ncp.F, start=1)]
    lower = [Point((z - val) // 2, (z + val) // 2) for z, val in enumerate(ncp.G, start=1)]
    upper = _insert_step(upper, Point(1, 0), lambda p: p.y == h)   # N-side contact edge
    lower = _insert_step(lower, Point(0, 1), lambda p: p.x == w)   # E-side contact edge
    piece1 = _reflect_tail_y([Point(0, 0)] + upper, h)
    piece2 = _reflect_tail_x([Point(0, 0)] + lower, w)
    cut = Point(w - i, h - i)
    assert piece1[-1] == piece2[-1] == cut, "pieces must meet on the NE diagonal"

    boundary = piece1 + piece2[-2::-1]
    poly = from_boundary(boundary)
    assert (poly.width, poly.height) == (w, h)
    return poly


def directed_to_pair(p: ConvexPolyomino) -> tuple[MonotonePath, MonotonePath]:
    """Inverse of pair_to_directed."""
    if p.columns[0][0] != 0:
        raise NotDirected("polyomino does not contain its SW corner cell")
    w, h = p.width, p.height
    verts = list(boundary_walk(p))

    # the descent from the N side toward the E side crosses the diagonal
    # y - x = h - w exactly once
    t = max(idx for idx, v in enumerate(verts) if v.y == h)
    while verts[t].y - verts[t].x != h - w:
        t += 1
    cut = verts[t]
    i = w - cut.x

    piece1 = verts[: t + 1]
    piece2 = verts[t:][::-1]  # (0,0) ... cut through the S and E sides
    upper = _reflect_tail_y(piece1, h)[1:]
    lower = _reflect_tail_x(piece2, w)[1:]
    upper = _remove_step(upper, Point(1, 0), lambda q: q.y == h)
    lower = _remove_step(lower, Point(0, 1), lambda q: q.x == w)

    assert [v.x + v.y for v in upper] == list(range(1, w + h)), "upper piece not monotone"
    assert [v.x + v.y for v in lower] == list(range(1, w + h)), "lower piece not monotone"
    ncp = NoncrossingPair(
        tuple(v.y - v.x for v in upper),
        tuple(v.y - v.x for v in lower),
        i,
    )
    return paths_from_functions(retangle(ncp))
