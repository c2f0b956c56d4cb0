"""Canonical convex-polyomino data model: validation, classification flags,
boundary walks, and rendering.

The canonical representation is the sequence of column intervals; boundary
walks are always derived, never stored.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable, Sequence

from .lattice import Point


class PolyominoError(ValueError):
    """Base class for rejected polyomino data."""


class NotConvex(PolyominoError):
    """Some row's cells do not form one contiguous run of columns."""


class NotConnected(PolyominoError):
    """Two adjacent columns share no edge."""


class BoxNotTight(PolyominoError):
    """The cells do not touch all four sides of the stated bounding box."""


@dataclass(frozen=True)
class PolyominoFlags:
    directed: bool       # contains the SW cell of the bounding box
    antidirected: bool   # contains the NE cell
    parallelogram: bool  # contains both, with staircase column profiles


@dataclass(frozen=True)
class ConvexPolyomino:
    """A convex polyomino in its tight w x h bounding box.

    `columns[i]` is the half-open row interval [lo, hi) of cells in column i.
    Construction validates every invariant, so any live instance is a valid
    convex polyomino.
    """

    width: int
    height: int
    columns: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "columns", tuple((int(lo), int(hi)) for lo, hi in self.columns))
        w, h, cols = self.width, self.height, self.columns
        if w < 1 or h < 1:
            raise PolyominoError(f"need width, height >= 1, got {w} x {h}")
        if len(cols) != w:
            raise PolyominoError(f"expected {w} column intervals, got {len(cols)}")
        for i, (lo, hi) in enumerate(cols):
            if not 0 <= lo < hi <= h:
                raise PolyominoError(f"column {i} interval [{lo},{hi}) out of range for height {h}")
        if min(lo for lo, _ in cols) != 0 or max(hi for _, hi in cols) != h:
            raise BoxNotTight(f"cells do not span rows 0..{h} tightly")
        for i in range(w - 1):
            if max(cols[i][0], cols[i + 1][0]) >= min(cols[i][1], cols[i + 1][1]):
                raise NotConnected(f"columns {i} and {i + 1} share no edge")
        for y in range(h):
            run = [i for i, (lo, hi) in enumerate(cols) if lo <= y < hi]
            if run and run[-1] - run[0] + 1 != len(run):
                raise NotConvex(f"row {y} occupies columns {run}, not a contiguous run")

    # -- basic geometry -----------------------------------------------------

    @property
    def semiperimeter(self) -> int:
        return self.width + self.height

    @property
    def start_column(self) -> int:
        """x-coordinate of the leftmost bottom cell; the boundary walk
        starts at this point on the S side."""
        return min(i for i, (lo, _) in enumerate(self.columns) if lo == 0)

    def cell_count(self) -> int:
        return sum(hi - lo for lo, hi in self.columns)

    def cells(self) -> Iterable[tuple[int, int]]:
        for i, (lo, hi) in enumerate(self.columns):
            for j in range(lo, hi):
                yield (i, j)

    def transpose(self) -> "ConvexPolyomino":
        """Reflection across the main diagonal (width and height swap)."""
        rows = []
        for y in range(self.height):
            run = [i for i, (lo, hi) in enumerate(self.columns) if lo <= y < hi]
            rows.append((run[0], run[-1] + 1))
        return ConvexPolyomino(self.height, self.width, tuple(rows))

    # -- serialization ------------------------------------------------------

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "width": self.width,
            "height": self.height,
            "columns": [[lo, hi] for lo, hi in self.columns],
        }

    @classmethod
    def from_json_dict(cls, data: dict[str, Any]) -> "ConvexPolyomino":
        return cls(int(data["width"]), int(data["height"]),
                   tuple((lo, hi) for lo, hi in data["columns"]))

    @classmethod
    def rectangle(cls, w: int, h: int) -> "ConvexPolyomino":
        return cls(w, h, tuple((0, h) for _ in range(w)))


def validate(columns: Sequence[Sequence[int]], width: int, height: int) -> ConvexPolyomino:
    """Build a ConvexPolyomino from raw interval data, raising NotConvex,
    NotConnected, or BoxNotTight when the corresponding invariant fails."""
    return ConvexPolyomino(width, height, tuple((lo, hi) for lo, hi in columns))


def flags(p: ConvexPolyomino) -> PolyominoFlags:
    """Classification flags.  For a convex polyomino, containing both the SW
    and NE corners is equivalent to both column profiles being monotone."""
    directed = p.columns[0][0] == 0
    antidirected = p.columns[-1][1] == p.height
    los = [lo for lo, _ in p.columns]
    his = [hi for _, hi in p.columns]
    staircase = all(a <= b for a, b in zip(los, los[1:])) and \
        all(a <= b for a, b in zip(his, his[1:]))
    return PolyominoFlags(directed, antidirected, directed and antidirected and staircase)


def boundary_walk(p: ConvexPolyomino) -> tuple[Point, ...]:
    """Closed clockwise boundary of p, starting at the leftmost bottom point
    with an up-step.  Returns 2(w+h)+1 vertices with first == last."""
    present = set(p.cells())
    nxt: dict[Point, Point] = {}

    def edge(a: Point, b: Point) -> None:
        assert a not in nxt, "boundary touches itself at a vertex"
        nxt[a] = b

    # directed so that the interior lies to the right of travel (clockwise)
    for (i, j) in present:
        if (i - 1, j) not in present:
            edge(Point(i, j), Point(i, j + 1))
        if (i + 1, j) not in present:
            edge(Point(i + 1, j + 1), Point(i + 1, j))
        if (i, j - 1) not in present:
            edge(Point(i + 1, j), Point(i, j))
        if (i, j + 1) not in present:
            edge(Point(i, j + 1), Point(i + 1, j + 1))

    start = Point(p.start_column, 0)
    walk = [start]
    cur = nxt[start]
    while cur != start:
        walk.append(cur)
        cur = nxt[cur]
    walk.append(start)
    assert len(walk) == 2 * p.semiperimeter + 1, "boundary length mismatch"
    return tuple(walk)


def from_boundary(vertices: Sequence[Point]) -> ConvexPolyomino:
    """Inverse of boundary_walk, accepting any rotation of the clockwise
    boundary of a convex polyomino."""
    verts = [Point(int(x), int(y)) for x, y in vertices]
    if len(verts) < 5 or verts[0] != verts[-1]:
        raise PolyominoError("boundary must be a closed vertex loop")
    for a, b in zip(verts, verts[1:]):
        if abs(a.x - b.x) + abs(a.y - b.y) != 1:
            raise PolyominoError(f"non-unit step {a} -> {b}")
    xs = [v.x for v in verts]
    ys = [v.y for v in verts]
    if min(xs) != 0 or min(ys) != 0:
        raise PolyominoError("boundary must sit in the first quadrant corner")
    w, h = max(xs), max(ys)

    # Each column strip of a convex polyomino is crossed by exactly one
    # bottom edge and one top edge.
    columns: list[list[int]] = [[] for _ in range(w)]
    for a, b in zip(verts, verts[1:]):
        if a.y == b.y:
            columns[min(a.x, b.x)].append(a.y)
    cols = []
    for i, ys_i in enumerate(columns):
        if len(ys_i) != 2:
            raise NotConvex(f"column strip {i} crossed by {len(ys_i)} horizontal edges")
        cols.append((min(ys_i), max(ys_i)))
    poly = ConvexPolyomino(w, h, tuple(cols))

    canonical = boundary_walk(poly)
    if not _is_rotation(verts, list(canonical)):
        raise PolyominoError("vertex loop is not a clockwise convex boundary")
    return poly


def _is_rotation(loop: list[Point], ref: list[Point]) -> bool:
    a, b = loop[:-1], ref[:-1]
    if len(a) != len(b):
        return False
    if loop[0] not in b:
        return False
    k = b.index(loop[0])
    return a == b[k:] + b[:k]


def render(p: ConvexPolyomino, fmt: str = "ascii", scale: int = 20) -> str:
    if fmt == "ascii":
        return render_ascii(p)
    if fmt == "svg":
        return render_svg(p, scale=scale)
    raise ValueError(f"unknown format {fmt!r}")


def render_ascii(p: ConvexPolyomino) -> str:
    """'#' for cells and '.' for empty box cells, top row first."""
    rows = []
    for y in range(p.height - 1, -1, -1):
        rows.append("".join("#" if lo <= y < hi else "." for lo, hi in p.columns))
    return "\n".join(rows)


def render_svg(p: ConvexPolyomino, scale: int = 20) -> str:
    """One unit square per cell plus the bounding box; byte-deterministic
    for a given polyomino and scale."""
    w, h = p.width * scale, p.height * scale
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w + 2}" height="{h + 2}" '
        f'viewBox="-1 -1 {w + 2} {h + 2}">',
        f'  <rect x="0" y="0" width="{w}" height="{h}" fill="none" stroke="#888" stroke-width="1"/>',
    ]
    for i, j in sorted(p.cells()):
        x = i * scale
        y = (p.height - 1 - j) * scale  # svg y grows downward
        lines.append(
            f'  <rect x="{x}" y="{y}" width="{scale}" height="{scale}" '
            f'fill="#4477aa" stroke="#113355" stroke-width="1"/>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
