"""S-walks: shortest closed grid walks spanning their bounding box.

A walk in a w x h box has length exactly 2(w+h): w steps each of E and W,
h steps each of N and S.  It is coded by a start offset `a` and a string
over {V, H} giving only the axis of each step; orientations are recovered
while tracing because a step reverses its axis sign exactly when it would
leave the box.  Five steps are never coded: the initial up-step at (a, 0)
and one "first contact" step along each of the four box sides (when a = 0
the initial up-step doubles as the W-side contact step).

Simple (non-self-intersecting) S-walks are exactly the boundaries of convex
polyominoes.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum

from .lattice import Point
from .polyomino import ConvexPolyomino, boundary_walk, from_boundary


class MalformedCode(ValueError):
    """Symbol counts or offset inconsistent with the stated box."""


class NotAnSWalk(ValueError):
    """The vertex loop is not a canonically traversed spanning walk."""


class SelfIntersecting(ValueError):
    """Operation requires a simple walk."""


class SideOrder(Enum):
    """Order in which a walk first touches the W, N, E sides after its
    start on the S side.  W always precedes E."""

    SWNE = "SWNE"
    SNWE = "SNWE"
    SWEN = "SWEN"


@dataclass(frozen=True)
class SWalkCode:
    w: int
    h: int
    a: int
    symbols: str

    def __post_init__(self) -> None:
        w, h, a, sym = self.w, self.h, self.a, self.symbols
        if w < 1 or h < 1:
            raise MalformedCode(f"need w, h >= 1, got {w} x {h}")
        if not 0 <= a <= w - 1:
            raise MalformedCode(f"offset a={a} outside 0..{w - 1}")
        if sym.strip("VH"):
            raise MalformedCode(f"symbols must be over {{V, H}}: {sym!r}")
        s = w + h
        want_len = 2 * s - 4 if a == 0 else 2 * s - 5
        want_v = 2 * h - 2 if a == 0 else 2 * h - 3
        if len(sym) != want_len or sym.count("V") != want_v:
            raise MalformedCode(
                f"a={a} code for {w}x{h} needs {want_len} symbols with "
                f"{want_v} V's, got {len(sym)} with {sym.count('V')}"
            )

    def to_text(self) -> str:
        return f"w={self.w} h={self.h} a={self.a} {self.symbols}".rstrip()

    @classmethod
    def from_text(cls, text: str) -> "SWalkCode":
        m = re.fullmatch(r"w=(\d+) h=(\d+) a=(\d+)(?: ([VH]+))?", text.strip())
        if m is None:
            raise MalformedCode(f"not a code literal: {text!r}")
        return cls(int(m.group(1)), int(m.group(2)), int(m.group(3)), m.group(4) or "")


@dataclass(frozen=True)
class ClosedWalk:
    """Closed vertex loop of an S-walk (first == last vertex)."""

    vertices: tuple[Point, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(Point(*v) for v in self.vertices))

    @property
    def w(self) -> int:
        return max(v.x for v in self.vertices)

    @property
    def h(self) -> int:
        return max(v.y for v in self.vertices)

    @property
    def start(self) -> Point:
        return self.vertices[0]


def decode(code: SWalkCode) -> ClosedWalk:
    """Trace the walk a code describes.

    The tracer keeps one sign per axis (horizontal starts W, vertical starts
    N); a step flips its axis sign exactly when it would exit [0,w] x [0,h]
    and the new sign persists.  First-contact steps along each side follow
    the same rule and are inserted immediately on arrival at the side,
    before the next symbol is consumed.  Every well-formed code closes; a
    failure to close is a bug, not an input error.
    """
    w, h, a = code.w, code.h, code.a
    x, y = a, 0
    hsign, vsign = -1, 1
    # The start point lies on the S side (and the W side when a = 0) but the
    # S contact step belongs to the return arc, so S starts untouched.
    touched = {"S": False, "W": a == 0, "N": False, "E": False}
    verts = [(x, y)]

    def hstep() -> None:
        nonlocal x, hsign
        nx = x + hsign
        if nx < 0 or nx > w:
            hsign = -hsign
            nx = x + hsign
        x = nx
        verts.append((x, y))

    def vstep() -> None:
        nonlocal y, vsign
        ny = y + vsign
        if ny < 0 or ny > h:
            vsign = -vsign
            ny = y + vsign
        y = ny
        verts.append((x, y))

    def contacts() -> None:
        # At most one untouched side can contain any arrival point, so the
        # resolution order here never matters; the loop handles contact
        # steps that themselves land on a fresh side.
        while True:
            if x == 0 and not touched["W"]:
                touched["W"] = True
                vstep()
            elif y == h and not touched["N"]:
                touched["N"] = True
                hstep()
            elif x == w and not touched["E"]:
                touched["E"] = True
                vstep()
            elif y == 0 and not touched["S"]:
                touched["S"] = True
                hstep()
            else:
                return

    vstep()  # the uncoded initial up-step
    contacts()
    for sym in code.symbols:
        if sym == "H":
            hstep()
        else:
            vstep()
        contacts()

    assert (x, y) == (a, 0) and all(touched.values()) and \
        len(verts) == 2 * (w + h) + 1, f"valid code failed to close: {code}"
    return ClosedWalk(tuple(verts))


def encode(walk: ClosedWalk) -> SWalkCode:
    """Inverse of decode: replay the tracer against the walk, verifying each
    step and recording the axes of the coded ones."""
    verts = walk.vertices
    if len(verts) < 5 or verts[0] != verts[-1]:
        raise NotAnSWalk("walk must be a closed loop")
    steps = []
    for p, q in zip(verts, verts[1:]):
        d = (q.x - p.x, q.y - p.y)
        if d not in ((1, 0), (-1, 0), (0, 1), (0, -1)):
            raise NotAnSWalk(f"non-unit step {p} -> {q}")
        steps.append(d)
    xs = [v.x for v in verts]
    ys = [v.y for v in verts]
    if min(xs) != 0 or min(ys) != 0:
        raise NotAnSWalk("walk must touch the x = 0 and y = 0 lines")
    w, h = max(xs), max(ys)
    a, y0 = verts[0]
    if y0 != 0:
        raise NotAnSWalk("walk must start on the S side")

    x, y = a, 0
    hsign, vsign = -1, 1
    touched = {"S": False, "W": a == 0, "N": False, "E": False}
    pos = 0
    symbols = []

    def expect(axis: str) -> None:
        nonlocal x, y, hsign, vsign, pos
        if pos >= len(steps):
            raise NotAnSWalk("walk ended before the tracer finished")
        if axis == "H":
            nx = x + hsign
            if nx < 0 or nx > w:
                hsign = -hsign
                nx = x + hsign
            want = (nx - x, 0)
        else:
            ny = y + vsign
            if ny < 0 or ny > h:
                vsign = -vsign
                ny = y + vsign
            want = (0, ny - y)
        if steps[pos] != want:
            raise NotAnSWalk(f"step {pos} is {steps[pos]}, tracer requires {want}")
        x, y = x + want[0], y + want[1]
        pos += 1

    def contacts() -> None:
        while True:
            if x == 0 and not touched["W"]:
                touched["W"] = True
                expect("V")
            elif y == h and not touched["N"]:
                touched["N"] = True
                expect("H")
            elif x == w and not touched["E"]:
                touched["E"] = True
                expect("V")
            elif y == 0 and not touched["S"]:
                touched["S"] = True
                expect("H")
            else:
                return

    expect("V")  # initial up-step
    contacts()
    while pos < len(steps):
        axis = "H" if steps[pos][0] else "V"
        symbols.append(axis)
        expect(axis)
        contacts()
    if not all(touched.values()):
        raise NotAnSWalk("walk does not span all four sides")
    try:
        return SWalkCode(w, h, a, "".join(symbols))
    except MalformedCode as exc:
        raise NotAnSWalk(f"step counts inconsistent with a spanning walk: {exc}") from exc


def self_intersects(walk: ClosedWalk) -> bool:
    """True iff some lattice point is visited twice, the closing return to
    the start excepted."""
    inner = walk.vertices[:-1]
    return len(set(inner)) != len(inner)


def classify(walk: ClosedWalk) -> SideOrder:
    """First-contact order of the W, N, E sides (S is always first)."""
    w, h = walk.w, walk.h
    first = {}
    for idx, v in enumerate(walk.vertices):
        if v.x == 0 and "W" not in first:
            first["W"] = idx
        if v.y == h and "N" not in first:
            first["N"] = idx
        if v.x == w and "E" not in first:
            first["E"] = idx
    order = "".join(sorted("WNE", key=lambda side: first[side]))
    try:
        return SideOrder("S" + order)
    except ValueError:  # pragma: no cover - impossible for decoded walks
        raise NotAnSWalk(f"side order S{order} is not a spanning-walk order")


def to_polyomino(walk: ClosedWalk) -> ConvexPolyomino:
    """The convex polyomino whose boundary is this walk."""
    if self_intersects(walk):
        raise SelfIntersecting("walk revisits a vertex")
    return from_boundary(walk.vertices)


def boundary_code(p: ConvexPolyomino) -> SWalkCode:
    """Code of the polyomino's boundary walk."""
    return encode(ClosedWalk(boundary_walk(p)))
