"""Exact closed-form counts for convex-polyomino classes and the intersection
moments of monotone lattice-path pairs.

Everything here is plain integer arithmetic.  The counts grow like 4**s, so
Python's arbitrary-precision ints are the working representation; no floats
appear anywhere in this module.
"""
from __future__ import annotations

import math
from enum import Enum


class DomainError(ValueError):
    """A count was requested outside its defined parameter range."""


class CountClass(Enum):
    """The six families this package can count."""

    CONVEX = "convex"
    DIRECTED = "directed"
    PARALLELOGRAM = "parallelogram"
    SWALK = "swalk"
    SELF_INTERSECTING_SWALK = "self-intersecting-swalk"
    WEAK_DIRECTED_SWALK = "weak-directed-swalk"


def binomial(n: int, k: int) -> int:
    """C(n, k) with the convention that any out-of-range argument gives 0.

    The zero convention (k < 0, k > n, or n < 0) is load-bearing: the closed
    forms below must evaluate correctly at the w = 1 and h = 1 boundaries.
    """
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def _exact_half(n: int) -> int:
    assert n % 2 == 0, f"expected an even numerator, got {n}"
    return n // 2


def count_swalks(w: int, h: int) -> int:
    """Number of S-walk codes spanning a w x h box.

    An a = 0 code has 2w-2 H's among 2s-4 symbols; each of the w-1 nonzero
    start offsets contributes codes of length 2s-5 with the same H count.
    """
    s = w + h
    return binomial(2 * s - 4, 2 * w - 2) + (w - 1) * binomial(2 * s - 5, 2 * w - 2)


def count_self_intersecting(w: int, h: int) -> int:
    """Number of S-walks in a w x h box whose two rising pieces cross."""
    s = w + h
    return (s - 3) * binomial(s - 2, w - 1) * binomial(s - 4, w - 2)


def count_convex(w: int, h: int) -> int:
    """Number of convex polyominoes with bounding box exactly w x h.

    Computed as the S-walk total minus twice the self-intersecting count,
    which keeps every intermediate value an integer.  Sequence A093118 read
    by antidiagonals.
    """
    return count_swalks(w, h) - 2 * count_self_intersecting(w, h)


def count_directed(w: int, h: int) -> int:
    """Number of directed convex polyominoes (those containing the SW cell);
    a squared binomial coefficient (A008459)."""
    return binomial(w + h - 2, w - 1) ** 2


def count_parallelogram(w: int, h: int) -> int:
    """Number of parallelogram polyominoes: the Narayana number
    N(s-1, w) = C(s-1, w) * C(s-1, h) / (s-1)  (A001263)."""
    s = w + h
    if s == 2:
        return 1
    num = binomial(s - 1, w) * binomial(s - 1, h)
    assert num % (s - 1) == 0
    return num // (s - 1)


def count_weak_directed(w: int, h: int) -> int:
    """Number of weak directed S-walks in a (w+1) x (h+1) box; equals the
    total intersection count over all ordered path pairs to (w, h)."""
    s = w + h
    return _exact_half(binomial(2 * s + 2, 2 * w + 1))


_FIXED_SHAPE = {
    CountClass.CONVEX: count_convex,
    CountClass.DIRECTED: count_directed,
    CountClass.PARALLELOGRAM: count_parallelogram,
    CountClass.SWALK: count_swalks,
    CountClass.SELF_INTERSECTING_SWALK: count_self_intersecting,
}


def count(count_class: CountClass, w: int, h: int) -> int:
    """Exact count of `count_class` objects with width w and height h.

    Polyomino and S-walk classes need w, h >= 1; the weak directed S-walk
    class is indexed by the path endpoint and allows w, h >= 0.
    """
    if count_class is CountClass.WEAK_DIRECTED_SWALK:
        if w < 0 or h < 0:
            raise DomainError(f"need w, h >= 0, got ({w}, {h})")
        return count_weak_directed(w, h)
    fn = _FIXED_SHAPE.get(count_class)
    if fn is None:
        raise DomainError(f"unknown class {count_class!r}")
    if w < 1 or h < 1:
        raise DomainError(f"need w, h >= 1 for {count_class.value}, got ({w}, {h})")
    return fn(w, h)


def count_perimeter(count_class: CountClass, s: int) -> int:
    """Exact count of `count_class` objects with semi-perimeter s
    (perimeter 2s).  Always equals the row sum of count() over w + h = s.
    """
    if s < 2:
        raise DomainError(f"need s >= 2, got {s}")
    if count_class is CountClass.CONVEX:
        # closed form valid from s = 4 on (A005436); the two tiny rows are
        # direct sums
        if s < 4:
            return _row_sum(count_class, s)
        return 4 ** (s - 4) * (2 * s + 3) - (2 * s - 6) * binomial(2 * s - 6, s - 3)
    if count_class is CountClass.DIRECTED:
        return binomial(2 * s - 4, s - 2)  # central binomial, A000984
    if count_class is CountClass.PARALLELOGRAM:
        # Catalan number C_{s-1} (A000108)
        num = binomial(2 * s - 2, s - 1)
        assert num % s == 0
        return num // s
    if count_class is CountClass.SWALK:
        if s < 4:
            return _row_sum(count_class, s)
        return 4 ** (s - 4) * (2 * s + 3)
    if count_class is CountClass.SELF_INTERSECTING_SWALK:
        return _row_sum(count_class, s)
    if count_class is CountClass.WEAK_DIRECTED_SWALK:
        return sum(count_weak_directed(w, s - w) for w in range(s + 1))
    raise DomainError(f"unknown class {count_class!r}")


def _row_sum(count_class: CountClass, s: int) -> int:
    return sum(count(count_class, w, s - w) for w in range(1, s))


def moment(order: int, w: int, h: int) -> int:
    """Unnormalized moment of |U ∩ V| over all ordered pairs (U, V) of
    monotone paths from (0, 0) to (w, h).

    order 1: sum of the intersection counts          (A091044)
    order 2: sum of their squares                    (A324010)

    Divide by C(s, w)**2 for the normalized moments.
    """
    if w < 0 or h < 0:
        raise DomainError(f"need w, h >= 0, got ({w}, {h})")
    s = w + h
    first = _exact_half(binomial(2 * s + 2, 2 * w + 1))
    if order == 1:
        return first
    if order == 2:
        return (s + 1) * binomial(s + 2, w + 1) * binomial(s, w) - first
    raise DomainError(f"moment order must be 1 or 2, got {order}")


def binomial_pair_sum(w: int, h: int) -> int:
    """Sum of C(|U ∩ V| + 1, 2) over all ordered path pairs to (w, h).

    Counts pairs carrying two indistinguishable marks on common points;
    equals half the self-intersecting S-walk count in a (w+2) x (h+2) box.
    """
    if w < 0 or h < 0:
        raise DomainError(f"need w, h >= 0, got ({w}, {h})")
    s = w + h
    return _exact_half((s + 1) * binomial(s + 2, w + 1) * binomial(s, w))
