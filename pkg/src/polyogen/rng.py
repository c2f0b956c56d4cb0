"""Deterministic random stream built on splitmix64.

The generator is frozen: a given 64-bit seed produces the same word stream
on every platform and in every release, and `position` records how many
words have been consumed, so any sampled object can be pinned to an exact
(seed, position) pair.  Bounded draws use bitmask rejection, never modulo,
so they are exactly uniform.
"""
from __future__ import annotations

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


class SplitMix64:
    """splitmix64 word stream (Steele-Lea-Flood mixing constants)."""

    __slots__ = ("seed", "position", "_state")

    def __init__(self, seed: int):
        self.seed = seed & _MASK64
        self._state = self.seed
        self.position = 0

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        self.position += 1
        return z ^ (z >> 31)

    def randbelow(self, n: int) -> int:
        """Uniform integer in [0, n) for any n >= 1, including big ints.

        Draws ceil(bits/64) words, truncates to the bit length of n - 1,
        and rejects out-of-range values; n = 1 consumes no randomness.
        """
        if n < 1:
            raise ValueError(f"need n >= 1, got {n}")
        if n == 1:
            return 0
        bits = (n - 1).bit_length()
        words = (bits + 63) // 64
        excess = words * 64 - bits
        while True:
            r = 0
            for _ in range(words):
                r = (r << 64) | self.next_u64()
            r >>= excess
            if r < n:
                return r

    def ksubset(self, n: int, k: int) -> tuple[int, ...]:
        """Uniform k-element subset of range(n), by partial Fisher-Yates
        shuffle; returned sorted."""
        if not 0 <= k <= n:
            raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
        pool = list(range(n))
        for i in range(k):
            j = i + self.randbelow(n - i)
            pool[i], pool[j] = pool[j], pool[i]
        return tuple(sorted(pool[:k]))


def stream_seed(master_seed: int, index: int) -> int:
    """Seed for the index-th derived stream: the (index+1)-th word of the
    master stream.  splitmix64 is designed for exactly this use."""
    if index < 0:
        raise ValueError(f"need index >= 0, got {index}")
    g = SplitMix64(master_seed)
    for _ in range(index):
        g.next_u64()
    return g.next_u64()
