"""Deterministic 64-bit splitmix generator.

Every randomized routine in this package draws from Rng instead of the stdlib
so that results are identical across platforms, Python versions and worker
counts.  Independent substreams are derived by hashing (seed, index), which
lets a sample schedule be partitioned over workers without changing any draw.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def _mix(z: int) -> int:
    # splitmix64 finalizer
    z &= _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


class Rng:
    """splitmix64 stream: state advances by a fixed odd constant, output is mixed."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = _mix(seed & _MASK)

    def u64(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK
        return _mix(self._state)

    def randrange(self, lo: int, hi: int | None = None) -> int:
        """Uniform integer in [lo, hi); randrange(n) means [0, n)."""
        if hi is None:
            lo, hi = 0, lo
        span = hi - lo
        if span <= 0:
            raise ValueError("empty range")
        # rejection sampling keeps the draw unbiased
        limit = _MASK - (_MASK + 1) % span
        while True:
            x = self.u64()
            if x <= limit:
                return lo + x % span

    def choice(self, seq):
        return seq[self.randrange(len(seq))]

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates."""
        for i in range(len(items) - 1, 0, -1):
            j = self.randrange(i + 1)
            items[i], items[j] = items[j], items[i]


def substream(seed: int, index: int) -> Rng:
    """Rng for the index-th independent substream of a master seed."""
    return Rng(_mix(seed & _MASK) ^ _mix((index + 1) * _GOLDEN))
