"""Counter-based SplitMix64.

``uniform(seed, n)`` is the n-th (0-based) output of the SplitMix64 stream
started from state ``seed``, mapped to ``[0, 1)`` via its top 53 bits.
Because it depends only on ``(seed, n)`` any draw can be reproduced
without replaying the stream, in any language.
"""

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def splitmix64(seed: int, n: int) -> int:
    return mix64((seed + (n + 1) * GOLDEN_GAMMA) & MASK64)


def uniform(seed: int, n: int) -> float:
    return (splitmix64(seed, n) >> 11) * (1.0 / (1 << 53))


def uniform_in(seed: int, n: int, lo: float, hi: float) -> float:
    return lo + (hi - lo) * uniform(seed, n)
