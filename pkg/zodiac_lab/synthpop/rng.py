"""PCG32 pseudorandom number generator.

Bit-exact with the reference PCG32 (64-bit LCG state, XSH-RR output), so
populations and splits reproduce identically in any implementation.
"""

import math
from typing import List, Sequence, TypeVar

import numpy as np

T = TypeVar("T")

# below this many draws the scalar path is faster than building jump tables
SMALL_DRAW = 32


class Pcg32:
    """PCG32 generator with a selectable stream.

    The state update is ``state = state * MULTIPLIER + increment`` with
    ``increment = (stream << 1) | 1``.
    """

    MULTIPLIER = 6364136223846793005
    MASK_64 = (1 << 64) - 1
    MASK_32 = (1 << 32) - 1
    TWO_32 = 1 << 32

    __slots__ = ("state", "increment")

    def __init__(self, seed: int, stream: int = 0):
        self.increment = ((stream << 1) | 1) & self.MASK_64
        self.state = 0
        self._step()
        self.state = (self.state + seed) & self.MASK_64
        self._step()

    def _step(self) -> None:
        self.state = (self.state * self.MULTIPLIER + self.increment) & self.MASK_64

    def next_u32(self) -> int:
        old_state = self.state
        self._step()
        xorshifted = (((old_state >> 18) ^ old_state) >> 27) & self.MASK_32
        rot = old_state >> 59
        return ((xorshifted >> rot) | (xorshifted << ((-rot) & 31))) & self.MASK_32

    def uniform_int(self, n: int) -> int:
        """Unbiased integer in [0, n) by rejection on 32-bit outputs."""
        if n < 1:
            raise ValueError(f"Bound must be positive, got {n}")
        limit = (self.TWO_32 // n) * n
        while True:
            r = self.next_u32()
            if r < limit:
                return r % n

    def _states(self, count: int) -> np.ndarray:
        """The current state followed by the next ``count`` states (no advance).

        Jump-ahead tables are built by doubling: after k steps the state is
        ``M^k * s + increment * (1 + M + ... + M^(k-1))`` modulo 2^64.
        """
        mult = np.ones(1, dtype=np.uint64)
        total = np.zeros(1, dtype=np.uint64)
        while mult.size < count + 1:
            scale = np.uint64((int(mult[-1]) * self.MULTIPLIER) & self.MASK_64)
            offset = np.uint64((int(total[-1]) * self.MULTIPLIER + 1) & self.MASK_64)
            mult, total = (np.concatenate([mult, mult * scale]),
                           np.concatenate([total, total * scale + offset]))
        return (mult[:count + 1] * np.uint64(self.state)
                + total[:count + 1] * np.uint64(self.increment))

    def next_u32_array(self, count: int) -> np.ndarray:
        """The next ``count`` outputs as uint64, identical to repeated ``next_u32``."""
        states = self._states(count)
        self.state = int(states[-1])
        return _output(states[:-1])

    def uniform_int_array(self, bounds) -> np.ndarray:
        """``uniform_int(b)`` for each bound in order, with the same stream consumption."""
        bounds = np.asarray(bounds, dtype=np.uint64)
        if bounds.size and int(bounds.min()) < 1:
            raise ValueError("Bounds must be positive")
        if bounds.size < SMALL_DRAW:
            return np.array([self.uniform_int(int(b)) for b in bounds], dtype=np.int64)
        limits = (np.uint64(self.TWO_32) // bounds) * bounds
        result = np.empty(bounds.size, dtype=np.int64)
        start = 0
        while start < bounds.size:
            states = self._states(bounds.size - start)
            outputs = _output(states[:-1])
            rejected = np.flatnonzero(outputs >= limits[start:])
            stop = bounds.size - start if rejected.size == 0 else int(rejected[0])
            result[start:start + stop] = outputs[:stop] % bounds[start:start + stop]
            if rejected.size == 0:
                self.state = int(states[-1])
                break
            # the rejected output is consumed and its bound is drawn again
            self.state = int(states[stop + 1])
            start += stop
        return result

    def random_float(self) -> float:
        """Unit-interval draw in [0, 1) with 32-bit resolution."""
        return self.next_u32() / self.TWO_32

    def bernoulli(self, p: float) -> bool:
        return self.random_float() < p

    def shuffle(self, seq: Sequence[T]) -> List[T]:
        """Return a Fisher-Yates shuffled copy of ``seq``."""
        result = list(seq)
        n = len(result)
        if n < 2:
            return result
        swaps = self.uniform_int_array(np.arange(n, 1, -1)).tolist()
        for i, j in zip(range(n - 1, 0, -1), swaps):
            result[i], result[j] = result[j], result[i]
        return result

    def sample(self, population: Sequence[T], k: int) -> List[T]:
        """Choose ``k`` distinct elements without replacement (partial Fisher-Yates)."""
        n = len(population)
        if not 0 <= k <= n:
            raise ValueError(f"Cannot sample {k} items from {n}")
        pool = list(population)
        result = []
        picks = self.uniform_int_array(n - np.arange(k)).tolist()
        for i, j in enumerate(picks):
            result.append(pool[j])
            pool[j] = pool[n - 1 - i]
        return result

    def normal(self, mean: float, sd: float) -> float:
        """Box-Muller transform from two unit draws (cosine branch only)."""
        u1 = 1.0 - self.random_float()  # (0, 1], keeps log finite
        u2 = self.random_float()
        return mean + sd * math.sqrt(-2.0 * math.log(u1)) * math.cos(2.0 * math.pi * u2)

    def poisson(self, rate: float) -> int:
        """Poisson draw by inversion with sequential search from k = 0.

        Raises:
            ValueError: If exp(-rate) underflows (rate above roughly 745)
        """
        mass = math.exp(-rate)
        if mass == 0.0:
            raise ValueError(f"Poisson rate {rate} is too large for sequential inversion")
        u = self.random_float()
        k = 0
        cumulative = mass
        # the cap only guards against float round-off leaving cumulative < u forever
        while u >= cumulative and k < 10_000:
            k += 1
            mass *= rate / k
            cumulative += mass
        return k


def rng_new(seed: int, stream: int = 0) -> Pcg32:
    return Pcg32(seed, stream)


def rng_uniform_int(rng: Pcg32, n: int) -> int:
    return rng.uniform_int(n)


def _output(states: np.ndarray) -> np.ndarray:
    """XSH-RR output permutation applied to an array of pre-step states."""
    xorshifted = (((states >> np.uint64(18)) ^ states) >> np.uint64(27)) & np.uint64(Pcg32.MASK_32)
    rot = states >> np.uint64(59)
    rotated = (xorshifted >> rot) | (xorshifted << ((np.uint64(32) - rot) & np.uint64(31)))
    return rotated & np.uint64(Pcg32.MASK_32)
