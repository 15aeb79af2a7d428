"""Deterministic counter-based randomness streams.

Every node in a simulated network owns a private stream derived from the
run's master seed and its own id.  The derivation is a fixed, documented
64-bit mixing function so that a run is a pure function of
``(program, graph, master_seed)``:

* ``mix64`` is the SplitMix64 finalizer.
* The base state of stream ``(s, v)`` is ``mix64(s ^ mix64(v*GAMMA + SALT))``.
* Raw draw ``j`` of a stream is ``mix64(base + (j+1)*GAMMA)`` (mod 2^64),
  i.e. the stream is a counter-based SplitMix64 sequence.

Bit-exact agreement with other runtimes is not a goal; determinism and
distinctness of per-node streams are.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15
_SALT = 0xD1B54A32D192ED03


def mix64(z: int) -> int:
    """SplitMix64 finalizer: scramble a 64-bit value."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def stream_base(master_seed: int, node_id: int) -> int:
    return mix64((master_seed & MASK64) ^ mix64((node_id * GAMMA + _SALT) & MASK64))


def subseed(master_seed: int, *salts: int) -> int:
    """Derive a child master seed (e.g. one per parallel execution)."""
    z = master_seed & MASK64
    for s in salts:
        z = mix64((z + mix64(s * GAMMA + _SALT)) & MASK64)
    return z


class Stream:
    """Private randomness stream of one node: (master_seed, node_id, counter)."""

    __slots__ = ("master_seed", "node_id", "counter", "_base")

    def __init__(self, master_seed: int, node_id: int, counter: int = 0):
        self.master_seed = master_seed
        self.node_id = node_id
        self.counter = counter
        self._base = stream_base(master_seed, node_id)

    def draw_u64(self) -> int:
        self.counter += 1
        return mix64((self._base + self.counter * GAMMA) & MASK64)

    def draw_uniform(self, bound: int) -> int:
        """Uniform integer in [0, bound), by rejection sampling."""
        if bound <= 0:
            raise ValueError(f"bound must be positive, got {bound}")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            r = self.draw_u64()
            if r < limit:
                return r % bound

    def draw_many(self, count: int, bound: int) -> list[int]:
        """``count`` independent uniform draws from [0, bound)."""
        if bound <= 0:
            raise ValueError(f"bound must be positive, got {bound}")
        base = self._base
        ctr = self.counter
        limit = (1 << 64) - ((1 << 64) % bound)
        out = []
        while len(out) < count:
            ctr += 1
            z = (base + ctr * GAMMA) & MASK64
            z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
            z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
            z ^= z >> 31
            if z < limit:
                out.append(z % bound)
        self.counter = ctr
        return out

    def draw_float(self) -> float:
        """Uniform float in [0, 1) with 53 random bits."""
        return (self.draw_u64() >> 11) * (2.0**-53)

    def shuffle(self, items: list) -> list:
        """In-place Fisher-Yates shuffle; returns the list."""
        for i in range(len(items) - 1, 0, -1):
            j = self.draw_uniform(i + 1)
            items[i], items[j] = items[j], items[i]
        return items

    def permutation(self, count: int) -> list[int]:
        return self.shuffle(list(range(count)))

    def geometric(self, cap: int) -> int:
        """Number of heads before the first tail of a fair coin, truncated at cap."""
        value = 0
        while value < cap and self.draw_uniform(2) == 1:
            value += 1
        return value


def derive_stream(master_seed: int, node_id: int) -> Stream:
    """The private stream of node ``node_id`` under ``master_seed``."""
    return Stream(master_seed, node_id)
