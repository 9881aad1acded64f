"""Reproducible counter-based random streams.

Streams are keyed by (seed, stream_id) on a Philox counter-based generator,
so distinct stream ids give statistically independent sequences and a fixed
key reproduces the same sequence on every run.  Worker substreams are derived
by shifting the stream id, which leaves the parent stream's values untouched
no matter how many workers are used.
"""

from dataclasses import dataclass

import numpy as np

_MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class RngState:
    """Key for one reproducible random stream."""

    seed: int
    stream_id: int = 0

    def generator(self) -> np.random.Generator:
        """Fresh generator positioned at the start of this stream."""
        key = np.array([self.seed & _MASK64, self.stream_id & _MASK64],
                       dtype=np.uint64)
        return np.random.Generator(np.random.Philox(key=key))

    def substream(self, worker: int) -> "RngState":
        """Stream for the given worker index; disjoint across workers."""
        mixed = ((self.stream_id << 32) + worker) & _MASK64
        return RngState(self.seed, mixed)
