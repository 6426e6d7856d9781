"""Seedable, splittable random streams.

Every randomized entry point takes one seed; child streams are derived with
``SeedSequence.spawn`` so independent repetitions never share state.  The
bit generator is Philox (counter based).  Draws are buffered because the
estimators consume millions of scalar uniforms from Python loops.
"""

from __future__ import annotations

import numpy as np

_BLOCK = 4096


class Stream:
    """Buffered scalar interface over a Philox ``numpy`` generator."""

    __slots__ = ("seed_seq", "_gen", "_buf", "_pos")

    def __init__(self, seed=None):
        if isinstance(seed, np.random.SeedSequence):
            self.seed_seq = seed
        else:
            self.seed_seq = np.random.SeedSequence(seed)
        self._gen = np.random.Generator(np.random.Philox(self.seed_seq))
        self._buf = []
        self._pos = 0

    @property
    def generator(self) -> np.random.Generator:
        return self._gen

    def uniform(self) -> float:
        """One draw from U[0, 1)."""
        if self._pos == len(self._buf):
            self._buf = self._gen.random(_BLOCK).tolist()
            self._pos = 0
        u = self._buf[self._pos]
        self._pos += 1
        return u

    def index(self, n: int) -> int:
        """Uniform integer in ``[0, n)``."""
        i = int(self.uniform() * n)
        return i if i < n else n - 1

    def spawn(self, k: int) -> list[Stream]:
        return [Stream(s) for s in self.seed_seq.spawn(k)]

    def child(self) -> Stream:
        return self.spawn(1)[0]


def make_stream(seed) -> Stream:
    if isinstance(seed, Stream):
        return seed
    return Stream(seed)
