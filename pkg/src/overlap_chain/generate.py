"""Seeded random instances.

The stream comes from SplitMix64 (Steele, Lea and Flood 2014): state advances
by 0x9E3779B97F4A7C15 and each output is mixed with multipliers
0xBF58476D1CE4E5B9 and 0x94D049BB133111EB and shifts 30, 27, 31.  It is fully
specified by those constants, so fixtures reproduce on any platform.
"""

from __future__ import annotations

import string
from dataclasses import dataclass

from .core import Instance

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15

GEN_MODES = ("uniform", "planted_yes")


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + GOLDEN) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)``, by rejection."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = MASK64 - (MASK64 + 1) % bound
        while True:
            x = self.next()
            if x <= limit:
                return x % bound

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]


def derive_seed(*parts: int) -> int:
    """Child seed for a (seed, n, trial, ...) lineage."""
    rng = SplitMix64(0)
    for p in parts:
        rng.state ^= p & MASK64
        rng.state = rng.next()
    return rng.state


@dataclass(frozen=True)
class GeneratorSpec:
    n: int = 10
    s: int = 2
    t: int = 1
    alphabet_size: int = 3
    seed: int = 0
    mode: str = "uniform"


def alphabet(size: int) -> list[str]:
    if size <= 26:
        return list(string.ascii_lowercase[:size])
    return [f"s{i}" for i in range(size)]


def generate(spec: GeneratorSpec) -> Instance:
    """``uniform``: every symbol drawn independently.  ``planted_yes``: the ``n``
    windows of one random superstring, stepping ``s - t`` symbols, shuffled;
    consecutive windows overlap in ``t`` symbols, so the answer is YES.
    """
    if spec.mode not in GEN_MODES:
        raise ValueError(f"unknown generator mode {spec.mode!r}")
    if spec.n < 2 or not 1 <= spec.t < spec.s:
        raise ValueError(f"need n >= 2 and 1 <= t < s, got n={spec.n} s={spec.s} t={spec.t}")
    if spec.alphabet_size < 1 or (spec.mode == "planted_yes" and spec.alphabet_size < 2):
        raise ValueError(f"alphabet_size={spec.alphabet_size} is infeasible for mode {spec.mode}")
    symbols = alphabet(spec.alphabet_size)
    rng = SplitMix64(spec.seed)
    k = len(symbols)
    if spec.mode == "uniform":
        rows = [[symbols[rng.below(k)] for _ in range(spec.s)] for _ in range(spec.n)]
    else:
        step = spec.s - spec.t
        walk = [symbols[rng.below(k)] for _ in range(spec.n * step + spec.t)]
        rows = [walk[i * step:i * step + spec.s] for i in range(spec.n)]
        rng.shuffle(rows)
    if spec.alphabet_size <= 26:
        return Instance(tuple("".join(r) for r in rows), spec.s, spec.t, "chars")
    return Instance(tuple(tuple(r) for r in rows), spec.s, spec.t, "tokens")
