"""Exponential-time reference deciders, for checking the graph decision at small n.

Neither touches the overlap multigraph: both work on the raw components and a
pairwise "may follow" table.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable

import numpy as np

from .core import Instance, first_gram, last_gram

PERMUTATION_CAP = 10
BACKTRACK_CAP = 14
_CHUNK = 1 << 16


class OracleCapError(ValueError):
    """Raised instead of starting a search whose size exceeds the configured cap."""


def follows(u: Instance) -> list[list[bool]]:
    """``table[i][j]`` is True when component ``j`` may come right after component ``i`` (0-based)."""
    tails = [last_gram(x, u.t) for x in u.strings]
    heads = [first_gram(x, u.t) for x in u.strings]
    return [[tail == head for head in heads] for tail in tails]


@lru_cache(maxsize=None)
def permutation_table(n: int) -> np.ndarray:
    """All permutations of ``range(n)`` as rows, in lexicographic order."""
    if n == 1:
        return np.zeros((1, 1), dtype=np.uint8)
    sub = permutation_table(n - 1)
    blocks = []
    for first in range(n):
        rest = np.array([k for k in range(n) if k != first], dtype=np.uint8)
        block = np.empty((len(sub), n), dtype=np.uint8)
        block[:, 0] = first
        block[:, 1:] = rest[sub]
        blocks.append(block)
    table = np.concatenate(blocks)
    table.setflags(write=False)
    return table


def oracle_permutations(u: Instance, cap: int = PERMUTATION_CAP) -> bool:
    """Try every ordering of the components, in lexicographic order, until one chains.

    Orderings are checked a block at a time with numpy, but nothing is pruned:
    a NO answer always costs ``n!`` orderings.
    """
    n = u.n
    if n > cap:
        raise OracleCapError(f"n={n} exceeds the permutation oracle cap {cap}")
    ok = np.array(follows(u), dtype=bool)
    perms = permutation_table(n)
    for lo in range(0, len(perms), _CHUNK):
        block = perms[lo:lo + _CHUNK]
        if ok[block[:, :-1], block[:, 1:]].all(axis=1).any():
            return True
    return False


def oracle_backtrack(
    u: Instance,
    cap: int = BACKTRACK_CAP,
    on_expand: Callable[[tuple], None] | None = None,
) -> bool:
    """Grow an ordering one component at a time, extending only with components that chain.

    Every component is tried as the seed; a partial ordering is extended by a
    remaining component whose prefix gram equals the current suffix gram, and
    the search succeeds once all ``n`` are placed.  Identical components are
    tried once per depth.  ``on_expand`` receives each partial ordering
    (0-based indices) before it is extended.
    """
    n = u.n
    if n > cap:
        raise OracleCapError(f"n={n} exceeds the backtracking oracle cap {cap}")
    strings = u.strings
    ok = follows(u)
    used = [False] * n
    order: list[int] = []

    def extend() -> bool:
        if on_expand is not None:
            on_expand(tuple(order))
        if len(order) == n:
            return True
        tried = set()
        for j in range(n):
            if used[j] or strings[j] in tried:
                continue
            if order and not ok[order[-1]][j]:
                continue
            tried.add(strings[j])
            used[j] = True
            order.append(j)
            if extend():
                return True
            order.pop()
            used[j] = False
        return False

    return extend()
