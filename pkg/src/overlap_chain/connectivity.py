"""Weak connectivity of a pseudodigraph.

Two implementations with one contract: ``connected_paper`` keeps an explicit
list of disjoint vertex groups and merges them edge by edge, scanning every
group to locate an endpoint (quadratic in the worst case); ``connected_fast``
does the same job with a union-find forest.  Both answer ``False`` for an
empty edge set.
"""

from __future__ import annotations

from typing import Hashable, Iterable


def paper_components(edges: Iterable[tuple]) -> list[set]:
    """Vertex groups left by the set-merging scan, in the order they were last touched."""
    groups: list[set] = []
    for a, b in edges:
        idx_a = idx_b = None
        for i, group in enumerate(groups):
            if a in group:
                idx_a = i
            if b in group:
                idx_b = i
        if idx_a is None and idx_b is None:
            groups.append({a, b})
        elif idx_a is None:
            groups[idx_b].add(a)
        elif idx_b is None:
            groups[idx_a].add(b)
        elif idx_a != idx_b:
            merged = groups[idx_a] | groups[idx_b]
            for i in sorted((idx_a, idx_b), reverse=True):
                del groups[i]
            groups.append(merged)
    return groups


def connected_paper(edges: Iterable[tuple]) -> bool:
    return len(paper_components(edges)) == 1


class UnionFind:
    """Disjoint sets over arbitrary hashable items, with path compression and union by size."""

    def __init__(self, items: Iterable[Hashable] = ()):
        self.parent: dict = {}
        self.size: dict = {}
        self.count = 0
        for x in items:
            self.add(x)

    def add(self, x) -> None:
        if x not in self.parent:
            self.parent[x] = x
            self.size[x] = 1
            self.count += 1

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.count -= 1
        return True

    def groups(self) -> list[set]:
        out: dict = {}
        for x in self.parent:
            out.setdefault(self.find(x), set()).add(x)
        return list(out.values())


def fast_components(edges: Iterable[tuple]) -> list[set]:
    uf = UnionFind()
    for a, b in edges:
        uf.add(a)
        uf.add(b)
        uf.union(a, b)
    return uf.groups()


def connected_fast(edges: Iterable[tuple]) -> bool:
    uf = UnionFind()
    for a, b in edges:
        uf.add(a)
        uf.add(b)
        uf.union(a, b)
    return uf.count == 1
