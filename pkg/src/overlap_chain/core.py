"""Instances, grams and the overlap multigraph built from an instance.

A string is any sliceable sequence of symbols: a ``str`` when each character is
a symbol (``chars`` mode) or a tuple of tokens (``tokens`` mode).  Grams keep
the type of the strings they are cut from, so they hash, compare and sort
without conversion.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

Symbols = Union[str, tuple]
Gram = Symbols
Edge = tuple  # (Gram, Gram)

MODES = ("chars", "tokens")
_HEADER = re.compile(r"^#\s*s\s*=\s*(\d+)\s+t\s*=\s*(\d+)(?:\s+mode\s*=\s*(\w+))?\s*$")


class InstanceError(ValueError):
    """Raised when an instance document or component list is malformed."""


def first_gram(x: Symbols, k: int) -> Symbols:
    """First ``k`` symbols of ``x``."""
    if not 1 <= k <= len(x):
        raise ValueError(f"gram length {k} out of range for a string of length {len(x)}")
    return x[:k]


def last_gram(x: Symbols, k: int) -> Symbols:
    """Last ``k`` symbols of ``x``."""
    if not 1 <= k <= len(x):
        raise ValueError(f"gram length {k} out of range for a string of length {len(x)}")
    return x[len(x) - k:]


def render(x: Symbols) -> str:
    """Text form of a string or gram; tokens are joined by single spaces."""
    return x if isinstance(x, str) else " ".join(x)


@dataclass(frozen=True)
class Instance:
    """An ordered tuple of ``n >= 2`` strings of ``s`` symbols, chained on ``t``-symbol overlaps."""

    strings: tuple
    s: int
    t: int
    mode: str = "chars"

    def __post_init__(self):
        strings = tuple(self.strings)
        object.__setattr__(self, "strings", strings)
        if self.mode not in MODES:
            raise InstanceError(f"unknown mode {self.mode!r}")
        if not 1 <= self.t < self.s:
            raise InstanceError(f"need 1 <= t < s, got s={self.s} t={self.t}")
        if len(strings) < 2:
            raise InstanceError(f"need at least 2 strings, got {len(strings)}")
        kind = str if self.mode == "chars" else tuple
        for i, x in enumerate(strings, 1):
            if not isinstance(x, kind):
                raise InstanceError(f"component {i} is {type(x).__name__}, expected {kind.__name__} in {self.mode} mode")
            if len(x) != self.s:
                raise InstanceError(f"component {i} ({render(x)!r}) has {len(x)} symbols, expected {self.s}")

    @classmethod
    def of(cls, strings: Iterable, t: int = 1) -> "Instance":
        """Build from plain strings (chars) or token tuples; ``s`` is read off the first one."""
        strings = tuple(x if isinstance(x, str) else tuple(x) for x in strings)
        if not strings:
            raise InstanceError("need at least 2 strings, got 0")
        mode = "chars" if isinstance(strings[0], str) else "tokens"
        return cls(strings, len(strings[0]), t, mode)

    @property
    def n(self) -> int:
        return len(self.strings)

    def __len__(self):
        return len(self.strings)

    def __getitem__(self, i):
        return self.strings[i]

    def prefix(self, i: int) -> Gram:
        return first_gram(self.strings[i], self.t)

    def suffix(self, i: int) -> Gram:
        return last_gram(self.strings[i], self.t)

    def edge(self, i: int) -> Edge:
        """The (prefix gram, suffix gram) edge contributed by the 0-based component ``i``."""
        return first_gram(self.strings[i], self.t), last_gram(self.strings[i], self.t)

    def reversed_strings(self) -> "Instance":
        """Every component reversed; chains of this instance are chains of the original read backwards."""
        return Instance(tuple(x[::-1] for x in self.strings), self.s, self.t, self.mode)

    def to_text(self, header: bool = True) -> str:
        lines = [f"#s={self.s} t={self.t} mode={self.mode}"] if header else []
        lines.extend(render(x) for x in self.strings)
        return "\n".join(lines) + "\n"


def parse_instance(text: str, s: int | None = None, t: int | None = None, mode: str | None = None) -> Instance:
    """Parse an instance document.

    One string per line.  An optional header ``#s=<int> t=<int> mode=<chars|tokens>``
    supplies defaults for arguments left as ``None``; explicit arguments win.
    Blank lines and other ``#`` lines are skipped.  Without any source for ``s``
    it is taken from the first string, and ``t`` falls back to 1.
    """
    header = {}
    rows = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            m = _HEADER.match(line)
            if m and not header and not rows:
                header = {"s": int(m.group(1)), "t": int(m.group(2)), "mode": m.group(3)}
            continue
        rows.append(line)
    if not rows:
        raise InstanceError("empty instance document")

    mode = mode or header.get("mode") or "chars"
    if mode not in MODES:
        raise InstanceError(f"unknown mode {mode!r}")
    if mode == "chars":
        strings = tuple(rows)
    else:
        strings = tuple(tuple(line.split()) for line in rows)
    if s is None:
        s = header.get("s", len(strings[0]))
    if t is None:
        t = header.get("t", 1)
    return Instance(strings, s, t, mode)


@dataclass(frozen=True)
class Pseudodigraph:
    """Directed multigraph ``(V, E, f)``: vertices, distinct edges and edge multiplicities."""

    vertices: frozenset
    multiplicity: dict = field(hash=False)

    @property
    def edges(self) -> frozenset:
        return frozenset(self.multiplicity)

    @property
    def size(self) -> int:
        """Total multiplicity, the ``n`` of the instance the graph came from."""
        return sum(self.multiplicity.values())

    def sorted_vertices(self) -> list:
        return sorted(self.vertices)

    def with_edge(self, edge: Edge, count: int = 1) -> "Pseudodigraph":
        mult = dict(self.multiplicity)
        mult[edge] = mult.get(edge, 0) + count
        return Pseudodigraph(self.vertices | set(edge), mult)

    @classmethod
    def from_edges(cls, edges: Iterable[Edge]) -> "Pseudodigraph":
        mult = Counter(tuple(e) for e in edges)
        return cls(frozenset(v for e in mult for v in e), dict(mult))


def build_pseudodigraph(u: Instance) -> Pseudodigraph:
    """One unit of multiplicity on (first t-gram, last t-gram) per component; linear in ``n``."""
    t = u.t
    mult = Counter((x[:t], x[len(x) - t:]) for x in u.strings)
    vertices = frozenset(v for e in mult for v in e)
    return Pseudodigraph(vertices, dict(mult))


@dataclass(frozen=True)
class DegreeTable:
    out_weight: dict
    in_weight: dict

    def balance(self, v) -> int:
        """Out-weight minus in-weight at ``v``."""
        return self.out_weight.get(v, 0) - self.in_weight.get(v, 0)


def degree_table(g: Pseudodigraph) -> DegreeTable:
    out_w = dict.fromkeys(g.vertices, 0)
    in_w = dict.fromkeys(g.vertices, 0)
    for (a, b), k in g.multiplicity.items():
        out_w[a] += k
        in_w[b] += k
    return DegreeTable(out_w, in_w)
