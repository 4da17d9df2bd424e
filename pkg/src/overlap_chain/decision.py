"""Polynomial-time decision: weak connectivity plus the degree-balance test."""

from __future__ import annotations

from dataclasses import dataclass

from .connectivity import connected_fast, connected_paper
from .core import Instance, Pseudodigraph, build_pseudodigraph, degree_table, render

BALANCED = "balanced"
ONE_EXCESS_PAIR = "one_excess_pair"
NOT_APPLICABLE = "not_applicable"

NOT_CONNECTED = "not_connected"
DEGREE_VIOLATED = "degree_condition_violated"


@dataclass(frozen=True)
class Verdict:
    answer: bool
    failure_reason: str | None
    case: str
    odd_vertices: tuple  # ((vertex, out - in), ...) sorted by vertex

    def __bool__(self):
        return self.answer

    @property
    def start(self):
        """Vertex with surplus +1 in the one-excess-pair case, else ``None``."""
        return next((v for v, d in self.odd_vertices if d == 1), None) if self.case == ONE_EXCESS_PAIR else None

    @property
    def end(self):
        return next((v for v, d in self.odd_vertices if d == -1), None) if self.case == ONE_EXCESS_PAIR else None

    def to_json(self) -> dict:
        return {
            "answer": "yes" if self.answer else "no",
            "failure_reason": self.failure_reason or "none",
            "case": self.case,
            "odd_vertices": [[render(v), d] for v, d in self.odd_vertices],
        }


def test_conditions(g: Pseudodigraph) -> tuple[bool, str, tuple]:
    """Degree condition alone: all balanced, or exactly one (+1, -1) pair.

    Returns ``(ok, case, odd_vertices)``; every unbalanced vertex is reported,
    not only the first two.
    """
    deg = degree_table(g)
    odd = tuple((v, deg.balance(v)) for v in g.sorted_vertices() if deg.balance(v) != 0)
    if not odd:
        return True, BALANCED, odd
    if len(odd) == 2 and sorted(d for _, d in odd) == [-1, 1]:
        return True, ONE_EXCESS_PAIR, odd
    return False, NOT_APPLICABLE, odd


test_conditions.__test__ = False  # keep pytest from collecting it on import


def decide_graph(g: Pseudodigraph, fidelity: bool = False) -> Verdict:
    connected = connected_paper if fidelity else connected_fast
    ok, case, odd = test_conditions(g)
    if not connected(g.edges):
        return Verdict(False, NOT_CONNECTED, NOT_APPLICABLE, odd)
    if not ok:
        return Verdict(False, DEGREE_VIOLATED, NOT_APPLICABLE, odd)
    return Verdict(True, None, case, odd)


def decide(u: Instance, fidelity: bool = False) -> Verdict:
    """Can the components of ``u`` be ordered so each suffix gram meets the next prefix gram?

    ``fidelity=True`` swaps in the set-merging connectivity test.
    """
    return decide_graph(build_pseudodigraph(u), fidelity)
