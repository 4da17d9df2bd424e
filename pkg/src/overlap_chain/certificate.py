"""Witness orderings for YES instances, and an independent checker for them."""

from __future__ import annotations

from collections import Counter, defaultdict, deque
from dataclasses import dataclass

from .core import Instance, Pseudodigraph, build_pseudodigraph, first_gram, last_gram, render
from .decision import BALANCED, decide_graph


@dataclass(frozen=True)
class Certificate:
    permutation: tuple  # 1-based component indices
    path: tuple  # one (prefix gram, suffix gram) edge per position

    def to_json(self) -> dict:
        return {
            "permutation": list(self.permutation),
            "path": [[render(a), render(b)] for a, b in self.path],
        }

    def chain(self, u: Instance, arrow: str = "→") -> str:
        return arrow.join(render(u.strings[j - 1]) for j in self.permutation)

    @classmethod
    def from_json(cls, data: dict, u: Instance) -> "Certificate":
        """Read a certificate; a missing ``path`` is filled in from the permutation."""
        perm = tuple(int(j) for j in data["permutation"])
        if "path" in data and data["path"] is not None:
            parse = (lambda x: x) if u.mode == "chars" else (lambda x: tuple(x.split()))
            path = tuple((parse(a), parse(b)) for a, b in data["path"])
        else:
            path = tuple(u.edge(j - 1) for j in perm if 1 <= j <= u.n)
        return cls(perm, path)


def euler_walk(g: Pseudodigraph, start) -> list:
    """Vertex sequence of a trail using every unit of multiplicity, starting at ``start``.

    Hierholzer's splice: extend greedily, always taking the smallest target
    gram; on a dead end, back off and splice the detour in place.  If the
    graph has no Eulerian trail from ``start`` the result is shorter than
    ``size + 1``.
    """
    out = defaultdict(list)
    for (a, b), k in g.multiplicity.items():
        out[a].extend([b] * k)
    for targets in out.values():
        targets.sort(reverse=True)  # pop() yields the smallest
    stack = [start]
    trail = []
    while stack:
        v = stack[-1]
        if out[v]:
            stack.append(out[v].pop())
        else:
            trail.append(stack.pop())
    trail.reverse()
    return trail


def _assign(u: Instance, path: list) -> tuple:
    """Lowest unused component index per edge occurrence."""
    pool = defaultdict(deque)
    for i in range(u.n):
        pool[u.edge(i)].append(i + 1)
    return tuple(pool[e].popleft() for e in path)


def _edge_path(g: Pseudodigraph, verdict, fidelity: bool) -> list:
    start = verdict.start if verdict.case != BALANCED else g.sorted_vertices()[0]
    if fidelity and verdict.case != BALANCED:
        # Close the trail with one back edge end -> start, take a circuit of
        # the augmented graph, then cut the circuit open at that edge.
        back = (verdict.end, verdict.start)
        aug = g.with_edge(back)
        walk = euler_walk(aug, aug.sorted_vertices()[0])
        circuit = list(zip(walk, walk[1:]))
        i = circuit.index(back)
        return circuit[i + 1:] + circuit[:i]
    walk = euler_walk(g, start)
    return list(zip(walk, walk[1:]))


def extract_certificate(u: Instance, fidelity: bool = False) -> Certificate | None:
    """A witness ordering for ``u``, or ``None`` when none exists.

    With ``fidelity=True`` the one-excess-pair case is handled by adding the
    back edge and rotating a circuit instead of starting the walk at the
    surplus vertex; connectivity also uses the set-merging test.
    """
    g = build_pseudodigraph(u)
    verdict = decide_graph(g, fidelity)
    if not verdict:
        return None
    path = _edge_path(g, verdict, fidelity)
    if len(path) != u.n:
        raise AssertionError(f"trail covers {len(path)} of {u.n} edges on a YES instance")
    return Certificate(_assign(u, path), tuple(path))


@dataclass(frozen=True)
class Check:
    ok: bool
    reason: str | None = None
    detail: str | None = None
    position: int | None = None  # 1-based, for overlap breaks

    def __bool__(self):
        return self.ok

    def to_json(self) -> dict:
        return {"valid": self.ok, "reason": self.reason or "none", "detail": self.detail, "position": self.position}


def verify_certificate(u: Instance, c: Certificate) -> Check:
    """Check a certificate against ``u`` from scratch.

    Reasons: ``wrong_length``, ``index_out_of_range``, ``duplicate_index``,
    ``overlap_break``, ``multiplicity_mismatch``, ``path_mismatch``.
    """
    perm = tuple(c.permutation)
    n = u.n
    if len(perm) != n:
        return Check(False, "wrong_length", f"permutation has {len(perm)} entries, instance has {n}")
    seen = set()
    for j in perm:
        if not isinstance(j, int) or not 1 <= j <= n:
            return Check(False, "index_out_of_range", f"index {j!r} not in 1..{n}")
        if j in seen:
            return Check(False, "duplicate_index", f"index {j} repeated")
        seen.add(j)

    t = u.t
    for i in range(n - 1):
        left, right = u.strings[perm[i] - 1], u.strings[perm[i + 1] - 1]
        tail, head = last_gram(left, t), first_gram(right, t)
        if tail != head:
            return Check(False, "overlap_break", f"{render(tail)!r} != {render(head)!r}", position=i + 1)

    path = tuple(tuple(e) for e in c.path)
    wanted = Counter((first_gram(x, t), last_gram(x, t)) for x in u.strings)
    used = Counter(path)
    if used != wanted:
        bad = sorted((wanted - used) + (used - wanted))
        e = bad[0]
        return Check(False, "multiplicity_mismatch",
                     f"edge ({render(e[0])},{render(e[1])}) used {used[e]} times, multiplicity {wanted[e]}")
    induced = tuple((first_gram(u.strings[j - 1], t), last_gram(u.strings[j - 1], t)) for j in perm)
    if path != induced:
        k = next(i for i, (a, b) in enumerate(zip(path, induced)) if a != b)
        return Check(False, "path_mismatch", f"path edge {k + 1} differs from component {perm[k]}", position=k + 1)
    return Check(True)
