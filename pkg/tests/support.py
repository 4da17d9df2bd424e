"""Independent reference checks shared by the test modules."""

import itertools
from collections import deque

from hypothesis import strategies as st

from overlap_chain import Instance

EXAMPLE_2 = ("ab", "ac", "cb", "cc", "ba")
EXAMPLE_3 = ("ca", "eb", "ad", "bf", "dc", "fe", "ab", "ab", "ba")
FIGURE_2_PATH = ("ab", "bf", "fe", "eb", "ba", "ad", "dc", "ca", "ab")


def chains(strings, order, t=1):
    return all(strings[i][-t:] == strings[j][:t] for i, j in zip(order, order[1:]))


def brute_force(strings, t=1):
    """Plain itertools search over every ordering."""
    return any(chains(strings, p, t) for p in itertools.permutations(range(len(strings))))


def bfs_components(edges):
    adj = {}
    for a, b in edges:
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)
    seen, comps = set(), []
    for v in adj:
        if v in seen:
            continue
        comp, queue = set(), deque([v])
        seen.add(v)
        while queue:
            x = queue.popleft()
            comp.add(x)
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        comps.append(frozenset(comp))
    return comps


def all_instances(n, symbols, s=2, t=1):
    words = ["".join(w) for w in itertools.product(symbols, repeat=s)]
    for combo in itertools.product(words, repeat=n):
        yield Instance(combo, s, t)


@st.composite
def instances(draw, max_n=7, max_alphabet=3, s=None, t=None):
    s = draw(st.integers(2, 4)) if s is None else s
    t = draw(st.integers(1, s - 1)) if t is None else t
    k = draw(st.integers(1, max_alphabet))
    word = st.text(alphabet="abcdef"[:k], min_size=s, max_size=s)
    strings = draw(st.lists(word, min_size=2, max_size=max_n))
    return Instance(tuple(strings), s, t)


@st.composite
def edge_sets(draw, max_vertices=8, max_edges=12):
    k = draw(st.integers(1, max_vertices))
    v = st.integers(0, k - 1)
    return draw(st.lists(st.tuples(v, v), max_size=max_edges))
