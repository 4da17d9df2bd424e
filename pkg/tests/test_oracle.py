import itertools

import numpy as np
import pytest
from hypothesis import given, settings

from overlap_chain import Instance, OracleCapError, decide, oracle_backtrack, oracle_permutations
from overlap_chain.generate import GeneratorSpec, generate
from overlap_chain.oracle import permutation_table

from support import EXAMPLE_2, EXAMPLE_3, all_instances, brute_force, chains, instances


@pytest.mark.parametrize("n", range(1, 7))
def test_permutation_table_is_lexicographic(n):
    assert [tuple(r) for r in permutation_table(n)] == list(itertools.permutations(range(n)))


@pytest.mark.parametrize("oracle", [oracle_permutations, oracle_backtrack])
@pytest.mark.parametrize("strings, expected", [
    (EXAMPLE_2, True),
    (EXAMPLE_3, True),
    (("ab", "cd"), False),
    (("ab", "ba"), True),
    (("ab", "ab"), False),
])
def test_hand_cases(oracle, strings, expected):
    assert oracle(Instance(strings, 2, 1)) is expected


@pytest.mark.parametrize("symbols, count", [("ab", 16), ("abc", 81)])
def test_all_pairs_agree_with_decide(symbols, count):
    seen = 0
    for u in all_instances(2, symbols):
        seen += 1
        assert oracle_permutations(u) == oracle_backtrack(u) == decide(u).answer
    assert seen == count


def test_caps():
    u = Instance(("ab",) * 11, 2, 1)
    with pytest.raises(OracleCapError):
        oracle_permutations(u)
    assert oracle_permutations(u, cap=11) is False
    with pytest.raises(OracleCapError):
        oracle_backtrack(Instance(("aa",) * 15, 2, 1))
    assert oracle_backtrack(Instance(("aa",) * 15, 2, 1), cap=15)


@settings(max_examples=200)
@given(instances(max_n=7))
def test_oracles_match_itertools(u):
    expected = brute_force(u.strings, u.t)
    assert oracle_permutations(u) == expected
    assert oracle_backtrack(u) == expected


@given(instances(max_n=7))
def test_backtrack_only_expands_chaining_prefixes(u):
    expanded = []
    oracle_backtrack(u, on_expand=expanded.append)
    assert expanded[0] == ()
    for order in expanded:
        assert len(set(order)) == len(order)
        assert chains(u.strings, order, u.t)


def test_random_n10_oracles_agree():
    for seed in range(30):
        u = generate(GeneratorSpec(n=10, alphabet_size=2, seed=seed))
        assert oracle_backtrack(u) == oracle_permutations(u)


def test_duplicate_heavy_no_instance_is_quick():
    # eleven identical loops plus an unreachable component
    u = Instance(("aa",) * 13 + ("bc",), 2, 1)
    assert oracle_backtrack(u) is False
