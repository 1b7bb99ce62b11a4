"""Stabilizer chains: exact orders, membership, determinism."""

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from towergroups.perm import Permutation, closure_order_bfs, parse_cycles
from towergroups.schreier import (build_chain, derived_subgroup_chain,
                                  subgroup_order)

from conftest import permutations


def _sym_gens(n):
    return [parse_cycles("(1 2)", n),
            parse_cycles("(" + " ".join(map(str, range(1, n + 1))) + ")", n)]


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7, 8])
def test_symmetric_group_order(n):
    assert build_chain(_sym_gens(n)).order == math.factorial(n)


def test_alternating_group_order():
    gens = [parse_cycles("(1 2 3)", 5), parse_cycles("(3 4 5)", 5)]
    assert build_chain(gens).order == 60


@given(st.lists(permutations(7), min_size=1, max_size=3))
def test_order_matches_brute_force_closure(gens):
    assert build_chain(gens).order == closure_order_bfs(gens)


@given(st.lists(permutations(6), min_size=1, max_size=3))
def test_membership_matches_sifting(gens):
    chain = build_chain(gens)
    for g in gens:
        assert chain.contains(g)
        assert chain.contains(g * gens[0])
    transposition = parse_cycles("(1 2)", 6)
    brute = closure_order_bfs(gens)
    if chain.contains(transposition):
        assert closure_order_bfs(gens + [transposition]) == brute


def test_deterministic_chains():
    gens = [parse_cycles("(1 2 3 4)", 6), parse_cycles("(4 5 6)", 6)]
    a, b = build_chain(gens), build_chain(gens)
    assert a.base == b.base
    assert a.order == b.order
    assert a.orbit_sizes() == b.orbit_sizes()
    assert [str(g) for g in a.strong_generators()] == \
        [str(g) for g in b.strong_generators()]


def test_subgroup_order_divides_parent():
    parent = build_chain(_sym_gens(6))
    sub = subgroup_order(parent, [parse_cycles("(1 2 3)", 6),
                                  parse_cycles("(4 5 6)", 6)])
    assert sub == 9
    assert parent.order % sub == 0


def test_subgroup_order_rejects_outsiders():
    parent = build_chain([parse_cycles("(1 2 3)", 4), parse_cycles("(2 3 4)", 4)])
    with pytest.raises(ValueError):
        subgroup_order(parent, [parse_cycles("(1 2)", 4)])


def test_derived_subgroup_of_symmetric_is_alternating():
    for n in (4, 5, 6):
        chain = derived_subgroup_chain(_sym_gens(n))
        assert chain.order == math.factorial(n) // 2
        assert not chain.contains(parse_cycles("(1 2)", n))
        assert chain.contains(parse_cycles("(1 2 3)", n))


def test_empty_generating_set_is_trivial():
    assert build_chain([]).order == 1
