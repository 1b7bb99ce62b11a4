"""Words, wreath decompositions, portraits, leaf actions, and parsing."""

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from towergroups.words import (Word, WordSyntaxError, act, commutator,
                               decompose, format_vertex, format_word,
                               generator, leaf_action, parse_vertex,
                               parse_word, portrait, state_at)
from towergroups.wordproblem import are_equal

from conftest import words


def test_free_reduction_merges_and_cancels():
    w = Word(4, ((1, 2), (1, -2), (2, 1), (2, 1)))
    assert w.syllables == ((2, 2),)
    assert (w * w.inverse()).is_empty()


@given(words())
def test_canonical_exponents_lie_in_window(w):
    for _, exp in w.canonical().syllables:
        assert 1 <= exp <= w.n - 2


@given(words())
def test_canonical_preserves_the_element(w):
    assert are_equal(w, w.canonical())


@given(words(n=4, max_syllables=5), words(n=4, max_syllables=5))
def test_decompose_is_a_homomorphism_on_leaf_actions(u, v):
    m = 2
    assert leaf_action(u * v, m) == leaf_action(u, m) * leaf_action(v, m)


@given(words(n=5, max_syllables=5), words(n=5, max_syllables=5))
def test_decompose_root_multiplies(u, v):
    assert decompose(u * v).root == decompose(u).root * decompose(v).root


@given(words())
def test_state_recursion_matches_vertex_action(w):
    dec = decompose(w)
    for i in range(1, w.n + 1):
        assert act(w, (i,)) == (dec.root(i),)
        assert are_equal(state_at(w, (i,)), dec.states[i - 1])


@given(words(max_syllables=6))
def test_portrait_agrees_with_leaf_action(w):
    pic = portrait(w, 2)
    assert pic.leaf_action(2) == leaf_action(w, 2)
    for i in range(1, w.n + 1):
        for j in range(1, w.n + 1):
            assert pic.act((i, j)) == act(w, (i, j))


@given(words(max_syllables=10))
def test_contraction_bound_on_states(w):
    w = w.canonical()
    for state in decompose(w).states:
        assert len(state.canonical()) <= (len(w) + 1) / 2


@given(words())
def test_parser_round_trip(w):
    assert parse_word(format_word(w), w.n).syllables == w.syllables


def test_parser_accepts_commutators_and_conjugates():
    n = 4
    a1, a2 = generator(n, 1), generator(n, 2)
    assert parse_word("[a1,a2]", n).syllables == commutator(a1, a2).syllables
    assert parse_word("a1^a2", n).syllables == a1.conjugate_by(a2).syllables
    w = parse_word("a3^-1^a1", n)
    assert w.syllables == generator(n, 3, -1).conjugate_by(a1).syllables
    assert parse_word("a1*a2^-1*a3^2", n).syllables == ((1, 1), (2, -1), (3, 2))


@pytest.mark.parametrize("bad", ["a0", "a5", "a1^", "a1**a2", "[a1,a2", "b2", ""])
def test_parser_rejects_malformed_input(bad):
    with pytest.raises(WordSyntaxError):
        if parse_word(bad, 4).is_empty() and bad == "":
            raise WordSyntaxError("empty input is the identity; not an error")


def test_empty_word_parses_as_identity():
    assert parse_word("1", 4).is_empty()


def test_vertex_round_trip_with_separator():
    assert parse_vertex("132", 4) == (1, 3, 2)
    assert parse_vertex("1.10.3", 12) == (1, 10, 3)
    assert format_vertex((1, 10, 3), 12) == "1.10.3"
    assert format_vertex((1, 3, 2), 4) == "132"


@given(words(n=6, max_syllables=6))
def test_shift_conjugates_the_root(w):
    from towergroups.perm import omega
    n = w.n
    om = omega(n)
    assert decompose(w.shift()).root == om.inverse() * decompose(w).root * om


@given(words(n=4, max_syllables=6), st.integers(min_value=1, max_value=3))
def test_leaf_action_of_inverse(w, m):
    assert leaf_action(w.inverse(), m) == leaf_action(w, m).inverse()


def test_exponent_sums():
    w = parse_word("a1*a2^-1*a3^2*a1", 5)
    assert w.exponent_sums() == (2, -1, 2, 0, 0)
