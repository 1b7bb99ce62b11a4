"""Decide triviality and equality of elements by the contraction
recursion, and compute element orders by power search.

Triviality of a canonical word: the empty word is trivial; a single
syllable never is (canonical exponents are nonzero mod n-1); otherwise
the element is trivial iff its wreath decomposition has trivial root and
every state is trivial.  The recursion terminates because each state of a
canonical word of syllable length >= 2 is strictly shorter.
"""

from __future__ import annotations

from .words import Word, decompose


def is_identity(w: Word) -> bool:
    """True iff ``w`` represents the identity automorphism."""
    memo: dict[tuple, bool] = {}

    def rec(word: Word) -> bool:
        word = word.canonical()
        if word.is_empty():
            return True
        if len(word) == 1:
            return False
        key = word.syllables
        cached = memo.get(key)
        if cached is not None:
            return cached
        # provisional False guards against cycles; contraction rules them
        # out, so the memo is only read back after the answer is final
        dec = decompose(word)
        if not dec.root.is_identity():
            answer = False
        else:
            answer = all(rec(state) for state in dec.states)
        memo[key] = answer
        return answer

    return rec(w)


def are_equal(u: Word, v: Word) -> bool:
    if u.n != v.n:
        raise ValueError("words over different alphabets")
    return is_identity(u * v.inverse())


def default_order_bound(n: int) -> int:
    """Covers every element order asserted for the groups in scope, with margin."""
    return 4 * (n - 1) ** 2


def element_order(w: Word, bound: int | None = None) -> int | None:
    """Least k <= bound with w^k trivial, or None if no such k is found."""
    if bound is None:
        bound = default_order_bound(w.n)
    if bound < 1:
        raise ValueError("bound must be at least 1")
    power = w.canonical()
    for k in range(1, bound + 1):
        if is_identity(power):
            return k
        power = (power * w).canonical()
    return None
