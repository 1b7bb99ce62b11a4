"""Exponent-sum invariants of words: the abelianization vector in
(Z/(n-1)Z)^n, the total exponent sum epsilon and its one-level refinement,
and the membership predicates they induce for the finite-index subgroups
in play (the derived subgroup, the even-exponent subgroup for odd n, the
index-3 subgroup of the 4-ary group, and the mod-d subgroups).
"""

from __future__ import annotations

from .words import Word, decompose


def abelianize(w: Word) -> tuple[int, ...]:
    """Image of ``w`` in (Z/(n-1)Z)^n: per-generator exponent sums mod n-1."""
    modulus = w.n - 1
    return tuple(e % modulus for e in w.exponent_sums())


def epsilon(w: Word) -> int:
    """Total exponent sum mod n-1; a surjective homomorphism onto Z/(n-1)Z."""
    return sum(w.exponent_sums()) % (w.n - 1)


def epsilon1(w: Word) -> int:
    """Sum of epsilon over the first-level states, mod n-1.

    Agrees with epsilon on every element; the pair gives a cheap
    consistency check on the wreath recursion.
    """
    dec = decompose(w)
    return sum(epsilon(state) for state in dec.states) % (w.n - 1)


def in_commutator(w: Word) -> bool:
    """Membership in the derived subgroup: all abelianization entries zero."""
    return all(e == 0 for e in abelianize(w))


def in_Kn_odd(w: Word) -> bool:
    """Membership in the even-exponent subgroup (index 2, odd n >= 5)."""
    if w.n < 5 or w.n % 2 == 0:
        raise ValueError(f"even-exponent subgroup requires odd n >= 5, got n={w.n}")
    return epsilon(w) % 2 == 0


def chi4(w: Word) -> int:
    """The Z/3 character e_1 - e_2 + e_3 - e_4 on the 4-ary group.

    Its kernel is the unique index-3 subgroup cut out by the congruences
    a_1 = a_2^-1 = a_3 = a_4^-1; see verify.verify_K4_structure for the
    generator-level confirmation.
    """
    if w.n != 4:
        raise ValueError(f"chi4 is defined for n=4 only, got n={w.n}")
    e1, e2, e3, e4 = abelianize(w)
    return (e1 - e2 + e3 - e4) % 3


def in_K4(w: Word) -> bool:
    return chi4(w) == 0


def in_Hnd(w: Word, d: int) -> bool:
    """Membership in the index-d subgroup {epsilon = 0 mod d}."""
    n = w.n
    if d <= 2:
        raise ValueError(f"modulus must exceed 2, got d={d}")
    if (n - 1) % d != 0:
        raise ValueError(f"d={d} must divide n-1={n - 1}")
    return epsilon(w) % d == 0


def stab1_parity_test(w: Word) -> bool:
    """Predicted first-level-stabilizer membership for odd n >= 5:
    epsilon even.  Agrees with triviality of the root permutation."""
    if w.n < 5 or w.n % 2 == 0:
        raise ValueError(f"parity test requires odd n >= 5, got n={w.n}")
    return epsilon(w) % 2 == 0
