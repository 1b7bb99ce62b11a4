"""Executable verification of every explicit identity, witness element,
and index claim about the groups G_n that this package can recompute at
desk scale.

Each check recomputes its claim from scratch and reports one of three
statuses:

* ``pass`` - the claim holds as displayed;
* ``recomputed-with-correction`` - the displayed data cannot be
  reconciled (arity or order typos); the check reports the recomputed
  artifacts and verifies the corrected statement;
* ``fail`` - the claim is false and no correction was found.

Checks never hard-code a tuple they cannot reconcile with the wreath
decomposition.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field
from itertools import permutations as _s_n

from .abelian import abelianize, chi4, epsilon
from .perm import Permutation, closure_order_bfs, sigma
from .quotients import expected_quotient_order, level_quotient_chain, quotient_order
from .schreier import build_chain, derived_subgroup_chain, subgroup_order
from .wordproblem import are_equal, element_order, is_identity
from .words import (Word, commutator, decompose, generator, leaf_action,
                    state_at, act)

DEFAULT_SEED = 20230817


@dataclass
class CheckResult:
    claim_id: str
    locus: str
    status: str               # pass | fail | recomputed-with-correction | inconclusive
    data: dict = field(default_factory=dict)
    millis: float = 0.0

    def as_dict(self) -> dict:
        return {
            "claim_id": self.claim_id,
            "locus": self.locus,
            "status": self.status,
            "data": self.data,
            "millis": round(self.millis, 3),
        }


@dataclass
class VerificationReport:
    ns: tuple[int, ...]
    checks: list[CheckResult]

    @property
    def failed(self) -> list[CheckResult]:
        return [c for c in self.checks if c.status == "fail"]

    def as_dict(self) -> dict:
        return {
            "ns": list(self.ns),
            "checks": [c.as_dict() for c in self.checks],
            "num_fail": len(self.failed),
        }


# -- helpers ----------------------------------------------------------------

_CHAIN_CACHE: dict[tuple[int, int], object] = {}


def _quotient_chain(n: int, m: int):
    key = (n, m)
    if key not in _CHAIN_CACHE:
        _CHAIN_CACHE[key] = level_quotient_chain(n, m)
    return _CHAIN_CACHE[key]


def block_element(n: int, m: int, blocks: dict[int, Permutation]) -> Permutation:
    """Level-m permutation of a first-level stabilizer element given the
    level-(m-1) action of its state at each listed coordinate."""
    size = n ** (m - 1)
    images = list(range(1, n ** m + 1))
    for coord, inner in blocks.items():
        if inner.degree != size:
            raise ValueError(f"block degree {inner.degree}, want {size}")
        offset = (coord - 1) * size
        for j in range(1, size + 1):
            images[offset + j - 1] = offset + inner(j)
    return Permutation(tuple(images))


def _random_word(rng: random.Random, n: int, max_syllables: int) -> Word:
    length = rng.randint(0, max_syllables)
    syllables = []
    prev = 0
    for _ in range(length):
        gen = rng.choice([g for g in range(1, n + 1) if g != prev])
        exp = rng.choice([e for e in range(-(n - 2), n - 1) if e != 0])
        syllables.append((gen, exp))
        prev = gen
    return Word(n, tuple(syllables))


def _states_match(word: Word, expected: dict[int, Word]) -> bool:
    """Root trivial and state k == expected[k] (identity off the listed
    coordinates)."""
    dec = decompose(word)
    if not dec.root.is_identity():
        return False
    for k, state in enumerate(dec.states, start=1):
        target = expected.get(k)
        if target is None:
            if not is_identity(state):
                return False
        elif not are_equal(state, target):
            return False
    return True


def _shifted_identity_holds(word: Word, expected: dict[int, Word]) -> bool:
    n = word.n
    shifted_expected = {k % n + 1: w.shift() for k, w in expected.items()}
    return _states_match(word.shift(), shifted_expected)


# -- individual checks ------------------------------------------------------

def verify_root_groups(n: int) -> CheckResult:
    """The root permutations generate S_n (odd n) or A_n (even n)."""
    expected = math.factorial(n) if n % 2 else math.factorial(n) // 2
    order = closure_order_bfs([sigma(n, i) for i in range(1, n + 1)])
    status = "pass" if order == expected else "fail"
    return CheckResult(f"root-group-order:n={n}", "root permutation group",
                       status, {"order": order, "expected": expected})


def verify_level_transitive(n: int, max_level: int = 2) -> CheckResult:
    """Single orbit of full size at each checked level."""
    data = {}
    ok = True
    for m in range(1, max_level + 1):
        orbit = _quotient_chain(n, m).orbit_sizes()[0]
        data[f"level_{m}_orbit"] = orbit
        ok = ok and orbit == n ** m
    return CheckResult(f"level-transitive:n={n}", "level transitivity",
                       "pass" if ok else "fail", data)


def verify_self_replicating(n: int) -> CheckResult:
    """Every generator appears as the state at every first-level vertex of
    some conjugate of a generator stabilizing that vertex."""
    failures = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            found = False
            for k in range(1, n + 1):
                if k == i:
                    continue
                for m in range(n - 1):
                    conj = generator(n, j).conjugate_by(generator(n, k) ** m)
                    if act(conj, (i,)) == (i,) and \
                            are_equal(state_at(conj, (i,)), generator(n, j)):
                        found = True
                        break
                if found:
                    break
            if not found:
                failures.append((i, j))
    status = "pass" if not failures else "fail"
    return CheckResult(f"self-replicating:n={n}", "self-replication",
                       status, {"missing_pairs": failures})


def _branching_identities(n: int) -> list[tuple[Word, dict[int, Word]]]:
    g = lambda i, e=1: generator(n, i, e)
    if n == 4:
        return [
            (commutator(g(3, -1).conjugate_by(g(1)),
                        g(3, -1).conjugate_by(g(2))) * (g(2, -1) * g(1)) ** 3,
             {3: commutator(g(1), g(2)).conjugate_by(g(2))}),
            (commutator(g(2).conjugate_by(g(1, -1)),
                        g(2).conjugate_by(g(3))) * (g(1) * g(3)) ** -3,
             {2: commutator(g(1), g(3)).inverse().conjugate_by(g(3, -1))}),
        ]
    if n == 5:
        return [
            (commutator((g(1) * g(4, -1)) ** 2, (g(2) * g(4, -1)) ** 2),
             {1: commutator(g(1), g(2))}),
            (commutator((g(3, -1) * g(1)) ** 2, (g(3) * g(1, -1)) ** 2),
             {2: commutator(g(1), g(3))}),
        ]
    if n == 6:
        return [
            (commutator((g(1) * g(4, -1)) ** 2, (g(2) * g(4, -1)) ** 2),
             {1: commutator(g(1), g(2))}),
            (commutator((g(3, -1) * g(1)) ** 2, (g(3) * g(1, -1)) ** 2),
             {2: commutator(g(1), g(3))}),
            (commutator((g(6, -1) * g(1) * g(2) * g(1, -1)).conjugate_by(g(3)),
                        g(4) * g(5, -1) * g(4, -1) * g(3)),
             {4: commutator(g(1), g(4))}),
        ]
    # general family: [(a_1 a_j^-1)^2, ((a_i a_j^-1)^2)^(a_j^-(i-2))]
    # places [a_1, a_i] at coordinate 1, with j = i + 2
    out = []
    for i in range(2, 1 + n // 2 + 1):
        j = i + 2
        u = (g(1) * g(j, -1)) ** 2
        v = ((g(i) * g(j, -1)) ** 2).conjugate_by(g(j) ** (-(i - 2)))
        out.append((commutator(u, v), {1: commutator(g(1), g(i))}))
    return out


def verify_branching_identities(n: int) -> CheckResult:
    """The explicit elements of the first-level rigid stabilizer whose
    single nontrivial state is a generator commutator."""
    results = []
    ok = True
    for idx, (word, expected) in enumerate(_branching_identities(n), start=1):
        direct = _states_match(word, expected)
        shifted = _shifted_identity_holds(word, expected)
        results.append({"identity": idx, "holds": direct, "shifted_holds": shifted})
        ok = ok and direct and shifted
    return CheckResult(f"branching-identities:n={n}", "branching commutator elements",
                       "pass" if ok else "fail", {"identities": results})


def verify_In_in_Gprime(n: int) -> CheckResult:
    """Coordinate-pair elements (..., g, ..., g^-1, ...) lie in the derived
    subgroup; checked on the displayed witnesses and at level 2."""
    g = lambda i, e=1: generator(n, i, e)
    data: dict = {}
    corrected = False
    ok = True

    # first witness: [a_1^{a_2}, a_3] and its displayed state tuple
    witness = commutator(g(1).conjugate_by(g(2)), g(3))
    claimed = {2: g(2, -1), 3: commutator(g(1), g(3)), 4: g(2, 2), 5: g(2, -1)}
    if n == 4:
        # the displayed tuple has more entries than coordinates; recompute
        dec = decompose(witness)
        data["witness_states_n4"] = [str(s.canonical()) for s in dec.states]
        ok = ok and dec.root.is_identity() and \
            all(all(e == 0 for e in abelianize(s)) or
                abelianize(s) == abelianize(g(2, -1)) for s in dec.states)
        corrected = True
    else:
        holds = _states_match(witness, claimed)
        data["witness_matches_display"] = holds
        ok = ok and holds

    # delta * delta^(-a_1 a_3^-1): root trivial; the displayed state pattern
    # (1, a_2^-1, a_2, 1, ..., 1) depends on the first-level permutation of
    # a_1 a_3^-1 and only holds for some n; recompute and compare
    h = g(1) * g(3, -1)
    product = witness * witness.inverse().conjugate_by(h)
    dec = decompose(product)
    ok = ok and dec.root.is_identity()
    state_ab = [abelianize(s) for s in dec.states]
    claimed_ab = [abelianize(w) for w in
                  [Word(n), g(2, -1), g(2)] + [Word(n)] * (n - 3)]
    data["product_state_abelianizations"] = state_ab
    if state_ab != claimed_ab:
        corrected = True
        data["displayed_pattern_matches"] = False
        # the corrected claim: entries are v_k - v_{sigma(k)} for the witness
        # pattern v and sigma the first-level action of a_1 a_3^-1
        v = [abelianize(s) for s in decompose(witness).states]
        perm = decompose(h).root
        predicted = [tuple((a - b) % (n - 1) for a, b in zip(v[k - 1], v[perm(k) - 1]))
                     for k in range(1, n + 1)]
        ok = ok and state_ab == predicted
        data["conjugation_formula_matches"] = state_ab == predicted
    else:
        data["displayed_pattern_matches"] = True

    # finite-level spot check: pair elements land in the derived subgroup of
    # the level-2 quotient
    m = 2
    gens = [leaf_action(generator(n, i), m) for i in range(1, n + 1)]
    derived = derived_subgroup_chain(gens)
    samples = [g(1), g(2), g(1) * g(2)]
    pair_ok = True
    for word in samples:
        inner = leaf_action(word, m - 1)
        inner_inv = leaf_action(word.inverse(), m - 1)
        for p, q in [(1, n), (2, 3), (n, 1)]:
            elem = block_element(n, m, {p: inner, q: inner_inv})
            pair_ok = pair_ok and derived.contains(elem)
    data["pair_elements_in_level2_derived_subgroup"] = pair_ok
    ok = ok and pair_ok

    status = "fail" if not ok else ("recomputed-with-correction" if corrected else "pass")
    return CheckResult(f"inverse-pair-subgroup:n={n}",
                       "pair elements in the derived subgroup", status, data)


def _k4_words() -> list[Word]:
    g = lambda i, e=1: generator(4, i, e)
    return [g(1) * g(3) * g(4, 2), g(2) * g(1) * g(3) * g(1, -1),
            g(1) * g(3, -1) * g(4) * g(3)]


def _k4_normal_generators() -> list[Word]:
    g = lambda i: generator(4, i)
    return [g(1) * g(2), g(2) * g(3), g(3) * g(4), g(4) * g(1)]


def _stab1_image_generators(n: int, m: int, extra_samples: bool = False) -> list[Permutation]:
    """Finite generating sample for the image of Stab(1) in the level-m
    quotient of the 4-ary group: the three explicit stabilizer words, pair
    elements, and coordinate-wise commutators."""
    gens = [leaf_action(w, m) for w in _k4_words()]
    sample_words = [generator(n, i) for i in range(1, n + 1)]
    sample_words.append(generator(n, 1) * generator(n, 2))
    if extra_samples:
        sample_words += [generator(n, i) * generator(n, j)
                         for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    for word in sample_words:
        inner = leaf_action(word, m - 1)
        inner_inv = leaf_action(word.inverse(), m - 1)
        for p in range(1, n + 1):
            for q in range(1, n + 1):
                if p != q:
                    gens.append(block_element(n, m, {p: inner, q: inner_inv}))
    commutator_words = [commutator(generator(n, i), generator(n, j))
                        for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    for word in commutator_words:
        inner = leaf_action(word, m - 1)
        for p in range(1, n + 1):
            gens.append(block_element(n, m, {p: inner}))
    return gens


def verify_stab1_generation(m: int) -> CheckResult:
    """The sampled Stab(1) generators of the 4-ary group generate the full
    image of Stab(1) at level m: index 12 in the quotient.

    Reports ``inconclusive`` and retries with a larger sample once if the
    first sample under-generates.
    """
    n = 4
    chain = _quotient_chain(n, m)
    expected = chain.order // 12
    attempts = []
    for extra in (False, True):
        gens = _stab1_image_generators(n, m, extra_samples=extra)
        for p in gens:
            if not chain.contains(p):
                return CheckResult(f"stab1-generation:m={m}",
                                   "first-level stabilizer generators",
                                   "fail", {"reason": "sample outside the group"})
        order = subgroup_order(chain, gens)
        attempts.append({"extra_samples": extra, "order": str(order)})
        if order == expected:
            return CheckResult(f"stab1-generation:m={m}",
                               "first-level stabilizer generators", "pass",
                               {"order": str(order), "expected": str(expected),
                                "attempts": attempts})
        if order > expected:
            break
    status = "inconclusive" if int(attempts[-1]["order"]) < expected else "fail"
    return CheckResult(f"stab1-generation:m={m}",
                       "first-level stabilizer generators", status,
                       {"expected": str(expected), "attempts": attempts})


def verify_K4_structure() -> CheckResult:
    """Structure of the index-3 branching subgroup of the 4-ary group:
    displayed decompositions, the defining congruences, normal generators
    in the character kernel, and the level-2 stabilizer image order."""
    n = 4
    g = lambda i, e=1: generator(n, i, e)
    data: dict = {}
    corrected = False
    ok = True

    # (i) displayed decompositions
    displays = [
        (_k4_words()[0], {1: g(1), 2: g(3), 4: g(4, 2)}),
        (_k4_words()[1], {1: g(1, -1), 2: g(2) * g(3), 4: g(1)}),
    ]
    for word, expected in displays:
        holds = _states_match(word, expected)
        ok = ok and holds
    # third display has only 3 listed coordinates; recompute
    dec = decompose(_k4_words()[2])
    data["third_word_states"] = [str(s.canonical()) for s in dec.states]
    recomputed = {1: g(1) * g(4), 2: g(3, -1), 3: g(3)}
    ok = ok and _states_match(_k4_words()[2], recomputed)
    corrected = True

    # (ii) congruences a_1 = a_2^-1 = a_3 = a_4^-1 modulo the kernel of chi4
    pairs = [(g(1), g(2, -1)), (g(2, -1), g(3)), (g(3), g(4, -1))]
    cong = all(chi4(u * v.inverse()) == 0 for u, v in pairs)
    data["congruences_hold"] = cong
    ok = ok and cong

    # (iii) normal generators in ker chi4; chi4 surjects onto Z/3
    kernel_ok = all(chi4(w) == 0 for w in _k4_normal_generators())
    image = {chi4(g(1) ** k) for k in range(3)}
    data["normal_generators_in_kernel"] = kernel_ok
    data["chi4_image_size"] = len(image)
    ok = ok and kernel_ok and len(image) == 3

    # (iv) level-2 image of Stab(1) has index 12, hence order 6912
    stab1 = verify_stab1_generation(2)
    data["stab1_level2"] = stab1.data
    ok = ok and stab1.status == "pass"

    status = "fail" if not ok else ("recomputed-with-correction" if corrected else "pass")
    return CheckResult("index3-subgroup-structure", "4-ary branching subgroup",
                       status, data)


def verify_parity_stabilizer(n: int, random_samples: int = 10**4,
                             seed: int = DEFAULT_SEED) -> CheckResult:
    """Odd n: first-level stabilizer membership forces an even exponent
    sum, and conversely every state tuple with even total exponent sum is
    realized.

    The forward implication is checked exhaustively on short words plus a
    random suite.  The converse is checked exactly at level 2: a diagonal
    tuple of level-1 permutations lies in the image of the group there iff
    the sum of their parities is even.
    """
    if n % 2 == 0 or n < 5:
        raise ValueError(f"parity characterization requires odd n >= 5, got {n}")
    rng = random.Random(seed)
    violations = 0
    checked = 0

    def forward_holds(word: Word) -> bool:
        if decompose(word).root.is_identity():
            return epsilon(word) % 2 == 0
        return True

    def exhaustive(prefix: tuple, length: int):
        nonlocal violations, checked
        if not forward_holds(Word(n, prefix)):
            violations += 1
        checked += 1
        if length == 0:
            return
        last = prefix[-1][0] if prefix else 0
        for gen in range(1, n + 1):
            if gen == last:
                continue
            for exp in range(1, n - 1):
                exhaustive(prefix + ((gen, exp),), length - 1)

    exhaustive((), 3)
    for _ in range(random_samples):
        if not forward_holds(_random_word(rng, n, 20)):
            violations += 1
        checked += 1

    chain = _quotient_chain(n, 2)
    tuple_mismatches = 0
    tuple_samples = 100
    for _ in range(tuple_samples):
        words = [_random_word(rng, n, 6) for _ in range(n)]
        parity_even = sum(epsilon(w) for w in words) % 2 == 0
        diag = block_element(n, 2, {k: leaf_action(w, 1)
                                    for k, w in enumerate(words, start=1)})
        if chain.contains(diag) != parity_even:
            tuple_mismatches += 1

    ok = violations == 0 and tuple_mismatches == 0
    return CheckResult(f"parity-stabilizer:n={n}", "first-level stabilizer parity",
                       "pass" if ok else "fail",
                       {"words_checked": checked, "forward_violations": violations,
                        "tuple_samples": tuple_samples,
                        "tuple_mismatches": tuple_mismatches})


def beta_word(n: int) -> Word:
    return Word(n, tuple((i, 1) for i in range(1, n + 1)))


def verify_rigid_kernel_witness(n: int, d: int) -> CheckResult:
    """The corner/balanced witness pair behind the nontrivial rigid kernel
    of the index-d subgroups: the corner element escapes the subgroup, the
    balanced variant stabilizes the first level and is a genuine element
    at level 2."""
    if n < 4 or d <= 2 or (n - 1) % d != 0:
        raise ValueError(f"need n >= 4 and 2 < d | n-1, got n={n}, d={d}")
    g = lambda i, e=1: generator(n, i, e)
    beta = beta_word(n)
    data: dict = {}
    ok = True

    odd_part = Word(n, tuple((i, 1) for i in range(1, n + 1, 2)))
    even_part = Word(n, tuple((i, 1) for i in range(2, n + 1, 2)))
    dec = decompose(beta)
    if n % 2 == 1:
        transposition = Permutation(tuple([n] + list(range(2, n)) + [1]))
        root_ok = dec.root == transposition
        states_ok = are_equal(dec.states[0], odd_part) and \
            are_equal(dec.states[-1], even_part) and \
            all(is_identity(s) for s in dec.states[1:-1])
        corner = beta ** 2
    else:
        root_ok = dec.root.is_identity()
        states_ok = are_equal(dec.states[0], odd_part) and \
            are_equal(dec.states[-1], even_part) and \
            all(is_identity(s) for s in dec.states[1:-1])
        corner = beta
    data["beta_decomposition_matches"] = root_ok and states_ok
    ok = ok and root_ok and states_ok

    corner_eps = epsilon(corner) % d
    data["corner_epsilon_mod_d"] = corner_eps
    ok = ok and corner_eps != 0

    # balanced element (corner, 1, ..., 1, corner^-1): even exponent sum,
    # trivial root, and a genuine group element at level 2
    balanced_eps = (epsilon(corner) + epsilon(corner.inverse())) % d
    data["balanced_epsilon_mod_d"] = balanced_eps
    ok = ok and balanced_eps == 0
    chain = _quotient_chain(n, 2)
    balanced = block_element(n, 2, {1: leaf_action(corner, 1),
                                    n: leaf_action(corner.inverse(), 1)})
    in_group = chain.contains(balanced)
    data["balanced_in_level2_quotient"] = in_group
    ok = ok and in_group

    return CheckResult(f"rigid-kernel-witness:n={n},d={d}",
                       "index-d subgroup witnesses",
                       "pass" if ok else "fail", data)


def verify_nucleus(n: int) -> CheckResult:
    """The candidate nucleus {a_i^k} is state-closed, and products of two
    nucleus elements have all depth <= 3 states inside it."""
    nucleus = [Word(n)] + [generator(n, i, k)
                           for i in range(1, n + 1) for k in range(1, n - 1)]

    def in_nucleus(word: Word) -> bool:
        ab = abelianize(word)
        nonzero = [(i, e) for i, e in enumerate(ab, start=1) if e != 0]
        if not nonzero:
            return is_identity(word)
        if len(nonzero) > 1:
            return False
        i, e = nonzero[0]
        return are_equal(word, generator(n, i, e))

    verified: set = set()

    def states_in_nucleus(word: Word, depth: int) -> bool:
        key = (word.canonical().syllables, depth)
        if key in verified:
            return True
        for state in decompose(word).states:
            if not in_nucleus(state):
                return False
            if depth > 1 and not states_in_nucleus(state, depth - 1):
                return False
        verified.add(key)
        return True

    state_closed = all(states_in_nucleus(w, 1) for w in nucleus)
    absorbing = all(states_in_nucleus(u * v, 3)
                    for u in nucleus for v in nucleus)
    ok = state_closed and absorbing
    return CheckResult(f"nucleus:n={n}", "contracting nucleus",
                       "pass" if ok else "fail",
                       {"size": len(nucleus), "state_closed": state_closed,
                        "absorbing_depth3": absorbing})


def verify_order_bounds(n: int) -> CheckResult:
    """Element orders used by the branch-kernel exponent bounds.

    Generator orders are n-1 for every n.  The 4-ary normal generators
    have order 6 as claimed.  For odd n the claimed order-2(n-1) elements
    a_i a_{i+2} actually have first-level action of order n, hence order
    divisible by n; the elements of order 2(n-1) are the inverse pairs
    a_i a_{i+2}^-1, which is reported as a correction.
    """
    data: dict = {}
    corrected = False
    ok = True

    gen_orders = [element_order(generator(n, i)) for i in range(1, n + 1)]
    data["generator_orders"] = gen_orders
    ok = ok and all(o == n - 1 for o in gen_orders)

    if n == 4:
        orders = [element_order(w) for w in _k4_normal_generators()]
        data["normal_generator_orders"] = orders
        ok = ok and all(o == 6 for o in orders)
    elif n % 2 == 1 and n >= 5:
        listed = [(i, (i + 1) % n + 1) for i in range(1, n + 1)]
        claimed_orders = []
        corrected_orders = []
        bound = 2 * (n - 1)
        for i, j in listed:
            pair = generator(n, i) * generator(n, j)
            root_order = _perm_order(decompose(pair).root)
            claimed_orders.append({
                "element": f"a{i}*a{j}",
                "root_order": root_order,
                "order_up_to_bound": element_order(pair, 4 * (n - 1) ** 2),
            })
            inverse_pair = generator(n, i) * generator(n, j, -1)
            corrected_orders.append({
                "element": f"a{i}*a{j}^-1",
                "order": element_order(inverse_pair, bound),
            })
        data["listed_elements"] = claimed_orders
        data["inverse_pair_elements"] = corrected_orders
        literal_holds = all(c["order_up_to_bound"] == bound for c in claimed_orders)
        corrected_holds = all(c["order"] == bound for c in corrected_orders)
        if not literal_holds:
            corrected = True
            ok = ok and corrected_holds and \
                all(c["root_order"] == n for c in claimed_orders)
    status = "fail" if not ok else ("recomputed-with-correction" if corrected else "pass")
    return CheckResult(f"element-orders:n={n}", "element order bounds", status, data)


def _perm_order(p: Permutation) -> int:
    order = 1
    for cycle in p.cycles():
        order = math.lcm(order, len(cycle))
    return order


def verify_quotient_indices(n: int, deep: bool = False) -> CheckResult:
    """Exact quotient orders match the per-case index formulas."""
    levels = [1, 2]
    if n in (3, 4):
        levels.append(3)
    if deep and n == 5:
        levels.append(3)
    data = {}
    ok = True
    for m in levels:
        order = _quotient_chain(n, m).order
        expected = expected_quotient_order(n, m)
        data[f"level_{m}"] = {"order": str(order), "expected": str(expected)}
        ok = ok and order == expected
    if n % 2 == 1 and 3 in levels:
        # records which recursion exponent the data supports for odd n
        data["odd_recursion_exponent"] = "n^(m-2)"
    return CheckResult(f"quotient-indices:n={n}", "stabilizer index formulas",
                       "pass" if ok else "fail", data)


def verify_reorder_consistency(samples: int = 200, seed: int = DEFAULT_SEED) -> CheckResult:
    """At the abelianization level, the index-3 character of an ordered
    product of 4-ary words does not depend on the ordering permutation."""
    n = 4
    rng = random.Random(seed)
    ok = True
    for _ in range(samples):
        words = [_random_word(rng, n, 6) for _ in range(n)]
        values = set()
        for theta in _s_n(range(n)):
            product = Word(n)
            for k in theta:
                product = product * words[k]
            values.add(chi4(product))
        ok = ok and len(values) == 1
    return CheckResult("reorder-invariance", "ordered-product character invariance",
                       "pass" if ok else "fail", {"samples": samples})


# -- registry and runner ----------------------------------------------------

def _registry(ns: tuple[int, ...], deep: bool, seed: int = DEFAULT_SEED):
    entries = []
    for n in ns:
        if 3 <= n <= 8:
            entries.append((f"root-group-order:n={n}", lambda n=n: verify_root_groups(n)))
            entries.append((f"level-transitive:n={n}", lambda n=n: verify_level_transitive(n)))
            entries.append((f"self-replicating:n={n}", lambda n=n: verify_self_replicating(n)))
            entries.append((f"nucleus:n={n}", lambda n=n: verify_nucleus(n)))
            entries.append((f"quotient-indices:n={n}",
                            lambda n=n: verify_quotient_indices(n, deep=deep)))
        if 4 <= n <= 9:
            entries.append((f"branching-identities:n={n}",
                            lambda n=n: verify_branching_identities(n)))
            entries.append((f"element-orders:n={n}", lambda n=n: verify_order_bounds(n)))
        if 4 <= n <= 8:
            entries.append((f"inverse-pair-subgroup:n={n}",
                            lambda n=n: verify_In_in_Gprime(n)))
        if n in (5, 7):
            entries.append((f"parity-stabilizer:n={n}",
                            lambda n=n: verify_parity_stabilizer(n, seed=seed)))
        if n == 4:
            entries.append(("index3-subgroup-structure", verify_K4_structure))
            entries.append(("reorder-invariance",
                            lambda: verify_reorder_consistency(seed=seed)))
            entries.append(("stab1-generation:m=2", lambda: verify_stab1_generation(2)))
            if deep:
                entries.append(("stab1-generation:m=3", lambda: verify_stab1_generation(3)))
        for d in range(3, n):
            if (n - 1) % d == 0 and n >= 4:
                entries.append((f"rigid-kernel-witness:n={n},d={d}",
                                lambda n=n, d=d: verify_rigid_kernel_witness(n, d)))
    return entries


def run_all(ns=range(3, 9), deep: bool = False,
            seed: int = DEFAULT_SEED) -> VerificationReport:
    """Run every registered check for the given alphabet sizes.

    Individual check failures are recorded in the report, not raised.
    """
    ns = tuple(ns)
    checks = []
    for claim_id, runner in _registry(ns, deep, seed):
        start = time.perf_counter()
        try:
            result = runner()
        except Exception as exc:  # a crashed check is a failed check
            result = CheckResult(claim_id, "unavailable", "fail",
                                 {"error": f"{type(exc).__name__}: {exc}"})
        result.millis = (time.perf_counter() - start) * 1000.0
        checks.append(result)
    return VerificationReport(ns, checks)
