"""Acceptance gate: one test per criterion, with the stated tolerances
and time limits.  Each test prints a single pass/fail line under -v.

Criteria 9 and 10 assert their claims exactly as stated and are expected
to fail: criterion 9's biconditional is refuted by words like a1^2 (even
exponent sum, nontrivial first-level action), and criterion 10's odd-n
elements a_i a_{i+2} have first-level actions of order n, so their order
cannot be 2(n-1).  The verification suite records the corrected
statements (verify_parity_stabilizer, verify_order_bounds).
"""

import math
import random
import time

import mpmath
import pytest

from towergroups.abelian import epsilon, epsilon1, in_Hnd, stab1_parity_test
from towergroups.perm import closure_order_bfs, sigma
from towergroups.quotients import (expected_quotient_order,
                                   hausdorff_closed_form, hausdorff_empirical,
                                   hausdorff_formula_partial, quotient_order)
from towergroups.verify import (beta_word, verify_branching_identities,
                                verify_rigid_kernel_witness,
                                verify_stab1_generation)
from towergroups.wordproblem import element_order, is_identity
from towergroups.words import Word, decompose, generator, leaf_action

SEED = 20230817


def _report(num: int, ok: bool, detail: str = ""):
    suffix = f" ({detail})" if detail else ""
    print(f"criterion {num:02d}: {'PASS' if ok else 'FAIL'}{suffix}")
    assert ok, f"criterion {num:02d} failed{suffix}"


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


def _root_group_order(n: int) -> int:
    return math.factorial(n) if n % 2 else math.factorial(n) // 2


def test_criterion_01_root_group_closure_orders():
    ok = True
    for n in range(3, 9):
        start = time.perf_counter()
        order = closure_order_bfs([sigma(n, i) for i in range(1, n + 1)])
        elapsed = time.perf_counter() - start
        ok = ok and order == _root_group_order(n) and elapsed < 1.0
    _report(1, ok)


def test_criterion_02_level_one_quotients():
    ok = all(quotient_order(n, 1) == _root_group_order(n) for n in range(3, 9))
    _report(2, ok)


def test_criterion_03_level_two_quotients():
    expected = {
        3: 648,
        4: 82944,
        5: 120 * 120 ** 5 // 2,
        6: 360 * 360 ** 6,
        7: 5040 * 5040 ** 7 // 2,
    }
    ok = True
    for n, value in expected.items():
        start = time.perf_counter()
        order = quotient_order(n, 2)
        elapsed = time.perf_counter() - start
        ok = ok and order == value == expected_quotient_order(n, 2)
        ok = ok and elapsed < 60.0
    _report(3, ok)


def test_criterion_04_level_three_recursion():
    start = time.perf_counter()
    ok = quotient_order(4, 3) == 12 * 6912 ** 5
    ok = ok and quotient_order(3, 3) == 648 * 108 ** 3
    # odd-case recursion exponent n^(m-2) = 3 at n = m = 3
    ok = ok and expected_quotient_order(3, 3) == 648 * 108 ** 3
    elapsed = time.perf_counter() - start
    _report(4, ok and elapsed < 300.0, f"{elapsed:.1f}s")


def test_criterion_05_branching_identity_suite():
    start = time.perf_counter()
    ok = all(verify_branching_identities(n).status == "pass"
             for n in range(4, 10))
    elapsed = time.perf_counter() - start
    _report(5, ok and elapsed < 10.0, f"{elapsed:.1f}s")


def test_criterion_06_epsilon_refinement_agreement():
    rng = random.Random(SEED)
    violations = 0
    for n in range(3, 9):
        for _ in range(1000):
            w = _random_word(rng, n, 12)
            if epsilon(w) != epsilon1(w):
                violations += 1
    _report(6, violations == 0, f"{violations} violations")


def test_criterion_07_contraction_bound():
    rng = random.Random(SEED + 1)
    violations = 0
    for n in range(3, 9):
        for _ in range(10 ** 4):
            w = _random_word(rng, n, 12).canonical()
            bound = (len(w) + 1) / 2
            for state in decompose(w).states:
                if len(state.canonical()) > bound:
                    violations += 1
    _report(7, violations == 0, f"{violations} violations")


def _unit_words(n: int, max_syllables: int):
    frontier = [Word(n)]
    yield Word(n)
    for _ in range(max_syllables):
        grown = []
        for w in frontier:
            last = w.syllables[-1][0] if w.syllables else 0
            for gen in range(1, n + 1):
                if gen == last:
                    continue
                for exp in (1, -1):
                    new = Word(n, w.syllables + ((gen, exp),))
                    grown.append(new)
                    yield new
        frontier = grown


def test_criterion_08_word_problem_oracle_agreement():
    start = time.perf_counter()
    disagreements = 0
    total = 0
    for w in _unit_words(4, 4):
        depth = max(1, math.ceil(math.log2(max(len(w), 1))) + 2)
        oracle = leaf_action(w, depth).is_identity()
        if is_identity(w) != oracle:
            disagreements += 1
        total += 1
    elapsed = time.perf_counter() - start
    _report(8, disagreements == 0 and elapsed < 120.0,
            f"{total} words, {disagreements} disagreements, {elapsed:.1f}s")


def test_criterion_09_parity_characterization():
    # asserts agreement of the parity predicate with first-level stabilizer
    # membership in both directions, exhaustive short words plus 10^4 random
    rng = random.Random(SEED + 2)
    disagreements = 0
    total = 0
    for n in (5, 7):
        pool = []

        def extend(prefix, length):
            pool.append(Word(n, prefix))
            if length == 0:
                return
            last = prefix[-1][0] if prefix else 0
            for gen in range(1, n + 1):
                if gen == last:
                    continue
                for exp in range(1, n - 1):
                    extend(prefix + ((gen, exp),), length - 1)

        extend((), 3)
        pool.extend(_random_word(rng, n, 20) for _ in range(10 ** 4))
        for w in pool:
            total += 1
            if stab1_parity_test(w) != decompose(w).root.is_identity():
                disagreements += 1
    _report(9, disagreements == 0, f"{total} words, {disagreements} disagreements")


def test_criterion_10_element_orders():
    problems = []
    for n in range(3, 10):
        if element_order(generator(n, 1)) != n - 1:
            problems.append(f"generator order n={n}")
    for text_i, text_j in [(1, 2), (2, 3), (3, 4), (4, 1)]:
        w = generator(4, text_i) * generator(4, text_j)
        if element_order(w) != 6:
            problems.append(f"K4 generator a{text_i}a{text_j}")
    for n in (5, 7, 9):
        listed = [(i, i + 2) for i in range(1, n - 1)] + [(n - 1, 1), (n, 2)]
        for i, j in listed:
            w = generator(n, i) * generator(n, j)
            if element_order(w) != 2 * (n - 1):
                problems.append(f"n={n} element a{i}a{j}")
    _report(10, not problems, "; ".join(problems[:4]))


def test_criterion_11_hausdorff_dimensions():
    tolerance = mpmath.mpf(10) ** -12
    ok = True
    with mpmath.workdps(60):
        reference = 1 - mpmath.log(48) / mpmath.log(331776)
        ok = ok and abs(hausdorff_closed_form(4, 50) - reference) < tolerance
        for n in range(3, 9):
            value = hausdorff_closed_form(n, 50)
            ok = ok and mpmath.mpf(0) < value < mpmath.mpf(1)
            levels = 3 if n in (3, 4) else 2
            empirical = hausdorff_empirical(n, levels)
            for m, ratio in enumerate(empirical, start=1):
                ok = ok and abs(ratio - hausdorff_formula_partial(n, m)) < tolerance
    _report(11, ok)


def test_criterion_12_rigid_kernel_witnesses():
    ok = True
    for n, d in [(4, 3), (5, 4), (7, 3), (7, 6), (9, 4)]:
        result = verify_rigid_kernel_witness(n, d)
        ok = ok and result.status == "pass"
        beta = beta_word(n)
        corner = beta ** 2 if n % 2 else beta
        ok = ok and not in_Hnd(corner, d)
    _report(12, ok)


def test_criterion_13_stab1_generation():
    start = time.perf_counter()
    ok = True
    for m in (2, 3):
        result = verify_stab1_generation(m)
        ok = ok and result.status == "pass"
        ok = ok and int(result.data["order"]) == quotient_order(4, m) // 12
    elapsed = time.perf_counter() - start
    _report(13, ok and elapsed < 300.0, f"{elapsed:.1f}s")
