"""Exact orders of the congruence quotients G_n/Stab(m), stabilizer index
tables, and Hausdorff dimension of the closure (closed form and empirical
partial ratios from exact orders).

All orders are exact Python integers; the real-valued columns use mpmath
with a configurable precision (default 50 significant digits).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath

from .schreier import StabilizerChain, build_chain
from .words import Word, generator, leaf_action

# covers every level used by the verification and acceptance suites (the
# largest is degree 125 for the 5-ary tree at level 3); higher levels grow
# too fast for a stabilizer chain and need an explicit budget
DEFAULT_BUDGET_DEGREE = 130
DEFAULT_PRECISION_DIGITS = 50


class BudgetExceeded(Exception):
    """A level action's degree exceeds the configured budget."""

    def __init__(self, n: int, m: int, degree: int, budget: int):
        self.n, self.m, self.degree, self.budget = n, m, degree, budget
        super().__init__(
            f"level {m} of the {n}-ary tree needs degree {degree}, "
            f"over the budget of {budget}")


def generator_leaf_actions(n: int, m: int):
    return [leaf_action(generator(n, i), m) for i in range(1, n + 1)]


def _check_budget(n: int, m: int, budget_degree: int) -> None:
    if m < 1:
        raise ValueError("level must be at least 1")
    degree = n ** m
    if degree > budget_degree:
        raise BudgetExceeded(n, m, degree, budget_degree)


def level_quotient_chain(n: int, m: int,
                         budget_degree: int = DEFAULT_BUDGET_DEGREE) -> StabilizerChain:
    """Stabilizer chain for the faithful action of G_n/Stab(m) on level m."""
    _check_budget(n, m, budget_degree)
    return build_chain(generator_leaf_actions(n, m))


def quotient_order(n: int, m: int,
                   budget_degree: int = DEFAULT_BUDGET_DEGREE) -> int:
    """|G_n/Stab(m)|, exact."""
    return level_quotient_chain(n, m, budget_degree).order


def expected_level1_order(n: int) -> int:
    """n! for odd n (symmetric group at the root), n!/2 for even n."""
    return math.factorial(n) if n % 2 else math.factorial(n) // 2


def expected_index(n: int, m: int) -> int:
    """|Stab(m-1)/Stab(m)| by the per-case closed formulas.

    n = 4: 6912^(4^(m-2)); odd n: (n!^n / 2)^(n^(m-2)); even n >= 6:
    (n!/2)^(n^(m-1)).  The odd-case recursion exponent is n^(m-2); see the
    index-table cross checks.
    """
    if m == 1:
        return expected_level1_order(n)
    fact = math.factorial(n)
    if n == 4:
        return 6912 ** (4 ** (m - 2))
    if n % 2 == 1:
        return (fact ** n // 2) ** (n ** (m - 2))
    return (fact // 2) ** (n ** (m - 1))


def expected_quotient_order(n: int, m: int) -> int:
    total = 1
    for level in range(1, m + 1):
        total *= expected_index(n, level)
    return total


def aut_quotient_log(n: int, m: int) -> mpmath.mpf:
    """log |Aut(T)/Stab(m)| = (n^m - 1)/(n - 1) * log n!."""
    exponent = (n ** m - 1) // (n - 1)
    return exponent * mpmath.log(math.factorial(n))


@dataclass(frozen=True)
class QuotientRow:
    level: int
    order: int
    index: int          # |Stab(m-1)/Stab(m)|
    partial_ratio: mpmath.mpf

    def as_dict(self) -> dict:
        return {
            "level": self.level,
            "order": str(self.order),
            "index": str(self.index),
            "partial_ratio": mpmath.nstr(self.partial_ratio, 30),
        }


@dataclass(frozen=True)
class QuotientTable:
    n: int
    rows: tuple[QuotientRow, ...]

    def as_dict(self) -> dict:
        return {"n": self.n, "rows": [row.as_dict() for row in self.rows]}


def _with_precision(digits: int):
    return mpmath.workdps(digits + 10)


def index_table(n: int, levels: int,
                budget_degree: int = DEFAULT_BUDGET_DEGREE,
                precision_digits: int = DEFAULT_PRECISION_DIGITS) -> QuotientTable:
    """Orders, consecutive indices, and partial Hausdorff ratios for
    m = 1..levels."""
    rows = []
    previous = 1
    with _with_precision(precision_digits):
        for m in range(1, levels + 1):
            order = quotient_order(n, m, budget_degree)
            ratio = mpmath.log(order) / aut_quotient_log(n, m)
            rows.append(QuotientRow(m, order, order // previous, ratio))
            previous = order
    return QuotientTable(n, tuple(rows))


def hausdorff_closed_form(n: int,
                          precision_digits: int = DEFAULT_PRECISION_DIGITS) -> mpmath.mpf:
    """Hausdorff dimension of the closure of G_n."""
    if n < 3:
        raise ValueError("alphabet size must be at least 3")
    with _with_precision(precision_digits):
        log = mpmath.log
        if n == 4:
            value = 1 - log(48) / log(331776)
        elif n % 2 == 0:
            value = 1 - log(2) / log(math.factorial(n))
        else:
            value = 1 - log(2) / (n * log(math.factorial(n)))
        return +value


def hausdorff_empirical(n: int, levels: int,
                        budget_degree: int = DEFAULT_BUDGET_DEGREE,
                        precision_digits: int = DEFAULT_PRECISION_DIGITS) -> list[mpmath.mpf]:
    """Partial ratios log|G/Stab(m)| / log|Aut(T)/Stab(m)| for m = 1..levels,
    from the exact big-integer orders."""
    out = []
    with _with_precision(precision_digits):
        for m in range(1, levels + 1):
            order = quotient_order(n, m, budget_degree)
            out.append(+(mpmath.log(order) / aut_quotient_log(n, m)))
    return out


def hausdorff_formula_partial(n: int, m: int,
                              precision_digits: int = DEFAULT_PRECISION_DIGITS) -> mpmath.mpf:
    """The same partial ratio computed from the per-case index formulas
    instead of a stabilizer chain; the two must agree exactly."""
    with _with_precision(precision_digits):
        return +(mpmath.log(expected_quotient_order(n, m)) / aut_quotient_log(n, m))
