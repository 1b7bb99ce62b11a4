"""Congruence quotient orders, index tables, and Hausdorff dimensions."""

import json
import math
from pathlib import Path

import jsonschema
import mpmath
import pytest

from towergroups.quotients import (BudgetExceeded, expected_quotient_order,
                                   hausdorff_closed_form, hausdorff_empirical,
                                   hausdorff_formula_partial, index_table,
                                   quotient_order)

SCHEMAS = Path(__file__).resolve().parent.parent / "schemas"


@pytest.mark.parametrize("n,expected", [
    (3, 6), (4, 12), (5, 120), (6, 360), (7, 5040), (8, 20160)])
def test_level_one_orders(n, expected):
    assert quotient_order(n, 1) == expected


@pytest.mark.parametrize("n,m", [(3, 2), (3, 3), (4, 2), (5, 2), (6, 2)])
def test_orders_match_formulas(n, m):
    assert quotient_order(n, m) == expected_quotient_order(n, m)


def test_known_small_orders():
    assert quotient_order(3, 2) == 648
    assert quotient_order(4, 2) == 82944
    assert quotient_order(3, 3) == 648 * 108 ** 3


def test_budget_is_enforced():
    with pytest.raises(BudgetExceeded):
        quotient_order(3, 8, budget_degree=2000)
    with pytest.raises(ValueError):
        quotient_order(4, 0)


def test_index_table_consistency():
    table = index_table(4, 3)
    orders = [row.order for row in table.rows]
    assert orders == [12, 82944, 12 * 6912 ** 5]
    assert [row.index for row in table.rows] == \
        [12, 82944 // 12, orders[2] // orders[1]]


def test_index_table_validates_schema():
    schema = json.loads((SCHEMAS / "quotients.schema.json").read_text())
    jsonschema.validate(index_table(5, 2).as_dict(), schema)


def test_closed_forms():
    with mpmath.workdps(60):
        assert abs(hausdorff_closed_form(4) -
                   (1 - mpmath.log(48) / mpmath.log(331776))) < mpmath.mpf(10) ** -45
        assert abs(hausdorff_closed_form(6) -
                   (1 - mpmath.log(2) / mpmath.log(720))) < mpmath.mpf(10) ** -45
        assert abs(hausdorff_closed_form(5) -
                   (1 - mpmath.log(2) / (5 * mpmath.log(120)))) < mpmath.mpf(10) ** -45
    with pytest.raises(ValueError):
        hausdorff_closed_form(2)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_empirical_ratios_match_formula(n):
    ratios = hausdorff_empirical(n, 2)
    for m, ratio in enumerate(ratios, start=1):
        assert abs(ratio - hausdorff_formula_partial(n, m)) < mpmath.mpf(10) ** -30


def test_even_n_ratio_is_already_the_dimension():
    # for even n >= 6 every partial ratio equals the closed form exactly
    ratios = hausdorff_empirical(6, 2)
    closed = hausdorff_closed_form(6)
    for ratio in ratios:
        assert abs(ratio - closed) < mpmath.mpf(10) ** -30
