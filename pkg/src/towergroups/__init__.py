"""Computational toolkit for the family of self-similar groups acting on
n-ary rooted trees that generalizes the Hanoi towers group.

Submodules: :mod:`perm` (exact permutations), :mod:`words` (group words,
wreath decompositions, portraits, leaf actions), :mod:`wordproblem`
(triviality, equality, element orders), :mod:`abelian` (exponent-sum
invariants and subgroup membership), :mod:`schreier` (stabilizer chains),
:mod:`quotients` (congruence quotient orders and Hausdorff dimension),
:mod:`verify` (the claim verification suite), and :mod:`cli`.
"""

from .abelian import (abelianize, chi4, epsilon, epsilon1, in_commutator,
                      in_Hnd, in_K4, in_Kn_odd, stab1_parity_test)
from .perm import Permutation, closure_order_bfs, omega, sigma
from .quotients import (BudgetExceeded, hausdorff_closed_form,
                        hausdorff_empirical, index_table, quotient_order)
from .schreier import StabilizerChain, build_chain, derived_subgroup_chain, \
    subgroup_order
from .verify import CheckResult, VerificationReport, run_all
from .wordproblem import are_equal, element_order, is_identity
from .words import (Portrait, Word, WordSyntaxError, WreathDecomposition,
                    act, commutator, decompose, format_word, generator,
                    leaf_action, parse_word, portrait, state_at)

__version__ = "0.1.0"

__all__ = [
    "Permutation", "sigma", "omega", "closure_order_bfs",
    "Word", "WreathDecomposition", "Portrait", "WordSyntaxError",
    "generator", "commutator", "decompose", "state_at", "act",
    "portrait", "leaf_action", "parse_word", "format_word",
    "is_identity", "are_equal", "element_order",
    "abelianize", "epsilon", "epsilon1", "chi4",
    "in_commutator", "in_K4", "in_Kn_odd", "in_Hnd", "stab1_parity_test",
    "StabilizerChain", "build_chain", "subgroup_order",
    "derived_subgroup_chain",
    "BudgetExceeded", "quotient_order", "index_table",
    "hausdorff_closed_form", "hausdorff_empirical",
    "CheckResult", "VerificationReport", "run_all",
    "__version__",
]
